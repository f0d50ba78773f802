#ifndef PRIMEDIV_ERROR_HPP
#define PRIMEDIV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace primediv
{

// Malformed or out-of-contract input. The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A bounded search ran out of budget without reaching a verdict. Never
// a negative answer in disguise. The CLI maps this to exit code 3.
class Undecided : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// A self-check failed: the library produced something it could not verify.
// The CLI maps this to exit code 4.
class InvariantViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace primediv

#endif

#include <primediv/field.hpp>

#include <map>
#include <mutex>
#include <utility>

#include <primediv/error.hpp>

namespace primediv
{

namespace
{

bool is_prime(unsigned n)
{
    if (n < 2) {
        return false;
    }
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

// Conway polynomials, coefficients low to high.
const std::map<std::pair<unsigned, unsigned>, std::vector<Field::Elem>> &modulus_table()
{
    static const std::map<std::pair<unsigned, unsigned>, std::vector<Field::Elem>> table{
        {{2, 2}, {1, 1, 1}},       {{2, 3}, {1, 1, 0, 1}}, {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}}, {{3, 2}, {2, 2, 1}},    {{3, 3}, {1, 2, 0, 1}},
        {{5, 2}, {2, 4, 1}},       {{7, 2}, {3, 6, 1}},
    };
    return table;
}

constexpr char digit_alphabet[] = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

} // namespace

std::pair<unsigned, unsigned> split_prime_power(unsigned q)
{
    if (q < 2 || q > Field::max_order) {
        throw InvalidInput("field order " + std::to_string(q) + " outside supported range [2, "
                           + std::to_string(Field::max_order) + "]");
    }
    unsigned p = 2;
    while (q % p != 0) {
        ++p;
    }
    unsigned k = 0;
    unsigned r = q;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1) {
        throw InvalidInput("field order " + std::to_string(q) + " is not a prime power");
    }
    return {p, k};
}

FieldRef Field::make(unsigned p, unsigned k)
{
    if (!is_prime(p)) {
        throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
    }
    if (k == 0) {
        throw InvalidInput("extension degree must be at least 1");
    }
    unsigned long q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (q > max_order) {
            throw InvalidInput("GF(" + std::to_string(p) + "^" + std::to_string(k) + ") exceeds the supported order "
                               + std::to_string(max_order));
        }
    }

    static std::mutex mtx;
    static std::map<std::pair<unsigned, unsigned>, FieldRef> registry;
    std::lock_guard lock(mtx);
    if (auto it = registry.find({p, k}); it != registry.end()) {
        return it->second;
    }
    std::vector<Elem> modulus{0, 1};
    if (k > 1) {
        auto it = modulus_table().find({p, k});
        if (it == modulus_table().end()) {
            throw InvalidInput("no modulus tabulated for GF(" + std::to_string(p) + "^" + std::to_string(k) + ")");
        }
        modulus = it->second;
    }
    FieldRef f(new Field(p, k, std::move(modulus)));
    registry.emplace(std::pair{p, k}, f);
    return f;
}

FieldRef Field::of_order(unsigned q)
{
    auto [p, k] = split_prime_power(q);
    return make(p, k);
}

Field::Field(unsigned p, unsigned k, std::vector<Elem> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus))
{
    for (unsigned i = 0; i < k; ++i) {
        q_ *= p;
    }
    // Digit vectors over GF(p) for every code.
    std::vector<std::vector<unsigned>> digits(q_, std::vector<unsigned>(k_));
    for (unsigned a = 0; a < q_; ++a) {
        unsigned r = a;
        for (unsigned i = 0; i < k_; ++i) {
            digits[a][i] = r % p_;
            r /= p_;
        }
    }
    auto encode = [&](const std::vector<unsigned> &d) {
        unsigned code = 0;
        for (unsigned i = k_; i-- > 0;) {
            code = code * p_ + d[i];
        }
        return static_cast<Elem>(code);
    };

    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    root_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
        std::vector<unsigned> n(k_);
        for (unsigned i = 0; i < k_; ++i) {
            n[i] = (p_ - digits[a][i]) % p_;
        }
        neg_[a] = encode(n);
        for (unsigned b = 0; b < q_; ++b) {
            std::vector<unsigned> s(k_);
            for (unsigned i = 0; i < k_; ++i) {
                s[i] = (digits[a][i] + digits[b][i]) % p_;
            }
            add_[a * q_ + b] = encode(s);

            // Schoolbook product, then reduce by the monic modulus.
            std::vector<unsigned> prod(2 * k_ - 1, 0);
            for (unsigned i = 0; i < k_; ++i) {
                for (unsigned j = 0; j < k_; ++j) {
                    prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p_;
                }
            }
            for (unsigned d = 2 * k_ - 1; d-- > k_;) {
                unsigned c = prod[d];
                if (c == 0) {
                    continue;
                }
                for (unsigned i = 0; i <= k_; ++i) {
                    prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - c) * modulus_[i]) % p_;
                }
            }
            prod.resize(k_);
            mul_[a * q_ + b] = encode(prod);
        }
    }
    // A reducible modulus leaves zero divisors, i.e. some nonzero element
    // without an inverse; this doubles as the irreducibility self-test.
    for (unsigned a = 1; a < q_; ++a) {
        for (unsigned b = 1; b < q_; ++b) {
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = static_cast<Elem>(b);
                break;
            }
        }
        if (inv_[a] == 0) {
            throw InvariantViolation("modulus for " + name() + " is reducible");
        }
    }
    for (unsigned a = 0; a < q_; ++a) {
        root_[pow(static_cast<Elem>(a), p_)] = static_cast<Elem>(a);
    }
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const noexcept
{
    Elem r = 1;
    while (e != 0) {
        if (e & 1u) {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::string Field::name() const
{
    if (k_ == 1) {
        return "GF(" + std::to_string(p_) + ")";
    }
    return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

char Field::digit(Elem a)
{
    return digit_alphabet[a];
}

bool Field::parse_digit(char c, Elem &out) const noexcept
{
    for (unsigned i = 0; i < q_; ++i) {
        if (digit_alphabet[i] == c) {
            out = static_cast<Elem>(i);
            return true;
        }
    }
    return false;
}

bool same_field(const FieldRef &a, const FieldRef &b) noexcept
{
    return a && b && *a == *b;
}

} // namespace primediv

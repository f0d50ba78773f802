#ifndef PRIMEDIV_IRREDUCIBLE_CACHE_HPP
#define PRIMEDIV_IRREDUCIBLE_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <primediv/field.hpp>
#include <primediv/unipoly.hpp>

namespace primediv
{

// Environment variable naming the default cache directory.
inline constexpr const char *cache_dir_env = "PRIMEDIV_CACHE_DIR";

std::uint64_t fnv1a64(std::string_view data);

// On-disk store of the irreducibles with constant term 1, one CSV file per
// (p, k, modulus, degree):
//
//   # primediv irreducibles p=2 k=1 modulus=01 degree=3 count=2 fnv1a64=<hex>
//   3,1011
//   3,1101
//
// The checksum covers the rows. A file that is missing, truncated or fails
// its checksum is recomputed and replaced through a temporary file and a
// rename; a valid file is never rewritten.
class IrreducibleCache
{
public:
    explicit IrreducibleCache(std::filesystem::path dir);

    // dir if nonempty, else $PRIMEDIV_CACHE_DIR; empty path when neither is set.
    static std::filesystem::path resolve_dir(const std::string &dir);

    const std::filesystem::path &dir() const noexcept { return dir_; }
    std::filesystem::path file_for(const Field &field, unsigned degree) const;

    struct Lookup {
        std::vector<UniPoly> polys; // lexicographic coefficient order
        bool from_disk;             // false: computed (and written)
        bool repaired;              // an existing file was rejected
    };
    Lookup get(const FieldRef &field, unsigned degree) const;

private:
    std::filesystem::path dir_;
};

} // namespace primediv

#endif

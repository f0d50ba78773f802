#include <primediv/irreducible_cache.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <unistd.h>

#include <primediv/error.hpp>
#include <primediv/irreducible.hpp>

namespace primediv
{

namespace
{

std::string modulus_string(const Field &f)
{
    std::string s;
    for (auto c : f.modulus()) {
        s.push_back(Field::digit(c));
    }
    return s;
}

std::string header_for(const Field &f, unsigned degree, std::size_t count, std::uint64_t sum)
{
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(sum));
    return "# primediv irreducibles p=" + std::to_string(f.characteristic()) + " k=" + std::to_string(f.degree()) +
           " modulus=" + modulus_string(f) + " degree=" + std::to_string(degree) + " count=" + std::to_string(count) +
           " fnv1a64=" + hex;
}

std::optional<std::vector<UniPoly>> read_valid(const std::filesystem::path &file, const FieldRef &field,
                                               unsigned degree)
{
    std::ifstream in(file);
    if (!in) {
        return std::nullopt;
    }
    std::string header;
    if (!std::getline(in, header)) {
        return std::nullopt;
    }
    std::ostringstream body;
    body << in.rdbuf();
    const std::string rows = body.str();

    std::vector<UniPoly> polys;
    std::istringstream lines(rows);
    std::string line;
    const std::string prefix = std::to_string(degree) + ",";
    while (std::getline(lines, line)) {
        if (line.rfind(prefix, 0) != 0) {
            return std::nullopt;
        }
        try {
            UniPoly p = UniPoly::from_digits(field, line.substr(prefix.size()));
            if (p.degree() != static_cast<int>(degree) || p.constant_term() != 1) {
                return std::nullopt;
            }
            polys.push_back(std::move(p));
        } catch (const InvalidInput &) {
            return std::nullopt;
        }
    }
    if (header != header_for(*field, degree, polys.size(), fnv1a64(rows))) {
        return std::nullopt;
    }
    if (polys.size() != irreducible_count_nonzero_constant(field->order(), degree)) {
        return std::nullopt;
    }
    return polys;
}

} // namespace

std::uint64_t fnv1a64(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

IrreducibleCache::IrreducibleCache(std::filesystem::path dir) : dir_(std::move(dir))
{
}

std::filesystem::path IrreducibleCache::resolve_dir(const std::string &dir)
{
    if (!dir.empty()) {
        return dir;
    }
    if (const char *env = std::getenv(cache_dir_env); env != nullptr && *env != '\0') {
        return env;
    }
    return {};
}

std::filesystem::path IrreducibleCache::file_for(const Field &field, unsigned degree) const
{
    return dir_ / ("gf" + std::to_string(field.characteristic()) + "_" + std::to_string(field.degree()) + "_m" +
                   modulus_string(field) + "_d" + std::to_string(degree) + ".csv");
}

IrreducibleCache::Lookup IrreducibleCache::get(const FieldRef &field, unsigned degree) const
{
    const auto file = file_for(*field, degree);
    const bool existed = std::filesystem::exists(file);
    if (auto polys = read_valid(file, field, degree)) {
        return {std::move(*polys), true, false};
    }

    auto polys = irreducibles_with_prefix(field, degree, CoefficientPrefix(field, {1}));
    std::string rows;
    for (const auto &p : polys) {
        rows += std::to_string(degree) + "," + p.digits() + "\n";
    }
    std::filesystem::create_directories(dir_);
    // Unique per process so concurrent writers never share a temporary.
    const auto tmp = file.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << header_for(*field, degree, polys.size(), fnv1a64(rows)) << "\n" << rows;
        if (!out) {
            throw InvalidInput("cannot write cache file " + tmp);
        }
    }
    std::filesystem::rename(tmp, file);
    return {std::move(polys), false, existed};
}

} // namespace primediv

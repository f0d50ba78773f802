#include <primediv/monoid_spec.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include <primediv/error.hpp>

namespace primediv
{

namespace
{

using nlohmann::json;

[[noreturn]] void fail(const std::string &pointer, const std::string &what)
{
    throw InvalidInput("monoid spec " + (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

void only_keys(const json &j, std::initializer_list<const char *> allowed)
{
    for (const auto &[key, value] : j.items()) {
        bool known = false;
        for (const char *a : allowed) {
            known = known || key == a;
        }
        if (!known) {
            fail("/" + key, "unknown key");
        }
    }
}

const json &required(const json &j, const char *key)
{
    if (!j.contains(key)) {
        fail(std::string("/") + key, "missing");
    }
    return j.at(key);
}

std::int64_t integer(const json &v, const std::string &pointer)
{
    if (!v.is_number_integer()) {
        fail(pointer, "expected an integer");
    }
    return v.get<std::int64_t>();
}

MonoidSpec parse_numerical(const json &j)
{
    only_keys(j, {"kind", "generators"});
    const json &gens = required(j, "generators");
    if (!gens.is_array()) {
        fail("/generators", "expected an array");
    }
    std::vector<std::uint64_t> g;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto ptr = "/generators/" + std::to_string(i);
        const auto v = integer(gens[i], ptr);
        if (v < 0) {
            fail(ptr, "expected a nonnegative integer");
        }
        g.push_back(static_cast<std::uint64_t>(v));
    }
    MonoidSpec spec;
    spec.numerical = NumericalMonoid::from_generators(std::move(g));
    spec.canonical = json{{"generators", spec.numerical->generators()}, {"kind", "numerical"}}.dump();
    return spec;
}

MonoidSpec parse_affine(const json &j)
{
    only_keys(j, {"kind", "rank", "split", "generators"});
    const auto rank = integer(required(j, "rank"), "/rank");
    if (rank < 1 || rank > 16) {
        fail("/rank", "expected an integer in [1, 16]");
    }
    const json &split = required(j, "split");
    if (!split.is_array() || split.size() != 2) {
        fail("/split", "expected [s, t]");
    }
    const auto s = integer(split[0], "/split/0");
    const auto t = integer(split[1], "/split/1");
    if (s < 0 || t < 0 || s + t != rank) {
        fail("/split", "expected nonnegative s, t with s + t = rank");
    }
    const json &gens = required(j, "generators");
    if (!gens.is_array()) {
        fail("/generators", "expected an array");
    }
    std::vector<IntVec> g;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto ptr = "/generators/" + std::to_string(i);
        if (!gens[i].is_array() || gens[i].size() != static_cast<std::size_t>(rank)) {
            fail(ptr, "expected an array of length " + std::to_string(rank));
        }
        IntVec v;
        for (std::size_t k = 0; k < gens[i].size(); ++k) {
            v.push_back(integer(gens[i][k], ptr + "/" + std::to_string(k)));
        }
        g.push_back(std::move(v));
    }
    MonoidSpec spec;
    spec.affine = AffineMonoid::create(static_cast<unsigned>(rank),
                                       Split{static_cast<unsigned>(s), static_cast<unsigned>(t)}, std::move(g),
                                       LatticePolicy::record);
    spec.canonical = json{{"generators", spec.affine->generators()},
                          {"kind", "affine"},
                          {"rank", rank},
                          {"split", {s, t}}}
                         .dump();
    return spec;
}

} // namespace

MonoidSpec parse_monoid_spec(const std::string &text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw InvalidInput(std::string("monoid spec is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        fail("", "expected an object");
    }
    const json &kind = required(j, "kind");
    if (!kind.is_string()) {
        fail("/kind", "expected a string");
    }
    if (kind == "numerical") {
        return parse_numerical(j);
    }
    if (kind == "affine") {
        return parse_affine(j);
    }
    fail("/kind", "expected \"numerical\" or \"affine\"");
}

MonoidSpec load_monoid_spec(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot read monoid spec " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_monoid_spec(ss.str());
}

} // namespace primediv

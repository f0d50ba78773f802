#ifndef PRIMEDIV_REPORT_HPP
#define PRIMEDIV_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include <primediv/class_group.hpp>
#include <primediv/distribution.hpp>
#include <primediv/monoid_spec.hpp>
#include <primediv/witness.hpp>

namespace primediv
{

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;
inline constexpr const char *tool_version = "0.1.0";

// 16 hex digits of FNV-1a over the compact dump of config with keys sorted.
// Callers leave out settings that do not change results (output paths,
// cache directory, thread count).
std::string config_hash(const nlohmann::json &config);

// {"schema_version", "tool_version", "command", "config", "config_hash"}.
Json report_header(const std::string &command, const nlohmann::json &config);

// Serialized with two-space indentation and a trailing newline.
std::string dump_report(const Json &report);

Json label_json(const ClassLabel &label);

Json monoid_info_json(const MonoidSpec &spec);
Json classgroup_json(const ClassGroup &group);
Json distribution_json(const ClassGroup &group, const DistributionReport &rep);
// Columns: label,degree,count; one row per hit class and degree.
std::string distribution_csv(const DistributionReport &rep);
Json irreducibles_json(const std::vector<UniPoly> &polys);
Json prefix_search_json(const PrefixSearch &search);
Json witness_json(const WitnessResult &r, unsigned s);

} // namespace primediv

#endif

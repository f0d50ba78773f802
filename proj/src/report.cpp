#include <primediv/report.hpp>

#include <cstdio>

#include <primediv/conductor.hpp>
#include <primediv/error.hpp>
#include <primediv/irreducible_cache.hpp>

namespace primediv
{

namespace
{

Json poly_json(const UniPoly &p)
{
    return Json{{"coefficients", p.digits()}, {"degree", p.degree()}, {"text", p.to_string()}};
}

Json count_json(const std::optional<std::uint64_t> &n, const std::string &decimal)
{
    return n ? Json(*n) : Json(decimal);
}

} // namespace

std::string config_hash(const nlohmann::json &config)
{
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(config.dump())));
    return hex;
}

Json report_header(const std::string &command, const nlohmann::json &config)
{
    return Json{{"schema_version", schema_version},
                {"tool_version", tool_version},
                {"command", command},
                {"config", Json::parse(config.dump())},
                {"config_hash", config_hash(config)}};
}

std::string dump_report(const Json &report)
{
    return report.dump(2) + "\n";
}

Json label_json(const ClassLabel &label)
{
    return label.digits();
}

Json monoid_info_json(const MonoidSpec &spec)
{
    Json j;
    if (spec.numerical) {
        const auto &s = *spec.numerical;
        j["kind"] = "numerical";
        j["generators"] = s.generators();
        j["gaps"] = s.gaps();
        j["frobenius"] = s.frobenius();
        j["genus"] = s.genus();
        j["multiplicity"] = s.multiplicity();
        j["conductor"] = Json{{"kind", to_string(ConductorKind::numerical_threshold)},
                              {"threshold", s.conductor_threshold()}};
        j["height_one_primes"] = Json::array({Json{{"index", 1}, {"description", "S \\ {0}"}}});
        j["branch"] = to_string(branch_classify(s));
        return j;
    }

    const auto &s = *spec.affine;
    j["kind"] = "affine";
    j["rank"] = s.rank();
    j["split"] = {s.split().s, s.split().t};
    j["generators"] = s.generators();
    j["elementary_divisors"] = s.elementary_divisors();
    j["product_structure"] = s.product().has_value();

    CicOutcome outcome;
    try {
        outcome = cic_verify(s);
    } catch (const Undecided &e) {
        j["closure"] = Json{{"status", "undecided"}, {"reason", e.what()}};
        j["branch"] = "undecided";
        return j;
    }
    if (const auto *ref = std::get_if<CicRefutation>(&outcome)) {
        j["closure"] = Json{{"status", "refuted"},
                            {"reason", ref->reason},
                            {"bounded_only", ref->bounded_only},
                            {"elementary_divisors", ref->elementary_divisors}};
        return j;
    }
    const auto &cert = std::get<CicCertificate>(outcome);
    Json dirs = Json::array();
    for (const auto &d : cert.directions) {
        dirs.push_back(Json{{"direction", d.direction}, {"period", d.period}});
    }
    j["closure"] = Json{{"status", "certified"}, {"base", cert.base}, {"directions", dirs}};

    const ConductorIdeal f = conductor(s, cert);
    Json cj{{"kind", to_string(f.kind)}, {"generators", f.generators}, {"exact", f.exact()}};
    if (!f.exact()) {
        cj["box"] = f.box;
    }
    j["conductor"] = cj;
    Json primes = Json::array();
    for (const auto &p : height_one_primes(s, cert)) {
        primes.push_back(Json{{"index", p.index}});
    }
    j["height_one_primes"] = primes;
    j["branch"] = to_string(branch_classify(s, f));
    return j;
}

Json classgroup_json(const ClassGroup &group)
{
    Json j;
    j["field"] = group.field()->name();
    j["m"] = group.m();
    j["gaps"] = group.gaps();
    j["order"] = count_json(group.order(), group.order_decimal());
    j["kernel_size"] = count_json(group.kernel_size(), group.kernel_size_decimal());
    j["kernel_positions"] = group.kernel_positions();
    j["invariant_factors"] = invariant_factors(group);
    return j;
}

Json distribution_json(const ClassGroup &group, const DistributionReport &rep)
{
    Json j;
    j["field"] = group.field()->name();
    j["gaps"] = group.gaps();
    j["order"] = count_json(group.order(), group.order_decimal());
    j["dmax"] = rep.dmax;
    j["degree_totals"] = rep.degree_totals;
    Json rows = Json::array();
    for (const auto &r : rep.rows) {
        rows.push_back(Json{{"label", label_json(r.label)}, {"counts", r.counts}, {"first", poly_json(r.first)}});
    }
    j["classes"] = rows;
    j["classes_hit"] = rep.rows.size();
    if (rep.unhit_listed) {
        Json unhit = Json::array();
        for (const auto &l : rep.unhit) {
            unhit.push_back(label_json(l));
        }
        j["unhit"] = unhit;
    }
    j["unhit_count"] = rep.unhit_count;
    return j;
}

std::string distribution_csv(const DistributionReport &rep)
{
    std::string out = "label,degree,count\n";
    for (const auto &r : rep.rows) {
        for (std::size_t d = 0; d < r.counts.size(); ++d) {
            out += r.label.digits() + "," + std::to_string(d + 1) + "," + std::to_string(r.counts[d]) + "\n";
        }
    }
    return out;
}

Json irreducibles_json(const std::vector<UniPoly> &polys)
{
    Json list = Json::array();
    for (const auto &p : polys) {
        list.push_back(poly_json(p));
    }
    return Json{{"count", polys.size()}, {"polynomials", list}};
}

Json prefix_search_json(const PrefixSearch &search)
{
    Json found = Json::array();
    for (const auto &p : search.found) {
        found.push_back(poly_json(p));
    }
    Json degrees = Json::array();
    for (const auto &d : search.degrees) {
        char expected[32];
        std::snprintf(expected, sizeof expected, "%.6g", d.expected);
        degrees.push_back(Json{{"degree", d.degree},
                               {"candidates", d.candidates},
                               {"hits", d.hits},
                               {"expected", expected}});
    }
    return Json{{"found", found}, {"complete", search.complete}, {"degrees", degrees}};
}

Json witness_json(const WitnessResult &r, unsigned s)
{
    Json off = Json::array();
    for (const auto &e : r.difference_in_conductor.offending) {
        off.push_back(e);
    }
    return Json{{"f", r.f.to_literal()},
                {"f_text", r.f.to_string(s)},
                {"m", r.m},
                {"a", r.a.to_literal()},
                {"g", r.g.to_literal()},
                {"g_text", r.g.to_string(s)},
                {"irreducibility",
                 Json{{"verdict", to_string(r.irreducibility.verdict)},
                      {"factored", r.g_normalized.to_literal()},
                      {"candidates", r.irreducibility.candidates},
                      {"transcript", r.irreducibility.transcript}}},
                {"difference_in_conductor",
                 Json{{"contained", r.difference_in_conductor.contained}, {"offending", off}}},
                {"agrees_off_conductor", r.agrees_off_conductor},
                {"specializations_tried", r.specializations_tried},
                {"assumptions", r.assumptions}};
}

} // namespace primediv

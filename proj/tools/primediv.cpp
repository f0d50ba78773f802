// primediv command-line front end.
//
// Exit codes: 0 success, 2 invalid input, 3 budget exhausted or undecided,
// 4 internal invariant violation (a repro dump goes to stderr).

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include <primediv/class_group.hpp>
#include <primediv/conductor.hpp>
#include <primediv/distribution.hpp>
#include <primediv/error.hpp>
#include <primediv/irreducible.hpp>
#include <primediv/irreducible_cache.hpp>
#include <primediv/monoid_spec.hpp>
#include <primediv/report.hpp>
#include <primediv/witness.hpp>

using namespace primediv;
using nlohmann::json;

namespace
{

struct Options {
    std::string spec_path;
    unsigned q = 2;
    unsigned min_degree = 1;
    unsigned max_degree = 0;
    unsigned dmax = 0;
    std::string prefix = "1";
    std::size_t count = 1;
    std::string out;
    std::string csv;
    std::string cache_dir;
    std::string f_literal;
    std::uint64_t max_specializations = WitnessBudget{}.max_specializations;
    std::int64_t max_total_degree = FactorBudget{}.max_total_degree;
    int threads = 0;
};

// Writes through a temporary file so readers never see a partial report.
void write_file(const std::string &path, const std::string &content)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f << content;
        if (!f) {
            throw InvalidInput("cannot write " + path);
        }
    }
    std::filesystem::rename(tmp, path);
}

void emit(const Options &o, const Json &report)
{
    const std::string text = dump_report(report);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        write_file(o.out, text);
    }
}

FieldRef field_of(unsigned q)
{
    return Field::of_order(q);
}

CoefficientPrefix parse_prefix(const FieldRef &field, const std::string &text)
{
    std::vector<Field::Elem> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(item, &used);
            if (used != item.size() || v < 0 || v >= static_cast<long>(field->order())) {
                throw InvalidInput("");
            }
            values.push_back(static_cast<Field::Elem>(v));
        } catch (const std::exception &) {
            throw InvalidInput("--prefix entry '" + item + "' is not a coefficient code of " + field->name());
        }
    }
    return CoefficientPrefix(field, std::move(values));
}

json prefix_json(const CoefficientPrefix &p)
{
    return std::vector<unsigned>(p.values().begin(), p.values().end());
}

std::vector<UniPoly> irreducibles_for(const FieldRef &field, unsigned degree, const CoefficientPrefix &prefix,
                                      const std::filesystem::path &cache_dir)
{
    if (cache_dir.empty()) {
        return irreducibles_with_prefix(field, degree, prefix);
    }
    // The cache holds constant term 1; other constant terms are scalar multiples.
    const auto cached = IrreducibleCache(cache_dir).get(field, degree).polys;
    std::vector<UniPoly> out;
    for (const auto &p : cached) {
        UniPoly r = p.scaled(prefix[0]);
        if (prefix.matches(r)) {
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(), [](const UniPoly &a, const UniPoly &b) {
        return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                            b.coeffs().end());
    });
    return out;
}

int run_monoid_info(const Options &o)
{
    const auto spec = load_monoid_spec(o.spec_path);
    Json r = report_header("monoid info", json{{"spec", json::parse(spec.canonical)}});
    r["result"] = monoid_info_json(spec);
    emit(o, r);
    return 0;
}

int run_gf_irreducibles(const Options &o)
{
    const auto field = field_of(o.q);
    const auto prefix = parse_prefix(field, o.prefix);
    if (o.max_degree < o.min_degree || o.min_degree == 0) {
        throw InvalidInput("need 1 <= --min-degree <= --max-degree");
    }
    const auto cache = IrreducibleCache::resolve_dir(o.cache_dir);
    std::vector<UniPoly> all;
    for (unsigned d = o.min_degree; d <= o.max_degree; ++d) {
        auto polys = irreducibles_for(field, d, prefix, cache);
        all.insert(all.end(), polys.begin(), polys.end());
    }
    Json r = report_header("gf irreducibles", json{{"q", o.q},
                                                   {"min_degree", o.min_degree},
                                                   {"max_degree", o.max_degree},
                                                   {"prefix", prefix_json(prefix)}});
    r["field"] = field->name();
    r["result"] = irreducibles_json(all);
    emit(o, r);
    return 0;
}

ClassGroup numerical_group(const Options &o, MonoidSpec &spec)
{
    spec = load_monoid_spec(o.spec_path);
    if (!spec.numerical) {
        throw InvalidInput("this command needs a numerical monoid spec");
    }
    return ClassGroup(*spec.numerical, field_of(o.q));
}

int run_classgroup(const Options &o)
{
    MonoidSpec spec;
    const ClassGroup group = numerical_group(o, spec);
    Json r = report_header("classgroup compute", json{{"spec", json::parse(spec.canonical)}, {"q", o.q}});
    const Json body = classgroup_json(group);
    for (const auto &[k, v] : body.items()) {
        r[k] = v;
    }
    emit(o, r);
    return 0;
}

int run_distribution(const Options &o)
{
    MonoidSpec spec;
    const ClassGroup group = numerical_group(o, spec);
    if (o.dmax == 0) {
        throw InvalidInput("--dmax must be at least 1");
    }
    const auto cache = IrreducibleCache::resolve_dir(o.cache_dir);
    IrreducibleSource source;
    if (!cache.empty()) {
        source = [&](unsigned d) { return IrreducibleCache(cache).get(group.field(), d).polys; };
    }
    const auto rep = distribution(group, o.dmax, source);
    Json r = report_header("primes distribution",
                           json{{"spec", json::parse(spec.canonical)}, {"q", o.q}, {"dmax", o.dmax}});
    r["result"] = distribution_json(group, rep);
    emit(o, r);
    if (!o.csv.empty()) {
        write_file(o.csv, distribution_csv(rep));
    }
    return 0;
}

int run_find(const Options &o)
{
    const auto field = field_of(o.q);
    const auto prefix = parse_prefix(field, o.prefix);
    const auto search = find_with_prefix(field, prefix, o.count, o.min_degree, o.max_degree);
    Json r = report_header("primes find", json{{"q", o.q},
                                               {"prefix", prefix_json(prefix)},
                                               {"count", o.count},
                                               {"min_degree", o.min_degree},
                                               {"max_degree", o.max_degree}});
    r["field"] = field->name();
    r["result"] = prefix_search_json(search);
    emit(o, r);
    if (!search.complete) {
        std::cerr << "primediv: found " << search.found.size() << " of " << o.count
                  << " requested polynomials up to degree " << o.max_degree
                  << "; this does not rule out further ones\n";
        return 3;
    }
    return 0;
}

int run_witness(const Options &o)
{
    const auto spec = load_monoid_spec(o.spec_path);
    if (!spec.affine) {
        throw InvalidInput("witness needs an affine monoid spec");
    }
    const auto &s = *spec.affine;
    const auto field = field_of(o.q);
    const MPoly f = MPoly::parse(field, s.rank(), o.f_literal);
    const auto outcome = cic_verify(s);
    if (const auto *ref = std::get_if<CicRefutation>(&outcome)) {
        throw InvalidInput("closure is not N0^s + Z^t: " + ref->reason);
    }
    const auto &cert = std::get<CicCertificate>(outcome);
    const ConductorIdeal cond = conductor(s, cert);
    WitnessBudget budget;
    budget.max_specializations = o.max_specializations;
    budget.factor.max_total_degree = o.max_total_degree;
    const auto w = witness_highdim(f, s, cert, cond, budget);
    Json r = report_header("witness", json{{"spec", json::parse(spec.canonical)},
                                           {"q", o.q},
                                           {"f", f.to_literal()},
                                           {"max_specializations", o.max_specializations},
                                           {"max_total_degree", o.max_total_degree}});
    r["field"] = field->name();
    r["branch"] = to_string(branch_classify(s, cond));
    r["conductor"] = Json{{"kind", to_string(cond.kind)}, {"generators", cond.generators}};
    r["result"] = witness_json(w, s.split().s);
    emit(o, r);
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Divisor class groups of monoid algebras over finite fields"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "OpenMP threads (0: runtime default)");

    auto *monoid = app.add_subcommand("monoid", "Monoid combinatorics");
    monoid->require_subcommand(1);
    auto *info = monoid->add_subcommand("info", "Gaps, conductor, primes and branch of a monoid");
    info->add_option("spec", o.spec_path, "Monoid spec (JSON)")->required();
    info->add_option("--out", o.out, "Write the report here instead of stdout");

    auto *gf = app.add_subcommand("gf", "Finite field polynomials");
    gf->require_subcommand(1);
    auto *irr = gf->add_subcommand("irreducibles", "Irreducibles with a coefficient prefix");
    irr->add_option("--q", o.q, "Field order")->required();
    irr->add_option("--max-degree", o.max_degree, "Largest degree")->required();
    irr->add_option("--min-degree", o.min_degree, "Smallest degree");
    irr->add_option("--prefix", o.prefix, "Coefficient codes a_0,...,a_m (a_0 != 0)");
    irr->add_option("--cache-dir", o.cache_dir, "Irreducible cache directory (default $PRIMEDIV_CACHE_DIR)");
    irr->add_option("--out", o.out, "Write the report here instead of stdout");

    auto *cg = app.add_subcommand("classgroup", "Class groups of K[S], S numerical");
    cg->require_subcommand(1);
    auto *compute = cg->add_subcommand("compute", "Order, kernel and invariant factors");
    compute->add_option("spec", o.spec_path, "Monoid spec (JSON)")->required();
    compute->add_option("--q", o.q, "Field order")->required();
    compute->add_option("--out", o.out, "Write the report here instead of stdout");

    auto *primes = app.add_subcommand("primes", "Prime divisors");
    primes->require_subcommand(1);
    auto *dist = primes->add_subcommand("distribution", "Irreducibles per divisor class");
    dist->add_option("spec", o.spec_path, "Monoid spec (JSON)")->required();
    dist->add_option("--q", o.q, "Field order")->required();
    dist->add_option("--dmax", o.dmax, "Largest degree")->required();
    dist->add_option("--out", o.out, "Write the report here instead of stdout");
    dist->add_option("--csv", o.csv, "Also write the class table as CSV");
    dist->add_option("--cache-dir", o.cache_dir, "Irreducible cache directory (default $PRIMEDIV_CACHE_DIR)");
    auto *find = primes->add_subcommand("find", "Irreducibles with prescribed low coefficients");
    find->add_option("--q", o.q, "Field order")->required();
    find->add_option("--prefix", o.prefix, "Coefficient codes a_0,...,a_m (a_0 != 0)")->required();
    find->add_option("--count", o.count, "How many to find");
    find->add_option("--min-degree", o.min_degree, "First degree of the schedule");
    find->add_option("--max-degree", o.max_degree, "Last degree of the schedule")->default_val(16);
    find->add_option("--out", o.out, "Write the report here instead of stdout");

    auto *wit = app.add_subcommand("witness", "Irreducible witness in the class of f (affine S)");
    wit->add_option("spec", o.spec_path, "Affine monoid spec (JSON)")->required();
    wit->add_option("--q", o.q, "Field order")->required();
    wit->add_option("--f", o.f_literal, "Sparse literal c:e1,...,en;...")->required();
    wit->add_option("--max-specializations", o.max_specializations, "Specializations to try");
    wit->add_option("--max-total-degree", o.max_total_degree, "Largest total degree for factor search");
    wit->add_option("--out", o.out, "Write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    if (o.threads > 0) {
        omp_set_num_threads(o.threads);
    }
    try {
        if (info->parsed()) {
            return run_monoid_info(o);
        }
        if (irr->parsed()) {
            return run_gf_irreducibles(o);
        }
        if (compute->parsed()) {
            return run_classgroup(o);
        }
        if (dist->parsed()) {
            return run_distribution(o);
        }
        if (find->parsed()) {
            return run_find(o);
        }
        if (wit->parsed()) {
            return run_witness(o);
        }
    } catch (const InvalidInput &e) {
        std::cerr << "primediv: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const Undecided &e) {
        std::cerr << "primediv: undecided: " << e.what() << "\n";
        return 3;
    } catch (const std::filesystem::filesystem_error &e) {
        std::cerr << "primediv: invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "primediv: internal error: " << e.what() << "\nrepro:";
        for (int i = 0; i < argc; ++i) {
            std::cerr << " '" << argv[i] << "'";
        }
        std::cerr << "\n";
        if (!o.spec_path.empty()) {
            std::ifstream spec(o.spec_path);
            std::cerr << "spec: " << spec.rdbuf() << "\n";
        }
        return 4;
    }
    return 2;
}

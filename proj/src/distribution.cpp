#include <primediv/distribution.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <primediv/error.hpp>

namespace primediv
{

DistributionReport distribution(const ClassGroup &group, unsigned dmax, const IrreducibleSource &source)
{
    const auto &field = group.field();
    const unsigned q = field->order();
    const CoefficientPrefix one(field, {1});
    DistributionReport rep;
    rep.dmax = dmax;
    std::map<ClassLabel, ClassRow> table;

    for (unsigned d = 1; d <= dmax; ++d) {
        const auto polys = source ? source(d) : irreducibles_with_prefix(field, d, one);
        const std::uint64_t expected = irreducible_count_nonzero_constant(q, d);
        if (polys.size() != expected) {
            throw InvariantViolation("degree " + std::to_string(d) + ": " + std::to_string(polys.size()) +
                                     " irreducibles with f(0) = 1, necklace count gives " +
                                     std::to_string(expected));
        }
        rep.degree_totals.push_back(polys.size());

        std::vector<ClassLabel> labels(polys.size());
        const auto n = static_cast<std::int64_t>(polys.size());
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            labels[static_cast<std::size_t>(i)] = group.class_of(polys[static_cast<std::size_t>(i)]);
        }
        // Serial merge in enumeration order keeps the first representative stable.
        for (std::size_t i = 0; i < polys.size(); ++i) {
            auto it = table.find(labels[i]);
            if (it == table.end()) {
                it = table.emplace(labels[i], ClassRow{labels[i], std::vector<std::uint64_t>(dmax, 0), polys[i]})
                         .first;
            }
            ++it->second.counts[d - 1];
        }
    }

    std::uint64_t classified = 0;
    for (auto &[label, row] : table) {
        for (auto c : row.counts) {
            classified += c;
        }
        rep.rows.push_back(std::move(row));
    }
    std::uint64_t total = 0;
    for (auto t : rep.degree_totals) {
        total += t;
    }
    if (classified != total) {
        throw InvariantViolation("class counts do not partition the irreducibles");
    }

    const auto order = group.order();
    if (order && *order <= label_enumeration_budget) {
        rep.unhit_listed = true;
        for (std::uint64_t i = 0; i < *order; ++i) {
            auto l = group.label_at(i);
            if (!table.contains(l)) {
                rep.unhit.push_back(std::move(l));
            }
        }
        rep.unhit_count = std::to_string(rep.unhit.size());
    } else if (order) {
        rep.unhit_count = std::to_string(*order - rep.rows.size());
    } else {
        rep.unhit_count = "unknown (order " + group.order_decimal() + ")";
    }
    return rep;
}

std::vector<ClassLabel> linear_only_classes(const ClassGroup &group)
{
    std::set<ClassLabel> out;
    const auto &field = group.field();
    for (unsigned a = 1; a < field->order(); ++a) {
        out.insert(group.class_of(UniPoly(field, {1, static_cast<Field::Elem>(a)})));
    }
    return {out.begin(), out.end()};
}

PrefixSearch find_with_prefix(const FieldRef &field, const CoefficientPrefix &prefix, std::size_t want,
                              unsigned min_degree, unsigned max_degree)
{
    if (min_degree == 0) {
        throw InvalidInput("degree schedule must start at 1 or above");
    }
    PrefixSearch out;
    const unsigned q = field->order();
    const double qm = std::pow(static_cast<double>(q), static_cast<double>(prefix.last_index()));
    for (unsigned d = min_degree; d <= max_degree && out.found.size() < want; ++d) {
        const auto polys = irreducibles_with_prefix(field, d, prefix);
        DegreeDensity dd{d, prefix_candidate_count(field, d, prefix), polys.size(),
                         static_cast<double>(irreducible_count_nonzero_constant(q, d)) / qm};
        out.degrees.push_back(dd);
        for (const auto &p : polys) {
            if (out.found.size() == want) {
                break;
            }
            out.found.push_back(p);
        }
    }
    out.complete = out.found.size() == want;
    return out;
}

} // namespace primediv

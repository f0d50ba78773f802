#include <primediv/conductor.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <set>

#include <omp.h>

#include <primediv/error.hpp>

namespace primediv
{

namespace
{

// Per-axis periods: N0 axes use the +e_i period, Z axes the lcm of the
// +e_j and -e_j periods so that both +-P e_j lie in S.
std::vector<std::int64_t> axis_periods(const AffineMonoid &s, const CicCertificate &cert)
{
    std::vector<std::int64_t> p(s.rank(), 1);
    for (const auto &d : cert.directions) {
        for (unsigned i = 0; i < s.rank(); ++i) {
            if (d.direction[i] != 0) {
                p[i] = std::lcm(p[i], d.period);
            }
        }
    }
    return p;
}

// Calls fn on every point of the integer box lo..hi (inclusive), last
// coordinate fastest.
template <typename Fn>
void for_each_point(const IntVec &lo, const IntVec &hi, Fn &&fn)
{
    IntVec x = lo;
    const std::size_t n = lo.size();
    while (true) {
        fn(x);
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (x[k] < hi[k]) {
                ++x[k];
                break;
            }
            x[k] = lo[k];
            if (k == 0) {
                return;
            }
        }
        if (n == 0) {
            return;
        }
    }
}

} // namespace

std::string to_string(ConductorKind k)
{
    switch (k) {
    case ConductorKind::numerical_threshold:
        return "numerical-threshold";
    case ConductorKind::affine_generator_set:
        return "affine-generator-set";
    case ConductorKind::box_certified_partial:
        return "box-certified-partial";
    }
    return "?";
}

std::string to_string(Branch b)
{
    switch (b) {
    case Branch::constructive:
        return "constructive";
    case Branch::kainrath:
        return "kainrath";
    case Branch::undecided:
        return "undecided";
    }
    return "?";
}

bool ConductorIdeal::covers(const IntVec &x, unsigned s) const
{
    if (kind == ConductorKind::numerical_threshold) {
        return !x.empty() && x[0] >= threshold;
    }
    return std::any_of(generators.begin(), generators.end(), [&](const IntVec &g) {
        for (unsigned i = 0; i < s; ++i) {
            if (x[i] < g[i]) {
                return false;
            }
        }
        return true;
    });
}

ConductorIdeal conductor(const NumericalMonoid &s)
{
    ConductorIdeal f{ConductorKind::numerical_threshold, 0, {}, 0};
    f.threshold = s.conductor_threshold();
    return f;
}

bool in_conductor(const AffineMonoid &s, const CicCertificate &cert, const IntVec &x)
{
    for (unsigned i = 0; i < s.split().s; ++i) {
        if (x[i] < 0) {
            return false;
        }
    }
    const auto periods = axis_periods(s, cert);
    IntVec lo(s.rank(), 0), hi(s.rank());
    for (unsigned i = 0; i < s.rank(); ++i) {
        hi[i] = periods[i] - 1;
    }
    bool ok = true;
    for_each_point(lo, hi, [&](const IntVec &r) {
        if (!ok) {
            return;
        }
        IntVec y = x;
        for (std::size_t i = 0; i < y.size(); ++i) {
            y[i] += r[i];
        }
        ok = s.contains(y);
    });
    return ok;
}

std::vector<IntVec> conductor_points(const AffineMonoid &s, const CicCertificate &cert, std::int64_t box)
{
    const unsigned ns = s.split().s;
    std::vector<IntVec> grid;
    IntVec lo(ns, 0), hi(ns, box);
    for_each_point(lo, hi, [&](const IntVec &x) {
        IntVec full(s.rank(), 0);
        std::copy(x.begin(), x.end(), full.begin());
        grid.push_back(std::move(full));
    });

    std::vector<char> hit(grid.size(), 0);
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mtx;
    const auto n = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) {
        if (failed.load(std::memory_order_relaxed)) {
            continue;
        }
        try {
            hit[static_cast<std::size_t>(i)] = in_conductor(s, cert, grid[static_cast<std::size_t>(i)]) ? 1 : 0;
        } catch (const std::exception &e) {
            std::lock_guard lock(failure_mtx);
            if (!failed.exchange(true)) {
                failure = e.what();
            }
        }
    }
    if (failed) {
        throw Undecided("conductor box scan: " + failure);
    }
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (hit[i]) {
            out.push_back(grid[i]);
        }
    }
    return out;
}

std::vector<IntVec> conductor_points_fixed_point(const AffineMonoid &s, const CicCertificate &cert,
                                                 std::int64_t box)
{
    const auto [ns, nt] = s.split();
    const unsigned n = s.rank();
    IntVec lo(n, 0), hi(n, box);
    for (unsigned j = ns; j < n; ++j) {
        lo[j] = -box;
    }
    auto inside = [&](const IntVec &x) {
        for (unsigned i = 0; i < n; ++i) {
            if (x[i] < lo[i] || x[i] > hi[i]) {
                return false;
            }
        }
        return true;
    };

    std::set<IntVec> current;
    for_each_point(lo, hi, [&](const IntVec &x) {
        if (s.contains(x)) {
            current.insert(x);
        }
    });

    std::vector<IntVec> steps;
    for (unsigned i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        steps.push_back(e);
        if (i >= ns) {
            e[i] = -1;
            steps.push_back(e);
        }
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = current.begin(); it != current.end();) {
            bool keep = true;
            for (const auto &h : steps) {
                IntVec y = *it;
                for (unsigned i = 0; i < n; ++i) {
                    y[i] += h[i];
                }
                keep = inside(y) ? current.count(y) > 0 : in_conductor(s, cert, y);
                if (!keep) {
                    break;
                }
            }
            if (keep) {
                ++it;
            } else {
                it = current.erase(it);
                changed = true;
            }
        }
    }

    std::vector<IntVec> out;
    for (const auto &x : current) {
        bool zero_torus = true;
        for (unsigned j = ns; j < n; ++j) {
            zero_torus = zero_torus && x[j] == 0;
        }
        if (zero_torus) {
            out.push_back(x);
        }
    }
    return out;
}

std::vector<IntVec> minimal_elements(std::vector<IntVec> points, unsigned s)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    auto below = [s](const IntVec &a, const IntVec &b) {
        for (unsigned i = 0; i < s; ++i) {
            if (a[i] > b[i]) {
                return false;
            }
        }
        return true;
    };
    std::vector<IntVec> out;
    for (const auto &x : points) {
        bool minimal = std::none_of(points.begin(), points.end(), [&](const IntVec &y) {
            return below(y, x) && !below(x, y);
        });
        if (minimal) {
            out.push_back(x);
        }
    }
    return out;
}

ConductorIdeal conductor(const AffineMonoid &s, const CicCertificate &cert, std::int64_t box)
{
    const unsigned ns = s.split().s;
    if (const auto &prod = s.product()) {
        ConductorIdeal f{ConductorKind::affine_generator_set, 0, {}, 0};
        IntVec g(s.rank(), 0);
        for (unsigned i = 0; i < ns; ++i) {
            g[i] = prod->factors[i].conductor_threshold();
        }
        f.generators.push_back(std::move(g));
        return f;
    }
    ConductorIdeal f{ConductorKind::box_certified_partial, 0, {}, 0};
    f.box = box;
    f.generators = minimal_elements(conductor_points(s, cert, box), ns);
    return f;
}

Branch branch_classify(const NumericalMonoid &s)
{
    // The single prime S \ {0} contains [f(S)+1, oo) iff 0 is not in it.
    return s.conductor_threshold() >= 1 ? Branch::constructive : Branch::kainrath;
}

Branch branch_classify(const AffineMonoid &s, const ConductorIdeal &f)
{
    const unsigned ns = s.split().s;
    for (const auto &g : f.generators) {
        for (unsigned i = 0; i < ns; ++i) {
            if (g[i] == 0) {
                return Branch::kainrath; // g is a certified conductor element outside p_{i+1}
            }
        }
    }
    if (!f.exact()) {
        return Branch::undecided;
    }
    return Branch::constructive;
}

} // namespace primediv

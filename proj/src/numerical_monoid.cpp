#include <primediv/numerical_monoid.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

#include <primediv/error.hpp>

namespace primediv
{

namespace
{

// Dijkstra over residues mod a with edge weights = generators.
std::vector<std::uint64_t> apery_set(const std::vector<unsigned> &gens)
{
    const unsigned a = gens.front();
    constexpr auto inf = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> dist(a, inf);
    using Item = std::pair<std::uint64_t, unsigned>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[0] = 0;
    pq.push({0, 0});
    while (!pq.empty()) {
        auto [d, r] = pq.top();
        pq.pop();
        if (d != dist[r]) {
            continue;
        }
        for (unsigned g : gens) {
            const unsigned r2 = static_cast<unsigned>((r + g) % a);
            if (d + g < dist[r2]) {
                dist[r2] = d + g;
                pq.push({dist[r2], r2});
            }
        }
    }
    return dist;
}

} // namespace

NumericalMonoid NumericalMonoid::from_generators(std::vector<std::uint64_t> input)
{
    if (input.empty()) {
        throw InvalidInput("numerical monoid needs at least one generator");
    }
    std::uint64_t g = 0;
    for (auto x : input) {
        if (x > max_generator) {
            throw InvalidInput("generator " + std::to_string(x) + " exceeds the supported maximum "
                               + std::to_string(max_generator));
        }
        g = std::gcd(g, x);
    }
    if (g != 1) {
        throw InvalidInput("generators have gcd " + std::to_string(g)
                           + "; a numerical monoid needs gcd 1 (inputs are not divided through)");
    }
    std::sort(input.begin(), input.end());
    input.erase(std::unique(input.begin(), input.end()), input.end());
    input.erase(std::remove(input.begin(), input.end(), 0u), input.end());

    // Keep a generator only if the smaller kept ones cannot reach it.
    NumericalMonoid s;
    std::vector<char> reach(input.back() + 1, 0);
    reach[0] = 1;
    for (auto x : input) {
        if (reach[x]) {
            continue;
        }
        s.gens_.push_back(static_cast<unsigned>(x));
        for (std::size_t n = x; n < reach.size(); ++n) {
            if (reach[n - x]) {
                reach[n] = 1;
            }
        }
    }

    s.apery_ = apery_set(s.gens_);
    const auto top = *std::max_element(s.apery_.begin(), s.apery_.end());
    s.frobenius_ = static_cast<int>(top) - static_cast<int>(s.gens_.front());
    for (int n = 1; n <= s.frobenius_; ++n) {
        if (!s.contains(n)) {
            s.gaps_.push_back(static_cast<unsigned>(n));
        }
    }
    return s;
}

NumericalMonoid NumericalMonoid::ordinary(unsigned m)
{
    std::vector<std::uint64_t> gens;
    for (std::uint64_t g = m + 1; g <= 2ull * m + 1; ++g) {
        gens.push_back(g);
    }
    return from_generators(std::move(gens));
}

bool NumericalMonoid::is_subset_of(const NumericalMonoid &other) const noexcept
{
    return std::all_of(gens_.begin(), gens_.end(), [&](unsigned g) { return other.contains(g); });
}

} // namespace primediv

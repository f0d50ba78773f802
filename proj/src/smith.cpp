#include <primediv/smith.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include <primediv/error.hpp>

namespace primediv
{

namespace
{

std::int64_t checked(__int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN) {
        throw InvalidInput("integer overflow in Smith normal form");
    }
    return static_cast<std::int64_t>(v);
}

} // namespace

std::vector<std::int64_t> elementary_divisors(IntMatrix m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::vector<std::int64_t> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        std::size_t pr = rows, pc = cols;
        std::int64_t best = 0;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] != 0 && (best == 0 || std::llabs(m[i][j]) < best)) {
                    best = std::llabs(m[i][j]);
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best == 0) {
            break;
        }
        std::swap(m[t], m[pr]);
        for (auto &row : m) {
            std::swap(row[t], row[pc]);
        }

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            const std::int64_t qt = m[i][t] / m[t][t];
            for (std::size_t j = t; j < cols; ++j) {
                m[i][j] = checked(static_cast<__int128>(m[i][j]) - static_cast<__int128>(qt) * m[t][j]);
            }
            clean = clean && m[i][t] == 0;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            const std::int64_t qt = m[t][j] / m[t][t];
            for (std::size_t i = t; i < rows; ++i) {
                m[i][j] = checked(static_cast<__int128>(m[i][j]) - static_cast<__int128>(qt) * m[i][t]);
            }
            clean = clean && m[t][j] == 0;
        }
        if (!clean) {
            continue; // a smaller remainder now exists; re-pivot
        }
        // Divisibility: fold any entry not divisible by the pivot into row t.
        bool divisible = true;
        for (std::size_t i = t + 1; i < rows && divisible; ++i) {
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[i][j] % m[t][t] != 0) {
                    for (std::size_t k = t; k < cols; ++k) {
                        m[t][k] = checked(static_cast<__int128>(m[t][k]) + m[i][k]);
                    }
                    divisible = false;
                    break;
                }
            }
        }
        if (!divisible) {
            continue;
        }
        diag.push_back(std::llabs(m[t][t]));
        ++t;
    }
    return diag;
}

} // namespace primediv

#include <primediv/factor.hpp>

#include <algorithm>

#include <primediv/error.hpp>

namespace primediv
{

namespace
{

// Requires every exponent of f to be a multiple of p.
UniPoly pth_root(const UniPoly &f)
{
    const auto &F = f.field();
    const unsigned p = F->characteristic();
    std::vector<Field::Elem> c(static_cast<std::size_t>(f.degree()) / p + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = F->pth_root(f.coeff(i * p));
    }
    return UniPoly(F, std::move(c));
}

void squarefree_into(const UniPoly &f, unsigned scale, std::vector<FactorPower> &out)
{
    if (f.degree() < 1) {
        return;
    }
    const unsigned p = f.field()->characteristic();
    const UniPoly fp = f.derivative();
    if (fp.is_zero()) {
        squarefree_into(pth_root(f), scale * p, out);
        return;
    }
    UniPoly c = gcd(f, fp);
    UniPoly w = divmod(f, c).quotient;
    unsigned i = 1;
    while (!w.is_one()) {
        UniPoly y = gcd(w, c);
        UniPoly z = divmod(w, y).quotient;
        if (z.degree() > 0) {
            out.push_back({z.monic(), i * scale});
        }
        ++i;
        w = y;
        c = divmod(c, y).quotient;
    }
    if (c.degree() > 0) {
        squarefree_into(pth_root(c.monic()), scale * p, out);
    }
}

bool poly_less(const UniPoly &a, const UniPoly &b)
{
    if (a.degree() != b.degree()) {
        return a.degree() < b.degree();
    }
    return a.digits() < b.digits();
}

// Basis of the left null space of (Q - I), i.e. of the Berlekamp subalgebra.
std::vector<std::vector<Field::Elem>> berlekamp_basis(const UniPoly &f)
{
    const auto &F = *f.field();
    const auto n = static_cast<std::size_t>(f.degree());
    const UniPoly xq = powmod(UniPoly::x(f.field()), F.order(), f);

    // Transposed (Q - I): column i holds X^{q i} mod f.
    std::vector<std::vector<Field::Elem>> m(n, std::vector<Field::Elem>(n, 0));
    UniPoly row = UniPoly::constant(f.field(), 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[j][i] = row.coeff(j);
        }
        m[i][i] = F.sub(m[i][i], 1);
        row = mulmod(row, xq, f);
    }

    // Reduced row echelon form.
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < n; ++col) {
        std::size_t piv = r;
        while (piv < n && m[piv][col] == 0) {
            ++piv;
        }
        if (piv == n) {
            continue;
        }
        std::swap(m[piv], m[r]);
        const auto inv = F.inv(m[r][col]);
        for (auto &e : m[r]) {
            e = F.mul(e, inv);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i != r && m[i][col] != 0) {
                const auto t = m[i][col];
                for (std::size_t j = 0; j < n; ++j) {
                    m[i][j] = F.sub(m[i][j], F.mul(t, m[r][j]));
                }
            }
        }
        pivot_col.push_back(col);
        ++r;
    }

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_col) {
        is_pivot[c] = true;
    }
    std::vector<std::vector<Field::Elem>> basis;
    for (std::size_t freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) {
            continue;
        }
        std::vector<Field::Elem> v(n, 0);
        v[freec] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            v[pivot_col[i]] = F.neg(m[i][freec]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::vector<FactorPower> squarefree_decomposition(const UniPoly &f)
{
    if (f.is_zero()) {
        throw InvalidInput("cannot factor the zero polynomial");
    }
    std::vector<FactorPower> out;
    squarefree_into(f.monic(), 1, out);
    return out;
}

std::vector<UniPoly> berlekamp_split(const UniPoly &f)
{
    if (f.degree() <= 1) {
        return {f.monic()};
    }
    const auto basis = berlekamp_basis(f);
    const std::size_t target = basis.size();
    std::vector<UniPoly> parts{f.monic()};
    const unsigned q = f.field()->order();
    for (const auto &v : basis) {
        if (parts.size() == target) {
            break;
        }
        UniPoly vp(f.field(), v);
        if (vp.degree() < 1) {
            continue;
        }
        std::vector<UniPoly> next;
        for (const auto &u : parts) {
            if (u.degree() <= 1) {
                next.push_back(u);
                continue;
            }
            std::vector<UniPoly> pieces;
            for (unsigned s = 0; s < q; ++s) {
                UniPoly g = gcd(u, vp - UniPoly::constant(f.field(), static_cast<Field::Elem>(s)));
                if (g.degree() > 0) {
                    pieces.push_back(std::move(g));
                }
            }
            next.insert(next.end(), pieces.begin(), pieces.end());
        }
        parts = std::move(next);
    }
    if (parts.size() != target) {
        throw InvariantViolation("Berlekamp splitting found " + std::to_string(parts.size()) + " factors, expected "
                                 + std::to_string(target));
    }
    std::sort(parts.begin(), parts.end(), poly_less);
    return parts;
}

Factorization factor(const UniPoly &f)
{
    if (f.is_zero()) {
        throw InvalidInput("cannot factor the zero polynomial");
    }
    Factorization out{f.leading(), {}};
    for (const auto &sq : squarefree_decomposition(f)) {
        for (auto &g : berlekamp_split(sq.factor)) {
            out.factors.push_back({std::move(g), sq.multiplicity});
        }
    }
    // Squarefree parts are coprime, so no factor repeats across parts.
    std::sort(out.factors.begin(), out.factors.end(),
              [](const FactorPower &a, const FactorPower &b) { return poly_less(a.factor, b.factor); });
    return out;
}

} // namespace primediv

#include "ramfilt/fp_linalg.hpp"

#include <algorithm>
#include <set>

namespace ramfilt {

Fp fp_inv(Fp x, std::uint32_t p) {
    if (x % p == 0) fail(errc::non_unit, "inverse of 0 in F_p");
    // extended Euclid on (x, p)
    std::int64_t a = x % p, b = p, s = 1, u = 0;
    while (a != 0) {
        std::int64_t q = b / a;
        std::int64_t t = b - q * a;
        b = a, a = t;
        t = u - q * s;
        u = s, s = t;
    }
    return static_cast<Fp>(((u % p) + p) % p);
}

FpMatrix rref(const FpMatrix& m) {
    FpMatrix r = m;
    const std::uint32_t p = r.p;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols && lead < r.rows; ++col) {
        std::size_t piv = lead;
        while (piv < r.rows && r.at(piv, col) == 0) ++piv;
        if (piv == r.rows) continue;
        if (piv != lead)
            for (std::size_t c = 0; c < r.cols; ++c)
                std::swap(r.at(piv, c), r.at(lead, c));
        const Fp inv = fp_inv(r.at(lead, col), p);
        for (std::size_t c = 0; c < r.cols; ++c)
            r.at(lead, c) = static_cast<Fp>((static_cast<std::uint64_t>(r.at(lead, c)) * inv) % p);
        for (std::size_t row = 0; row < r.rows; ++row) {
            if (row == lead) continue;
            const Fp f = r.at(row, col);
            if (f == 0) continue;
            for (std::size_t c = 0; c < r.cols; ++c) {
                std::uint64_t v = r.at(row, c) + static_cast<std::uint64_t>(p - f) * r.at(lead, c) % p;
                r.at(row, c) = static_cast<Fp>(v % p);
            }
        }
        ++lead;
    }
    r.rows = lead;          // rows past 'lead' are identically zero
    r.a.resize(lead * r.cols);
    return r;
}

std::vector<std::size_t> pivot_columns(const FpMatrix& r) {
    std::vector<std::size_t> piv;
    piv.reserve(r.rows);
    for (std::size_t i = 0; i < r.rows; ++i) {
        std::size_t c = 0;
        while (c < r.cols && r.at(i, c) == 0) ++c;
        RAMFILT_ASSERT(c < r.cols);
        piv.push_back(c);
    }
    return piv;
}

FpMatrix kernel(const FpMatrix& m) {
    const FpMatrix r = rref(m);
    const std::uint32_t p = r.p;
    const auto piv = pivot_columns(r);
    std::vector<bool> is_piv(r.cols, false);
    for (auto c : piv) is_piv[c] = true;

    FpMatrix k(p, r.cols - piv.size(), r.cols);
    std::size_t out = 0;
    for (std::size_t fc = 0; fc < r.cols; ++fc) {
        if (is_piv[fc]) continue;
        k.at(out, fc) = 1;
        for (std::size_t i = 0; i < r.rows; ++i)
            k.at(out, piv[i]) = (p - r.at(i, fc)) % p;
        ++out;
    }
    return rref(k);
}

bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim) return a.ambient_dim < b.ambient_dim;
    if (a.p != b.p) return a.p < b.p;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.basis.a < b.basis.a;
}

Subspace zero_subspace(std::size_t ambient_dim, std::uint32_t p) {
    return Subspace{p, ambient_dim, FpMatrix(p, 0, ambient_dim)};
}

Subspace full_space(std::size_t ambient_dim, std::uint32_t p) {
    FpMatrix id(p, ambient_dim, ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) id.at(i, i) = 1;
    return Subspace{p, ambient_dim, id};
}

Subspace span(const std::vector<CoordVec>& vectors, std::size_t ambient_dim,
              std::uint32_t p) {
    FpMatrix m(p, vectors.size(), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient_dim)
            fail(errc::dimension_mismatch, "span: vector length != ambient_dim");
        for (std::size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = vectors[i][j] % p;
    }
    return Subspace{p, ambient_dim, rref(m)};
}

static void check_compatible(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim != b.ambient_dim || a.p != b.p)
        fail(errc::ambient_mismatch, "subspaces live in different ambient spaces");
}

Subspace sum(const Subspace& a, const Subspace& b) {
    check_compatible(a, b);
    FpMatrix m(a.p, a.dim() + b.dim(), a.ambient_dim);
    std::copy(a.basis.a.begin(), a.basis.a.end(), m.a.begin());
    std::copy(b.basis.a.begin(), b.basis.a.end(),
              m.a.begin() + static_cast<std::ptrdiff_t>(a.basis.a.size()));
    return Subspace{a.p, a.ambient_dim, rref(m)};
}

Subspace annihilator(const Subspace& a) {
    if (a.dim() == 0) return full_space(a.ambient_dim, a.p);
    return Subspace{a.p, a.ambient_dim, kernel(a.basis)};
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    check_compatible(a, b);
    // x in a∩b  <=>  x is annihilated by ann(a) and ann(b)
    const Subspace an = annihilator(a), bn = annihilator(b);
    FpMatrix constraints(a.p, an.dim() + bn.dim(), a.ambient_dim);
    std::copy(an.basis.a.begin(), an.basis.a.end(), constraints.a.begin());
    std::copy(bn.basis.a.begin(), bn.basis.a.end(),
              constraints.a.begin() + static_cast<std::ptrdiff_t>(an.basis.a.size()));
    return Subspace{a.p, a.ambient_dim, kernel(constraints)};
}

bool contains(const Subspace& a, const CoordVec& v) {
    if (v.size() != a.ambient_dim)
        fail(errc::dimension_mismatch, "contains: vector length != ambient_dim");
    const std::uint32_t p = a.p;
    CoordVec w(v);
    for (auto& x : w) x %= p;
    const auto piv = pivot_columns(a.basis);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const Fp f = w[piv[i]];
        if (f == 0) continue;
        for (std::size_t c = 0; c < a.ambient_dim; ++c)
            w[c] = static_cast<Fp>((w[c] + static_cast<std::uint64_t>(p - f) * a.basis.at(i, c)) % p);
    }
    return std::all_of(w.begin(), w.end(), [](Fp x) { return x == 0; });
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
    check_compatible(a, b);
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!contains(b, a.basis.row(i))) return false;
    return true;
}

std::vector<CoordVec> enumerate_lines(const Subspace& a) {
    const std::uint32_t p = a.p;
    const std::size_t k = a.dim();
    std::set<CoordVec> reps;
    // walk all nonzero coefficient tuples; canonicalize each spanned vector
    std::vector<Fp> lambda(k, 0);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= p;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (std::size_t i = 0; i < k; ++i) { lambda[i] = static_cast<Fp>(t % p); t /= p; }
        CoordVec v(a.ambient_dim, 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (lambda[i] == 0) continue;
            for (std::size_t c = 0; c < a.ambient_dim; ++c)
                v[c] = static_cast<Fp>((v[c] + static_cast<std::uint64_t>(lambda[i]) * a.basis.at(i, c)) % p);
        }
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        RAMFILT_ASSERT(lead < v.size());
        const Fp inv = fp_inv(v[lead], p);
        for (auto& x : v) x = static_cast<Fp>((static_cast<std::uint64_t>(x) * inv) % p);
        reps.insert(std::move(v));
    }
    const std::uint64_t expected = k == 0 ? 0 : (total - 1) / (p - 1);
    RAMFILT_ASSERT(reps.size() == expected);
    return {reps.begin(), reps.end()};
}

std::vector<Subspace> enumerate_hyperplanes_above(const Subspace& n) {
    const std::uint32_t p = n.p;
    const std::size_t d = n.ambient_dim;
    const std::size_t c = d - n.dim();
    if (c == 0)
        fail(errc::no_hyperplane_above, "no hyperplane above the ambient space");

    // complement basis: standard vectors at the non-pivot columns of n
    const auto piv = pivot_columns(n.basis);
    std::vector<bool> is_piv(d, false);
    for (auto x : piv) is_piv[x] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < d; ++j)
        if (!is_piv[j]) free_cols.push_back(j);
    RAMFILT_ASSERT(free_cols.size() == c);

    // hyperplanes above n <-> nonzero functionals (mod scalar) on the quotient.
    // Canonical functionals: zero prefix, then 1, then free entries.
    std::vector<Subspace> out;
    std::vector<Fp> phi(c, 0);
    for (std::size_t lead = 0; lead < c; ++lead) {
        std::uint64_t tail = 1;
        for (std::size_t i = lead + 1; i < c; ++i) tail *= p;
        for (std::uint64_t idx = 0; idx < tail; ++idx) {
            std::fill(phi.begin(), phi.end(), 0);
            phi[lead] = 1;
            std::uint64_t t = idx;
            for (std::size_t i = lead + 1; i < c; ++i) { phi[i] = static_cast<Fp>(t % p); t /= p; }
            // kernel of phi inside the complement, lifted to ambient coords
            std::vector<CoordVec> rows;
            for (std::size_t i = 0; i < n.dim(); ++i) rows.push_back(n.basis.row(i));
            for (std::size_t j = 0; j < c; ++j) {
                if (j == lead) continue;
                CoordVec v(d, 0);
                v[free_cols[j]] = 1;
                v[free_cols[lead]] = (p - phi[j]) % p;
                rows.push_back(std::move(v));
            }
            out.push_back(span(rows, d, p));
            RAMFILT_ASSERT(out.back().dim() == d - 1);
        }
    }
    std::sort(out.begin(), out.end());
    RAMFILT_ASSERT(std::adjacent_find(out.begin(), out.end()) == out.end());
    std::uint64_t expected = 0, pk = 1;
    for (std::size_t i = 0; i < c; ++i) { expected += pk; pk *= p; }
    RAMFILT_ASSERT(out.size() == expected);  // (p^c - 1)/(p - 1)
    return out;
}

}  // namespace ramfilt

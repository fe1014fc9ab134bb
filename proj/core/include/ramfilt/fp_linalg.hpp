#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ramfilt/errors.hpp"

namespace ramfilt {

using Fp = std::uint32_t;            // residue in [0, p)
using CoordVec = std::vector<Fp>;    // coordinate vector over F_p

Fp fp_inv(Fp x, std::uint32_t p);

/// Dense matrix over the prime field F_p, entries reduced to [0, p).
struct FpMatrix {
    std::uint32_t p = 2;
    std::size_t rows = 0, cols = 0;
    std::vector<Fp> a;  // row-major

    FpMatrix() = default;
    FpMatrix(std::uint32_t p_, std::size_t r, std::size_t c)
        : p(p_), rows(r), cols(c), a(r * c, 0) {}

    Fp& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    Fp at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    CoordVec row(std::size_t r) const {
        return CoordVec(a.begin() + static_cast<std::ptrdiff_t>(r * cols),
                        a.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
    }

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;
};

/// Canonical reduced row-echelon form: pivots 1, pivot columns cleared,
/// zero rows dropped. Equal row spaces produce identical matrices.
FpMatrix rref(const FpMatrix& m);

/// Pivot columns of a matrix already in rref.
std::vector<std::size_t> pivot_columns(const FpMatrix& r);

/// Right null space {v : m v = 0} as canonical rref basis rows.
FpMatrix kernel(const FpMatrix& m);

/// A subspace of F_p^d held in canonical form, so equality of subspaces is
/// bit-for-bit equality of the representation.
struct Subspace {
    std::uint32_t p = 2;
    std::size_t ambient_dim = 0;
    FpMatrix basis;  // rref, rows == dim

    std::size_t dim() const { return basis.rows; }
    std::size_t codim() const { return ambient_dim - basis.rows; }

    friend bool operator==(const Subspace&, const Subspace&) = default;
};

// Total order (lexicographic on the canonical basis); Subspaces are used
// as dictionary keys downstream.
bool operator<(const Subspace& a, const Subspace& b);

Subspace zero_subspace(std::size_t ambient_dim, std::uint32_t p);
Subspace full_space(std::size_t ambient_dim, std::uint32_t p);
Subspace span(const std::vector<CoordVec>& vectors, std::size_t ambient_dim,
              std::uint32_t p);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace annihilator(const Subspace& a);
bool contains(const Subspace& a, const CoordVec& v);
bool subspace_leq(const Subspace& a, const Subspace& b);

/// One canonical representative per 1-dimensional subspace of a (first
/// nonzero ambient coordinate scaled to 1), in ascending lexicographic order.
std::vector<CoordVec> enumerate_lines(const Subspace& a);

/// All codimension-1 subspaces of the ambient space containing n, in
/// ascending lexicographic order of their canonical bases.
std::vector<Subspace> enumerate_hyperplanes_above(const Subspace& n);

}  // namespace ramfilt

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramfilt/errors.hpp"
#include "ramfilt/fp_linalg.hpp"

namespace ramfilt {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// Element of the residue field F_q = F_p[y]/(g mod p), as f coefficients
/// in [0, p), constant first.
struct ResidueElement {
    std::vector<Fp> c;
    friend bool operator==(const ResidueElement&, const ResidueElement&) = default;
    friend bool operator<(const ResidueElement& a, const ResidueElement& b) { return a.c < b.c; }
    bool is_zero() const {
        for (auto x : c) if (x) return false;
        return true;
    }
};

/// Arithmetic in F_q = F_p[y]/(gbar), gbar monic irreducible of degree f.
class ResidueField {
  public:
    ResidueField() = default;
    ResidueField(std::uint32_t p, std::vector<Fp> gbar_monic);

    std::uint32_t p() const { return p_; }
    std::size_t f() const { return f_; }
    u64 q() const { return q_; }

    ResidueElement zero() const { return {std::vector<Fp>(f_, 0)}; }
    ResidueElement one() const;
    ResidueElement add(const ResidueElement& a, const ResidueElement& b) const;
    ResidueElement sub(const ResidueElement& a, const ResidueElement& b) const;
    ResidueElement neg(const ResidueElement& a) const;
    ResidueElement mul(const ResidueElement& a, const ResidueElement& b) const;
    ResidueElement scalar_mul(Fp s, const ResidueElement& a) const;
    ResidueElement pow(const ResidueElement& a, u64 n) const;
    ResidueElement inv(const ResidueElement& a) const;       // a != 0
    ResidueElement frobenius(const ResidueElement& a) const; // a^p
    ResidueElement inv_frobenius(const ResidueElement& a) const;

    // fixed enumeration by coefficient tuples: index = sum c_j p^j
    u64 index(const ResidueElement& a) const;
    ResidueElement from_index(u64 idx) const;

  private:
    std::uint32_t p_ = 2;
    std::size_t f_ = 1;
    u64 q_ = 2;
    std::vector<Fp> gbar_;  // monic, degree f, coefficients mod p
};

class Field;

/// Element of O_K known modulo pi^prec, stored as e polynomial coefficients
/// over W = Z[y]/(g, p^M); coefficient (i, j) is the y^j part of the pi^i
/// coefficient, a residue in [0, p^M).
struct RingElement {
    const Field* owner = nullptr;
    std::vector<u64> w;  // size e*f, row-major in (pi power, y power)
    int prec = 0;        // pi-adic precision of validity, <= N

    u64& at(int i, int j);
    u64 at(int i, int j) const;
};

/// The base field K/Q_p defined by an unramified polynomial g (degree f,
/// irreducible mod p) and an Eisenstein polynomial E (degree e over W).
/// Ring arithmetic is exact in O_K / pi^N with N = e*M.
class Field {
  public:
    /// precision = M (coefficients kept mod p^M); 0 picks the default
    /// M = ceil((ceil(crit) + e + 2)/e) + 1.
    static Field make(i64 p, const std::vector<i64>& g,
                      const std::vector<std::vector<i64>>& E, int precision);

    // defining data and derived constants
    i64 p() const { return p_; }
    int f() const { return f_; }
    int e() const { return e_; }
    int n() const { return e_ * f_; }
    u64 q() const { return q_; }
    int M() const { return M_; }
    int N() const { return N_; }
    u64 pM() const { return pM_; }

    /// crit = p*e/(p-1) as an exact reduced rational (num, den).
    std::pair<i64, i64> crit() const { return {crit_num_, crit_den_}; }
    std::optional<int> crit_int() const { return crit_int_; }
    int crit_floor() const { return crit_floor_; }
    int crit_ceil() const { return crit_ceil_; }
    bool less_than_crit(i64 v) const { return v * crit_den_ < crit_num_; }
    bool greater_than_crit(i64 v) const { return v * crit_den_ > crit_num_; }

    const std::vector<int>& level_set() const { return I_; }  // the set I
    bool zeta_p_in_k() const { return zeta_p_; }
    const ResidueField& kbar() const { return kbar_; }

    // Theorem-8 data, cached at construction
    const ResidueElement& theta() const { return theta_; }  // residue of p*pi^{-e}
    ResidueElement phi(const ResidueElement& c) const;      // c^p + theta*c
    /// preimage under phi, if d lies in the image
    std::optional<ResidueElement> phi_preimage(const ResidueElement& d) const;
    const std::optional<ResidueElement>& c_star() const { return c_star_; }
    const std::optional<RingElement>& omega_star() const { return omega_star_; }

    // element constructors
    RingElement zero() const;
    RingElement one() const;
    RingElement pi() const;
    RingElement from_integer(i64 v) const;
    RingElement from_coeffs(const std::vector<std::vector<i64>>& c) const;
    RingElement lift(const ResidueElement& c) const;
    /// 1 + c * pi^level
    RingElement one_plus(const ResidueElement& c, int level) const;
    /// eta_(x,y) = 1 + c_y pi^x with c_y = class of y^{y-1}
    RingElement eta(int x, int y) const;

    // arithmetic
    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement sub(const RingElement& a, const RingElement& b) const;
    RingElement neg(const RingElement& a) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;
    RingElement pow_u(const RingElement& a, u64 n) const;
    RingElement unit_inverse(const RingElement& a) const;

    /// v_K, normalized with v(pi) = 1; nullopt when x = 0 at precision.
    std::optional<int> valuation(const RingElement& x) const;
    ResidueElement residue(const RingElement& x) const;
    std::pair<int, ResidueElement> leading_residue(const RingElement& x) const;
    /// x * pi^{-k}; requires v(x) >= k. Costs k digits of pi-adic precision.
    RingElement shift_down(const RingElement& x, int k) const;

    bool is_zero_at_precision(const RingElement& x) const;
    /// same class modulo min(prec): v(a-b) beyond both precisions
    bool same_class(const RingElement& a, const RingElement& b) const;

    std::string pretty(const RingElement& x) const;

  private:
    Field() = default;
    void build_theorem8_cache();
    void powering_self_check() const;

    using W = std::vector<u64>;  // f coefficients mod p^M
    W w_zero() const { return W(f_, 0); }
    W w_from(const std::vector<i64>& c) const;
    W w_add(const W& a, const W& b) const;
    W w_sub(const W& a, const W& b) const;
    W w_neg(const W& a) const;
    W w_mul(const W& a, const W& b) const;
    W w_inv(const W& a) const;           // requires v_p = 0
    int w_valuation(const W& a) const;   // min over coefficients, capped at M
    friend struct RingElement;

    i64 p_ = 2;
    int f_ = 1, e_ = 1;
    u64 q_ = 2;
    int M_ = 0, N_ = 0;
    u64 pM_ = 0;
    i64 crit_num_ = 0, crit_den_ = 1;
    std::optional<int> crit_int_;
    int crit_floor_ = 0, crit_ceil_ = 0;
    std::vector<int> I_;
    bool zeta_p_ = false;
    ResidueField kbar_;

    std::vector<u64> gmod_;          // g, degree f, coefficients mod p^M
    std::vector<W> Ecoef_;           // E, degree e, W coefficients (monic)
    RingElement p_over_pi_;          // exact p / pi
    ResidueElement theta_;
    std::map<ResidueElement, ResidueElement> phi_preimage_;  // image -> first preimage
    std::optional<ResidueElement> c_star_;
    std::optional<RingElement> omega_star_;
};

}  // namespace ramfilt

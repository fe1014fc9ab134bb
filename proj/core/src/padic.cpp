#include "ramfilt/padic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ramfilt {

using u128 = unsigned __int128;

// ---------------------------------------------------------------- ResidueField

ResidueField::ResidueField(std::uint32_t p, std::vector<Fp> gbar_monic)
    : p_(p), f_(gbar_monic.size() - 1), gbar_(std::move(gbar_monic)) {
    RAMFILT_ASSERT(f_ >= 1 && gbar_.back() % p_ == 1);
    for (auto& c : gbar_) c %= p_;
    q_ = 1;
    for (std::size_t i = 0; i < f_; ++i) q_ *= p_;
}

ResidueElement ResidueField::one() const {
    auto r = zero();
    r.c[0] = 1;
    return r;
}

ResidueElement ResidueField::add(const ResidueElement& a, const ResidueElement& b) const {
    ResidueElement r = zero();
    for (std::size_t i = 0; i < f_; ++i) r.c[i] = (a.c[i] + b.c[i]) % p_;
    return r;
}

ResidueElement ResidueField::sub(const ResidueElement& a, const ResidueElement& b) const {
    ResidueElement r = zero();
    for (std::size_t i = 0; i < f_; ++i) r.c[i] = (a.c[i] + p_ - b.c[i]) % p_;
    return r;
}

ResidueElement ResidueField::neg(const ResidueElement& a) const { return sub(zero(), a); }

ResidueElement ResidueField::scalar_mul(Fp s, const ResidueElement& a) const {
    ResidueElement r = zero();
    for (std::size_t i = 0; i < f_; ++i)
        r.c[i] = static_cast<Fp>((static_cast<u64>(s % p_) * a.c[i]) % p_);
    return r;
}

ResidueElement ResidueField::mul(const ResidueElement& a, const ResidueElement& b) const {
    std::vector<u64> acc(2 * f_ - 1, 0);
    for (std::size_t i = 0; i < f_; ++i)
        for (std::size_t j = 0; j < f_; ++j) acc[i + j] += static_cast<u64>(a.c[i]) * b.c[j];
    // y^f = -sum gbar[j] y^j
    for (std::size_t k = 2 * f_ - 2; k + 1 > f_; --k) {
        const u64 c = acc[k] % p_;
        acc[k] = 0;
        if (c)
            for (std::size_t j = 0; j < f_; ++j)
                acc[k - f_ + j] += c * ((p_ - gbar_[j]) % p_);
    }
    ResidueElement r = zero();
    for (std::size_t i = 0; i < f_; ++i) r.c[i] = static_cast<Fp>(acc[i] % p_);
    return r;
}

ResidueElement ResidueField::pow(const ResidueElement& a, u64 n) const {
    ResidueElement r = one(), base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

ResidueElement ResidueField::inv(const ResidueElement& a) const {
    if (a.is_zero()) fail(errc::non_unit, "inverse of 0 in F_q");
    return pow(a, q_ - 2);
}

ResidueElement ResidueField::frobenius(const ResidueElement& a) const { return pow(a, p_); }

ResidueElement ResidueField::inv_frobenius(const ResidueElement& a) const {
    ResidueElement r = a;
    for (std::size_t i = 0; i + 1 < f_; ++i) r = frobenius(r);
    return r;
}

u64 ResidueField::index(const ResidueElement& a) const {
    u64 idx = 0, pk = 1;
    for (std::size_t i = 0; i < f_; ++i) { idx += a.c[i] * pk; pk *= p_; }
    return idx;
}

ResidueElement ResidueField::from_index(u64 idx) const {
    ResidueElement r = zero();
    for (std::size_t i = 0; i < f_; ++i) { r.c[i] = static_cast<Fp>(idx % p_); idx /= p_; }
    return r;
}

// ---------------------------------------------------------------- RingElement

u64& RingElement::at(int i, int j) { return w[static_cast<std::size_t>(i) * owner->f() + j]; }
u64 RingElement::at(int i, int j) const { return w[static_cast<std::size_t>(i) * owner->f() + j]; }

// ------------------------------------------------------------- small helpers

namespace {

bool is_prime_i64(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// dense F_p[x] helpers for the irreducibility test, constant first
using PPoly = std::vector<Fp>;

PPoly pp_trim(PPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

PPoly pp_mod(PPoly a, const PPoly& b, std::uint32_t p) {
    a = pp_trim(std::move(a));
    const PPoly bt = b;  // monic expected
    RAMFILT_ASSERT(!bt.empty() && bt.back() == 1);
    while (a.size() >= bt.size()) {
        const Fp c = a.back();
        const std::size_t shift = a.size() - bt.size();
        if (c)
            for (std::size_t j = 0; j < bt.size(); ++j)
                a[shift + j] = static_cast<Fp>((a[shift + j] + static_cast<u64>(p - c) * bt[j]) % p);
        a = pp_trim(std::move(a));
    }
    return a;
}

PPoly pp_mulmod(const PPoly& a, const PPoly& b, const PPoly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] = static_cast<Fp>((acc[i + j] + static_cast<u64>(a[i]) * b[j]) % p);
    return pp_mod(std::move(acc), m, p);
}

PPoly pp_powmod(const PPoly& a, u64 n, const PPoly& m, std::uint32_t p) {
    PPoly r = {1}, base = a;
    while (n) {
        if (n & 1) r = pp_mulmod(r, base, m, p);
        base = pp_mulmod(base, base, m, p);
        n >>= 1;
    }
    return r;
}

PPoly pp_gcd(PPoly a, PPoly b, std::uint32_t p) {
    a = pp_trim(std::move(a));
    b = pp_trim(std::move(b));
    while (!b.empty()) {
        // make b monic for pp_mod
        const Fp inv = fp_inv(b.back(), p);
        for (auto& c : b) c = static_cast<Fp>((static_cast<u64>(c) * inv) % p);
        PPoly r = pp_mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// deterministic irreducibility over F_p: g has no root of x^{p^k} - x for
// k < f, and x^{p^f} = x mod g
bool irreducible_mod_p(const PPoly& g, i64 p_) {
    const auto p = static_cast<std::uint32_t>(p_);
    const std::size_t f = g.size() - 1;
    PPoly x = {0, 1};
    if (f == 1) return true;
    PPoly h = x;
    for (std::size_t k = 1; k <= f; ++k) {
        h = pp_powmod(h, static_cast<u64>(p_), g, p);  // x^{p^k} mod g
        PPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<Fp>((diff[1] + p - 1) % p);
        diff = pp_trim(std::move(diff));
        if (k < f) {
            if (pp_gcd(diff, g, p).size() != 1) return false;  // gcd not constant
        } else {
            if (!diff.empty()) return false;  // x^{p^f} != x
        }
    }
    return true;
}

int vp_u64(u64 c, i64 p, int cap) {
    if (c == 0) return cap;
    int v = 0;
    while (v < cap && c % static_cast<u64>(p) == 0) { c /= static_cast<u64>(p); ++v; }
    return v;
}

}  // namespace

// -------------------------------------------------------------- W arithmetic

Field::W Field::w_from(const std::vector<i64>& c) const {
    W r = w_zero();
    if (c.size() > static_cast<std::size_t>(f_))
        fail(errc::invalid_argument, "coefficient polynomial has degree >= f");
    const i64 m = static_cast<i64>(pM_);
    for (std::size_t j = 0; j < c.size(); ++j) r[j] = static_cast<u64>(((c[j] % m) + m) % m);
    return r;
}

Field::W Field::w_add(const W& a, const W& b) const {
    W r = w_zero();
    for (int j = 0; j < f_; ++j) r[j] = (a[j] + b[j]) % pM_;
    return r;
}

Field::W Field::w_sub(const W& a, const W& b) const {
    W r = w_zero();
    for (int j = 0; j < f_; ++j) r[j] = (a[j] + pM_ - b[j]) % pM_;
    return r;
}

Field::W Field::w_neg(const W& a) const { return w_sub(w_zero(), a); }

Field::W Field::w_mul(const W& a, const W& b) const {
    std::vector<u128> acc(2 * f_ - 1, 0);
    for (int i = 0; i < f_; ++i)
        for (int j = 0; j < f_; ++j) acc[i + j] += static_cast<u128>(a[i]) * b[j];
    for (int k = 2 * f_ - 2; k >= f_; --k) {
        const u64 c = static_cast<u64>(acc[k] % pM_);
        acc[k] = 0;
        if (c)
            for (int j = 0; j < f_; ++j)
                acc[k - f_ + j] += static_cast<u128>(c) * ((pM_ - gmod_[j]) % pM_);
    }
    W r = w_zero();
    for (int j = 0; j < f_; ++j) r[j] = static_cast<u64>(acc[j] % pM_);
    return r;
}

int Field::w_valuation(const W& a) const {
    int v = M_;
    for (int j = 0; j < f_; ++j) v = std::min(v, vp_u64(a[j], p_, M_));
    return v;
}

Field::W Field::w_inv(const W& a) const {
    RAMFILT_ASSERT(w_valuation(a) == 0);
    ResidueElement abar{std::vector<Fp>(f_, 0)};
    for (int j = 0; j < f_; ++j) abar.c[j] = static_cast<Fp>(a[j] % static_cast<u64>(p_));
    const ResidueElement zbar = kbar_.inv(abar);
    W z = w_zero();
    for (int j = 0; j < f_; ++j) z[j] = zbar.c[j];
    W two = w_zero();
    two[0] = 2 % pM_;
    int digits = 1;
    while (digits < M_) {  // Newton doubles p-adic accuracy per step
        z = w_mul(z, w_sub(two, w_mul(a, z)));
        digits *= 2;
    }
    RAMFILT_ASSERT(w_valuation(w_sub(w_mul(a, z), two.empty() ? z : [&] { W o = w_zero(); o[0] = 1; return o; }())) == M_);
    return z;
}

// ----------------------------------------------------------------- Field make

Field Field::make(i64 p, const std::vector<i64>& g,
                  const std::vector<std::vector<i64>>& E, int precision) {
    Field K;
    if (!is_prime_i64(p)) fail(errc::not_prime, "p = " + std::to_string(p));
    K.p_ = p;

    if (g.size() < 2) fail(errc::not_irreducible, "g must have degree >= 1");
    if (g.back() != 1) fail(errc::not_irreducible, "g must be monic");
    K.f_ = static_cast<int>(g.size()) - 1;

    PPoly gbar(g.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        gbar[j] = static_cast<Fp>(((g[j] % p) + p) % p);
    if (!irreducible_mod_p(gbar, p))
        fail(errc::not_irreducible, "g is reducible modulo p");
    K.kbar_ = ResidueField(static_cast<std::uint32_t>(p), gbar);
    K.q_ = K.kbar_.q();

    if (E.size() < 2) fail(errc::not_eisenstein, "E must have degree >= 1");
    K.e_ = static_cast<int>(E.size()) - 1;

    // crit = p*e/(p-1) as a reduced rational
    {
        i64 num = p * K.e_, den = p - 1;
        const i64 d = std::gcd(num, den);
        K.crit_num_ = num / d;
        K.crit_den_ = den / d;
        K.crit_floor_ = static_cast<int>(num / den);
        K.crit_ceil_ = static_cast<int>((num + den - 1) / den);
        if (K.e_ % (p - 1) == 0) K.crit_int_ = static_cast<int>(p * (K.e_ / (p - 1)));
    }

    int M = precision;
    if (M == 0) M = (K.crit_ceil_ + K.e_ + 2 + K.e_ - 1) / K.e_ + 1;
    if (M < 1 || K.e_ * M < K.crit_ceil_ + K.e_ + 2)
        fail(errc::precision_too_small,
             "M = " + std::to_string(M) + " gives N = " + std::to_string(K.e_ * M) +
                 " < ceil(crit) + e + 2 = " + std::to_string(K.crit_ceil_ + K.e_ + 2));
    K.M_ = M;
    K.N_ = K.e_ * M;
    {
        u64 pm = 1;
        for (int i = 0; i < M; ++i) {
            if (pm > (u64(1) << 40) / static_cast<u64>(p))
                fail(errc::invalid_argument, "p^M exceeds the supported coefficient range");
            pm *= static_cast<u64>(p);
        }
        K.pM_ = pm;
    }

    K.gmod_.assign(g.size(), 0);
    {
        const i64 m = static_cast<i64>(K.pM_);
        for (std::size_t j = 0; j < g.size(); ++j)
            K.gmod_[j] = static_cast<u64>(((g[j] % m) + m) % m);
    }

    // Eisenstein checks on the W coefficients of E
    K.Ecoef_.clear();
    for (const auto& c : E) K.Ecoef_.push_back(K.w_from(c));
    {
        W one = K.w_zero();
        one[0] = 1;
        if (K.Ecoef_.back() != one) fail(errc::not_eisenstein, "E must be monic");
        for (int i = 0; i < K.e_; ++i) {
            const int v = K.w_valuation(K.Ecoef_[i]);
            if (v < 1)
                fail(errc::not_eisenstein,
                     "coefficient of x^" + std::to_string(i) + " is a unit");
            if (i == 0 && v != 1)
                fail(errc::not_eisenstein, "constant term has p-adic valuation != 1");
        }
    }

    // I = {i : 1 <= i < crit, p does not divide i}; |I| = e
    for (int i = 1; K.less_than_crit(i); ++i)
        if (i % p != 0) K.I_.push_back(i);
    RAMFILT_ASSERT(static_cast<int>(K.I_.size()) == K.e_);
    if (K.crit_int_) RAMFILT_ASSERT(*K.crit_int_ % p == 0);  // crit is never in I

    // exact p/pi from the Eisenstein relation:
    //   pi * (a_1 + a_2 pi + ... + pi^{e-1}) = -a_0 = -p*u0,
    // with u0 = a_0/p computed by exact integer division of the input.
    {
        const auto& a0 = E[0];
        std::vector<i64> u0_int(a0.size(), 0);
        for (std::size_t j = 0; j < a0.size(); ++j) {
            if (a0[j] % p != 0) fail(errc::not_eisenstein, "constant term not divisible by p");
            u0_int[j] = a0[j] / p;
        }
        const W s = K.w_neg(K.w_inv(K.w_from(u0_int)));  // -(a_0/p)^{-1}
        RingElement Q;
        Q.owner = nullptr;  // patched below once K has an address
        Q.w.assign(static_cast<std::size_t>(K.e_) * K.f_, 0);
        Q.prec = K.N_;
        for (int i = 1; i < K.e_; ++i) {
            const W t = K.w_mul(s, K.Ecoef_[i]);
            for (int j = 0; j < K.f_; ++j) Q.w[static_cast<std::size_t>(i - 1) * K.f_ + j] = t[j];
        }
        for (int j = 0; j < K.f_; ++j)
            Q.w[static_cast<std::size_t>(K.e_ - 1) * K.f_ + j] =
                K.w_add(Q.w[static_cast<std::size_t>(K.e_ - 1) * K.f_ + j] == 0 ? K.w_zero() : K.w_zero(), s)[j];
        K.p_over_pi_ = std::move(Q);
    }
    K.p_over_pi_.owner = &K;

    // (p/pi) * pi must reproduce p exactly
    RAMFILT_ASSERT(K.mul(K.p_over_pi_, K.pi()).w == K.from_integer(p).w);
    RAMFILT_ASSERT(K.valuation(K.from_integer(p)) == e_opt_check(K));

    K.build_theorem8_cache();
    return K;
}

// valuation(p) == e, as a named helper so the assertion above reads clearly
std::optional<int> e_opt_check(const Field& K) { return K.e(); }

void Field::build_theorem8_cache() {
    theta_ = residue(shift_down(from_integer(p_), e_));
    RAMFILT_ASSERT(!theta_.is_zero());

    bool kernel_nontrivial = false;
    if (crit_int_) {
        phi_preimage_.clear();
        for (u64 idx = 0; idx < q_; ++idx) {
            const ResidueElement c = kbar_.from_index(idx);
            const ResidueElement d = phi(c);
            if (d.is_zero() && !c.is_zero()) kernel_nontrivial = true;
            phi_preimage_.emplace(d, c);  // keeps first preimage in index order
        }
    }
    zeta_p_ = crit_int_.has_value() && kernel_nontrivial;
    if (crit_int_) {
        // phi is F_p-linear with kernel of dimension 0 or 1
        RAMFILT_ASSERT(phi_preimage_.size() == (zeta_p_ ? q_ / static_cast<u64>(p_) : q_));
    }
    if (zeta_p_) {
        for (u64 idx = 0; idx < q_; ++idx) {
            const ResidueElement c = kbar_.from_index(idx);
            if (!phi_preimage_.count(c)) {
                c_star_ = c;
                break;
            }
        }
        RAMFILT_ASSERT(c_star_.has_value());
        omega_star_ = one_plus(*c_star_, *crit_int_);
    }
    if (crit_int_) powering_self_check();
}

// Executable check of the critical-level expansion
//   (1 + c pi^s)^p = 1 + phi(c) pi^{crit} mod pi^{crit+1},  s = e/(p-1),
// which pins the sign convention of theta.
void Field::powering_self_check() const {
    const int s = *crit_int_ / static_cast<int>(p_);
    for (u64 idx = 0; idx < q_; ++idx) {
        const ResidueElement c = kbar_.from_index(idx);
        const RingElement u = one_plus(c, s);
        const RingElement d = sub(pow_u(u, static_cast<u64>(p_)), one());
        const ResidueElement expect = phi(c);
        const auto v = valuation(d);
        if (expect.is_zero()) {
            RAMFILT_ASSERT(!v || *v > *crit_int_);
        } else {
            RAMFILT_ASSERT(v && *v == *crit_int_);
            RAMFILT_ASSERT(leading_residue(d).second == expect);
        }
    }
}

ResidueElement Field::phi(const ResidueElement& c) const {
    return kbar_.add(kbar_.pow(c, static_cast<u64>(p_)), kbar_.mul(theta_, c));
}

std::optional<ResidueElement> Field::phi_preimage(const ResidueElement& d) const {
    const auto it = phi_preimage_.find(d);
    if (it == phi_preimage_.end()) return std::nullopt;
    return it->second;
}

// --------------------------------------------------------- element factories

RingElement Field::zero() const {
    RingElement r;
    r.owner = this;
    r.w.assign(static_cast<std::size_t>(e_) * f_, 0);
    r.prec = N_;
    return r;
}

RingElement Field::one() const {
    RingElement r = zero();
    r.w[0] = 1;
    return r;
}

RingElement Field::pi() const {
    RingElement r = zero();
    if (e_ == 1) {
        // pi = -a_0: the class of x is determined by E = x + a_0
        const W t = w_neg(Ecoef_[0]);
        for (int j = 0; j < f_; ++j) r.w[j] = t[j];
    } else {
        r.at(1, 0) = 1;
    }
    return r;
}

RingElement Field::from_integer(i64 v) const {
    RingElement r = zero();
    const i64 m = static_cast<i64>(pM_);
    r.w[0] = static_cast<u64>(((v % m) + m) % m);
    return r;
}

RingElement Field::from_coeffs(const std::vector<std::vector<i64>>& c) const {
    if (c.size() > static_cast<std::size_t>(e_))
        fail(errc::invalid_argument, "element has >= e pi-coefficients");
    RingElement r = zero();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const W t = w_from(c[i]);
        for (int j = 0; j < f_; ++j) r.w[i * f_ + j] = t[j];
    }
    return r;
}

RingElement Field::lift(const ResidueElement& c) const {
    RingElement r = zero();
    for (int j = 0; j < f_; ++j) r.w[j] = c.c[j] % pM_;
    return r;
}

RingElement Field::one_plus(const ResidueElement& c, int level) const {
    RAMFILT_ASSERT(level >= 0 && level < N_);
    return add(one(), mul(lift(c), pow_u(pi(), static_cast<u64>(level))));
}

RingElement Field::eta(int x, int y) const {
    RAMFILT_ASSERT(y >= 1 && y <= f_);
    ResidueElement c = kbar_.zero();
    c.c[y - 1] = 1;
    return one_plus(c, x);
}

// ------------------------------------------------------------ ring arithmetic

static void check_owner(const Field* K, const RingElement& a) {
    if (a.owner != K) fail(errc::invalid_argument, "element belongs to a different field");
}

RingElement Field::add(const RingElement& a, const RingElement& b) const {
    check_owner(this, a);
    check_owner(this, b);
    RingElement r = zero();
    for (std::size_t i = 0; i < r.w.size(); ++i) r.w[i] = (a.w[i] + b.w[i]) % pM_;
    r.prec = std::min(a.prec, b.prec);
    return r;
}

RingElement Field::sub(const RingElement& a, const RingElement& b) const {
    check_owner(this, a);
    check_owner(this, b);
    RingElement r = zero();
    for (std::size_t i = 0; i < r.w.size(); ++i) r.w[i] = (a.w[i] + pM_ - b.w[i]) % pM_;
    r.prec = std::min(a.prec, b.prec);
    return r;
}

RingElement Field::neg(const RingElement& a) const { return sub(zero(), a); }

RingElement Field::mul(const RingElement& a, const RingElement& b) const {
    check_owner(this, a);
    check_owner(this, b);
    std::vector<W> acc(static_cast<std::size_t>(2 * e_ - 1), w_zero());
    for (int i = 0; i < e_; ++i) {
        W ai(f_);
        for (int j = 0; j < f_; ++j) ai[j] = a.at(i, j);
        for (int k = 0; k < e_; ++k) {
            W bk(f_);
            for (int j = 0; j < f_; ++j) bk[j] = b.at(k, j);
            acc[i + k] = w_add(acc[i + k], w_mul(ai, bk));
        }
    }
    // x^e = -sum E_i x^i
    for (int k = 2 * e_ - 2; k >= e_; --k) {
        const W c = acc[k];
        acc[k] = w_zero();
        for (int i = 0; i < e_; ++i)
            acc[k - e_ + i] = w_sub(acc[k - e_ + i], w_mul(c, Ecoef_[i]));
    }
    RingElement r = zero();
    for (int i = 0; i < e_; ++i)
        for (int j = 0; j < f_; ++j) r.at(i, j) = acc[i][j];
    r.prec = std::min(a.prec, b.prec);
    return r;
}

RingElement Field::pow_u(const RingElement& a, u64 n) const {
    check_owner(this, a);
    RingElement r = one();
    r.prec = a.prec;
    RingElement base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

std::optional<int> Field::valuation(const RingElement& x) const {
    check_owner(this, x);
    int best = N_ + e_;  // larger than any representable valuation
    for (int i = 0; i < e_; ++i)
        for (int j = 0; j < f_; ++j)
            best = std::min(best, e_ * vp_u64(x.at(i, j), p_, M_) + i);
    if (best >= x.prec) return std::nullopt;
    return best;
}

bool Field::is_zero_at_precision(const RingElement& x) const { return !valuation(x); }

bool Field::same_class(const RingElement& a, const RingElement& b) const {
    return !valuation(sub(a, b));
}

ResidueElement Field::residue(const RingElement& x) const {
    check_owner(this, x);
    if (x.prec < 1) fail(errc::precision_exhausted, "no residue at zero precision");
    ResidueElement r = kbar_.zero();
    for (int j = 0; j < f_; ++j) r.c[j] = static_cast<Fp>(x.at(0, j) % static_cast<u64>(p_));
    return r;
}

RingElement Field::shift_down(const RingElement& x, int k) const {
    check_owner(this, x);
    if (k == 0) return x;
    RAMFILT_ASSERT(k > 0);
    const auto v = valuation(x);
    if (!v) fail(errc::at_precision_zero, "shift_down of an element that is 0 at precision");
    if (*v < k) fail(errc::invalid_argument, "shift_down below valuation");
    if (x.prec - k < 1) fail(errc::precision_exhausted, "shift_down exhausts precision");
    RingElement cur = x;
    for (int step = 0; step < k; ++step) {
        // constant W coefficient is divisible by p; divide exactly and
        // re-add through the precomputed p/pi
        W w0p = w_zero();
        for (int j = 0; j < f_; ++j) {
            RAMFILT_ASSERT(cur.at(0, j) % static_cast<u64>(p_) == 0);
            w0p[j] = cur.at(0, j) / static_cast<u64>(p_);
        }
        RingElement next = zero();
        for (int i = 0; i + 1 < e_; ++i)
            for (int j = 0; j < f_; ++j) next.at(i, j) = cur.at(i + 1, j);
        for (int i = 0; i < e_; ++i) {
            W qi(f_);
            for (int j = 0; j < f_; ++j) qi[j] = p_over_pi_.at(i, j);
            const W t = w_mul(w0p, qi);
            for (int j = 0; j < f_; ++j) next.at(i, j) = (next.at(i, j) + t[j]) % pM_;
        }
        next.prec = cur.prec - 1;
        cur = std::move(next);
    }
    return cur;
}

std::pair<int, ResidueElement> Field::leading_residue(const RingElement& x) const {
    const auto v = valuation(x);
    if (!v) fail(errc::at_precision_zero, "leading residue of 0 at precision");
    const ResidueElement r = residue(shift_down(x, *v));
    RAMFILT_ASSERT(!r.is_zero());
    return {*v, r};
}

RingElement Field::unit_inverse(const RingElement& a) const {
    check_owner(this, a);
    const auto v = valuation(a);
    if (!v || *v != 0) fail(errc::non_unit, "unit_inverse requires valuation 0");
    RingElement z = lift(kbar_.inv(residue(a)));
    z.prec = a.prec;
    const RingElement two = from_integer(2);
    int digits = 1;
    while (digits < N_) {
        z = mul(z, sub(two, mul(a, z)));
        digits *= 2;
    }
    RAMFILT_ASSERT(same_class(mul(a, z), one()));
    return z;
}

std::string Field::pretty(const RingElement& x) const {
    check_owner(this, x);
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < e_; ++i) {
        // render the W coefficient of pi^i
        std::ostringstream ws;
        int terms = 0;
        for (int j = 0; j < f_; ++j) {
            const u64 c = x.at(i, j);
            if (!c) continue;
            if (terms) ws << " + ";
            if (j == 0) ws << c;
            else {
                if (c != 1) ws << c << "*";
                ws << "y";
                if (j > 1) ws << "^" << j;
            }
            ++terms;
        }
        if (!terms) continue;
        if (!first) os << " + ";
        std::string coeff = ws.str();
        if (i == 0) {
            os << coeff;
        } else {
            if (terms > 1) os << "(" << coeff << ")";
            else if (coeff != "1") os << coeff << "*";
            if (terms > 1) os << "*";
            if (!(terms == 1 && coeff == "1")) {
                os << "pi";
            } else {
                os << "pi";
            }
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

}  // namespace ramfilt

#pragma once

#include "kato/qexp.hpp"

#include <compare>
#include <map>
#include <string>
#include <utility>

namespace kato {

struct ToyBounds {
    long vmax = 40;  // keep total q~_M degree (v + W w) < vmax
    long smax = 4;   // keep t-degree < smax
    long rmax = 2;   // keep u_q-degree <= rmax
};

// zeta~_M^i q~_M^v t^s u_q^r Q^w.  Q is an inert symbol of q~_M-weight W:
// the derivations do not see it, so functions of (Q, q~_M^a zeta~_M^b) obey
// d1 = (a t / M) D_2 and d2 = (b t / M) D_2.
struct ToyMono {
    long i = 0, v = 0, s = 0, r = 0, w = 0;
    auto operator<=>(const ToyMono &) const = default;
};

class BdRToyElem {
public:
    BdRToyElem() = default;
    BdRToyElem(long M, long p, ToyBounds b, long inert_weight = 0);

    long level() const { return M_; }
    long prime() const { return p_; }
    const ToyBounds &bounds() const { return b_; }
    long inert_weight() const { return W_; }
    const std::map<ToyMono, CycNumber> &terms() const { return terms_; }

    // carry zeta~_M^M = exp(t), then truncate
    void add(const ToyMono &m, const CycNumber &c);
    BdRToyElem like() const { return BdRToyElem(M_, p_, b_, W_); }
    BdRToyElem mono(const ToyMono &m, const CycNumber &c = CycNumber(1)) const;

    bool is_zero() const { return terms_.empty(); }
    CycNumber coeff(const ToyMono &m) const;

    BdRToyElem operator-() const;
    BdRToyElem &operator+=(const BdRToyElem &o);
    BdRToyElem &operator-=(const BdRToyElem &o);
    BdRToyElem &operator*=(const CycNumber &c);
    friend BdRToyElem operator+(BdRToyElem a, const BdRToyElem &b) { return a += b; }
    friend BdRToyElem operator-(BdRToyElem a, const BdRToyElem &b) { return a -= b; }
    friend BdRToyElem operator*(BdRToyElem a, const CycNumber &c) { return a *= c; }
    friend BdRToyElem operator*(const CycNumber &c, BdRToyElem a) { return a *= c; }
    BdRToyElem operator*(const BdRToyElem &o) const;
    BdRToyElem shift_t(long ds) const;  // times t^ds
    bool operator==(const BdRToyElem &o) const;

    // zeta~_M^i -> zeta_M^i exp(i t / M); afterwards every i is 0
    BdRToyElem zeta_form() const;
    bool is_zeta_form() const;

    std::string str(size_t max_terms = 16) const;

private:
    void check_compatible(const BdRToyElem &o) const;
    long M_ = 1, p_ = 2, W_ = 0;
    ToyBounds b_;
    std::map<ToyMono, CycNumber> terms_;
};

BdRToyElem partial1(const BdRToyElem &x);
BdRToyElem partial2(const BdRToyElem &x);

// jet of x*(u,v) = exp(u d1) exp(v d2) x; keys (deg_u, deg_v), total <= 2
using ToyJet = std::map<std::pair<int, int>, BdRToyElem>;
ToyJet pm_action_jet2(const BdRToyElem &x);
// the same jet by substituting q~_M -> q~_M exp(ut/M), t -> e^v t, u_q -> u_q + u t
ToyJet pm_action_jet2_direct(const BdRToyElem &x);

// delta^2 = c_{1001} - c_{0110} of the cochain (g1,g2) -> (A*(g1 g2) - A*g2) (B*g2 - B)
BdRToyElem cup_delta2(const BdRToyElem &A, const BdRToyElem &B);
// (a d - b c) t^2 / M^2 * DA * DB
BdRToyElem cup_delta2_closed(const BdRToyElem &DA, const BdRToyElem &DB, long a, long b, long c, long d);

// normalized trace from level M p^n to level M: keeps zeta~^a q~^b iff p^n | a, b
BdRToyElem trace_RM(const BdRToyElem &x, long target_M);

// element of Sym^{k-2} V (x) toy ring: e1^i e2^{k-2-i} -> coefficient element
class VkjTensor {
public:
    VkjTensor(long k, long j, const BdRToyElem &proto);
    long k() const { return k_; }
    long j() const { return j_; }
    const std::map<long, BdRToyElem> &parts() const { return parts_; }
    const BdRToyElem &proto() const { return proto_; }
    void add(long i, const BdRToyElem &x);
    // (a e1 + b e2)^{k-2} x
    static VkjTensor linear_power(long k, long j, const Q &a, const Q &b, const BdRToyElem &x);
    VkjTensor &operator+=(const VkjTensor &o);
    VkjTensor &operator-=(const VkjTensor &o);
    VkjTensor &operator*=(const CycNumber &c);
    VkjTensor times(const BdRToyElem &x) const;
    VkjTensor shift_t(long ds) const;
    VkjTensor zeta_form() const;
    bool is_zero() const;

private:
    long k_, j_;
    BdRToyElem proto_;
    std::map<long, BdRToyElem> parts_;
};

VkjTensor partial1(const VkjTensor &x);
VkjTensor partial2(const VkjTensor &x);

// projection modulo (im d1 + im (d2 - 1)) onto t e1^{k-2} q~_M-series, then theta.
// Output exponents are (v + W w) / M.
QExpansion res_kj(const VkjTensor &x);         // closed-form rewriting
QExpansion res_kj_solve(const VkjTensor &x);   // exact linear solve on the truncated space

}  // namespace kato

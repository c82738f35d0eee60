#pragma once

#include "kato/linalg.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kato {

using Vec = std::vector<Q>;

// Finite-dimensional Q-module with derivations d1, d2 acting by matrices
// ([d2, d1] = d1 is required for x*(u,v) = exp(u d1) exp(v d2) x to be a right action).
// The lattice T is the Z_p-span of the basis; v_T is the minimum coordinate valuation.
struct MatrixModule {
    long dim = 0;
    QMatrix d1, d2;
    long p = 2;
    std::vector<std::string> names;

    Vec apply(const QMatrix &m, const Vec &x) const;
    std::optional<Q> valuation(const Vec &x) const;  // nullopt = zero
    bool bracket_ok() const;
};

// span{1, t, q~, t q~} modulo t^2, with d1 q~ = t q~ / p^m, d2 t = t, d2 (t q~) = t q~
MatrixModule test_module4(long p, long m);
// trivial derivations on Q
MatrixModule scalar_module(long p);
// span{q~_M^v t^s : 0 <= v < V, 0 <= s < S}, truncated q-adically and t-adically
MatrixModule toy_module(long M, long p, long V, long S);
Vec toy_module_mul(long V, long S, const Vec &a, const Vec &b);

using Key2 = std::array<int, 2>;  // u^i v^j
using Key4 = std::array<int, 4>;  // u^i v^j x^k y^l

struct OneCochain {
    std::map<Key2, Vec> coeffs;
    int degree_bound = 6;
};

struct PolyCocycle2 {
    std::map<Key4, Vec> coeffs;
    int degree_bound = 6;

    Vec coeff(const Key4 &k, long dim) const;
    void add(const Key4 &k, const Vec &x);
    PolyCocycle2 &operator+=(const PolyCocycle2 &o);
    PolyCocycle2 &operator-=(const PolyCocycle2 &o);
    PolyCocycle2 scaled(const Q &s) const;
    PolyCocycle2 degree_part(int n) const;
    bool is_zero() const;
    int max_degree() const;  // -1 when zero
};

// (dQ)(g1, g2) = Q(g2) - Q(g1 g2) + Q(g1)*g2, g1 = (u,v), g2 = (x,y)
PolyCocycle2 coboundary(const MatrixModule &V, const OneCochain &Qc, int degree_bound);

struct VerifyResult {
    bool ok = true;
    long nonzero_terms = 0;
    int first_bad_degree = -1;
};
// c(g2,g3) - c(g1 g2, g3) + c(g1, g2 g3) - c(g1,g2)*g3 = 0 up to the degree bound
VerifyResult cocycle_verify(const MatrixModule &V, const PolyCocycle2 &c);

// the cocycle whose degree-2 part is w uy, completed in degrees >= 3 by the
// canonical (RREF, free variables zero) solution of the cocycle relation
PolyCocycle2 uy_lift(const MatrixModule &V, const Vec &w, int degree_bound);

struct Reduction {
    Vec delta2;
    std::vector<OneCochain> Q_list;  // Q_2, Q_3, ... homogeneous
};
// c = L(delta2) - sum dQ_n to the degree bound
Reduction reduce_analytic_cocycle(const MatrixModule &V, const PolyCocycle2 &c);

struct AuditReport {
    bool precondition_ok = true;
    bool bound_ok = true;
    std::optional<Q> min_slack;  // over all checked coefficients
    long checked = 0;
};
// precondition v_T(c_{ijkl}) >= -m (i+j+k+l); bound v_T(Q_n coefficients) >= -m n - v_p(n!)
AuditReport valuation_audit(const MatrixModule &V, const PolyCocycle2 &c, const std::vector<OneCochain> &Q_list, long m);
// smallest N >= 0 with p^N c satisfying the audit precondition
long precondition_shift(const MatrixModule &V, const PolyCocycle2 &c, long m);

// (g1,g2) -> (A*g1 - A)*g2 . (B*g2 - B), using a bilinear product on V
PolyCocycle2 cup_cocycle(const MatrixModule &V, const std::function<Vec(const Vec &, const Vec &)> &mul, const Vec &A,
                         const Vec &B, int degree_bound);

}  // namespace kato

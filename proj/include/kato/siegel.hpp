#pragma once

#include "kato/eisenstein.hpp"

#include <utility>
#include <vector>

namespace kato {

// sign * prod_i theta(tau, w_i z)^{k_i}, evaluated at q_z = q^x e(y) for a rational lift (x, y)
struct QzUnit {
    std::vector<std::pair<long, long>> parts;  // (w, k)
    long sign = 1;

    UnitQExp evaluate(const Q &x, const Q &y, const Q &prec) const;
    // D_2^r log, D_2 = q_z d/dq_z
    QExpansion d2log(long r, const Q &x, const Q &y, const Q &prec) const;
    QzUnit operator*(const QzUnit &o) const;
    QzUnit pow(long e) const;
    QzUnit dilate(long c) const;  // f(z) -> f(cz)
};

QzUnit theta_unit();
// (-1)^{(c-c^2)/2} theta(z)^{c^2} theta(cz)^{-1}; the sign makes N_a(g) = g hold exactly
QzUnit g0c_unit(long c);

// q_z = q_N^a zeta_N^b ; prec is the relative precision of the tail
UnitQExp theta_qexp(long N, long a, long b, const Q &prec);
UnitQExp g0c_qexp(long c, long N, long a, long b, const Q &prec);
// the closed product q^{(c^2-1)/12} (-q_z)^{(c-c^2)/2} prod(...) built directly
UnitQExp g0c_closed_form(long c, long N, long a, long b, const Q &prec);
// prod_{n>=0}(1 - q^n q_z) prod_{n>=1}(1 - q^n/q_z)
UnitQExp theta_core_product(const Q &x, const Q &y, const Q &prec);

// prod_{k,j<a} f(z/a + k/a + j tau/a) at q_z = q_N^A zeta_N^B
UnitQExp norm_Na(const QzUnit &f, long a, long N, long A, long B, const Q &prec);
UnitQExp norm_core_product(long a, long N, long A, long B, const Q &prec);

// D_2^r log g_{0,c} at q_z = q_N^a zeta_N^b, exponents < prec
QExpansion d2log_rc_theta(long c, long r, long N, long a, long b, const Q &prec);

}  // namespace kato

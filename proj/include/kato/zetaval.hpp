#pragma once

#include "kato/qexp.hpp"

namespace kato {

Q bernoulli_number(long k);  // B_1 = -1/2
Q bernoulli_poly(long k, const Q &x);

// zeta(alpha, 1-k), representative in (0,1]
Q hurwitz_neg(const FracClass &alpha, long k);
// zeta*(beta, 1-k) = sum_n e(beta n) n^{k-1}, regularised
CycNumber lerch_neg(const FracClass &beta, long k);
// (zeta*(beta,0) - zeta*(-beta,0)) / 2
CycNumber antisym_lerch0(const FracClass &beta);

enum class EisMode { E, F };

struct DirichletSpec {
    FracClass alpha;
    FracClass beta;
    long k = 1;
    int parity_sign = 1;  // (-1)^k
    DirichletSpec() = default;
    DirichletSpec(FracClass a, FracClass b, long kk) : alpha(a), beta(b), k(kk), parity_sign(kk % 2 ? -1 : 1) {}
};

// all coefficients with exponent < cutoff, constant term included
QExpansion eis_coefficients(const DirichletSpec &spec, EisMode mode, const Q &cutoff);
CycNumber eis_constant_term(const DirichletSpec &spec, EisMode mode);

}  // namespace kato

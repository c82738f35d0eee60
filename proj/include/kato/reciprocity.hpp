#pragma once

#include "kato/bdrtoy.hpp"
#include "kato/siegel.hpp"

#include <optional>
#include <vector>

namespace kato {

struct ReciprocityInstance {
    long p = 5;
    long M = 5;
    long alpha = 1, beta = 0, gamma = 0, delta = 1;  // A = (alpha beta; gamma delta)
    long k = 2, j = 1;
    long c = 7, d = 7;
    long n_max = 3;
    Q prec = 2;  // q-exponent cutoff
};

void validate(const ReciprocityInstance &inst);

// M^{k-2-2j}/(j-1)! F^{(k-j)}_{c,alpha/M,beta/M} E^{(j)}_{d,gamma/M,delta/M}
QExpansion exp_kato_rhs(const ReciprocityInstance &inst);

// sum over a0 = alpha mod M, 1 <= a0 <= M p^n, of a0^r E_{c,1}(q^{p^n}, q_M^{a0} zeta_M^beta)
QExpansion twisted_level_sum(long r, long M, long alpha, long beta, long c, long p, long n, const Q &prec);
// M^r F^{(r+1)}_{c,alpha/M,beta/M}
QExpansion twisted_level_limit(long r, long M, long alpha, long beta, long c, const Q &prec);
// sum over c0 = gamma mod M of E_j(q^{p^n}, q_M^{c0} zeta_M^delta); with d, the E_{d,j} version
QExpansion c0_level_sum(long j, long M, long gamma, long delta, long p, long n, const Q &prec,
                            std::optional<long> d = std::nullopt);
QExpansion c0_level_target(long j, long M, long gamma, long delta, const Q &prec, std::optional<long> d = std::nullopt);

// sum over a0 = alpha mod M of a0^w D_2^r log(r_c theta)(q^{p^n}, q_M^{a0} zeta_M^b)
QExpansion level_sum(long c, long r, long w, long M, long p, long n, long alpha, long b, const Q &prec);
QExpansion level_sum_serial(long c, long r, long w, long M, long p, long n, long alpha, long b, const Q &prec);

// M^{-1-j}/(j-1)! (sum a0^{k-1-j} D_2 log r_c theta)(sum D_2^j log r_d theta) at level n
QExpansion exp_kato_lhs_level(const ReciprocityInstance &inst, long n);
QExpansion exp_kato_lhs_level_serial(const ReciprocityInstance &inst, long n);

struct ConvergenceRow {
    Q exponent;
    std::vector<std::optional<Q>> valuation;  // index n-1; nullopt = exact
    bool exact = false;
    bool nondecreasing = true;
    bool improves = false;  // v(n_max) >= v(1) + 1
};

struct ConvergenceReport {
    ReciprocityInstance inst;
    std::vector<ConvergenceRow> rows;
    bool all_nondecreasing = true;
    bool some_improves = false;
    bool has_nonexact = false;
};
ConvergenceReport convergence_report(const ReciprocityInstance &inst);

struct AmiceResult {
    Q finite_sum;
    Q closed_form;
    std::optional<Q> valuation;  // of the difference
};
// c^2 zeta(.,0) - c zeta(<c>.,0) Riemann sum against M^k (c^2 zeta(alpha/M,-k) - c^{1-k} zeta(<c>alpha/M,-k))
AmiceResult amice_moment_check(long c, long alpha, long M, long k, long p, long n);

// log of f at (Q, Z = q~_M^a zeta~_M^b), Q = q~^{p^n} inert of weight M p^n, modulo constants
BdRToyElem log_unit_elem(const QzUnit &f, long a, long b, const BdRToyElem &proto);
// D_2^r of the same, D_2 = Z d/dZ
BdRToyElem d2log_unit_elem(const QzUnit &f, long r, long a, long b, const BdRToyElem &proto);
// zeta~ -> zeta_M, t -> 0, u_q -> 0, q~_M -> q^{1/M}
QExpansion toy_theta(const BdRToyElem &x);

struct PipelineResult {
    QExpansion via_cocycle;    // cup_delta2 -> V_{k,j} -> res_kj
    QExpansion via_closed;     // closed-form delta^2 -> res_kj
    QExpansion via_corollary;  // M^{-1-j} a0^{k-1-j}/(j-1)! D2log * D2^j log
    bool agree = false;
};
// one summand (a0, b0, c0, d0) at level n; bounds.vmax is in q~_M units
PipelineResult pipeline_summand(const ReciprocityInstance &inst, long n, long a0, long b0, long c0, long d0,
                                const ToyBounds &bounds);

}  // namespace kato

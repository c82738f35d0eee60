#include "kato/zetaval.hpp"

#include <mutex>

namespace kato {

Q bernoulli_number(long k) {
    static std::mutex mu;
    static std::vector<Q> B{Q(1)};
    std::lock_guard<std::mutex> lk(mu);
    while (static_cast<long>(B.size()) <= k) {
        long m = static_cast<long>(B.size());
        // sum_{i=0}^{m} C(m+1, i) B_i = 0
        Q s;
        for (long i = 0; i < m; ++i) s += Q(binomial(m + 1, i)) * B[static_cast<size_t>(i)];
        B.push_back(-s / Q(m + 1));
    }
    return B[static_cast<size_t>(k)];
}

Q bernoulli_poly(long k, const Q &x) {
    if (k < 0) throw Error("bernoulli_poly: k < 0");
    Q r;
    Q xp(1);
    for (long i = k; i >= 0; --i) {
        r += Q(binomial(k, i)) * bernoulli_number(i) * xp;
        xp *= x;
    }
    return r;
}

Q hurwitz_neg(const FracClass &alpha, long k) {
    if (k < 1) throw Error("hurwitz_neg: k < 1");
    return -bernoulli_poly(k, alpha.rep_pos()) / Q(k);
}

namespace {

// (x d/dx)^{k-1} x/(1-x) = P(x)/(1-x)^k ; returns P low degree first
std::vector<Q> lerch_numerator(long k) {
    std::vector<Q> P{Q(0), Q(1)};
    long m = 1;
    for (long it = 1; it < k; ++it) {
        // x d/dx [P/(1-x)^m] = [x P' (1-x) + m x P] / (1-x)^{m+1}
        std::vector<Q> R(P.size() + 1);
        for (size_t i = 1; i < P.size(); ++i) {
            Q t = P[i] * Q(static_cast<long>(i));  // coefficient of x^i in x P'
            R[i] += t;
            R[i + 1] -= t;
        }
        for (size_t i = 0; i < P.size(); ++i) R[i + 1] += Q(m) * P[i];
        while (R.size() > 1 && R.back() == 0) R.pop_back();
        P = std::move(R);
        ++m;
    }
    return P;
}

}  // namespace

CycNumber lerch_neg(const FracClass &beta, long k) {
    if (k < 1) throw Error("lerch_neg: k < 1");
    if (beta.is_zero()) {
        if (k == 1) throw Error("lerch_neg: k = 1 with beta = 0 diverges");
        return CycNumber(-bernoulli_number(k) / Q(k));
    }
    std::vector<Q> P = lerch_numerator(k);
    std::map<long, Q> num;
    for (size_t i = 0; i < P.size(); ++i)
        if (P[i] != 0) num[static_cast<long>(i) * beta.num] += P[i];
    CycNumber top = cyc_reduce(num, beta.den);
    CycNumber one_minus = CycNumber(1) - CycNumber::root(beta);
    CycNumber den(1);
    for (long i = 0; i < k; ++i) den *= one_minus;
    return top / den;
}

CycNumber antisym_lerch0(const FracClass &beta) {
    if (beta.is_zero()) return CycNumber(0);
    return (lerch_neg(beta, 1) - lerch_neg(-beta, 1)) * Q(1, 2);
}

CycNumber eis_constant_term(const DirichletSpec &spec, EisMode mode) {
    long k = spec.k;
    if (k == 1) {
        if (spec.alpha.is_zero()) return antisym_lerch0(spec.beta);
        return CycNumber(hurwitz_neg(spec.alpha, 1));
    }
    if (mode == EisMode::E) {
        if (!spec.alpha.is_zero()) return CycNumber(0);
        return lerch_neg(spec.beta, k);
    }
    return CycNumber(hurwitz_neg(spec.alpha, k));
}

QExpansion eis_coefficients(const DirichletSpec &spec, EisMode mode, const Q &cutoff) {
    if (cutoff <= 0) throw Error("eis_coefficients: cutoff must be positive");
    long k = spec.k;
    if (k < 1) throw Error("eis_coefficients: k < 1");
    long D = spec.alpha.den;
    long B = spec.beta.den;
    // keys are n*D; each holds a polynomial in zeta_B
    std::map<long, std::map<long, Q>> acc;
    Z kcut_z;
    {
        Q c = cutoff * Q(D);
        mpz_cdiv_q(kcut_z.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
    }
    long kcut = kcut_z.get_si();  // keys < kcut
    for (int side = 0; side < 2; ++side) {
        FracClass a = side == 0 ? spec.alpha : -spec.alpha;
        long bsign = side == 0 ? 1 : -1;
        long sgn = side == 0 ? 1 : spec.parity_sign;
        long a0 = a.num == 0 ? D : a.num * (D / a.den);  // m = (a0 + D i)/D
        for (long mn = a0; mn < kcut; mn += D) {
            Q mk;
            if (mode == EisMode::F) mk = qpow(qmake(mn, D), k - 1);
            for (long d = 1; mn * d < kcut; ++d) {
                Q w = mk;
                if (mode == EisMode::E) {
                    Z dk;
                    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
                    w = Q(dk);
                }
                if (sgn < 0) w = -w;
                acc[mn * d][mod_l(bsign * spec.beta.num * d, B)] += w;
            }
        }
    }
    QExpansion r(D, cutoff);
    r.add_key(0, eis_constant_term(spec, mode));
    for (const auto &[key, poly] : acc) r.add_key(key, cyc_reduce(poly, B));
    r.normalize_denom();
    return r;
}

}  // namespace kato

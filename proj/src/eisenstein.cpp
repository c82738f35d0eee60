#include "kato/eisenstein.hpp"

namespace kato {

EisSeries E_series(long k, const FracClass &alpha, const FracClass &beta, const Q &prec) {
    if (k < 1) throw Error("E_series: k < 1");
    EisSeries s;
    s.kind = EisKind::E;
    s.k = k;
    s.alpha = alpha;
    s.beta = beta;
    s.series = eis_coefficients(DirichletSpec(alpha, beta, k), EisMode::E, prec);
    return s;
}

EisSeries F_series(long k, const FracClass &alpha, const FracClass &beta, const Q &prec) {
    if (k < 1) throw Error("F_series: k < 1");
    if (k == 2 && alpha.is_zero() && beta.is_zero()) throw Error("F_series: F^(2)_{0,0} is not defined");
    EisSeries s;
    s.kind = EisKind::F;
    s.k = k;
    s.alpha = alpha;
    s.beta = beta;
    s.series = eis_coefficients(DirichletSpec(alpha, beta, k), EisMode::F, prec);
    return s;
}

EisSeries Etilde_series(const FracClass &alpha, const FracClass &beta, const Q &prec) {
    EisSeries s = E_series(2, alpha, beta, prec);
    s.series -= E_series(2, FracClass(), FracClass(), prec).series;
    s.kind = EisKind::Etilde;
    return s;
}

EisSeries c_variant(EisMode base, long c, long k, const FracClass &alpha, const FracClass &beta, const Q &prec) {
    FracClass ca = alpha.scale(c), cb = beta.scale(c);
    EisSeries s;
    s.k = k;
    s.alpha = alpha;
    s.beta = beta;
    s.c = c;
    Q c2 = Q(c) * Q(c);
    if (base == EisMode::E) {
        s.kind = EisKind::Ec;
        if (k == 2) {
            s.series = (Etilde_series(alpha, beta, prec).series - Etilde_series(ca, cb, prec).series) * c2;
        } else {
            s.series = E_series(k, alpha, beta, prec).series * c2 - E_series(k, ca, cb, prec).series * qpow(Q(c), k);
        }
    } else {
        s.kind = EisKind::Fc;
        if (k == 2 && ((alpha.is_zero() && beta.is_zero()) || (ca.is_zero() && cb.is_zero())))
            throw Error("c_variant: F^(2) at (0,0)");
        s.series = F_series(k, alpha, beta, prec).series * c2 - F_series(k, ca, cb, prec).series * qpow(Q(c), 2 - k);
    }
    return s;
}

QExpansion zEis_box(long k, const Box &box, const Q &prec, bool primed) {
    if (box.r == 0) throw Error("zEis_box: r = 0");
    FracClass a = FracClass::from_q(box.a / box.r), b = FracClass::from_q(box.b / box.r);
    if (!primed) {
        if (k == 2) return Etilde_series(a, b, prec).series * qpow(box.r, -k);
        return E_series(k, a, b, prec).series * qpow(box.r, -k);
    }
    if (k == 2 && a.is_zero() && b.is_zero()) throw Error("zEis_box: primed k = 2 box at (0,0)");
    return F_series(k, a, b, prec).series * qpow(box.r, k - 2);
}

QExpansion zEis_kj_phiMN(long k, long j, long c, long d, long M, long N, const Q &prec) {
    if (k < 2 || j < 1 || j > k - 1) throw Error("zEis_kj_phiMN: need k >= 2 and 1 <= j <= k-1");
    Q scal = Q(j % 2 ? -1 : 1) / Q(factorial(j - 1)) * qpow(Q(M), k - j - 2) * qpow(Q(N), -j);
    QExpansion f = c_variant(EisMode::F, c, k - j, FracClass(1, M), FracClass(), prec).series;
    QExpansion e = c_variant(EisMode::E, d, j, FracClass(), FracClass(1, N), prec).series;
    return qexp_mul(f, e) * scal;
}

}  // namespace kato

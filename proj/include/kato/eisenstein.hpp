#pragma once

#include "kato/zetaval.hpp"

#include <optional>

namespace kato {

enum class EisKind { E, F, Etilde, Ec, Fc };

struct EisSeries {
    EisKind kind = EisKind::E;
    long k = 1;
    FracClass alpha, beta;
    std::optional<long> c;
    QExpansion series;
};

// Holomorphic q-expansion of E^{(k)}_{alpha,beta} (for k = 2 this is the plain
// series, without the non-holomorphic correction; see Etilde_series).
EisSeries E_series(long k, const FracClass &alpha, const FracClass &beta, const Q &prec);
EisSeries F_series(long k, const FracClass &alpha, const FracClass &beta, const Q &prec);
// E^{(2)}_{alpha,beta} - E^{(2)}_{0,0}
EisSeries Etilde_series(const FracClass &alpha, const FracClass &beta, const Q &prec);

// c^2 E_{a,b} - c^k E_{ca,cb}   (k = 2: c^2 (Etilde_{a,b} - Etilde_{ca,cb}))
// c^2 F_{a,b} - c^{2-k} F_{ca,cb}
EisSeries c_variant(EisMode base, long c, long k, const FracClass &alpha, const FracClass &beta, const Q &prec);

struct Box {
    Q a, b, r;
};

// unprimed: r^{-k} E_{a/r,b/r} (Etilde when k = 2); primed: r^{k-2} F_{a/r,b/r}
QExpansion zEis_box(long k, const Box &box, const Q &prec, bool primed);

// ((-1)^j/(j-1)!) M^{k-j-2} N^{-j} F^{(k-j)}_{c,1/M,0} E^{(j)}_{d,0,1/N}
QExpansion zEis_kj_phiMN(long k, long j, long c, long d, long M, long N, const Q &prec);

}  // namespace kato

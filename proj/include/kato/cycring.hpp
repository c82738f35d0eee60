#pragma once

#include "kato/arith.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace kato {

// Element of Q(zeta_N), coefficients on 1, z, ..., z^{phi(N)-1}, reduced mod Phi_N.
class CycNumber {
public:
    CycNumber() : N_(1), c_(1) {}
    CycNumber(const Q &x) : N_(1), c_(1, x) {}  // NOLINT implicit on purpose
    CycNumber(long x) : N_(1), c_(1, Q(x)) {}   // NOLINT

    static CycNumber zero(long N);
    static CycNumber zeta(long N, long e);  // zeta_N^e, conductor kept at N
    static CycNumber root(const FracClass &x);  // e(x), smallest conductor
    static CycNumber from_coeffs(long N, std::vector<Q> c);

    long conductor() const { return N_; }
    const std::vector<Q> &coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Q rational_value() const;  // throws unless is_rational()

    CycNumber lift(long L) const;  // to Q(zeta_L), N | L

    CycNumber operator-() const;
    CycNumber &operator+=(const CycNumber &o);
    CycNumber &operator-=(const CycNumber &o);
    CycNumber &operator*=(const CycNumber &o);
    CycNumber &operator*=(const Q &x);
    CycNumber inverse() const;
    CycNumber &operator/=(const CycNumber &o) { return *this *= o.inverse(); }

    friend CycNumber operator+(CycNumber a, const CycNumber &b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber &b) { return a -= b; }
    friend CycNumber operator*(CycNumber a, const CycNumber &b) { return a *= b; }
    friend CycNumber operator*(CycNumber a, const Q &b) { return a *= b; }
    friend CycNumber operator*(const Q &b, CycNumber a) { return a *= b; }
    friend CycNumber operator/(CycNumber a, const CycNumber &b) { return a /= b; }

    bool operator==(const CycNumber &o) const;
    bool operator!=(const CycNumber &o) const { return !(*this == o); }

    std::string str() const;

private:
    long N_;
    std::vector<Q> c_;
};

std::ostream &operator<<(std::ostream &os, const CycNumber &x);

long common_conductor(long a, long b);

// sum_i poly[i] zeta_N^i  (indices may be negative or >= N)
CycNumber cyc_reduce(const std::map<long, Q> &poly, long N);
CycNumber cyc_reduce(const std::vector<Q> &poly, long N);

CycNumber galois_sigma(long d, const CycNumber &x);

// v_p normalised by v_p(p) = 1; nullopt for zero. Conductor must be p^m (or 2p^m).
std::optional<Q> padic_valuation(const CycNumber &x, long p);

// norm to Q
Q cyc_norm(const CycNumber &x);

// integer coefficients of Phi_N
const std::vector<long long> &cyclotomic_poly(long N);

}  // namespace kato

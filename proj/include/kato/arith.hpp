#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kato {

using Q = mpq_class;
using Z = mpz_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long gcd_l(long a, long b);
long lcm_l(long a, long b);
long euler_phi(long n);
long mod_l(long a, long n);  // representative in [0, n)
bool is_prime_l(long n);

// p-adic valuation of a nonzero integer / rational; nullopt means +infinity
long vp_int(const Z &x, long p);
std::optional<Q> vp_rat(const Q &x, long p);

Q qpow(const Q &x, long e);
Z factorial(long n);
Z binomial(long n, long k);

// "n/d" or "n"
Q parse_q(const std::string &s);
std::string q_str(const Q &x);

inline Q qmake(long n, long d = 1) {
    Q r(n, d);
    r.canonicalize();
    return r;
}

// element of Q/Z, stored as num/den with 0 <= num < den, gcd = 1
struct FracClass {
    long num = 0;
    long den = 1;

    FracClass() = default;
    FracClass(long n, long d);
    static FracClass from_q(const Q &x);

    bool is_zero() const { return num == 0; }
    Q rep() const { return qmake(num, den); }      // in [0,1)
    Q rep_pos() const;                              // in (0,1], 0 -> 1
    FracClass operator-() const { return {-num, den}; }
    FracClass operator+(const FracClass &o) const;
    FracClass scale(long c) const { return {c * num, den}; }
    FracClass divide(long f) const { return {num, den * f}; }  // one choice of x/f
    bool operator==(const FracClass &o) const { return num == o.num && den == o.den; }
    bool operator<(const FracClass &o) const { return num * o.den < o.num * den; }
    std::string str() const;
};

}  // namespace kato

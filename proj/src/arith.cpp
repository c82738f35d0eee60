#include "kato/arith.hpp"

#include <cstdlib>

namespace kato {

long gcd_l(long a, long b) {
    a = std::labs(a);
    b = std::labs(b);
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm_l(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return std::labs(a / gcd_l(a, b) * b);
}

long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

long mod_l(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

bool is_prime_l(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long vp_int(const Z &x, long p) {
    if (x == 0) throw Error("vp of zero");
    Z y = abs(x);
    long v = 0;
    Z P(p);
    while (mpz_divisible_p(y.get_mpz_t(), P.get_mpz_t())) {
        y /= P;
        ++v;
    }
    return v;
}

std::optional<Q> vp_rat(const Q &x, long p) {
    if (x == 0) return std::nullopt;
    return Q(vp_int(x.get_num(), p) - vp_int(x.get_den(), p));
}

Q qpow(const Q &x, long e) {
    if (e < 0) {
        if (x == 0) throw Error("0 to a negative power");
        return qpow(Q(1) / x, -e);
    }
    Q r(1), b(x);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Z factorial(long n) {
    Z r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Z binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Q parse_q(const std::string &s) {
    Q r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational: " + s);
    if (r.get_den() == 0) throw Error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string q_str(const Q &x) { return x.get_str(); }

FracClass::FracClass(long n, long d) {
    if (d == 0) throw Error("FracClass with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long g = gcd_l(n, d);
    if (g == 0) g = 1;
    n /= g;
    d /= g;
    num = mod_l(n, d);
    den = d;
    if (num == 0) den = 1;
}

FracClass FracClass::from_q(const Q &x) {
    Z n = x.get_num() % x.get_den();
    return FracClass(n.get_si(), x.get_den().get_si());
}

Q FracClass::rep_pos() const { return num == 0 ? Q(1) : rep(); }

FracClass FracClass::operator+(const FracClass &o) const {
    return FracClass(num * o.den + o.num * den, den * o.den);
}

std::string FracClass::str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace kato

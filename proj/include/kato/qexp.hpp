#pragma once

#include "kato/cycring.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kato {

// Truncated series sum a_e q^e, e in (1/den) Z. Keys of terms() are numerators over den.
// precision == nullopt means the series is exact (a polynomial).
class QExpansion {
public:
    QExpansion() = default;
    QExpansion(long den, std::optional<Q> prec);

    static QExpansion constant(const CycNumber &c, std::optional<Q> prec);
    static QExpansion monomial(const Q &e, const CycNumber &c, std::optional<Q> prec);

    long exp_denom() const { return den_; }
    const std::optional<Q> &precision() const { return prec_; }
    // smallest stored exponent, or the precision when nothing is stored
    std::optional<Q> min_exp() const;
    const std::map<long, CycNumber> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Q exponent_of(long key) const { return qmake(key, den_); }
    bool known(const Q &e) const { return !prec_ || e < *prec_; }
    CycNumber coeff(const Q &e) const;  // 0 if absent, throws if not known
    void add_term(const Q &e, const CycNumber &c);  // silently dropped beyond precision
    void add_key(long key, const CycNumber &c);

    QExpansion with_denom(long den) const;  // same series on a finer lattice
    QExpansion truncated(const Q &prec) const;
    void set_precision(std::optional<Q> prec);
    void normalize_denom();

    QExpansion operator-() const;
    QExpansion &operator+=(const QExpansion &o);
    QExpansion &operator-=(const QExpansion &o);
    QExpansion &operator*=(const CycNumber &c);
    QExpansion &operator*=(const Q &c);
    friend QExpansion operator+(QExpansion a, const QExpansion &b) { return a += b; }
    friend QExpansion operator-(QExpansion a, const QExpansion &b) { return a -= b; }
    friend QExpansion operator*(QExpansion a, const CycNumber &c) { return a *= c; }
    friend QExpansion operator*(QExpansion a, const Q &c) { return a *= c; }
    friend QExpansion operator*(const Q &c, QExpansion a) { return a *= c; }

    QExpansion shifted(const Q &e) const;  // times q^e

    // equality on the jointly known range
    bool agrees_with(const QExpansion &o) const;
    // first exponent (in the joint range) where they differ
    std::optional<Q> first_difference(const QExpansion &o) const;

    std::string str(size_t max_terms = 12) const;

private:
    long den_ = 1;
    std::map<long, CycNumber> terms_;
    std::optional<Q> prec_;
};

std::optional<Q> prec_min(const std::optional<Q> &a, const std::optional<Q> &b);
std::optional<Q> prec_add(const std::optional<Q> &a, const Q &b);

// product; the default dispatches to the OpenMP kernel
QExpansion qexp_mul(const QExpansion &f, const QExpansion &g);
QExpansion qexp_mul_serial(const QExpansion &f, const QExpansion &g);
QExpansion qexp_mul_parallel(const QExpansion &f, const QExpansion &g);
QExpansion operator*(const QExpansion &f, const QExpansion &g);

QExpansion substitute_power(const QExpansion &f, const Q &r);
QExpansion qderive(const QExpansion &f);
QExpansion coeff_galois(long d, const QExpansion &f);
// q^n -> zeta^{n} q^n style twist: each a_e q^e becomes a_e e(s*e) q^e
QExpansion twist_exponents(const QExpansion &f, const Q &s);

// f^a for a series with constant term 1 and positive exponents otherwise
QExpansion series_pow_one(const QExpansion &f, long a);

// Multiplicative unit  c * q^e * tail, tail = 1 + higher terms.
struct UnitQExp {
    Q q_exponent;
    CycNumber unit_root{1};
    QExpansion tail;

    UnitQExp() = default;
    UnitQExp(Q e, CycNumber c, QExpansion t) : q_exponent(std::move(e)), unit_root(std::move(c)), tail(std::move(t)) {}

    UnitQExp operator*(const UnitQExp &o) const;
    UnitQExp inverse() const;
    UnitQExp pow(long a) const;
    bool agrees_with(const UnitQExp &o) const;
    QExpansion expand() const;
    std::string str() const;
};

}  // namespace kato

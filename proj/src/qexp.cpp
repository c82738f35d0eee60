#include "kato/qexp.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kato {

namespace {

Z ceil_q(const Q &x) {
    Z r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

// keys strictly below this bound are known
std::optional<long> key_bound(const std::optional<Q> &prec, long den) {
    if (!prec) return std::nullopt;
    return ceil_q(*prec * Q(den)).get_si();
}

}  // namespace

std::optional<Q> prec_min(const std::optional<Q> &a, const std::optional<Q> &b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

std::optional<Q> prec_add(const std::optional<Q> &a, const Q &b) {
    if (!a) return std::nullopt;
    return *a + b;
}

QExpansion::QExpansion(long den, std::optional<Q> prec) : den_(den), prec_(std::move(prec)) {
    if (den <= 0) throw Error("exp_denom must be positive");
}

QExpansion QExpansion::constant(const CycNumber &c, std::optional<Q> prec) {
    QExpansion r(1, std::move(prec));
    r.add_key(0, c);
    return r;
}

QExpansion QExpansion::monomial(const Q &e, const CycNumber &c, std::optional<Q> prec) {
    QExpansion r(e.get_den().get_si(), std::move(prec));
    r.add_term(e, c);
    return r;
}

std::optional<Q> QExpansion::min_exp() const {
    if (terms_.empty()) return prec_;
    return exponent_of(terms_.begin()->first);
}

CycNumber QExpansion::coeff(const Q &e) const {
    if (!known(e)) throw Error("coefficient beyond precision requested");
    Q k = e * Q(den_);
    if (k.get_den() != 1) return CycNumber(0);
    auto it = terms_.find(k.get_num().get_si());
    return it == terms_.end() ? CycNumber(0) : it->second;
}

void QExpansion::add_key(long key, const CycNumber &c) {
    if (prec_ && !(exponent_of(key) < *prec_)) return;
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void QExpansion::add_term(const Q &e, const CycNumber &c) {
    Q k = e * Q(den_);
    if (k.get_den() != 1) {
        long d = e.get_den().get_si();
        *this = with_denom(lcm_l(den_, d));
        k = e * Q(den_);
    }
    add_key(k.get_num().get_si(), c);
}

QExpansion QExpansion::with_denom(long den) const {
    if (den == den_) return *this;
    if (den % den_ != 0) throw Error("with_denom: lattice is not a refinement");
    long s = den / den_;
    QExpansion r(den, prec_);
    for (const auto &[k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k * s, c);
    return r;
}

QExpansion QExpansion::truncated(const Q &prec) const {
    QExpansion r(den_, prec_min(prec_, prec));
    for (const auto &[k, c] : terms_)
        if (r.known(exponent_of(k))) r.terms_.emplace_hint(r.terms_.end(), k, c);
    return r;
}

void QExpansion::set_precision(std::optional<Q> prec) {
    prec_ = std::move(prec);
    if (!prec_) return;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (!(exponent_of(it->first) < *prec_))
            it = terms_.erase(it);
        else
            ++it;
    }
}

void QExpansion::normalize_denom() {
    long g = den_;
    for (const auto &kv : terms_) {
        g = gcd_l(g, kv.first);
        if (g == 1) return;
    }
    if (g <= 1) return;
    std::map<long, CycNumber> t;
    for (auto &[k, c] : terms_) t.emplace_hint(t.end(), k / g, c);
    terms_ = std::move(t);
    den_ /= g;
}

QExpansion QExpansion::operator-() const {
    QExpansion r(*this);
    for (auto &kv : r.terms_) kv.second = -kv.second;
    return r;
}

QExpansion &QExpansion::operator+=(const QExpansion &o) {
    long L = lcm_l(den_, o.den_);
    if (L != den_) *this = with_denom(L);
    prec_ = prec_min(prec_, o.prec_);
    set_precision(prec_);
    long s = L / o.den_;
    for (const auto &[k, c] : o.terms_) add_key(k * s, c);
    return *this;
}

QExpansion &QExpansion::operator-=(const QExpansion &o) { return *this += -o; }

QExpansion &QExpansion::operator*=(const CycNumber &c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &kv : terms_) kv.second *= c;
    return *this;
}

QExpansion &QExpansion::operator*=(const Q &c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &kv : terms_) kv.second *= c;
    return *this;
}

QExpansion QExpansion::shifted(const Q &e) const {
    long L = lcm_l(den_, e.get_den().get_si());
    QExpansion a = with_denom(L);
    long sh = Q(e * Q(L)).get_num().get_si();
    QExpansion r(L, prec_add(prec_, e));
    for (const auto &[k, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), k + sh, c);
    return r;
}

std::optional<Q> QExpansion::first_difference(const QExpansion &o) const {
    QExpansion d = *this - o;
    if (d.terms_.empty()) return std::nullopt;
    return d.exponent_of(d.terms_.begin()->first);
}

bool QExpansion::agrees_with(const QExpansion &o) const { return !first_difference(o).has_value(); }

std::string QExpansion::str(size_t max_terms) const {
    std::ostringstream os;
    size_t n = 0;
    for (const auto &[k, c] : terms_) {
        if (n++ == max_terms) {
            os << " + ...";
            break;
        }
        if (n > 1) os << " + ";
        os << "(" << c.str() << ")*q^" << exponent_of(k).get_str();
    }
    if (terms_.empty()) os << "0";
    if (prec_) os << " + O(q^" << prec_->get_str() << ")";
    return os.str();
}

namespace {

struct MulSetup {
    long L;
    std::optional<Q> prec;
    std::optional<long> kcut;
    std::vector<std::pair<long, CycNumber>> a, b;
};

MulSetup mul_setup(const QExpansion &f, const QExpansion &g) {
    MulSetup s;
    s.L = lcm_l(f.exp_denom(), g.exp_denom());
    auto vf = f.min_exp(), vg = g.min_exp();
    std::optional<Q> p1, p2;
    bool exact1 = !f.precision() || !vg;  // f exact, or g known to be exactly 0
    bool exact2 = !g.precision() || !vf;
    if (!exact1) p1 = *f.precision() + *vg;
    if (!exact2) p2 = *g.precision() + *vf;
    if (exact1 && exact2)
        s.prec = std::nullopt;
    else if (exact1)
        s.prec = p2;
    else if (exact2)
        s.prec = p1;
    else
        s.prec = std::min(*p1, *p2);
    s.kcut = key_bound(s.prec, s.L);
    long sf = s.L / f.exp_denom(), sg = s.L / g.exp_denom();
    for (const auto &[k, c] : f.terms()) s.a.emplace_back(k * sf, c);
    for (const auto &[k, c] : g.terms()) s.b.emplace_back(k * sg, c);
    return s;
}

}  // namespace

QExpansion qexp_mul_serial(const QExpansion &f, const QExpansion &g) {
    MulSetup s = mul_setup(f, g);
    QExpansion r(s.L, s.prec);
    for (const auto &[ka, ca] : s.a)
        for (const auto &[kb, cb] : s.b) {
            if (s.kcut && ka + kb >= *s.kcut) break;
            r.add_key(ka + kb, ca * cb);
        }
    return r;
}

QExpansion qexp_mul_parallel(const QExpansion &f, const QExpansion &g) {
    MulSetup s = mul_setup(f, g);
    QExpansion r(s.L, s.prec);
    if (s.a.empty() || s.b.empty()) return r;
    long kmin = s.a.front().first + s.b.front().first;
    long kmax = s.a.back().first + s.b.back().first;
    if (s.kcut) kmax = std::min(kmax, *s.kcut - 1);
    if (kmax < kmin) return r;
    long bmin = s.b.front().first, bmax = s.b.back().first;
    std::vector<long> bidx(static_cast<size_t>(bmax - bmin + 1), -1);
    for (size_t j = 0; j < s.b.size(); ++j) bidx[static_cast<size_t>(s.b[j].first - bmin)] = static_cast<long>(j);
    long n = kmax - kmin + 1;
    std::vector<CycNumber> out(static_cast<size_t>(n));
    std::vector<char> hit(static_cast<size_t>(n), 0);
    long na = static_cast<long>(s.a.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long t = 0; t < n; ++t) {
        long k = kmin + t;
        CycNumber acc;
        bool any = false;
        for (long i = 0; i < na; ++i) {
            long kb = k - s.a[static_cast<size_t>(i)].first;
            if (kb < bmin) break;
            if (kb > bmax) continue;
            long j = bidx[static_cast<size_t>(kb - bmin)];
            if (j < 0) continue;
            acc += s.a[static_cast<size_t>(i)].second * s.b[static_cast<size_t>(j)].second;
            any = true;
        }
        if (any && !acc.is_zero()) {
            out[static_cast<size_t>(t)] = std::move(acc);
            hit[static_cast<size_t>(t)] = 1;
        }
    }
    for (long t = 0; t < n; ++t)
        if (hit[static_cast<size_t>(t)]) r.add_key(kmin + t, out[static_cast<size_t>(t)]);
    return r;
}

QExpansion qexp_mul(const QExpansion &f, const QExpansion &g) { return qexp_mul_parallel(f, g); }
QExpansion operator*(const QExpansion &f, const QExpansion &g) { return qexp_mul(f, g); }

QExpansion substitute_power(const QExpansion &f, const Q &r) {
    if (r <= 0) throw Error("substitute_power: r must be positive");
    long a = r.get_num().get_si(), b = r.get_den().get_si();
    std::optional<Q> prec;
    if (f.precision()) prec = *f.precision() * r;
    QExpansion out(f.exp_denom() * b, prec);
    for (const auto &[k, c] : f.terms()) out.add_key(k * a, c);
    out.normalize_denom();
    return out;
}

QExpansion qderive(const QExpansion &f) {
    QExpansion r(f.exp_denom(), f.precision());
    for (const auto &[k, c] : f.terms()) r.add_key(k, c * f.exponent_of(k));
    return r;
}

QExpansion coeff_galois(long d, const QExpansion &f) {
    QExpansion r(f.exp_denom(), f.precision());
    for (const auto &[k, c] : f.terms()) r.add_key(k, galois_sigma(d, c));
    return r;
}

QExpansion twist_exponents(const QExpansion &f, const Q &s) {
    QExpansion r(f.exp_denom(), f.precision());
    for (const auto &[k, c] : f.terms()) r.add_key(k, c * CycNumber::root(FracClass::from_q(s * f.exponent_of(k))));
    return r;
}

QExpansion series_pow_one(const QExpansion &f, long a) {
    if (f.coeff(0) != CycNumber(1)) throw Error("series_pow_one: constant term must be 1");
    if (f.min_exp() && *f.min_exp() < 0) throw Error("series_pow_one: negative exponents");
    if (a == 0) return QExpansion::constant(CycNumber(1), f.precision());
    if (!f.precision()) {
        if (a < 0) throw Error("series_pow_one: exact series needs a precision for negative powers");
        QExpansion r = QExpansion::constant(CycNumber(1), std::nullopt);
        for (long i = 0; i < a; ++i) r = qexp_mul(r, f);
        return r;
    }
    long L = f.exp_denom();
    long K = *key_bound(f.precision(), L);
    std::vector<CycNumber> t(static_cast<size_t>(std::max<long>(K, 1)));
    std::vector<long> nz;
    for (const auto &[k, c] : f.terms())
        if (k > 0 && k < K) {
            t[static_cast<size_t>(k)] = c;
            nz.push_back(k);
        }
    std::vector<CycNumber> P(static_cast<size_t>(std::max<long>(K, 1)));
    P[0] = CycNumber(1);
    Q a1(a + 1);
    for (long n = 1; n < K; ++n) {
        CycNumber acc;
        for (long m : nz) {
            if (m > n) break;
            if (P[static_cast<size_t>(n - m)].is_zero()) continue;
            Q w = a1 * Q(m) - Q(n);
            if (w == 0) continue;
            acc += t[static_cast<size_t>(m)] * P[static_cast<size_t>(n - m)] * w;
        }
        acc *= Q(1, n);
        P[static_cast<size_t>(n)] = acc;
    }
    QExpansion r(L, f.precision());
    for (long n = 0; n < K; ++n) r.add_key(n, P[static_cast<size_t>(n)]);
    return r;
}

UnitQExp UnitQExp::operator*(const UnitQExp &o) const {
    return UnitQExp(q_exponent + o.q_exponent, unit_root * o.unit_root, qexp_mul(tail, o.tail));
}

UnitQExp UnitQExp::inverse() const { return UnitQExp(-q_exponent, unit_root.inverse(), series_pow_one(tail, -1)); }

UnitQExp UnitQExp::pow(long a) const {
    CycNumber r(1);
    CycNumber b = a < 0 ? unit_root.inverse() : unit_root;
    long e = a < 0 ? -a : a;
    while (e) {
        if (e & 1) r *= b;
        e >>= 1;
        if (e) b *= b;
    }
    return UnitQExp(q_exponent * Q(a), r, series_pow_one(tail, a));
}

bool UnitQExp::agrees_with(const UnitQExp &o) const {
    return q_exponent == o.q_exponent && unit_root == o.unit_root && tail.agrees_with(o.tail);
}

QExpansion UnitQExp::expand() const { return (tail * unit_root).shifted(q_exponent); }

std::string UnitQExp::str() const {
    return "(" + unit_root.str() + ")*q^" + q_exponent.get_str() + " * [" + tail.str() + "]";
}

}  // namespace kato

#include "kato/cycring.hpp"

#include "kato/linalg.hpp"

#include <memory>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace kato {

namespace {

// Q(zeta_{2n}) = Q(zeta_n) for odd n; such conductors are never stored
long canon(long N) { return (N % 4 == 2) ? N / 2 : N; }

struct CycTable {
    long N = 1;
    long phi = 1;
    std::vector<long long> Phi;                // Phi_N, low degree first, monic
    std::vector<std::vector<long long>> pw;    // zeta^e reduced, e in [0, N)
};

std::mutex g_mu;
std::unordered_map<long, std::unique_ptr<std::vector<long long>>> g_phi;
std::unordered_map<long, std::unique_ptr<CycTable>> g_tab;

std::vector<long long> poly_divexact(std::vector<long long> a, const std::vector<long long> &b) {
    // a / b with b monic, exact
    long da = static_cast<long>(a.size()) - 1, db = static_cast<long>(b.size()) - 1;
    std::vector<long long> q(static_cast<size_t>(da - db + 1), 0);
    for (long i = da - db; i >= 0; --i) {
        long long c = a[static_cast<size_t>(i + db)];
        q[static_cast<size_t>(i)] = c;
        if (c == 0) continue;
        for (long j = 0; j <= db; ++j) a[static_cast<size_t>(i + j)] -= c * b[static_cast<size_t>(j)];
    }
    return q;
}

const std::vector<long long> &phi_locked(long N) {
    auto it = g_phi.find(N);
    if (it != g_phi.end()) return *it->second;
    std::vector<long long> p(static_cast<size_t>(N + 1), 0);
    p[0] = -1;
    p[static_cast<size_t>(N)] = 1;
    for (long d = 1; d < N; ++d)
        if (N % d == 0) p = poly_divexact(p, phi_locked(d));
    auto &slot = g_phi[N];
    slot = std::make_unique<std::vector<long long>>(std::move(p));
    return *slot;
}

const CycTable &table(long N) {
    std::lock_guard<std::mutex> lk(g_mu);
    auto it = g_tab.find(N);
    if (it != g_tab.end()) return *it->second;
    auto t = std::make_unique<CycTable>();
    t->N = N;
    t->Phi = phi_locked(N);
    t->phi = static_cast<long>(t->Phi.size()) - 1;
    long phi = t->phi;
    t->pw.assign(static_cast<size_t>(N), std::vector<long long>(static_cast<size_t>(phi), 0));
    std::vector<long long> cur(static_cast<size_t>(phi), 0);
    cur[0] = 1;
    for (long e = 0; e < N; ++e) {
        t->pw[static_cast<size_t>(e)] = cur;
        // multiply by zeta
        long long top = cur[static_cast<size_t>(phi - 1)];
        for (long i = phi - 1; i > 0; --i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
        cur[0] = 0;
        if (top != 0)
            for (long i = 0; i < phi; ++i) cur[static_cast<size_t>(i)] -= top * t->Phi[static_cast<size_t>(i)];
    }
    auto &slot = g_tab[N];
    slot = std::move(t);
    return *slot;
}

// zeta_N^i written as sign * zeta_{canon N}^j
std::pair<int, long> canon_index(long i, long N) {
    long Nc = canon(N);
    if (Nc == N) return {1, mod_l(i, N)};
    long n = Nc;
    long ii = mod_l(i, N);
    int sign = (ii % 2) ? -1 : 1;
    return {sign, mod_l(ii * ((n + 1) / 2), n)};
}

std::vector<Q> fold(const std::vector<Q> &acc, const CycTable &t) {
    std::vector<Q> out(static_cast<size_t>(t.phi));
    for (long e = 0; e < t.N; ++e) {
        const Q &a = acc[static_cast<size_t>(e)];
        if (a == 0) continue;
        if (e < t.phi) {
            out[static_cast<size_t>(e)] += a;
            continue;
        }
        const auto &r = t.pw[static_cast<size_t>(e)];
        for (long i = 0; i < t.phi; ++i)
            if (r[static_cast<size_t>(i)] != 0) out[static_cast<size_t>(i)] += a * Q(static_cast<long>(r[static_cast<size_t>(i)]));
    }
    return out;
}

}  // namespace

const std::vector<long long> &cyclotomic_poly(long N) {
    if (N <= 0) throw Error("cyclotomic_poly: N must be positive");
    std::lock_guard<std::mutex> lk(g_mu);
    return phi_locked(N);
}

long common_conductor(long a, long b) { return canon(lcm_l(a, b)); }

CycNumber CycNumber::zero(long N) {
    if (N <= 0) throw Error("conductor must be positive");
    CycNumber r;
    r.N_ = canon(N);
    r.c_.assign(static_cast<size_t>(euler_phi(r.N_)), Q(0));
    return r;
}

CycNumber CycNumber::from_coeffs(long N, std::vector<Q> c) {
    if (N <= 0) throw Error("conductor must be positive");
    if (static_cast<long>(c.size()) != euler_phi(N)) throw Error("coefficient vector has wrong length");
    if (canon(N) != N) return cyc_reduce(c, N);
    CycNumber r;
    r.N_ = N;
    r.c_ = std::move(c);
    return r;
}

CycNumber CycNumber::zeta(long N, long e) {
    std::map<long, Q> p;
    p[e] = 1;
    return cyc_reduce(p, N);
}

CycNumber CycNumber::root(const FracClass &x) { return zeta(x.den, x.num); }

CycNumber cyc_reduce(const std::map<long, Q> &poly, long N) {
    if (N <= 0) throw Error("cyc_reduce: N must be positive");
    long Nc = canon(N);
    const CycTable &t = table(Nc);
    std::vector<Q> acc(static_cast<size_t>(Nc));
    for (const auto &[i, q] : poly) {
        auto [s, j] = canon_index(i, N);
        if (s > 0)
            acc[static_cast<size_t>(j)] += q;
        else
            acc[static_cast<size_t>(j)] -= q;
    }
    return CycNumber::from_coeffs(Nc, fold(acc, t));
}

CycNumber cyc_reduce(const std::vector<Q> &poly, long N) {
    std::map<long, Q> m;
    for (size_t i = 0; i < poly.size(); ++i)
        if (poly[i] != 0) m[static_cast<long>(i)] += poly[i];
    return cyc_reduce(m, N);
}

bool CycNumber::is_zero() const {
    for (const auto &x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Q CycNumber::rational_value() const {
    if (!is_rational()) throw Error("not a rational number: " + str());
    return c_[0];
}

CycNumber CycNumber::lift(long L) const {
    long Lc = canon(L);
    if (Lc == N_) return *this;
    if (Lc % N_ != 0) throw Error("lift: conductor does not divide target");
    if (is_rational()) {
        CycNumber r = zero(Lc);
        r.c_[0] = c_[0];
        return r;
    }
    const CycTable &t = table(Lc);
    std::vector<Q> acc(static_cast<size_t>(Lc));
    long s = Lc / N_;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) acc[static_cast<size_t>(static_cast<long>(i) * s % Lc)] += c_[i];
    CycNumber r;
    r.N_ = Lc;
    r.c_ = fold(acc, t);
    return r;
}

namespace {
void demote(long &N, std::vector<Q> &c) {
    if (N == 1) return;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return;
    Q x = c[0];
    N = 1;
    c.assign(1, x);
}
}  // namespace

CycNumber CycNumber::operator-() const {
    CycNumber r(*this);
    for (auto &x : r.c_) x = -x;
    return r;
}

CycNumber &CycNumber::operator+=(const CycNumber &o) {
    if (o.N_ == 1) {
        c_[0] += o.c_[0];
        return *this;
    }
    long L = common_conductor(N_, o.N_);
    if (L != N_) *this = lift(L);
    if (o.N_ == L) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    } else {
        CycNumber b = o.lift(L);
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    }
    demote(N_, c_);
    return *this;
}

CycNumber &CycNumber::operator-=(const CycNumber &o) { return *this += -o; }

CycNumber &CycNumber::operator*=(const Q &x) {
    if (x == 0) {
        N_ = 1;
        c_.assign(1, Q(0));
        return *this;
    }
    for (auto &y : c_) y *= x;
    return *this;
}

CycNumber &CycNumber::operator*=(const CycNumber &o) {
    if (o.N_ == 1) return *this *= o.c_[0];
    if (N_ == 1) {
        Q x = c_[0];
        *this = o;
        return *this *= x;
    }
    long L = common_conductor(N_, o.N_);
    const CycNumber a = (N_ == L) ? *this : lift(L);
    const CycNumber b = (o.N_ == L) ? o : o.lift(L);
    const CycTable &t = table(L);
    long phi = t.phi;
    std::vector<Q> acc(static_cast<size_t>(L));
    for (long i = 0; i < phi; ++i) {
        if (a.c_[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (b.c_[static_cast<size_t>(j)] == 0) continue;
            acc[static_cast<size_t>((i + j) % L)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
    }
    N_ = L;
    c_ = fold(acc, t);
    demote(N_, c_);
    return *this;
}

namespace {
QMatrix mult_matrix(const CycNumber &x) {
    long N = x.conductor();
    long phi = static_cast<long>(x.coeffs().size());
    QMatrix m(phi, phi);
    CycNumber z = CycNumber::zeta(N, 1);
    CycNumber col = x;
    for (long j = 0; j < phi; ++j) {
        CycNumber c = col.lift(N);
        for (long i = 0; i < phi; ++i) m(i, j) = c.coeffs()[static_cast<size_t>(i)];
        col *= z;
    }
    return m;
}
}  // namespace

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    if (is_rational()) return CycNumber(Q(1) / c_[0]);
    QMatrix m = mult_matrix(*this);
    std::vector<Q> e(c_.size());
    e[0] = 1;
    auto y = solve_particular(m, e);
    if (!y) throw Error("inverse: singular multiplication matrix");
    return from_coeffs(N_, *y);
}

bool CycNumber::operator==(const CycNumber &o) const {
    if (N_ == o.N_) return c_ == o.c_;
    long L = common_conductor(N_, o.N_);
    return lift(L).c_ == o.lift(L).c_;
}

std::string CycNumber::str() const {
    if (is_rational()) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[i].get_str();
        if (i > 0) os << "*z" << N_ << "^" << i;
    }
    return os.str();
}

std::ostream &operator<<(std::ostream &os, const CycNumber &x) { return os << x.str(); }

CycNumber galois_sigma(long d, const CycNumber &x) {
    long N = x.conductor();
    if (gcd_l(d, N) != 1) throw Error("galois_sigma: d not coprime to conductor");
    if (N == 1) return x;
    std::map<long, Q> p;
    const auto &c = x.coeffs();
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) p[mod_l(static_cast<long>(i) * d, N)] += c[i];
    return cyc_reduce(p, N);
}

Q cyc_norm(const CycNumber &x) {
    if (x.is_rational()) return x.coeffs()[0];
    return determinant(mult_matrix(x));
}

std::optional<Q> padic_valuation(const CycNumber &x, long p) {
    if (!is_prime_l(p)) throw Error("padic_valuation: p must be prime");
    if (x.is_zero()) return std::nullopt;
    if (x.is_rational()) return vp_rat(x.coeffs()[0], p);
    long N = x.conductor();
    long n = N;
    while (n % p == 0) n /= p;
    if (n != 1) throw Error("padic_valuation: conductor " + std::to_string(N) + " is not a power of " + std::to_string(p));
    Q nm = cyc_norm(x);
    auto v = vp_rat(nm, p);
    return *v / Q(static_cast<long>(x.coeffs().size()));
}

}  // namespace kato

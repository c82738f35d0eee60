#include "kato/cocycle.hpp"

#include <mutex>

namespace kato {

namespace {

using Key6 = std::array<int, 6>;
using SPoly = std::map<Key6, Q>;  // scalar polynomial in u1 v1 u2 v2 u3 v3

int deg6(const Key6 &k) { return k[0] + k[1] + k[2] + k[3] + k[4] + k[5]; }
int deg4(const Key4 &k) { return k[0] + k[1] + k[2] + k[3]; }

void sp_add(SPoly &a, const Key6 &k, const Q &c) {
    if (c == 0) return;
    Q &s = a[k];
    s += c;
    if (s == 0) a.erase(k);
}

SPoly sp_mul(const SPoly &a, const SPoly &b, int D) {
    SPoly r;
    for (const auto &[ka, ca] : a)
        for (const auto &[kb, cb] : b) {
            Key6 k;
            for (int i = 0; i < 6; ++i) k[static_cast<size_t>(i)] = ka[static_cast<size_t>(i)] + kb[static_cast<size_t>(i)];
            if (deg6(k) > D) continue;
            sp_add(r, k, ca * cb);
        }
    return r;
}

SPoly sp_pow(const SPoly &a, int e, int D) {
    SPoly r;
    r[Key6{}] = 1;
    for (int i = 0; i < e; ++i) r = sp_mul(r, a, D);
    return r;
}

SPoly sp_var(int v, const Q &c = 1) {
    Key6 k{};
    k[static_cast<size_t>(v)] = 1;
    return SPoly{{k, c}};
}

SPoly sp_exp(int v, int D) {
    SPoly r;
    for (int n = 0; n <= D; ++n) {
        Key6 k{};
        k[static_cast<size_t>(v)] = n;
        r[k] = Q(1) / Q(factorial(n));
    }
    return r;
}

SPoly sp_sum(SPoly a, const SPoly &b) {
    for (const auto &[k, c] : b) sp_add(a, k, c);
    return a;
}

// scalar parts of the cocycle relation applied to the monomial u^i v^j x^k y^l:
// m(g2,g3) - m(g1 g2, g3) + m(g1, g2 g3)
struct RelationTable {
    int D;
    std::map<Key4, SPoly> s;
};

RelationTable build_relation(int D) {
    RelationTable t{D, {}};
    // indices: 0 u1, 1 v1, 2 u2, 3 v2, 4 u3, 5 v3
    SPoly U12 = sp_sum(sp_mul(sp_exp(3, D), sp_var(0), D), sp_var(2));
    SPoly V12 = sp_sum(sp_var(1), sp_var(3));
    SPoly U23 = sp_sum(sp_mul(sp_exp(5, D), sp_var(2), D), sp_var(4));
    SPoly V23 = sp_sum(sp_var(3), sp_var(5));
    std::vector<SPoly> pU12, pV12, pU23, pV23;
    for (int e = 0; e <= D; ++e) {
        pU12.push_back(sp_pow(U12, e, D));
        pV12.push_back(sp_pow(V12, e, D));
        pU23.push_back(sp_pow(U23, e, D));
        pV23.push_back(sp_pow(V23, e, D));
    }
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j)
            for (int k = 0; i + j + k <= D; ++k)
                for (int l = 0; i + j + k + l <= D; ++l) {
                    SPoly s;
                    sp_add(s, Key6{0, 0, i, j, k, l}, 1);
                    SPoly a = sp_mul(sp_mul(pU12[static_cast<size_t>(i)], pV12[static_cast<size_t>(j)], D),
                                     SPoly{{Key6{0, 0, 0, 0, k, l}, 1}}, D);
                    for (const auto &[kk, c] : a) sp_add(s, kk, -c);
                    SPoly b = sp_mul(sp_mul(pU23[static_cast<size_t>(k)], pV23[static_cast<size_t>(l)], D),
                                     SPoly{{Key6{i, j, 0, 0, 0, 0}, 1}}, D);
                    for (const auto &[kk, c] : b) sp_add(s, kk, c);
                    t.s[Key4{i, j, k, l}] = std::move(s);
                }
    return t;
}

const RelationTable &relation_table(int D) {
    static std::mutex mu;
    static std::map<int, RelationTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(D);
    if (it == cache.end()) it = cache.emplace(D, build_relation(D)).first;
    return it->second;
}

bool vec_zero(const Vec &x) {
    for (const auto &c : x)
        if (c != 0) return false;
    return true;
}

void vec_axpy(Vec &y, const Q &a, const Vec &x) {
    if (y.size() < x.size()) y.resize(x.size());
    for (size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

// (a, b) -> D1^a D2^b x / (a! b!), for a + b <= D
std::map<std::pair<int, int>, Vec> action_jet(const MatrixModule &V, const Vec &x, int D) {
    std::map<std::pair<int, int>, Vec> out;
    std::vector<Vec> d2pows{x};
    for (int b = 1; b <= D; ++b) d2pows.push_back(V.apply(V.d2, d2pows.back()));
    for (int b = 0; b <= D; ++b) {
        Vec cur = d2pows[static_cast<size_t>(b)];
        for (int a = 0; a + b <= D; ++a) {
            if (a > 0) cur = V.apply(V.d1, cur);
            Q f = Q(1) / Q(factorial(a) * factorial(b));
            Vec r(cur.size());
            for (size_t i = 0; i < cur.size(); ++i) r[i] = cur[i] * f;
            out[{a, b}] = std::move(r);
        }
    }
    return out;
}

using VPoly6 = std::map<Key6, Vec>;

VPoly6 relation_residual(const MatrixModule &V, const PolyCocycle2 &c) {
    int D = c.degree_bound;
    const auto &tab = relation_table(D);
    VPoly6 res;
    auto add = [&](const Key6 &k, const Q &a, const Vec &x) {
        auto &slot = res[k];
        if (slot.empty()) slot.assign(static_cast<size_t>(V.dim), Q(0));
        vec_axpy(slot, a, x);
    };
    for (const auto &[k4, cv] : c.coeffs) {
        int n = deg4(k4);
        if (n > D) continue;
        for (const auto &[k6, s] : tab.s.at(k4)) add(k6, s, cv);
        for (const auto &[ab, w] : action_jet(V, cv, D - n))
            add(Key6{k4[0], k4[1], k4[2], k4[3], ab.first, ab.second}, Q(-1), w);
    }
    for (auto it = res.begin(); it != res.end();)
        if (vec_zero(it->second)) it = res.erase(it);
        else ++it;
    return res;
}

std::vector<Key4> monomials4(int n) {
    std::vector<Key4> r;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            for (int k = 0; i + j + k <= n; ++k) r.push_back(Key4{i, j, k, n - i - j - k});
    return r;
}

}  // namespace

Vec MatrixModule::apply(const QMatrix &m, const Vec &x) const {
    Vec r(static_cast<size_t>(dim));
    for (long i = 0; i < dim; ++i) {
        Q s = 0;
        for (long j = 0; j < dim; ++j)
            if (m(i, j) != 0 && x[static_cast<size_t>(j)] != 0) s += m(i, j) * x[static_cast<size_t>(j)];
        r[static_cast<size_t>(i)] = s;
    }
    return r;
}

std::optional<Q> MatrixModule::valuation(const Vec &x) const {
    std::optional<Q> best;
    for (const auto &c : x) {
        auto v = vp_rat(c, p);
        if (v && (!best || *v < *best)) best = v;
    }
    return best;
}

bool MatrixModule::bracket_ok() const {
    for (long i = 0; i < dim; ++i)
        for (long j = 0; j < dim; ++j) {
            Q s = 0;
            for (long k = 0; k < dim; ++k) s += d2(i, k) * d1(k, j) - d1(i, k) * d2(k, j);
            if (s != d1(i, j)) return false;
        }
    return true;
}

MatrixModule test_module4(long p, long m) {
    MatrixModule V;
    V.dim = 4;
    V.p = p;
    V.names = {"1", "t", "q~", "t q~"};
    V.d1 = QMatrix(4, 4);
    V.d2 = QMatrix(4, 4);
    Q M = qpow(Q(p), m);
    V.d1(3, 2) = Q(1) / M;
    V.d2(1, 1) = 1;
    V.d2(3, 3) = 1;
    return V;
}

MatrixModule scalar_module(long p) {
    MatrixModule V;
    V.dim = 1;
    V.p = p;
    V.names = {"1"};
    V.d1 = QMatrix(1, 1);
    V.d2 = QMatrix(1, 1);
    return V;
}

MatrixModule toy_module(long M, long p, long Vn, long S) {
    MatrixModule V;
    V.dim = Vn * S;
    V.p = p;
    V.d1 = QMatrix(V.dim, V.dim);
    V.d2 = QMatrix(V.dim, V.dim);
    for (long v = 0; v < Vn; ++v)
        for (long s = 0; s < S; ++s) {
            long idx = v * S + s;
            V.names.push_back("q~^" + std::to_string(v) + " t^" + std::to_string(s));
            if (s + 1 < S) V.d1(idx + 1, idx) = qmake(v, M);
            V.d2(idx, idx) = s;
        }
    return V;
}

Vec toy_module_mul(long Vn, long S, const Vec &a, const Vec &b) {
    Vec r(static_cast<size_t>(Vn * S));
    for (long i = 0; i < Vn * S; ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; j < Vn * S; ++j) {
            if (b[static_cast<size_t>(j)] == 0) continue;
            long v = i / S + j / S, s = i % S + j % S;
            if (v < Vn && s < S) r[static_cast<size_t>(v * S + s)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
        }
    }
    return r;
}

Vec PolyCocycle2::coeff(const Key4 &k, long dim) const {
    auto it = coeffs.find(k);
    if (it == coeffs.end()) return Vec(static_cast<size_t>(dim));
    return it->second;
}

void PolyCocycle2::add(const Key4 &k, const Vec &x) {
    if (deg4(k) > degree_bound) return;
    auto &slot = coeffs[k];
    if (slot.empty()) slot.assign(x.size(), Q(0));
    vec_axpy(slot, Q(1), x);
    if (vec_zero(slot)) coeffs.erase(k);
}

PolyCocycle2 &PolyCocycle2::operator+=(const PolyCocycle2 &o) {
    for (const auto &[k, x] : o.coeffs) add(k, x);
    return *this;
}

PolyCocycle2 &PolyCocycle2::operator-=(const PolyCocycle2 &o) { return *this += o.scaled(Q(-1)); }

PolyCocycle2 PolyCocycle2::scaled(const Q &s) const {
    PolyCocycle2 r;
    r.degree_bound = degree_bound;
    if (s == 0) return r;
    for (const auto &[k, x] : coeffs) {
        Vec y(x.size());
        for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] * s;
        r.coeffs[k] = std::move(y);
    }
    return r;
}

PolyCocycle2 PolyCocycle2::degree_part(int n) const {
    PolyCocycle2 r;
    r.degree_bound = degree_bound;
    for (const auto &[k, x] : coeffs)
        if (deg4(k) == n) r.coeffs[k] = x;
    return r;
}

bool PolyCocycle2::is_zero() const { return coeffs.empty(); }

int PolyCocycle2::max_degree() const {
    int m = -1;
    for (const auto &[k, x] : coeffs) m = std::max(m, deg4(k));
    return m;
}

PolyCocycle2 coboundary(const MatrixModule &V, const OneCochain &Qc, int D) {
    PolyCocycle2 r;
    r.degree_bound = D;
    // (u,v)(x,y) = (e^y u + x, v + y) in variables 0..3 of a 6-variable poly
    SPoly U = sp_sum(sp_mul(sp_exp(3, D), sp_var(0), D), sp_var(2));
    SPoly W = sp_sum(sp_var(1), sp_var(3));
    for (const auto &[k2, q] : Qc.coeffs) {
        int n = k2[0] + k2[1];
        if (n > D) continue;
        r.add(Key4{0, 0, k2[0], k2[1]}, q);
        SPoly s = sp_mul(sp_pow(U, k2[0], D), sp_pow(W, k2[1], D), D);
        for (const auto &[k6, c] : s) {
            Vec y(q.size());
            for (size_t i = 0; i < q.size(); ++i) y[i] = -c * q[i];
            r.add(Key4{k6[0], k6[1], k6[2], k6[3]}, y);
        }
        for (const auto &[ab, w] : action_jet(V, q, D - n)) r.add(Key4{k2[0], k2[1], ab.first, ab.second}, w);
    }
    return r;
}

VerifyResult cocycle_verify(const MatrixModule &V, const PolyCocycle2 &c) {
    VerifyResult vr;
    auto res = relation_residual(V, c);
    vr.nonzero_terms = static_cast<long>(res.size());
    vr.ok = res.empty();
    for (const auto &[k, x] : res) {
        int d = deg6(k);
        if (vr.first_bad_degree < 0 || d < vr.first_bad_degree) vr.first_bad_degree = d;
    }
    return vr;
}

PolyCocycle2 uy_lift(const MatrixModule &V, const Vec &w, int D) {
    PolyCocycle2 c;
    c.degree_bound = D;
    c.add(Key4{1, 0, 0, 1}, w);
    const auto &tab = relation_table(D);
    for (int n = 3; n <= D; ++n) {
        PolyCocycle2 cur = c;
        cur.degree_bound = n;
        auto res = relation_residual(V, cur);
        std::map<Key6, long> rows;
        std::vector<std::pair<Key6, const Vec *>> rhs_terms;
        for (const auto &[k, x] : res) {
            int d = deg6(k);
            if (d < n) throw Error("uy_lift: lower degree residual survived");
            if (d == n) rhs_terms.push_back({k, &x});
        }
        if (rhs_terms.empty()) continue;
        auto cols = monomials4(n);
        for (const auto &m : cols)
            for (const auto &[k6, s] : tab.s.at(m))
                if (deg6(k6) == n) rows.emplace(k6, 0);
        for (const auto &m : cols) rows.emplace(Key6{m[0], m[1], m[2], m[3], 0, 0}, 0);
        for (const auto &[k, x] : rhs_terms) rows.emplace(k, 0);
        long ri = 0;
        for (auto &[k, idx] : rows) idx = ri++;
        QMatrix A(ri, static_cast<long>(cols.size()));
        for (size_t j = 0; j < cols.size(); ++j) {
            const auto &m = cols[j];
            for (const auto &[k6, s] : tab.s.at(m))
                if (deg6(k6) == n) A(rows.at(k6), static_cast<long>(j)) += s;
            A(rows.at(Key6{m[0], m[1], m[2], m[3], 0, 0}), static_cast<long>(j)) -= 1;
        }
        QMatrix B(ri, V.dim);
        for (const auto &[k, x] : rhs_terms)
            for (long t = 0; t < V.dim; ++t) B(rows.at(k), t) = -(*x)[static_cast<size_t>(t)];
        auto X = solve_particular_multi(A, B);
        if (!X) throw Error("uy_lift: graded obstruction at degree " + std::to_string(n));
        for (size_t j = 0; j < cols.size(); ++j) {
            Vec y(static_cast<size_t>(V.dim));
            for (long t = 0; t < V.dim; ++t) y[static_cast<size_t>(t)] = (*X)(static_cast<long>(j), t);
            if (!vec_zero(y)) c.add(cols[j], y);
        }
    }
    return c;
}

Reduction reduce_analytic_cocycle(const MatrixModule &V, const PolyCocycle2 &c) {
    int D = c.degree_bound;
    for (const auto &[k, x] : c.coeffs)
        if (deg4(k) < 2) throw Error("reduce_analytic_cocycle: cocycle must vanish to order 2");
    Reduction red;
    Vec c1001 = c.coeff({1, 0, 0, 1}, V.dim), c0110 = c.coeff({0, 1, 1, 0}, V.dim);
    red.delta2 = c1001;
    vec_axpy(red.delta2, Q(-1), c0110);
    PolyCocycle2 r = c;
    r -= uy_lift(V, red.delta2, D);
    for (int n = 2; n <= D; ++n) {
        auto rc = [&](int i, int j, int k, int l) { return r.coeff({i, j, k, l}, V.dim); };
        OneCochain Qn;
        Qn.degree_bound = D;
        auto put = [&](int a, int b, const Vec &x, const Q &f) {
            Vec y(x.size());
            for (size_t i = 0; i < x.size(); ++i) y[i] = x[i] * f;
            if (!vec_zero(y)) Qn.coeffs[{a, b}] = std::move(y);
        };
        put(n, 0, rc(1, 0, n - 1, 0), qmake(1, n));
        put(0, n, rc(0, n - 1, 0, 1), qmake(1, n));
        for (int k = 0; k <= n - 2; ++k) put(n - k - 1, k + 1, rc(n - k - 1, k, 0, 1), qmake(1, k + 1));
        r += coboundary(V, Qn, D);
        if (!r.degree_part(n).is_zero())
            throw Error("reduce_analytic_cocycle: degree " + std::to_string(n) + " part is not a graded coboundary");
        red.Q_list.push_back(std::move(Qn));
    }
    if (!r.is_zero()) throw Error("reduce_analytic_cocycle: residual survived");
    return red;
}

AuditReport valuation_audit(const MatrixModule &V, const PolyCocycle2 &c, const std::vector<OneCochain> &Q_list, long m) {
    AuditReport ar;
    for (const auto &[k, x] : c.coeffs) {
        auto v = V.valuation(x);
        if (v && *v < Q(-m * deg4(k))) ar.precondition_ok = false;
    }
    for (const auto &Qn : Q_list)
        for (const auto &[k, x] : Qn.coeffs) {
            int n = k[0] + k[1];
            auto v = V.valuation(x);
            if (!v) continue;
            Q bound = Q(-m * n - vp_int(factorial(n), V.p));
            Q slack = *v - bound;
            ++ar.checked;
            if (!ar.min_slack || slack < *ar.min_slack) ar.min_slack = slack;
            if (slack < 0) ar.bound_ok = false;
        }
    return ar;
}

long precondition_shift(const MatrixModule &V, const PolyCocycle2 &c, long m) {
    long N = 0;
    for (const auto &[k, x] : c.coeffs) {
        auto v = V.valuation(x);
        if (!v) continue;
        Q need = Q(-m * deg4(k)) - *v;
        Z nz;
        mpz_cdiv_q(nz.get_mpz_t(), need.get_num_mpz_t(), need.get_den_mpz_t());
        N = std::max(N, nz.get_si());
    }
    return N;
}

PolyCocycle2 cup_cocycle(const MatrixModule &V, const std::function<Vec(const Vec &, const Vec &)> &mul, const Vec &A,
                         const Vec &B, int D) {
    // f1(g1) * g2 as a polynomial in (u, v, x, y)
    std::map<Key4, Vec> left;
    for (const auto &[ab, w] : action_jet(V, A, D)) {
        if (ab.first + ab.second == 0) continue;
        for (const auto &[cd, z] : action_jet(V, w, D - ab.first - ab.second))
            left[Key4{ab.first, ab.second, cd.first, cd.second}] = z;
    }
    PolyCocycle2 r;
    r.degree_bound = D;
    for (const auto &[ab, w] : action_jet(V, B, D)) {
        if (ab.first + ab.second == 0) continue;
        for (const auto &[k, z] : left) {
            Key4 kk{k[0], k[1], k[2] + ab.first, k[3] + ab.second};
            if (deg4(kk) > D) continue;
            r.add(kk, mul(z, w));
        }
    }
    return r;
}

}  // namespace kato

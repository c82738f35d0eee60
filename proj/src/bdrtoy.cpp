#include "kato/bdrtoy.hpp"

#include "kato/linalg.hpp"

#include <array>
#include <sstream>

namespace kato {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long ipow(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

BdRToyElem::BdRToyElem(long M, long p, ToyBounds b, long inert_weight) : M_(M), p_(p), W_(inert_weight), b_(b) {
    if (M < 1) throw Error("BdRToyElem: level must be positive");
    if (!is_prime_l(p)) throw Error("BdRToyElem: p must be prime");
    if (b.smax < 1) throw Error("BdRToyElem: smax must be >= 1");
}

void BdRToyElem::add(const ToyMono &m0, const CycNumber &c) {
    if (c.is_zero()) return;
    if (m0.r < 0) throw Error("BdRToyElem: negative u_q degree");
    if (m0.r > b_.rmax) return;
    if (m0.v + W_ * m0.w >= b_.vmax) return;
    long k = floor_div(m0.i, M_);
    ToyMono m = m0;
    m.i = m0.i - k * M_;
    if (k == 0) {
        if (m.s >= b_.smax) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return;
    }
    // zeta~^{kM} = exp(k t)
    Q kp(1);
    for (long e = 0; m0.s + e < b_.smax; ++e) {
        if (e > 0) kp *= Q(k) / Q(e);
        ToyMono me = m;
        me.s = m0.s + e;
        add(me, c * kp);
    }
}

BdRToyElem BdRToyElem::mono(const ToyMono &m, const CycNumber &c) const {
    BdRToyElem r = like();
    r.add(m, c);
    return r;
}

CycNumber BdRToyElem::coeff(const ToyMono &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycNumber(0) : it->second;
}

void BdRToyElem::check_compatible(const BdRToyElem &o) const {
    if (M_ != o.M_ || p_ != o.p_ || W_ != o.W_) throw Error("BdRToyElem: level mismatch");
}

BdRToyElem BdRToyElem::operator-() const {
    BdRToyElem r = *this;
    for (auto &[m, c] : r.terms_) c = -c;
    return r;
}

BdRToyElem &BdRToyElem::operator+=(const BdRToyElem &o) {
    check_compatible(o);
    for (const auto &[m, c] : o.terms_) add(m, c);
    return *this;
}

BdRToyElem &BdRToyElem::operator-=(const BdRToyElem &o) {
    check_compatible(o);
    for (const auto &[m, c] : o.terms_) add(m, -c);
    return *this;
}

BdRToyElem &BdRToyElem::operator*=(const CycNumber &c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, x] : terms_) x *= c;
    return *this;
}

BdRToyElem BdRToyElem::operator*(const BdRToyElem &o) const {
    check_compatible(o);
    BdRToyElem r = like();
    for (const auto &[a, ca] : terms_)
        for (const auto &[b, cb] : o.terms_) r.add({a.i + b.i, a.v + b.v, a.s + b.s, a.r + b.r, a.w + b.w}, ca * cb);
    return r;
}

BdRToyElem BdRToyElem::shift_t(long ds) const {
    BdRToyElem r = like();
    for (const auto &[m, c] : terms_) r.add({m.i, m.v, m.s + ds, m.r, m.w}, c);
    return r;
}

bool BdRToyElem::operator==(const BdRToyElem &o) const {
    if (M_ != o.M_ || W_ != o.W_) return false;
    BdRToyElem d = *this;
    d -= o;
    return d.is_zero();
}

BdRToyElem BdRToyElem::zeta_form() const {
    BdRToyElem r = like();
    for (const auto &[m, c] : terms_) {
        if (m.i == 0) {
            r.add(m, c);
            continue;
        }
        CycNumber cz = c * CycNumber::zeta(M_, m.i);
        Q x = qmake(m.i, M_), f(1);
        for (long e = 0; m.s + e < b_.smax; ++e) {
            if (e > 0) f *= x / Q(e);
            r.add({0, m.v, m.s + e, m.r, m.w}, cz * f);
        }
    }
    return r;
}

bool BdRToyElem::is_zeta_form() const {
    for (const auto &kv : terms_)
        if (kv.first.i != 0) return false;
    return true;
}

std::string BdRToyElem::str(size_t max_terms) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    size_t n = 0;
    for (const auto &[m, c] : terms_) {
        if (n++ == max_terms) {
            os << " + ...";
            break;
        }
        if (n > 1) os << " + ";
        os << "(" << c.str() << ")";
        if (m.i) os << "*Z^" << m.i;
        if (m.v) os << "*q^" << m.v;
        if (m.s) os << "*t^" << m.s;
        if (m.r) os << "*u^" << m.r;
        if (m.w) os << "*Q^" << m.w;
    }
    return os.str();
}

BdRToyElem partial1(const BdRToyElem &x) {
    BdRToyElem r = x.like();
    Q invM = qmake(1, x.level());
    for (const auto &[m, c] : x.terms()) {
        if (m.v != 0) r.add({m.i, m.v, m.s + 1, m.r, m.w}, c * (Q(m.v) * invM));
        if (m.r != 0) r.add({m.i, m.v, m.s + 1, m.r - 1, m.w}, c * Q(m.r));
    }
    return r;
}

BdRToyElem partial2(const BdRToyElem &x) {
    BdRToyElem r = x.like();
    Q invM = qmake(1, x.level());
    for (const auto &[m, c] : x.terms()) {
        if (m.s != 0) r.add(m, c * Q(m.s));
        if (m.i != 0) r.add({m.i, m.v, m.s + 1, m.r, m.w}, c * (Q(m.i) * invM));
    }
    return r;
}

ToyJet pm_action_jet2(const BdRToyElem &x) {
    ToyJet j;
    BdRToyElem d1 = partial1(x), d2 = partial2(x);
    j[{0, 0}] = x;
    j[{1, 0}] = d1;
    j[{0, 1}] = d2;
    j[{2, 0}] = partial1(d1) * CycNumber(qmake(1, 2));
    j[{1, 1}] = partial1(d2);
    j[{0, 2}] = partial2(d2) * CycNumber(qmake(1, 2));
    return j;
}

namespace {

ToyJet jet_mul(const ToyJet &a, const ToyJet &b) {
    ToyJet r;
    for (const auto &[ka, xa] : a)
        for (const auto &[kb, xb] : b) {
            std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
            if (k.first + k.second > 2) continue;
            BdRToyElem p = xa * xb;
            auto it = r.find(k);
            if (it == r.end())
                r.emplace(k, p);
            else
                it->second += p;
        }
    return r;
}

// exp(h) for a jet with no constant part
ToyJet jet_exp(const ToyJet &h, const BdRToyElem &one) {
    ToyJet r;
    r[{0, 0}] = one;
    ToyJet sq = jet_mul(h, h);
    for (const auto &[k, x] : h) r[k] = r.count(k) ? r[k] + x : x;
    for (const auto &[k, x] : sq) {
        BdRToyElem half = x * CycNumber(qmake(1, 2));
        r[k] = r.count(k) ? r[k] + half : half;
    }
    return r;
}

}  // namespace

ToyJet pm_action_jet2_direct(const BdRToyElem &x) {
    ToyJet out;
    for (auto k : {std::pair<int, int>{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}) out[k] = x.like();
    Q invM = qmake(1, x.level());
    for (const auto &[m, c] : x.terms()) {
        BdRToyElem one = x.mono({0, 0, 0, 0, 0});
        BdRToyElem t1 = x.mono({0, 0, 1, 0, 0});
        // h = i (v + v^2/2) t / M + v_q u t / M
        ToyJet h;
        h[{0, 1}] = t1 * CycNumber(Q(m.i) * invM);
        h[{0, 2}] = t1 * CycNumber(Q(m.i) * invM / 2);
        h[{1, 0}] = t1 * CycNumber(Q(m.v) * invM);
        ToyJet f = jet_exp(h, one);
        // (e^v)^s
        ToyJet ev;
        ev[{0, 0}] = one;
        ev[{0, 1}] = one * CycNumber(Q(m.s));
        ev[{0, 2}] = one * CycNumber(Q(m.s * m.s) / 2);
        f = jet_mul(f, ev);
        // (u_q + u t)^r
        ToyJet uq;
        uq[{0, 0}] = x.mono({0, 0, 0, m.r, 0});
        if (m.r >= 1) uq[{1, 0}] = x.mono({0, 0, 1, m.r - 1, 0}, CycNumber(Q(m.r)));
        if (m.r >= 2) uq[{2, 0}] = x.mono({0, 0, 2, m.r - 2, 0}, CycNumber(Q(binomial(m.r, 2))));
        f = jet_mul(f, uq);
        BdRToyElem base = x.mono({m.i, m.v, m.s, 0, m.w}, c);
        for (auto &[k, e] : f) out[k] += e * base;
    }
    return out;
}

namespace {

using V4 = std::array<int, 4>;  // u, v, x, y
using P4 = std::map<V4, Q>;

P4 p4_mul(const P4 &a, const P4 &b, int maxdeg) {
    P4 r;
    for (const auto &[ka, ca] : a)
        for (const auto &[kb, cb] : b) {
            V4 k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]};
            if (k[0] + k[1] + k[2] + k[3] > maxdeg) continue;
            r[k] += ca * cb;
        }
    return r;
}

}  // namespace

BdRToyElem cup_delta2(const BdRToyElem &A, const BdRToyElem &B) {
    ToyJet ja = pm_action_jet2(A), jb = pm_action_jet2(B);
    // g1 g2 = (e^y u + x, v + y), to degree 2
    P4 U{{{1, 0, 0, 0}, Q(1)}, {{0, 0, 1, 0}, Q(1)}, {{1, 0, 0, 1}, Q(1)}};
    P4 V{{{0, 1, 0, 0}, Q(1)}, {{0, 0, 0, 1}, Q(1)}};
    P4 one{{{0, 0, 0, 0}, Q(1)}};
    std::map<V4, BdRToyElem> left, right;
    auto acc = [](std::map<V4, BdRToyElem> &m, const V4 &k, const BdRToyElem &e) {
        auto it = m.find(k);
        if (it == m.end())
            m.emplace(k, e);
        else
            it->second += e;
    };
    for (const auto &[ab, e] : ja) {
        P4 mon = one;
        for (int i = 0; i < ab.first; ++i) mon = p4_mul(mon, U, 2);
        for (int i = 0; i < ab.second; ++i) mon = p4_mul(mon, V, 2);
        for (const auto &[k, c] : mon) acc(left, k, e * CycNumber(c));
        acc(left, {0, 0, ab.first, ab.second}, -e);
    }
    for (const auto &[ab, e] : jb) {
        if (ab.first == 0 && ab.second == 0) continue;
        acc(right, {0, 0, ab.first, ab.second}, e);
    }
    BdRToyElem c1001 = A.like(), c0110 = A.like();
    for (const auto &[kl, el] : left)
        for (const auto &[kr, er] : right) {
            V4 k{kl[0] + kr[0], kl[1] + kr[1], kl[2] + kr[2], kl[3] + kr[3]};
            if (k == V4{1, 0, 0, 1}) c1001 += el * er;
            if (k == V4{0, 1, 1, 0}) c0110 += el * er;
        }
    return c1001 - c0110;
}

BdRToyElem cup_delta2_closed(const BdRToyElem &DA, const BdRToyElem &DB, long a, long b, long c, long d) {
    long M = DA.level();
    BdRToyElem r = (DA * DB).shift_t(2);
    return r * CycNumber(Q(a * d - b * c) / Q(M * M));
}

BdRToyElem trace_RM(const BdRToyElem &x, long target_M) {
    long L = x.level(), p = x.prime();
    if (target_M < 1 || L % target_M != 0) throw Error("trace_RM: level mismatch");
    long pn = L / target_M, n = 0;
    while (pn % p == 0) {
        pn /= p;
        ++n;
    }
    if (pn != 1) throw Error("trace_RM: source level is not target * p^n");
    long need = p == 2 ? 2 : 1;
    if (vp_int(Z(target_M), p) < need) throw Error("trace_RM: needs v_p(M) >= v_p(2p)");
    long P = ipow(p, n);
    if (x.inert_weight() % P != 0) throw Error("trace_RM: inert weight not divisible by p^n");
    ToyBounds b = x.bounds();
    b.vmax = (b.vmax + P - 1) / P;
    BdRToyElem r(target_M, p, b, x.inert_weight() / P);
    for (const auto &[m, c] : x.terms()) {
        if (m.i % P != 0 || m.v % P != 0) continue;
        CycNumber cc = c;
        if (!c.is_rational()) {
            if (L % c.conductor() != 0) throw Error("trace_RM: coefficient field not inside Q(zeta_L)");
            CycNumber s(0);
            for (long k = 0; k < P; ++k) s += galois_sigma(mod_l(1 + target_M * k, c.conductor()), c);
            cc = s * qmake(1, P);
        }
        r.add({m.i / P, m.v / P, m.s, m.r, m.w}, cc);
    }
    return r;
}

// ---- V_{k,j} ----

VkjTensor::VkjTensor(long k, long j, const BdRToyElem &proto) : k_(k), j_(j), proto_(proto.like()) {
    if (k < 2 || j < 1 || j > k - 1) throw Error("VkjTensor: need k >= 2 and 1 <= j <= k-1");
}

void VkjTensor::add(long i, const BdRToyElem &x) {
    if (i < 0 || i > k_ - 2) throw Error("VkjTensor: e1 degree out of range");
    auto it = parts_.find(i);
    if (it == parts_.end()) {
        if (!x.is_zero()) parts_.emplace(i, x);
    } else {
        it->second += x;
        if (it->second.is_zero()) parts_.erase(it);
    }
}

VkjTensor VkjTensor::linear_power(long k, long j, const Q &a, const Q &b, const BdRToyElem &x) {
    VkjTensor r(k, j, x);
    for (long i = 0; i <= k - 2; ++i) {
        Q c = Q(binomial(k - 2, i)) * qpow(a, i) * qpow(b, k - 2 - i);
        if (c != 0) r.add(i, x * CycNumber(c));
    }
    return r;
}

VkjTensor &VkjTensor::operator+=(const VkjTensor &o) {
    if (o.k_ != k_ || o.j_ != j_) throw Error("VkjTensor: (k,j) mismatch");
    for (const auto &[i, x] : o.parts_) add(i, x);
    return *this;
}

VkjTensor &VkjTensor::operator-=(const VkjTensor &o) {
    if (o.k_ != k_ || o.j_ != j_) throw Error("VkjTensor: (k,j) mismatch");
    for (const auto &[i, x] : o.parts_) add(i, -x);
    return *this;
}

VkjTensor &VkjTensor::operator*=(const CycNumber &c) {
    std::map<long, BdRToyElem> np;
    for (auto &[i, x] : parts_) {
        BdRToyElem y = x * c;
        if (!y.is_zero()) np.emplace(i, y);
    }
    parts_ = std::move(np);
    return *this;
}

VkjTensor VkjTensor::times(const BdRToyElem &x) const {
    VkjTensor r(k_, j_, proto_);
    for (const auto &[i, y] : parts_) r.add(i, y * x);
    return r;
}

VkjTensor VkjTensor::shift_t(long ds) const {
    VkjTensor r(k_, j_, proto_);
    for (const auto &[i, y] : parts_) r.add(i, y.shift_t(ds));
    return r;
}

VkjTensor VkjTensor::zeta_form() const {
    VkjTensor r(k_, j_, proto_);
    for (const auto &[i, y] : parts_) r.add(i, y.zeta_form());
    return r;
}

bool VkjTensor::is_zero() const { return parts_.empty(); }

// d1 e1 = e2, d1 e2 = 0 ; d2 e1 = 0, d2 e2 = e2
VkjTensor partial1(const VkjTensor &x) {
    VkjTensor r(x.k(), x.j(), x.proto());
    for (const auto &[i, y] : x.parts()) {
        if (i > 0) r.add(i - 1, y * CycNumber(Q(i)));
        r.add(i, partial1(y));
    }
    return r;
}

VkjTensor partial2(const VkjTensor &x) {
    VkjTensor r(x.k(), x.j(), x.proto());
    for (const auto &[i, y] : x.parts()) {
        long d = x.k() - 2 - i;
        if (d != 0) r.add(i, y * CycNumber(Q(d)));
        r.add(i, partial2(y));
    }
    return r;
}

namespace {

void check_res_input(const VkjTensor &x) {
    const BdRToyElem &pr = x.proto();
    long p = pr.prime();
    long need = p == 2 ? 2 : 1;
    if (vp_int(Z(pr.level()), p) < need) throw Error("res_kj: needs v_p(M) >= v_p(2p)");
    if (pr.bounds().smax < 2) throw Error("res_kj: t-truncation too small to see t^1");
    for (const auto &[i, y] : x.parts())
        for (const auto &kv : y.terms()) {
            if (kv.first.r != 0) throw Error("res_kj: u_q terms are not reducible here");
            // the space is spanned by e1^i e2^{k-2-i} t^{l+2-j} q~^v, l >= 0
            if (kv.first.s < 2 - x.j()) throw Error("res_kj: t-degree below 2-j");
        }
}

QExpansion res_output(const std::map<long, CycNumber> &lam, long M) {
    QExpansion out(M, std::nullopt);
    for (const auto &[e, c] : lam) out.add_key(e, c);
    out.normalize_denom();
    return out;
}

}  // namespace

QExpansion res_kj(const VkjTensor &x0) {
    check_res_input(x0);
    VkjTensor x = x0.zeta_form();
    long k = x.k(), M = x.proto().level(), W = x.proto().inert_weight();
    std::map<long, CycNumber> lam;
    Z km2 = factorial(k - 2);
    for (const auto &[i, y] : x.parts()) {
        long d = k - 2 - i;
        Q base = Q(factorial(i)) / Q(km2);
        if (d % 2) base = -base;
        for (const auto &[m, c] : y.terms()) {
            if (m.s + d != 1) continue;
            Q f = base * qpow(qmake(m.v, M), d);
            if (f == 0) continue;
            lam[m.v + W * m.w] += c * f;
        }
    }
    return res_output(lam, M);
}

QExpansion res_kj_solve(const VkjTensor &x0) {
    check_res_input(x0);
    VkjTensor x = x0.zeta_form();
    long k = x.k(), M = x.proto().level(), W = x.proto().inert_weight();
    long ne = k - 1;
    // group the input by (v, w)
    struct Block {
        std::map<std::pair<long, long>, CycNumber> c;  // (e1 degree, s) -> coeff
    };
    std::map<std::pair<long, long>, Block> blocks;
    for (const auto &[i, y] : x.parts())
        for (const auto &[m, c] : y.terms()) blocks[{m.v, m.w}].c[{i, m.s}] += c;
    std::map<long, CycNumber> lam;
    for (const auto &[vw, blk] : blocks) {
        long v = vw.first;
        long lmin = 2 - x.j(), lmax = 1, N = 1;
        for (const auto &[is, c] : blk.c) {
            lmin = std::min(lmin, is.second);
            lmax = std::max(lmax, is.second);
            N = lcm_l(N, c.conductor());
        }
        long nl = lmax - lmin + 1;
        long dim = ne * nl;
        auto idx = [&](long i, long s) { return (s - lmin) * ne + i; };
        // columns: d1 y, (d2 - 1) y for each basis y, then the target t e1^{k-2}
        long ncol = 2 * dim + 1;
        QMatrix G(dim, ncol);
        Q vM = qmake(v, M);
        for (long s = lmin; s <= lmax; ++s)
            for (long i = 0; i < ne; ++i) {
                long col = idx(i, s);
                // d1(e1^i e2^{k-2-i} t^s q^v) = i e1^{i-1} e2^{..} t^s + (v/M) e1^i e2^{..} t^{s+1}
                if (i > 0) G(idx(i - 1, s), col) += Q(i);
                if (s + 1 <= lmax && v != 0) G(idx(i, s + 1), col) += vM;
                G(col, dim + col) = Q(k - 3 - i + s);
            }
        G(idx(k - 2, 1), 2 * dim) = 1;
        long phi = euler_phi(N);
        QMatrix B(dim, phi);
        for (const auto &[is, c] : blk.c) {
            CycNumber cl = c.lift(N);
            for (long e = 0; e < phi; ++e) B(idx(is.first, is.second), e) = cl.coeffs()[static_cast<size_t>(e)];
        }
        if (rank(G) == rank([&] {
                QMatrix g2(dim, ncol - 1);
                for (long r = 0; r < dim; ++r)
                    for (long cc = 0; cc < ncol - 1; ++cc) g2(r, cc) = G(r, cc);
                return g2;
            }()))
            throw Error("res_kj_solve: target line lies in the derivation image");
        auto sol = solve_particular_multi(G, B);
        if (!sol) throw Error("res_kj_solve: not reducible within the truncation bounds");
        std::vector<Q> lc(static_cast<size_t>(phi));
        for (long e = 0; e < phi; ++e) lc[static_cast<size_t>(e)] = (*sol)(2 * dim, e);
        CycNumber l = CycNumber::from_coeffs(N, lc);
        if (!l.is_zero()) lam[v + W * vw.second] += l;
    }
    return res_output(lam, M);
}

}  // namespace kato

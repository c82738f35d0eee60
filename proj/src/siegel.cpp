#include "kato/siegel.hpp"

namespace kato {

namespace {

struct Factor {
    Q e;  // > 0
    CycNumber gamma;
    long k;
};

struct Accum {
    Q E;
    CycNumber C{1};
    std::vector<Factor> fs;
};

CycNumber cyc_pow(const CycNumber &x, long k) {
    CycNumber b = k < 0 ? x.inverse() : x;
    long n = k < 0 ? -k : k;
    CycNumber r(1);
    while (n) {
        if (n & 1) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

CycNumber eroot(const Q &y) { return CycNumber::root(FracClass::from_q(y)); }

bool is_integer(const Q &y) { return y.get_den() == 1; }

// (1 - e(ys) q^e)^k, normalised so the remaining factor has positive exponent
void one_minus(Accum &acc, const Q &e, const Q &ys, long k) {
    if (e > 0) {
        acc.fs.push_back({e, eroot(ys), k});
    } else if (e < 0) {
        acc.C *= cyc_pow(-eroot(ys), k);
        acc.E += Q(k) * e;
        acc.fs.push_back({-e, eroot(-ys), k});
    } else {
        if (is_integer(ys)) throw Error("theta product vanishes at this point");
        acc.C *= cyc_pow(CycNumber(1) - eroot(ys), k);
    }
}

Q abs_q(const Q &x) { return x < 0 ? Q(-x) : x; }

// theta(tau, w z)^k
void theta_into(Accum &acc, long w, long k, const Q &x, const Q &y, const Q &prec) {
    Q wx = Q(w) * x, wy = Q(w) * y;
    acc.E += qmake(k, 12);
    acc.C *= cyc_pow(-eroot(-wy / 2), k);
    acc.E -= Q(k) * wx / 2;
    one_minus(acc, wx, wy, k);
    for (long n = 1; Q(n) - abs_q(wx) < prec; ++n) {
        one_minus(acc, Q(n) + wx, wy, k);
        one_minus(acc, Q(n) - wx, -wy, k);
    }
}

void core_into(Accum &acc, const Q &x, const Q &y, const Q &prec) {
    one_minus(acc, x, y, 1);
    for (long n = 1; Q(n) - abs_q(x) < prec; ++n) {
        one_minus(acc, Q(n) + x, y, 1);
        one_minus(acc, Q(n) - x, -y, 1);
    }
}

UnitQExp finish(const Accum &acc, const Q &prec) {
    long L = 1;
    for (const auto &f : acc.fs) L = lcm_l(L, f.e.get_den().get_si());
    Q kq = prec * Q(L);
    Z kz;
    mpz_cdiv_q(kz.get_mpz_t(), kq.get_num_mpz_t(), kq.get_den_mpz_t());
    long K = std::max<long>(kz.get_si(), 1);
    std::vector<CycNumber> t(static_cast<size_t>(K));
    t[0] = CycNumber(1);
    for (const auto &f : acc.fs) {
        long s = Q(f.e * Q(L)).get_num().get_si();
        if (s >= K || f.k == 0) continue;
        long jmax = (K - 1) / s;
        std::vector<CycNumber> b(static_cast<size_t>(jmax + 1));
        CycNumber g(1);
        for (long j = 1; j <= jmax; ++j) {
            g *= f.gamma;
            if (f.k > 0) {
                if (j > f.k) break;
                Z bin = binomial(f.k, j);
                b[static_cast<size_t>(j)] = g * Q(j % 2 ? -bin : bin);
            } else {
                b[static_cast<size_t>(j)] = g * Q(binomial(-f.k + j - 1, j));
            }
        }
        for (long n = K - 1; n >= s; --n) {
            CycNumber acc_n;
            for (long j = 1; j * s <= n && j <= jmax; ++j) {
                const CycNumber &bj = b[static_cast<size_t>(j)];
                const CycNumber &tv = t[static_cast<size_t>(n - j * s)];
                if (bj.is_zero() || tv.is_zero()) continue;
                acc_n += bj * tv;
            }
            if (!acc_n.is_zero()) t[static_cast<size_t>(n)] += acc_n;
        }
    }
    QExpansion tail(L, prec);
    for (long n = 0; n < K; ++n) tail.add_key(n, t[static_cast<size_t>(n)]);
    tail.normalize_denom();
    return UnitQExp(acc.E, acc.C, tail);
}

// adds D_2^r log (1 - q^n Z^s) with Z = q_z^w evaluated; sw = s*w, e = exponent, ys = root exponent
void dlog_factor(QExpansion &out, CycNumber &cst, long k, long sw, long r, const Q &e, const Q &ys, const Q &prec) {
    if (e == 0) {
        if (is_integer(ys)) throw Error("theta product vanishes at this point");
        cst -= lerch_neg(FracClass::from_q(ys), r) * (Q(k) * qpow(Q(sw), r));
        return;
    }
    Q ee = e, yy = ys;
    long s = sw;
    if (e < 0) {
        if (r == 1) cst += CycNumber(Q(k * sw));
        ee = -e;
        yy = -ys;
        s = -sw;
    }
    Q scal = -Q(k) * qpow(Q(s), r);
    for (long m = 1; Q(m) * ee < prec; ++m) {
        Q w = scal * qpow(Q(m), r - 1);
        out.add_term(Q(m) * ee, eroot(Q(m) * yy) * w);
    }
}

}  // namespace

UnitQExp QzUnit::evaluate(const Q &x, const Q &y, const Q &prec) const {
    Accum acc;
    if (sign < 0) acc.C = CycNumber(-1);
    for (const auto &[w, k] : parts) theta_into(acc, w, k, x, y, prec);
    return finish(acc, prec);
}

QExpansion QzUnit::d2log(long r, const Q &x, const Q &y, const Q &prec) const {
    if (r < 1) throw Error("d2log: r must be >= 1");
    QExpansion out(1, prec);
    CycNumber cst;
    for (const auto &[w, k] : parts) {
        Q wx = Q(w) * x, wy = Q(w) * y;
        if (r == 1) cst += CycNumber(qmake(-k * w, 2));
        dlog_factor(out, cst, k, w, r, wx, wy, prec);
        for (long n = 1; Q(n) - abs_q(wx) < prec; ++n) {
            dlog_factor(out, cst, k, w, r, Q(n) + wx, wy, prec);
            dlog_factor(out, cst, k, -w, r, Q(n) - wx, -wy, prec);
        }
    }
    out.add_term(Q(0), cst);
    out.normalize_denom();
    return out;
}

QzUnit QzUnit::operator*(const QzUnit &o) const {
    QzUnit r = *this;
    r.parts.insert(r.parts.end(), o.parts.begin(), o.parts.end());
    r.sign *= o.sign;
    return r;
}

QzUnit QzUnit::pow(long e) const {
    QzUnit r = *this;
    for (auto &pk : r.parts) pk.second *= e;
    r.sign = (sign < 0 && e % 2) ? -1 : 1;
    return r;
}

QzUnit QzUnit::dilate(long c) const {
    QzUnit r = *this;
    for (auto &pk : r.parts) pk.first *= c;
    return r;
}

QzUnit theta_unit() { return QzUnit{{{1, 1}}, 1}; }
QzUnit g0c_unit(long c) {
    long m = (c - c * c) / 2;
    return QzUnit{{{1, c * c}, {c, -1}}, m % 2 ? -1 : 1};
}

namespace {
void check_c(long c) {
    if (gcd_l(c, 6) != 1) throw Error("g_{0,c} needs gcd(c,6) = 1");
}
}  // namespace

UnitQExp theta_qexp(long N, long a, long b, const Q &prec) {
    if (N <= 0) throw Error("theta_qexp: N must be positive");
    if (mod_l(a, N) == 0 && mod_l(b, N) == 0) throw Error("theta_qexp: (a,b) = (0,0) mod N");
    return theta_unit().evaluate(qmake(a, N), qmake(b, N), prec);
}

UnitQExp g0c_qexp(long c, long N, long a, long b, const Q &prec) {
    check_c(c);
    if (mod_l(c * a, N) == 0 && mod_l(c * b, N) == 0) throw Error("g0c_qexp: (ca,cb) = (0,0) mod N");
    return g0c_unit(c).evaluate(qmake(a, N), qmake(b, N), prec);
}

UnitQExp g0c_closed_form(long c, long N, long a, long b, const Q &prec) {
    check_c(c);
    if (mod_l(c * a, N) == 0 && mod_l(c * b, N) == 0) throw Error("g0c_closed_form: (ca,cb) = (0,0) mod N");
    Q x = qmake(a, N), y = qmake(b, N);
    Accum acc;
    long c2 = c * c;
    acc.E = qmake(c2 - 1, 12);
    long m = (c - c2) / 2;
    acc.C *= cyc_pow(-eroot(y), m);  // (-q_z)^m
    acc.E += Q(m) * x;
    Q cx = Q(c) * x, cy = Q(c) * y;
    one_minus(acc, x, y, c2);
    one_minus(acc, cx, cy, -1);
    for (long n = 1; Q(n) - abs_q(cx) < prec || Q(n) - abs_q(x) < prec; ++n) {
        one_minus(acc, Q(n) + x, y, c2);
        one_minus(acc, Q(n) - x, -y, c2);
        one_minus(acc, Q(n) + cx, cy, -1);
        one_minus(acc, Q(n) - cx, -cy, -1);
    }
    return finish(acc, prec);
}

UnitQExp theta_core_product(const Q &x, const Q &y, const Q &prec) {
    Accum acc;
    core_into(acc, x, y, prec);
    return finish(acc, prec);
}

UnitQExp norm_Na(const QzUnit &f, long a, long N, long A, long B, const Q &prec) {
    if (a < 1) throw Error("norm_Na: a must be >= 1");
    UnitQExp r(Q(0), CycNumber(1), QExpansion::constant(CycNumber(1), prec));
    for (long k = 0; k < a; ++k)
        for (long j = 0; j < a; ++j) r = r * f.evaluate(qmake(A + j * N, N * a), qmake(B + k * N, N * a), prec);
    return r;
}

UnitQExp norm_core_product(long a, long N, long A, long B, const Q &prec) {
    UnitQExp r(Q(0), CycNumber(1), QExpansion::constant(CycNumber(1), prec));
    for (long k = 0; k < a; ++k)
        for (long j = 0; j < a; ++j) r = r * theta_core_product(qmake(A + j * N, N * a), qmake(B + k * N, N * a), prec);
    return r;
}

QExpansion d2log_rc_theta(long c, long r, long N, long a, long b, const Q &prec) {
    if (c != 1) check_c(c);
    if (mod_l(a, N) == 0 && mod_l(b, N) == 0) throw Error("d2log_rc_theta: (a,b) = (0,0) mod N");
    if (c != 1 && mod_l(c * a, N) == 0 && mod_l(c * b, N) == 0)
        throw Error("d2log_rc_theta: (ca,cb) = (0,0) mod N, theta(tau, cz) vanishes");
    return g0c_unit(c).d2log(r, qmake(a, N), qmake(b, N), prec);
}

}  // namespace kato

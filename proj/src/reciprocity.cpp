#include "kato/reciprocity.hpp"

#include "kato/eisenstein.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kato {

namespace {

long ipow_l(long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) r *= b;
    return r;
}

// a0 = alpha mod M, 1 <= a0 <= M p^n
std::vector<long> residue_reps(long alpha, long M, long L) {
    std::vector<long> r;
    for (long a0 = mod_l(alpha - 1, M) + 1; a0 <= L; a0 += M) r.push_back(a0);
    return r;
}

QExpansion zero_series(const Q &prec) { return QExpansion(1, prec); }

QExpansion level_term(long c, long r, long w, long M, long pn, long a0, long b, const Q &prec) {
    QExpansion t = d2log_rc_theta(c, r, M * pn, a0, b * pn, prec / Q(pn));
    t = substitute_power(t, Q(pn));
    if (w != 0) t *= qpow(Q(a0), w);
    return t;
}

}  // namespace

void validate(const ReciprocityInstance &in) {
    if (!is_prime_l(in.p) || in.p == 2) throw Error("reciprocity: p must be an odd prime");
    if (in.M < 1 || vp_int(Z(in.M), in.p) < 1) throw Error("reciprocity: need v_p(M) >= 1");
    for (long x : {in.alpha, in.beta, in.gamma, in.delta})
        if (x < 0 || x > in.M) throw Error("reciprocity: matrix entries must lie in 0..M");
    if (mod_l(in.alpha * in.delta - in.beta * in.gamma, in.p) == 0) throw Error("reciprocity: det A must be a p-adic unit");
    if (in.k < 2 || in.j < 1 || in.j > in.k - 1) throw Error("reciprocity: need k >= 2 and 1 <= j <= k-1");
    for (long x : {in.c, in.d})
        if (gcd_l(x, 6 * in.p) != 1) throw Error("reciprocity: c, d must be prime to 6p");
    if (in.n_max < 1) throw Error("reciprocity: n_max must be >= 1");
    if (in.prec <= 0) throw Error("reciprocity: prec must be positive");
}

QExpansion exp_kato_rhs(const ReciprocityInstance &in) {
    validate(in);
    FracClass a(in.alpha, in.M), b(in.beta, in.M), g(in.gamma, in.M), dl(in.delta, in.M);
    QExpansion F = c_variant(EisMode::F, in.c, in.k - in.j, a, b, in.prec).series;
    QExpansion E = c_variant(EisMode::E, in.d, in.j, g, dl, in.prec).series;
    QExpansion r = qexp_mul(F, E);
    r *= qpow(Q(in.M), in.k - 2 - 2 * in.j) / Q(factorial(in.j - 1));
    return r;
}

QExpansion twisted_level_sum(long r, long M, long alpha, long beta, long c, long p, long n, const Q &prec) {
    long pn = ipow_l(p, n), L = M * pn;
    QExpansion acc = zero_series(prec);
    for (long a0 : residue_reps(alpha, M, L)) {
        QExpansion t = c_variant(EisMode::E, c, 1, FracClass(a0, L), FracClass(beta, M), prec / Q(pn)).series;
        t = substitute_power(t, Q(pn));
        t *= qpow(Q(a0), r);
        acc += t;
    }
    return acc;
}

QExpansion twisted_level_limit(long r, long M, long alpha, long beta, long c, const Q &prec) {
    QExpansion f = c_variant(EisMode::F, c, r + 1, FracClass(alpha, M), FracClass(beta, M), prec).series;
    return f * qpow(Q(M), r);
}

QExpansion c0_level_sum(long j, long M, long gamma, long delta, long p, long n, const Q &prec, std::optional<long> d) {
    long pn = ipow_l(p, n), L = M * pn;
    QExpansion acc = zero_series(prec);
    for (long c0 : residue_reps(gamma, M, L)) {
        FracClass a(c0, L), b(delta, M);
        QExpansion t = d ? c_variant(EisMode::E, *d, j, a, b, prec / Q(pn)).series : E_series(j, a, b, prec / Q(pn)).series;
        acc += substitute_power(t, Q(pn));
    }
    return acc;
}

QExpansion c0_level_target(long j, long M, long gamma, long delta, const Q &prec, std::optional<long> d) {
    FracClass a(gamma, M), b(delta, M);
    return d ? c_variant(EisMode::E, *d, j, a, b, prec).series : E_series(j, a, b, prec).series;
}

QExpansion level_sum_serial(long c, long r, long w, long M, long p, long n, long alpha, long b, const Q &prec) {
    long pn = ipow_l(p, n);
    QExpansion acc = zero_series(prec);
    for (long a0 : residue_reps(alpha, M, M * pn)) acc += level_term(c, r, w, M, pn, a0, b, prec);
    return acc;
}

QExpansion level_sum(long c, long r, long w, long M, long p, long n, long alpha, long b, const Q &prec) {
    long pn = ipow_l(p, n);
    auto reps = residue_reps(alpha, M, M * pn);
    std::vector<QExpansion> terms(reps.size());
    std::vector<std::string> errs(reps.size());
    long cnt = static_cast<long>(reps.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < cnt; ++i) {
        try {
            terms[static_cast<size_t>(i)] = level_term(c, r, w, M, pn, reps[static_cast<size_t>(i)], b, prec);
        } catch (const std::exception &e) {
            errs[static_cast<size_t>(i)] = e.what();
        }
    }
    for (const auto &e : errs)
        if (!e.empty()) throw Error(e);
    // fixed summation order
    QExpansion acc = zero_series(prec);
    for (const auto &t : terms) acc += t;
    return acc;
}

namespace {
QExpansion lhs_impl(const ReciprocityInstance &in, long n, bool parallel) {
    validate(in);
    auto sum = parallel ? level_sum : level_sum_serial;
    QExpansion A = sum(in.c, 1, in.k - 1 - in.j, in.M, in.p, n, in.alpha, in.beta, in.prec);
    QExpansion B = sum(in.d, in.j, 0, in.M, in.p, n, in.gamma, in.delta, in.prec);
    QExpansion r = parallel ? qexp_mul_parallel(A, B) : qexp_mul_serial(A, B);
    r *= qpow(Q(in.M), -1 - in.j) / Q(factorial(in.j - 1));
    return r;
}
}  // namespace

QExpansion exp_kato_lhs_level(const ReciprocityInstance &in, long n) { return lhs_impl(in, n, true); }
QExpansion exp_kato_lhs_level_serial(const ReciprocityInstance &in, long n) { return lhs_impl(in, n, false); }

ConvergenceReport convergence_report(const ReciprocityInstance &in) {
    validate(in);
    if (ipow_l(in.p, vp_int(Z(in.M), in.p)) != in.M) throw Error("convergence_report: M must be a power of p");
    ConvergenceReport rep;
    rep.inst = in;
    QExpansion rhs = exp_kato_rhs(in);
    std::vector<QExpansion> diffs;
    for (long n = 1; n <= in.n_max; ++n) diffs.push_back(exp_kato_lhs_level(in, n) - rhs);
    for (long e = 0; qmake(e, in.M) < in.prec; ++e) {
        ConvergenceRow row;
        row.exponent = qmake(e, in.M);
        for (const auto &df : diffs) row.valuation.push_back(padic_valuation(df.coeff(row.exponent), in.p));
        row.exact = true;
        for (const auto &v : row.valuation)
            if (v) row.exact = false;
        // nullopt is +infinity
        for (size_t i = 1; i < row.valuation.size(); ++i) {
            const auto &a = row.valuation[i - 1], &b = row.valuation[i];
            if (!a && b) row.nondecreasing = false;
            if (a && b && *b < *a) row.nondecreasing = false;
        }
        const auto &v1 = row.valuation.front(), &vn = row.valuation.back();
        row.improves = !row.exact && v1 && (!vn || *vn >= *v1 + 1);
        rep.all_nondecreasing = rep.all_nondecreasing && row.nondecreasing;
        rep.some_improves = rep.some_improves || row.improves;
        rep.has_nonexact = rep.has_nonexact || !row.exact;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

AmiceResult amice_moment_check(long c, long alpha, long M, long k, long p, long n) {
    if (gcd_l(c, p) != 1) throw Error("amice_moment_check: c must be prime to p");
    if (k < 0) throw Error("amice_moment_check: k must be >= 0");
    long pn = ipow_l(p, n), L = M * pn;
    Q c2 = Q(c) * Q(c);
    AmiceResult r;
    for (long a0 : residue_reps(alpha, M, L)) {
        Q z = c2 * hurwitz_neg(FracClass(a0, L), 1) - Q(c) * hurwitz_neg(FracClass(c * a0, L), 1);
        r.finite_sum += qpow(Q(a0), k) * z;
    }
    r.closed_form = qpow(Q(M), k) * (c2 * hurwitz_neg(FracClass(alpha, M), k + 1) -
                                     qpow(Q(c), 1 - k) * hurwitz_neg(FracClass(c * alpha, M), k + 1));
    r.valuation = vp_rat(r.finite_sum - r.closed_form, p);
    return r;
}

namespace {

// adds scale * sum_{m>=1} (-1/m) mD^r (Q^e Z^s)^m, with Z^s of degree (i0, v0) per unit
void add_log_series(BdRToyElem &out, long e, long i0, long v0, long zdeg, long r, const Q &scale) {
    long W = out.inert_weight(), vmax = out.bounds().vmax;
    long deg = e * W + v0;
    if (deg == 0) throw Error("log_unit_elem: factor of total degree 0");
    if (deg < 0) throw Error("log_unit_elem: negative degree factor");
    for (long m = 1; m * deg < vmax; ++m) {
        Q f = -scale / Q(m);
        if (r > 0) f *= qpow(Q(zdeg * m), r);
        out.add(ToyMono{m * i0, m * v0, 0, 0, m * e}, CycNumber(f));
    }
}

BdRToyElem log_impl(const QzUnit &f, long r, long a, long b, const BdRToyElem &proto) {
    if (proto.inert_weight() <= 0) throw Error("log_unit_elem: proto needs an inert weight M p^n");
    if (a <= 0) throw Error("log_unit_elem: need a >= 1");
    BdRToyElem out = proto.like();
    long M = proto.level(), W = proto.inert_weight(), vmax = proto.bounds().vmax;
    for (const auto &[w, kk] : f.parts) {
        Q K(kk);
        long i0 = w * b, v0 = w * a;
        // log Z^w = w ((a/M) u_q + (b/M) t), its D_2 is w
        auto add_logZ = [&](const Q &s) {
            if (r == 0) {
                out.add(ToyMono{0, 0, 0, 1, 0}, CycNumber(s * qmake(w * a, M)));
                out.add(ToyMono{0, 0, 1, 0, 0}, CycNumber(s * qmake(w * b, M)));
            } else if (r == 1) {
                out.add(ToyMono{}, CycNumber(s * Q(w)));
            }
        };
        add_logZ(-K / 2);
        add_log_series(out, 0, i0, v0, w, r, K);
        for (long n = 1; n * W - v0 < vmax || n * W + v0 < vmax; ++n) {
            if (n * W + v0 < vmax) add_log_series(out, n, i0, v0, w, r, K);
            long deg = n * W - v0;
            if (deg == 0) throw Error("log_unit_elem: factor of total degree 0");
            if (deg > 0) {
                add_log_series(out, n, -i0, -v0, -w, r, K);
            } else {
                // log(1 - Y) = log Y + log(1 - 1/Y) mod constants; log Q is d-constant
                add_logZ(-K);
                add_log_series(out, -n, i0, v0, w, r, K);
            }
        }
    }
    return out;
}

}  // namespace

BdRToyElem log_unit_elem(const QzUnit &f, long a, long b, const BdRToyElem &proto) { return log_impl(f, 0, a, b, proto); }

BdRToyElem d2log_unit_elem(const QzUnit &f, long r, long a, long b, const BdRToyElem &proto) {
    if (r < 1) throw Error("d2log_unit_elem: r must be >= 1");
    return log_impl(f, r, a, b, proto);
}

QExpansion toy_theta(const BdRToyElem &x0) {
    BdRToyElem x = x0.zeta_form();
    long M = x.level(), W = x.inert_weight();
    QExpansion out(M, qmake(x.bounds().vmax, M));
    for (const auto &[m, c] : x.terms())
        if (m.s == 0 && m.r == 0) out.add_key(m.v + W * m.w, c);
    out.normalize_denom();
    return out;
}

PipelineResult pipeline_summand(const ReciprocityInstance &in, long n, long a0, long b0, long c0, long d0,
                                const ToyBounds &bounds) {
    validate(in);
    if (bounds.smax < in.j + 2) throw Error("pipeline_summand: need smax >= j + 2");
    long pn = ipow_l(in.p, n), M = in.M, W = M * pn;
    long det = a0 * d0 - b0 * c0;
    if (det == 0) throw Error("pipeline_summand: a0 d0 - b0 c0 = 0");
    BdRToyElem proto(M, in.p, bounds, W);
    QzUnit gc = g0c_unit(in.c), gd = g0c_unit(in.d);
    Q scal = Q(1) / qpow(Q(det), in.j);
    Q lo = Q(a0), lb = Q(b0);

    auto to_res = [&](const BdRToyElem &delta2) {
        VkjTensor y = VkjTensor::linear_power(in.k, in.j, lo, lb, delta2.shift_t(-in.j));
        y *= CycNumber(scal);
        return res_kj(y);
    };
    Q cut = qmake(bounds.vmax, M);
    PipelineResult pr;
    BdRToyElem A = log_unit_elem(gc, a0, b0, proto), B = log_unit_elem(gd, c0, d0, proto);
    pr.via_cocycle = to_res(cup_delta2(A, B));
    pr.via_cocycle.set_precision(cut);
    BdRToyElem DA = d2log_unit_elem(gc, 1, a0, b0, proto), DB = d2log_unit_elem(gd, 1, c0, d0, proto);
    pr.via_closed = to_res(cup_delta2_closed(DA, DB, a0, b0, c0, d0));
    pr.via_closed.set_precision(cut);
    // independent q-expansions of the two logarithmic derivatives
    QExpansion SA = substitute_power(d2log_rc_theta(in.c, 1, W, a0, b0 * pn, cut / Q(pn)), Q(pn));
    QExpansion SB = substitute_power(d2log_rc_theta(in.d, in.j, W, c0, d0 * pn, cut / Q(pn)), Q(pn));
    pr.via_corollary = qexp_mul(SA, SB);
    pr.via_corollary *= qpow(Q(M), -1 - in.j) * qpow(Q(a0), in.k - 1 - in.j) / Q(factorial(in.j - 1));
    pr.agree = pr.via_cocycle.agrees_with(pr.via_closed) && pr.via_cocycle.agrees_with(pr.via_corollary);
    return pr;
}

}  // namespace kato

#include "kato/json_io.hpp"
#include "kato/eisenstein.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <sstream>

using namespace kato;

namespace {

FracClass frac_arg(const std::string &s) { return FracClass::from_q(parse_q(s)); }

std::vector<long> parse_A(const std::string &s) {
    std::vector<long> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(std::stol(item));
    if (v.size() != 4) throw Error("--A expects four comma-separated integers");
    return v;
}

std::string vstr(const std::optional<Q> &v) { return v ? q_str(*v) : "inf"; }

void print_table(const std::vector<std::pair<Q, std::vector<std::optional<Q>>>> &rows, long depth) {
    std::cout << "exponent";
    for (long n = 1; n <= depth; ++n) std::cout << "\tn=" << n;
    std::cout << "\n";
    for (const auto &[e, vs] : rows) {
        std::cout << q_str(e);
        for (const auto &v : vs) std::cout << "\t" << vstr(v);
        std::cout << "\n";
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Eisenstein series, Siegel units and reciprocity checks"};
    app.set_config("--config", "", "TOML/INI file with option values");
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // series
    auto *series = app.add_subcommand("series", "print a q-expansion");
    std::string kind = "E";
    long k = 4, c = 5, N = 3, a = 1, b = 0, r = 1;
    std::string alpha = "0", beta = "0", sprec = "5";
    series->add_option("--kind", kind, "E, F, Etilde, Ec, Fc, theta, g0c, d2log")
        ->check(CLI::IsMember({"E", "F", "Etilde", "Ec", "Fc", "theta", "g0c", "d2log"}));
    series->add_option("--k", k, "weight");
    series->add_option("--alpha", alpha, "rational, read mod 1");
    series->add_option("--beta", beta, "rational, read mod 1");
    series->add_option("--c", c, "variant / unit parameter");
    series->add_option("--N", N, "level of q_z = q_N^a zeta_N^b");
    series->add_option("--a", a);
    series->add_option("--b", b);
    series->add_option("--r", r, "derivative order for d2log");
    series->add_option("--prec", sprec, "q-exponent cutoff")->envname("KATO_PREC");

    // check
    auto *check = app.add_subcommand("check", "run an identity suite");
    std::string suite;
    std::string names;
    for (const auto &n : suite_names()) names += (names.empty() ? "" : ", ") + n;
    check->add_option("suite", suite, names)->required()->check(CLI::IsMember(suite_names()));

    // reciprocity
    auto *recip = app.add_subcommand("reciprocity", "valuation table of lhs(n) - rhs");
    ReciprocityInstance inst;
    std::string Astr = "1,0,0,1", rprec = "2";
    recip->add_option("--p", inst.p);
    recip->add_option("--M", inst.M);
    recip->add_option("--k", inst.k);
    recip->add_option("--j", inst.j);
    recip->add_option("--c", inst.c);
    recip->add_option("--d", inst.d);
    recip->add_option("--A", Astr, "alpha,beta,gamma,delta");
    recip->add_option("--depth", inst.n_max);
    recip->add_option("--prec", rprec, "q-exponent cutoff")->envname("KATO_PREC");

    // final
    auto *fin = app.add_subcommand("final", "level sums of a0^r E_{c,1} against M^r F^{(r+1)}_c");
    long fr = 1, fM = 5, fal = 1, fbe = 0, fc = 7, fp = 5, fdepth = 3;
    std::string fprec = "2";
    fin->add_option("--r", fr);
    fin->add_option("--M", fM);
    fin->add_option("--alpha", fal);
    fin->add_option("--beta", fbe);
    fin->add_option("--c", fc);
    fin->add_option("--p", fp);
    fin->add_option("--depth", fdepth);
    fin->add_option("--prec", fprec, "q-exponent cutoff")->envname("KATO_PREC");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*series) {
            Q P = parse_q(sprec);
            FracClass al = frac_arg(alpha), be = frac_arg(beta);
            if (kind == "theta" || kind == "g0c") {
                UnitQExp u = kind == "theta" ? theta_qexp(N, a, b, P) : g0c_qexp(c, N, a, b, P);
                if (as_json)
                    std::cout << to_json(u).dump(2) << "\n";
                else
                    std::cout << u.str() << "\n";
                return 0;
            }
            QExpansion f;
            if (kind == "E") f = E_series(k, al, be, P).series;
            else if (kind == "F") f = F_series(k, al, be, P).series;
            else if (kind == "Etilde") f = Etilde_series(al, be, P).series;
            else if (kind == "Ec") f = c_variant(EisMode::E, c, k, al, be, P).series;
            else if (kind == "Fc") f = c_variant(EisMode::F, c, k, al, be, P).series;
            else f = d2log_rc_theta(c, r, N, a, b, P);
            if (as_json)
                std::cout << to_json(f).dump(2) << "\n";
            else
                std::cout << f.str(64) << "\n";
            return 0;
        }
        if (*check) {
            SuiteResult s = run_suite(suite);
            if (as_json) {
                json j = to_json(s);
                j.erase("seconds");
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << s.name << ": " << (s.ok ? "PASS" : "FAIL") << " (" << s.checks << " checks, " << s.failures
                          << " failures)\n";
                for (const auto &n : s.notes) std::cout << "  " << n << "\n";
                if (!s.ok) std::cout << "first failure: " << s.first_failure << "\n";
            }
            return s.ok ? 0 : 1;
        }
        if (*recip) {
            auto A = parse_A(Astr);
            inst.alpha = A[0];
            inst.beta = A[1];
            inst.gamma = A[2];
            inst.delta = A[3];
            inst.prec = parse_q(rprec);
            ConvergenceReport rep = convergence_report(inst);
            if (as_json) {
                std::cout << to_json(rep).dump(2) << "\n";
            } else {
                std::vector<std::pair<Q, std::vector<std::optional<Q>>>> rows;
                for (const auto &row : rep.rows) rows.push_back({row.exponent, row.valuation});
                print_table(rows, inst.n_max);
                std::cout << "nondecreasing: " << (rep.all_nondecreasing ? "yes" : "no")
                          << ", non-exact rows: " << (rep.has_nonexact ? "yes" : "no")
                          << ", improving row: " << (rep.some_improves ? "yes" : "no") << "\n";
            }
            return 0;
        }
        if (*fin) {
            Q P = parse_q(fprec);
            QExpansion lim = twisted_level_limit(fr, fM, fal, fbe, fc, P);
            std::vector<QExpansion> diffs;
            for (long n = 1; n <= fdepth; ++n) diffs.push_back(twisted_level_sum(fr, fM, fal, fbe, fc, fp, n, P) - lim);
            std::vector<std::pair<Q, std::vector<std::optional<Q>>>> rows;
            for (long e = 0; qmake(e, fM) < P; ++e) {
                Q ex = qmake(e, fM);
                std::vector<std::optional<Q>> vs;
                for (const auto &d : diffs) vs.push_back(padic_valuation(d.coeff(ex), fp));
                rows.push_back({ex, vs});
            }
            if (as_json) {
                json out = json::array();
                for (const auto &[e, vs] : rows) {
                    json v = json::array();
                    for (const auto &x : vs) v.push_back(vstr(x));
                    out.push_back({{"exp", q_str(e)}, {"valuations", v}});
                }
                std::cout << json{{"rows", out}}.dump(2) << "\n";
            } else {
                print_table(rows, fdepth);
            }
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

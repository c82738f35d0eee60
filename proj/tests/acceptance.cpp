// one line per acceptance criterion
#include "kato/suites.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <set>

using namespace kato;

namespace {

struct Line {
    int id;
    std::string what;
    bool ok;
    std::string detail;
};

std::string brief(const SuiteResult &s) {
    std::string d = std::to_string(s.checks) + " checks, " + std::to_string(s.failures) + " failures";
    if (!s.ok) d += "; first: " + s.first_failure;
    return d;
}

std::string secs(double t) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", t);
    return buf;
}

Line timed_line(int id, const std::string &what, const SuiteResult &s, double budget) {
    bool fast = s.seconds < budget;
    std::string d = brief(s) + "; " + secs(s.seconds) + " (budget " + secs(budget) + ")";
    return {id, what, s.ok && fast, d};
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> known;
    app.add_option("--known-failures", known, "criteria whose failure is documented")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    std::vector<Line> lines;
    auto run = [&](const std::string &n) {
        SuiteResult s = run_suite(n);
        std::fflush(stdout);
        return s;
    };

    lines.push_back(timed_line(1, "distribution relations, exact", run("distributions"), 10));
    {
        SuiteResult s = run("qexp");
        lines.push_back({2, "E4 pattern and E1 = F1, exact", s.ok, brief(s)});
    }
    lines.push_back(timed_line(3, "Siegel norm, cross and level relations, exact", run("siegel"), 60));
    {
        SuiteResult s = run("dlog");
        std::string d = brief(s);
        for (const auto &n : s.notes) d += "; " + n;
        lines.push_back({4, "D_2^r log g_{0,c} = c-variant series, exact", s.ok, d});
    }
    {
        SuiteResult s = run("cocycle");
        std::string d;
        for (const auto &n : s.notes) d += n + "; ";
        Line l = timed_line(5, "cocycle reduction, reconstruction, audit", s, 60);
        l.detail = d + l.detail;
        lines.push_back(l);
    }
    {
        SuiteResult t = run("trace"), r = run("res");
        lines.push_back({6, "trace_RM rules and res_kj kernel / closed form, exact", t.ok && r.ok,
                         "trace: " + brief(t) + "; res: " + brief(r)});
    }
    {
        SuiteResult s = run("final1");
        lines.push_back({7, "finite-level sums over c0, exact", s.ok, brief(s)});
    }
    {
        SuiteResult s = run("convergence");
        Line l = timed_line(8, "smoke-instance valuations nondecreasing with an improving non-exact row", s, 600);
        l.detail = s.ok ? l.detail : s.first_failure + "; " + secs(s.seconds);
        lines.push_back(l);
        for (const auto &n : s.notes) std::printf("    %s\n", n.c_str());
    }
    {
        SuiteResult s = run("amice");
        std::string d = brief(s);
        for (const auto &n : s.notes) d += "; " + n;
        lines.push_back({9, "mu_c moments, valuations nondecreasing in n", s.ok, d});
    }

    std::set<int> expected(known.begin(), known.end());
    int unexpected = 0;
    for (const auto &l : lines) {
        std::printf("criterion %d: %s  %s  [%s]\n", l.id, l.ok ? "PASS" : "FAIL", l.what.c_str(), l.detail.c_str());
        if (!l.ok && !expected.count(l.id)) ++unexpected;
        if (l.ok && expected.count(l.id)) std::printf("  note: criterion %d listed as a known failure but passed\n", l.id);
    }
    int passed = 0;
    for (const auto &l : lines) passed += l.ok;
    std::printf("%d/%zu criteria pass\n", passed, lines.size());
    return unexpected ? 1 : 0;
}

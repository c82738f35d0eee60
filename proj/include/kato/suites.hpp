#pragma once

#include "kato/cocycle.hpp"
#include "kato/reciprocity.hpp"

#include <string>
#include <vector>

namespace kato {

struct SuiteResult {
    std::string name;
    bool ok = true;
    long checks = 0;
    long failures = 0;
    std::string first_failure;
    std::vector<std::string> notes;
    double seconds = 0;

    void record(bool pass, const std::string &what);
};

// sum relations over the f-division points and the tau/f relations, E and F
SuiteResult suite_distributions(long steps = 30);
// E^(4)_{0,0} against 1/120, 2 sigma_3(n); E^(1) = F^(1)
SuiteResult suite_qexp(long nmax = 20);
// N_a(g_{0,c}) = g_{0,c}, the (c,d) cross relation, integer form of the level-N independence
SuiteResult suite_siegel(long steps = 30);
// D_2^r log g_{0,c} against the c-variant E series (up to the global sign)
SuiteResult suite_dlog(long steps = 20);
// planted cocycles L(w) - dQ over the 4-dimensional module
SuiteResult suite_cocycle(long trials = 100, unsigned seed = 20240917u);
// R_M on a monomial grid
SuiteResult suite_trace();
// res_{k,j} kills both images; closed form = linear solve
SuiteResult suite_res();
// sums over c0 at finite level
SuiteResult suite_final1();
// smoke instance convergence; supplementary k = 3 report in notes
SuiteResult suite_convergence(const ReciprocityInstance &inst = ReciprocityInstance{}, long rows = 10);
// mu_c moments, k in {0,1}
SuiteResult suite_amice();
// cup_delta2 / closed form / corollary agreement on sample summands
SuiteResult suite_pipeline();

// name -> suite with default parameters; throws on an unknown name
SuiteResult run_suite(const std::string &name);
std::vector<std::string> suite_names();

}  // namespace kato

#ifndef BSF_SUITE_HPP
#define BSF_SUITE_HPP

#include <string>
#include <vector>

namespace bsf {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string details;
};

struct SuiteReport {
    unsigned long seed = 0;
    double tol = 1e-8;
    std::vector<CriterionResult> results;
    bool all_pass = false;
};

// Runs the eight acceptance criteria; deterministic given the seed.
SuiteReport run_acceptance_suite(unsigned long seed, double tol = 1e-8);

}  // namespace bsf

#endif

#pragma once

#include <string>
#include <vector>

namespace ncprob {

struct VerifyOptions {
    int s = 2;
    int max_deg = 4;
    unsigned long long seed = 7;
};

struct CheckResult {
    std::string check;
    bool pass = false;
    std::string detail;
};

// Every identity suite, parameterized where the identity scales; results
// sorted by check name.
std::vector<CheckResult> run_all_checks(const VerifyOptions& opts);

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// The eleven fixed-scale acceptance criteria, in order.
std::vector<CriterionResult> run_acceptance();

} // namespace ncprob

#pragma once

#include <string>
#include <vector>

namespace qosp {

struct CriterionResult {
    std::string id;  // "1".."10"; supplementary lines carry a letter suffix
    std::string name;
    bool pass = false;
    bool supplementary = false;  // reported, not part of the verdict
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

// Suites: relations, star, cgc, qhahn, blocks, tmatrix, jacobi, fundamental, covspace, covariance, all.
std::vector<std::string> suite_names();
std::vector<CriterionResult> run_suite(const std::string& suite);
std::string format_line(const CriterionResult& r);

}  // namespace qosp

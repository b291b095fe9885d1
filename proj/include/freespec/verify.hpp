#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace freespec {

/// One measured quantity against its bound.
struct Check {
    std::string label;
    double measured = 0.0;
    std::string bound;
    bool pass = false;
    bool skipped = false;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    std::vector<Check> checks;
    double seconds = 0.0;
    bool pass() const;
};

struct VerifyOptions {
    std::uint64_t seed = 7;
    /// Worker cap handed to the matrix model (0 = automatic).
    unsigned threads = 0;
    /// When false, Monte Carlo checks are reported as skipped.
    bool monte_carlo = true;
};

/// Criteria 1..10 of the acceptance table.
CriterionResult verify_criterion(int id, const VerifyOptions& opts);

/// "full" runs everything; "exact" skips the Monte Carlo checks.
/// Throws PreconditionError for an unknown suite.
std::vector<CriterionResult> run_suite(const std::string& suite, const VerifyOptions& opts);

/// One line per criterion: PASS/FAIL, id, name, then measured vs bound.
std::string format_line(const CriterionResult& r);

}  // namespace freespec

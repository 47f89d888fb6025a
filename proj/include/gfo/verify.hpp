#ifndef GFO_VERIFY_HPP
#define GFO_VERIFY_HPP

#include <string>
#include <vector>

namespace gfo {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// Runs the named battery of reference checks. The only suite today is
// "paper": it re-derives the published values (fixed coefficients, closed
// rational forms, the k = 4 charts and recovery matrix, the worked recovery
// example, the equivalence-transform identities) from scratch and compares.
std::vector<CheckResult> run_verify_suite(const std::string& suite);

bool all_passed(const std::vector<CheckResult>& results);

// Fixed-width pass/fail table.
std::string format_check_table(const std::vector<CheckResult>& results);

}  // namespace gfo

#endif

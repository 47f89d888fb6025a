#include "gfo/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gfo/automaton.hpp"
#include "gfo/clusters.hpp"
#include "gfo/equiv.hpp"
#include "gfo/fixtures.hpp"
#include "gfo/genfun.hpp"
#include "gfo/oracle.hpp"
#include "gfo/recovery.hpp"
#include "gfo/word.hpp"

namespace gfo {

namespace {

CheckResult check_fixed_coefficient(const std::string& pattern, long long want) {
    TruncationSpec trunc{8};
    Word u = Word::parse(pattern);

    Int via_cluster = avoidance_gf(u, trunc).coefficient(4, 7, 0);
    Int via_automaton = automaton_gf(u, trunc, false).coefficient(4, 7, 0);
    Int via_oracle = eval_z(brute_force_gf(u, trunc), 0).coefficient(4, 7, 0);

    std::ostringstream detail;
    detail << "[x^4 y^7] with the pattern excluded: cluster=" << via_cluster
           << " automaton=" << via_automaton << " oracle=" << via_oracle
           << " expected=" << want;
    bool pass = via_cluster == want && via_automaton == want && via_oracle == want;
    return {"coefficient-" + pattern, pass, detail.str()};
}

CheckResult check_rational(const RationalFixture& fixture) {
    TruncationSpec trunc{16};
    const int check_degree = 11;
    bool pass = verify_rational(fixture, trunc, check_degree);
    std::ostringstream detail;
    detail << "D*A_" << fixture.pattern << " = N on all y-degrees <= "
           << check_degree << " at truncation " << trunc.max_weight;
    return {"rational-" + fixture.pattern, pass, detail.str()};
}

CheckResult check_chart(int m) {
    Chart computed = chart(4, m);
    Chart expected = reference_chart_k4(m);
    bool pass = computed.rows == expected.rows;
    std::ostringstream detail;
    if (pass) {
        detail << "all cells match for k=4, m=" << m;
    } else {
        detail << "cell mismatch for k=4, m=" << m;
        for (const auto& [len, row] : expected.rows) {
            auto it = computed.rows.find(len);
            const auto* got = it == computed.rows.end() ? nullptr : &it->second;
            for (const auto& [subset, count] : row) {
                long long actual = 0;
                if (got) {
                    auto jt = got->find(subset);
                    if (jt != got->end()) actual = jt->second;
                }
                if (actual != count)
                    detail << "; L=" << len << " {" << subset.str()
                           << "} got " << actual << " want " << count;
            }
        }
    }
    return {"chart-k4-m" + std::to_string(m), pass, detail.str()};
}

CheckResult check_precluster_counts() {
    std::ostringstream detail;
    bool pass = true;
    for (int m = 2; m <= 4; ++m) {
        long long got = static_cast<long long>(enumerate_preclusters(4, m).size());
        long long want = reference_precluster_count_k4(m);
        if (m > 2) detail << ", ";
        detail << "m=" << m << ": " << got << "/" << want;
        pass = pass && got == want;
    }
    return {"precluster-counts-k4", pass, detail.str()};
}

CheckResult check_recovery_matrix() {
    RecoveryMatrix got = recovery_matrix(4);
    auto want = reference_recovery_matrix_k4();
    bool pass = got.rows == want;
    std::ostringstream detail;
    detail << "rows:";
    for (const auto& row : got.rows) {
        detail << " (";
        for (size_t j = 0; j < row.size(); ++j)
            detail << (j ? " " : "") << row[j];
        detail << ")";
    }
    return {"recovery-matrix-k4", pass, detail.str()};
}

CheckResult check_worked_recovery() {
    Word u = Word::parse("3123");
    MuOracle mu = mu_oracle_from_word(u);
    RecoveryRun run = recover_details(mu);

    auto want_dd = reference_ddagger_3123();
    bool pass = run.ddagger.size() == want_dd.size();
    for (size_t i = 0; pass && i < want_dd.size(); ++i)
        pass = run.ddagger[i] == want_dd[i];
    pass = pass && run.lambda.parts == reference_lambda_3123();

    std::ostringstream detail;
    detail << "3123: combinations";
    for (const auto& v : run.ddagger) detail << " " << v;
    detail << ", multiset " << run.lambda.str();
    return {"recovery-3123", pass, detail.str()};
}

CheckResult check_we1() {
    TruncationSpec trunc{12};
    bool pass = true;
    std::ostringstream detail;
    bool first = true;
    for (const char* pattern : {"1", "21", "122", "3123"}) {
        We1Report rep = check_prop_we1(Word::parse(pattern), trunc);
        if (!first) detail << ", ";
        first = false;
        detail << pattern << (rep.all() ? " ok" : " FAIL");
        pass = pass && rep.all();
    }
    detail << " (reverse/prepend/increment identities at truncation "
           << trunc.max_weight << ")";
    return {"transform-identities", pass, detail.str()};
}

CheckResult check_we3_small() {
    TruncationSpec trunc{12};
    bool p1 = check_theorem_we3(2, 2, 2, trunc);
    bool p2 = check_theorem_we3(2, 3, 2, trunc);
    std::ostringstream detail;
    detail << "21222 ~ 22212: " << (p1 ? "ok" : "FAIL")
           << ", 21322 ~ 22312: " << (p2 ? "ok" : "FAIL");
    return {"exchange-equivalence-small", p1 && p2, detail.str()};
}

CheckResult check_three_way() {
    TruncationSpec trunc{10};
    bool pass = true;
    std::ostringstream detail;
    bool first = true;
    for (const char* pattern : {"11", "21", "122", "3123"}) {
        Word u = Word::parse(pattern);
        std::string via_cluster = canonical_serialize(full_gf(u, trunc));
        std::string via_automaton =
            canonical_serialize(automaton_gf(u, trunc, true));
        std::string via_oracle = canonical_serialize(brute_force_gf(u, trunc));
        bool ok = via_cluster == via_automaton && via_automaton == via_oracle;
        if (!first) detail << ", ";
        first = false;
        detail << pattern << (ok ? " ok" : " FAIL");
        pass = pass && ok;
    }
    detail << " (cluster = automaton = oracle at truncation "
           << trunc.max_weight << ")";
    return {"three-method-agreement", pass, detail.str()};
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const std::string& suite) {
    if (suite != "paper")
        throw std::invalid_argument("unknown verify suite: " + suite);

    std::vector<CheckResult> results;
    results.push_back(check_fixed_coefficient("122", 13));
    results.push_back(check_fixed_coefficient("212", 12));
    results.push_back(check_rational(rational_fixture_122()));
    results.push_back(check_rational(rational_fixture_212()));
    for (int m = 2; m <= 4; ++m) results.push_back(check_chart(m));
    results.push_back(check_precluster_counts());
    results.push_back(check_recovery_matrix());
    results.push_back(check_worked_recovery());
    results.push_back(check_we1());
    results.push_back(check_we3_small());
    results.push_back(check_three_way());
    return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

std::string format_check_table(const std::vector<CheckResult>& results) {
    size_t width = 4;
    for (const auto& r : results) width = std::max(width, r.name.size());

    std::ostringstream out;
    for (const auto& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.name
            << std::string(width - r.name.size() + 2, ' ') << r.detail << "\n";
    }
    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    out << (failed == 0 ? "all checks passed"
                        : std::to_string(failed) + " check(s) failed")
        << " (" << results.size() << " total)\n";
    return out.str();
}

}  // namespace gfo

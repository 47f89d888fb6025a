#include "doctest.h"

#include <stdexcept>

#include "gfo/fixtures.hpp"
#include "gfo/recovery.hpp"
#include "test_util.hpp"

using namespace gfo;

TEST_CASE("signed subset multisets match hand expansions for k=2,3") {
    // k=2, i=1: columns of (0,1) minus columns of the single row: only {1,2}.
    SignedSubsetMultiset d21 = ddagger_symbolic(2, 1);
    REQUIRE(d21.counts.size() == 1);
    CHECK(d21.counts.at(IndexSet{0b11}) == 1);

    // k=3, i=1: net contribution is the full subset once.
    SignedSubsetMultiset d31 = ddagger_symbolic(3, 1);
    REQUIRE(d31.counts.size() == 1);
    CHECK(d31.counts.at(IndexSet{0b111}) == 1);

    // k=3, i=2: each 2-subset once.
    SignedSubsetMultiset d32 = ddagger_symbolic(3, 2);
    REQUIRE(d32.counts.size() == 3);
    CHECK(d32.counts.at(IndexSet{0b011}) == 1);
    CHECK(d32.counts.at(IndexSet{0b101}) == 1);
    CHECK(d32.counts.at(IndexSet{0b110}) == 1);

    CHECK_THROWS_AS(ddagger_symbolic(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(ddagger_symbolic(1, 1), std::invalid_argument);
}

TEST_CASE("recovery matrices for small k") {
    CHECK(recovery_matrix(2).rows ==
          std::vector<std::vector<long long>>{{1}});
    CHECK(recovery_matrix(3).rows ==
          std::vector<std::vector<long long>>{{1}, {2, 1}});
    CHECK(recovery_matrix(4).rows == reference_recovery_matrix_k4());
}

TEST_CASE("worked example: the pattern 3123") {
    MuOracle mu = mu_oracle_from_word(Word({3, 1, 2, 3}));
    CHECK(mu.min_weight == 9);

    auto want = reference_ddagger_3123();
    for (int i = 1; i <= 3; ++i)
        CHECK(ddagger_numeric(mu, i) == want[static_cast<size_t>(i - 1)]);

    RecoveryRun run = recover_details(mu);
    CHECK(run.lambda.parts == reference_lambda_3123());
}

TEST_CASE("numeric combinations equal the symbolic multiset applied to maxima") {
    auto rng = test_rng(50);
    for (int trial = 0; trial < 20; ++trial) {
        Word u = random_word(rng, 5, 5);
        if (u.length() < 2) continue;
        MuOracle mu = mu_oracle_from_word(u);
        for (int i = 1; i < u.length(); ++i) {
            SignedSubsetMultiset sym = ddagger_symbolic(u.length(), i);
            Int expected = 0;
            for (const auto& [subset, count] : sym.counts) {
                int best = 0;
                for (int j : subset.indices()) best = std::max(best, u.at(j - 1));
                expected += Int(count) * best;
            }
            CHECK(ddagger_numeric(mu, i) == expected);
        }
    }
}

TEST_CASE("recovery round-trips on sampled patterns") {
    CHECK(recover_partition(mu_oracle_from_word(Word({5}))).parts ==
          std::vector<int>{5});
    CHECK(recover_partition(mu_oracle_from_word(Word({2, 1}))).parts ==
          std::vector<int>{2, 1});
    CHECK(recover_partition(mu_oracle_from_word(Word({1, 1, 1, 1}))).parts ==
          std::vector<int>{1, 1, 1, 1});

    auto rng = test_rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        Word u = random_word(rng, 5, 5);
        CHECK(recover_partition(mu_oracle_from_word(u)) == partition_of(u));
    }
}

TEST_CASE("recovery consumes only the oracle view") {
    // A hand-built oracle for u = 21: coeff(n, m) has a single term, the
    // weight of the unique cluster word of each shape.
    MuOracle mu;
    mu.k = 2;
    mu.min_weight = 3;
    mu.coeff = [](int n, int m) {
        YPolynomial p;
        // clusters of 21 with m rows have length m+1 and weight 2(m+1)-1
        if (n == m + 1) p.add_term(2 * (m + 1) - 1, 1);
        return p;
    };
    CHECK(recover_partition(mu).parts == std::vector<int>{2, 1});
}

#include "doctest.h"

#include "gfo/clusters.hpp"
#include "gfo/genfun.hpp"
#include "test_util.hpp"

using namespace gfo;

TEST_CASE("all_words_gf counts compositions") {
    TruncationSpec t{8};
    Series all = all_words_gf(t);
    CHECK(all.coefficient(0, 0, 0) == 1);
    for (int b = 1; b <= 8; ++b)
        for (int a = 1; a <= b; ++a)
            CHECK(all.coefficient(a, b, 0) == binomial(b - 1, a - 1));
}

TEST_CASE("published avoidance coefficients at x^4 y^7") {
    TruncationSpec t{8};
    CHECK(avoidance_gf(Word({1, 2, 2}), t).coefficient(4, 7, 0) == 13);
    CHECK(avoidance_gf(Word({2, 1, 2}), t).coefficient(4, 7, 0) == 12);
}

TEST_CASE("avoidance series is a genuine subseries of all words") {
    TruncationSpec t{9};
    auto rng = test_rng(30);
    Series all = all_words_gf(t);
    for (int trial = 0; trial < 10; ++trial) {
        Word u = random_word(rng, 3, 3);
        Series av = avoidance_gf(u, t);
        for (const auto& [m, coeff] : av.terms()) {
            CHECK(m.c == 0);
            CHECK(coeff > 0);
            CHECK(m.b >= m.a);  // a word's weight is at least its length
            CHECK(coeff <= all.coefficient(m.a, m.b, 0));
        }
    }
}

TEST_CASE("z = 0 specializes the full series to avoidance") {
    TruncationSpec t{9};
    auto rng = test_rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Word u = random_word(rng, 3, 3);
        CHECK(eval_z(full_gf(u, t), 0) == avoidance_gf(u, t));
    }
}

TEST_CASE("z = 1 collapses the full series to all words") {
    TruncationSpec t{9};
    Series all = all_words_gf(t);
    for (const char* p : {"122", "21", "3123", "11"})
        CHECK(eval_z(full_gf(Word::parse(p), t), 1) == all);
}

TEST_CASE("cluster_gf substitutes the geometric series for x") {
    TruncationSpec t{9};
    Word u({1, 2, 2});
    Series c = cluster_gf(u, t);
    CHECK(c.coefficient(3, 5, 1) == 1);
    CHECK(c.coefficient(3, 6, 1) == 3);  // x^3 y^5 (1-y)^{-3} at y^6
    CHECK(c.coefficient(3, 7, 1) == 6);
    CHECK(c.coefficient(4, 7, 2) == 1);
}

TEST_CASE("prepend transform matches direct cluster series") {
    TruncationSpec t{14};
    // M_(1) = zxy, and 1-prepension gives the 11 ladder
    Series ladder = prepend_transform(Series::monomial(t, 1, 1, 1));
    CHECK(ladder == minimal_cluster_gf(Word({1, 1}), t));

    Word u({1, 2, 2});
    CHECK(prepend_transform(minimal_cluster_gf(u, t)) ==
          minimal_cluster_gf(prepend_one(u), t));
}

TEST_CASE("plus transform matches direct cluster series") {
    TruncationSpec t{16};
    Word u({1, 2, 2});
    CHECK(plus_transform(minimal_cluster_gf(u, t)) ==
          minimal_cluster_gf(Word({2, 3, 3}), t));
}

TEST_CASE("unplus undoes plus when nothing is truncated away") {
    auto rng = test_rng(32);
    TruncationSpec t{12};
    for (int trial = 0; trial < 20; ++trial) {
        // keep a + b <= max_weight so the round trip drops nothing
        Series s = Series::zero(t);
        std::uniform_int_distribution<int> half(0, 6), zdeg(0, 3), cf(-4, 4);
        for (int i = 0; i < 6; ++i)
            s.add_term(half(rng), half(rng), zdeg(rng), cf(rng));
        CHECK(unplus_transform(plus_transform(s)) == s);
    }
}

#include "gfo/equiv.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gfo/clusters.hpp"
#include "gfo/genfun.hpp"
#include "gfo/oracle.hpp"

namespace gfo {

std::string wilf_key(const Word& u, TruncationSpec trunc) {
    return canonical_serialize(avoidance_gf(u, trunc));
}

std::string strong_key(const Word& u, TruncationSpec trunc) {
    return canonical_serialize(full_gf(u, trunc));
}

std::string key_hash(const std::string& key) {
    // FNV-1a, 64 bit.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : key) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

EquivalenceReport classify(int max_factor_weight, int max_word_weight, int jobs) {
    if (max_factor_weight < 1)
        throw std::invalid_argument("classify: max_factor_weight must be >= 1");
    if (max_word_weight < max_factor_weight)
        throw std::invalid_argument(
            "classify: max_word_weight must be >= max_factor_weight");
    if (jobs < 1) throw std::invalid_argument("classify: jobs must be >= 1");

    TruncationSpec trunc{max_word_weight};

    // Population: every nonempty word of weight <= max_factor_weight, in the
    // canonical (weight, length, lex) order. enumerate_words already emits
    // that order, with the empty word first.
    std::vector<Word> population = enumerate_words(max_factor_weight);
    population.erase(population.begin());

    const int n = static_cast<int>(population.size());
    std::vector<std::string> wkeys(n), skeys(n);

    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) {
            wkeys[i] = wilf_key(population[i], trunc);
            skeys[i] = strong_key(population[i], trunc);
        }
    } else {
        std::atomic<int> cursor{0};
        auto worker = [&]() {
            for (;;) {
                int i = cursor.fetch_add(1);
                if (i >= n) return;
                wkeys[i] = wilf_key(population[i], trunc);
                skeys[i] = strong_key(population[i], trunc);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Bucket by Wilf key. Values keep population order, so class members and
    // the classes themselves (ordered by first member) inherit the canonical
    // order no matter what jobs was.
    std::map<std::string, std::vector<int>> by_wilf;
    for (int i = 0; i < n; ++i) by_wilf[wkeys[i]].push_back(i);

    std::vector<const std::vector<int>*> buckets;
    for (const auto& [key, idxs] : by_wilf) buckets.push_back(&idxs);
    std::sort(buckets.begin(), buckets.end(),
              [&](const std::vector<int>* a, const std::vector<int>* b) {
                  return population[a->front()] < population[b->front()];
              });

    EquivalenceReport report;
    report.max_word_weight = max_word_weight;
    report.max_factor_weight = max_factor_weight;
    {
        std::ostringstream pop;
        pop << "all words of weight <= " << max_factor_weight;
        report.population = pop.str();
    }

    for (const std::vector<int>* bucket : buckets) {
        const std::vector<int>& idxs = *bucket;

        EquivalenceClass cls;
        for (int i : idxs) cls.members.push_back(population[i]);
        cls.wilf_hash = key_hash(wkeys[idxs.front()]);
        cls.strong_hash = key_hash(skeys[idxs.front()]);
        cls.partition = partition_of(population[idxs.front()]);

        // Split by strong key. Strong equality implies Wilf equality (both
        // keys come from the same truncated series, one with z specialized),
        // so strong classes always refine Wilf classes; the interesting
        // question is whether the refinement is proper.
        std::map<std::string, std::vector<int>> by_strong;
        for (int i : idxs) by_strong[skeys[i]].push_back(i);
        if (by_strong.size() > 1) {
            WilfStrongMismatch mismatch;
            mismatch.wilf_class = cls.members;
            std::vector<const std::vector<int>*> strong_buckets;
            for (const auto& [key, sidxs] : by_strong)
                strong_buckets.push_back(&sidxs);
            std::sort(strong_buckets.begin(), strong_buckets.end(),
                      [&](const std::vector<int>* a, const std::vector<int>* b) {
                          return population[a->front()] < population[b->front()];
                      });
            for (const std::vector<int>* sb : strong_buckets) {
                std::vector<Word> group;
                for (int i : *sb) group.push_back(population[i]);
                mismatch.strong_classes.push_back(std::move(group));
            }
            report.wilf_strong_mismatches.push_back(std::move(mismatch));
        }

        // Rearrangement check: equivalent words should be anagrams.
        std::map<std::string, std::vector<int>> by_partition;
        for (int i : idxs)
            by_partition[partition_of(population[i]).str()].push_back(i);
        if (by_partition.size() > 1) {
            RearrangementViolation violation;
            violation.members = cls.members;
            for (const auto& [pstr, pidxs] : by_partition) {
                (void)pstr;
                violation.partitions.push_back(
                    partition_of(population[pidxs.front()]));
            }
            report.rearrangement_violations.push_back(std::move(violation));
        }

        report.classes.push_back(std::move(cls));
    }

    return report;
}

int RationalFixture::denominator_y_degree() const {
    int deg = 0;
    for (const auto& [a, b, coeff] : denominator) {
        (void)a;
        if (coeff != 0) deg = std::max(deg, b);
    }
    return deg;
}

namespace {

Series poly_to_series(const std::vector<std::tuple<int, int, long long>>& terms,
                      TruncationSpec trunc) {
    Series s = Series::zero(trunc);
    for (const auto& [a, b, coeff] : terms) s.add_term(a, b, 0, Int(coeff));
    return s;
}

std::vector<std::tuple<int, int, long long>> poly_mul(
    const std::vector<std::tuple<int, int, long long>>& p,
    const std::vector<std::tuple<int, int, long long>>& q) {
    std::map<std::pair<int, int>, long long> acc;
    for (const auto& [a1, b1, c1] : p)
        for (const auto& [a2, b2, c2] : q) acc[{a1 + a2, b1 + b2}] += c1 * c2;
    std::vector<std::tuple<int, int, long long>> out;
    for (const auto& [ab, coeff] : acc)
        if (coeff != 0) out.emplace_back(ab.first, ab.second, coeff);
    return out;
}

}  // namespace

RationalFixture rational_fixture_122() {
    RationalFixture f;
    f.pattern = "122";
    // N = 1 - 2y + (1+x)y^2 - xy^3 + x^2 y^4
    f.numerator = {{0, 0, 1}, {0, 1, -2}, {0, 2, 1}, {1, 2, 1},
                   {1, 3, -1}, {2, 4, 1}};
    // D = 1 - (2+x)y + (1+2x)y^2 - (x+x^2)y^3 + x^2 y^4
    f.denominator = {{0, 0, 1}, {0, 1, -2}, {1, 1, -1}, {0, 2, 1}, {1, 2, 2},
                     {1, 3, -1}, {2, 3, -1}, {2, 4, 1}};
    return f;
}

RationalFixture rational_fixture_212() {
    RationalFixture f;
    f.pattern = "212";
    // N = 1 - 2y + (1+x)y^2 - (x - x^2)y^3 + x^3 y^5
    f.numerator = {{0, 0, 1},  {0, 1, -2}, {0, 2, 1}, {1, 2, 1},
                   {1, 3, -1}, {2, 3, 1},  {3, 5, 1}};
    // D = (1 - y + x^2 y^3)(1 - (1+x)y + x y^2 - x^2 y^3), expanded exactly.
    f.denominator = poly_mul(
        {{0, 0, 1}, {0, 1, -1}, {2, 3, 1}},
        {{0, 0, 1}, {0, 1, -1}, {1, 1, -1}, {1, 2, 1}, {2, 3, -1}});
    return f;
}

bool verify_rational(const RationalFixture& fixture, TruncationSpec trunc,
                     int max_check_degree) {
    int bound = max_check_degree;
    if (bound < 0) bound = trunc.max_weight - fixture.denominator_y_degree();
    bound = std::min(bound, trunc.max_weight);
    if (bound < 0) return false;  // nothing checkable: treat as failure

    Word u = Word::parse(fixture.pattern);
    Series avoid = avoidance_gf(u, trunc);
    Series product = mul(poly_to_series(fixture.denominator, trunc), avoid);
    Series numer = poly_to_series(fixture.numerator, trunc);

    auto low_part = [&](const Series& s) {
        std::map<Monomial, Int> kept;
        for (const auto& [m, coeff] : s.terms())
            if (m.b <= bound) kept.emplace(m, coeff);
        return kept;
    };
    return low_part(product) == low_part(numer);
}

We1Report check_prop_we1(const Word& u, TruncationSpec trunc) {
    Series m_u = minimal_cluster_gf(u, trunc);

    We1Report rep;
    rep.reverse_ok = minimal_cluster_gf(reverse(u), trunc) == m_u;
    rep.prepend_ok =
        minimal_cluster_gf(prepend_one(u), trunc) == prepend_transform(m_u);
    Series m_plus = minimal_cluster_gf(plus_one(u), trunc);
    rep.plus_ok = m_plus == plus_transform(m_u);

    // The converse substitution x -> x/y lowers weights, so M_(u+) truncated
    // at W is not enough: a term x^a y^b of M_u sits at weight a+b <= 2b <= 2W
    // in M_(u+). Recomputing at the doubled cap makes the identity exact on
    // the whole weight <= W window.
    Series m_plus_wide =
        minimal_cluster_gf(plus_one(u), TruncationSpec{2 * trunc.max_weight});
    Series recovered = unplus_transform(m_plus_wide);
    Series clipped = Series::zero(trunc);
    for (const auto& [mono, coeff] : recovered.terms())
        if (mono.b <= trunc.max_weight && mono.a <= trunc.max_weight &&
            mono.c <= trunc.max_weight)
            clipped.add_term(mono.a, mono.b, mono.c, coeff);
    rep.unplus_ok = clipped == m_u;
    return rep;
}

We1PairReport check_prop_we1(const Word& u, const Word& v, TruncationSpec trunc) {
    auto equal_keys = [&](const Word& a, const Word& b, TruncationSpec t) {
        return wilf_key(a, t) == wilf_key(b, t) &&
               strong_key(a, t) == strong_key(b, t);
    };
    auto implies = [](bool premise, bool conclusion) {
        return !premise || conclusion;
    };

    Word u1 = prepend_one(u), v1 = prepend_one(v);
    Word up = plus_one(u), vp = plus_one(v);

    bool base = equal_keys(u, v, trunc);
    bool prepended = equal_keys(u1, v1, trunc);
    bool incremented = equal_keys(up, vp, trunc);

    TruncationSpec lower{std::max(1, trunc.max_weight - 1)};
    TruncationSpec half{std::max(1, trunc.max_weight / 2)};

    We1PairReport rep;
    rep.prepend_forward = implies(base, prepended);
    rep.prepend_converse = implies(prepended, equal_keys(u, v, lower));
    rep.plus_forward = implies(base, incremented);
    rep.plus_converse = implies(incremented, equal_keys(u, v, half));
    return rep;
}

bool check_theorem_we3(int a, int b, int c, TruncationSpec trunc) {
    if (a < 2 || b < 2 || c < 2)
        throw std::invalid_argument("check_theorem_we3: need a, b, c >= 2");
    Word u({a, 1, b, 2, c});
    Word v({a, 2, b, 1, c});
    return strong_key(u, trunc) == strong_key(v, trunc);
}

bool check_axbyc(int a, int x, int b, int y, int c, TruncationSpec trunc) {
    if (x < 1 || y < 1)
        throw std::invalid_argument("check_axbyc: need x, y >= 1");
    if (a < std::max(x, y) || b < std::max(x, y) || c < std::max(x, y))
        throw std::invalid_argument("check_axbyc: need a, b, c >= max(x, y)");
    Word u({a, x, b, y, c});
    Word v({a, y, b, x, c});
    return strong_key(u, trunc) == strong_key(v, trunc);
}

}  // namespace gfo

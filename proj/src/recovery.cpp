#include "gfo/recovery.hpp"

#include <sstream>
#include <stdexcept>

namespace gfo {

SignedSubsetMultiset ddagger_symbolic(int k, int i) {
    if (k < 2 || i < 1 || i > k - 1)
        throw std::invalid_argument("ddagger_symbolic: require k >= 2, 1 <= i <= k-1");
    SignedSubsetMultiset result{k, {}};
    auto accumulate = [&](int m, int L, long long sign) {
        for (const PreCluster& P : enumerate_preclusters_by_length(k, m, L)) {
            for (const IndexSet& col : symbolic_cluster(P).columns) {
                auto it = result.counts.find(col);
                if (it == result.counts.end()) {
                    result.counts.emplace(col, sign);
                } else {
                    it->second += sign;
                    if (it->second == 0) result.counts.erase(it);
                }
            }
        }
    };
    accumulate(k, 2 * k + i - 2, +1);
    for (int L = 2 * k - 2; L <= 2 * k + i - 3; ++L) accumulate(k - 1, L, -1);
    return result;
}

RecoveryMatrix recovery_matrix(int k) {
    if (k < 2) throw std::invalid_argument("recovery_matrix: require k >= 2");
    RecoveryMatrix R;
    R.k = k;
    for (int i = 1; i <= k - 1; ++i) {
        const SignedSubsetMultiset D = ddagger_symbolic(k, i);

        // Every multiplicity must be nonnegative and constant across each
        // size class; read the per-size values off and cross-check.
        std::map<int, long long> size_mult;
        for (const auto& [subset, count] : D.counts) {
            if (count < 0) {
                std::ostringstream msg;
                msg << "ddagger_symbolic(" << k << "," << i << "): subset {"
                    << subset.str() << "} has negative multiplicity " << count;
                throw std::logic_error(msg.str());
            }
            size_mult.emplace(subset.size(), count);
        }
        for (uint32_t mask = 1; mask < (1u << k); ++mask) {
            const IndexSet subset{mask};
            auto cit = D.counts.find(subset);
            const long long count = cit == D.counts.end() ? 0 : cit->second;
            auto sit = size_mult.find(subset.size());
            const long long expected = sit == size_mult.end() ? 0 : sit->second;
            if (count != expected) {
                std::ostringstream msg;
                msg << "ddagger_symbolic(" << k << "," << i << "): size class "
                    << subset.size() << " is not uniform; subset {"
                    << subset.str() << "} has " << count << ", expected "
                    << expected;
                throw std::logic_error(msg.str());
            }
        }

        // sum over |I| = h of u_I equals sum_j binom(k-j, h-1) lambda_j.
        std::vector<long long> row;
        for (int j = 1; j <= i; ++j) {
            Int entry = 0;
            for (const auto& [h, mult] : size_mult)
                entry += Int(mult) * binomial(k - j, h - 1);
            row.push_back(entry.convert_to<long long>());
        }
        if (row.back() <= 0)
            throw std::logic_error("recovery matrix diagonal not positive");
        R.rows.push_back(std::move(row));
        R.size_multiplicities.push_back(std::move(size_mult));
    }
    return R;
}

MuOracle mu_oracle_from_word(const Word& u) {
    if (u.empty()) throw std::invalid_argument("empty pattern");
    const int k = u.length();
    const int min_weight = mu_coefficient_poly(u, k, 1).min_degree();
    return MuOracle{k, min_weight,
                    [u](int n, int m) { return mu_coefficient_poly(u, n, m); }};
}

Int ddagger_numeric(const MuOracle& mu, int i) {
    const int k = mu.k;
    if (i < 1 || i > k - 1)
        throw std::invalid_argument("ddagger_numeric: require 1 <= i <= k-1");
    YPolynomial p = mu.coeff(2 * k + i - 2, k);
    for (int n = 2 * k - 2; n <= 2 * k + i - 3; ++n)
        p = p - mu.coeff(n, k - 1);
    return deriv_y_at_1(p);
}

RecoveryRun recover_details(const MuOracle& mu) {
    const int k = mu.k;
    if (k < 1) throw std::invalid_argument("recover: require k >= 1");

    RecoveryRun run;
    if (k == 1) {
        if (mu.min_weight < 1)
            throw std::runtime_error("inconsistent M data: weight below 1");
        run.lambda.parts = {mu.min_weight};
        run.matrix.k = 1;
        return run;
    }

    run.matrix = recovery_matrix(k);
    std::vector<Int> lambda;
    for (int i = 1; i <= k - 1; ++i) {
        const Int d = ddagger_numeric(mu, i);
        run.ddagger.push_back(d);
        Int rhs = d;
        const auto& row = run.matrix.rows[static_cast<size_t>(i - 1)];
        for (int j = 1; j < i; ++j)
            rhs -= Int(row[static_cast<size_t>(j - 1)]) *
                   lambda[static_cast<size_t>(j - 1)];
        const Int diag = row.back();
        if (rhs % diag != 0)
            throw std::runtime_error(
                "inconsistent M data: non-integer part at i=" + std::to_string(i));
        const Int value = rhs / diag;
        if (value < 1)
            throw std::runtime_error(
                "inconsistent M data: non-positive part at i=" + std::to_string(i));
        lambda.push_back(value);
    }

    Int last = mu.min_weight;
    for (const Int& v : lambda) last -= v;
    lambda.push_back(last);

    run.lambda.parts.reserve(lambda.size());
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 1 || (i > 0 && lambda[i] > lambda[i - 1]))
            throw std::runtime_error("inconsistent M data: parts not a partition");
        run.lambda.parts.push_back(lambda[i].convert_to<int>());
    }
    return run;
}

Partition recover_partition(const MuOracle& mu) {
    return recover_details(mu).lambda;
}

}  // namespace gfo

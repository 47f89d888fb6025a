#include "gfo/clusters.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace gfo {

int IndexSet::size() const { return std::popcount(mask); }

std::vector<int> IndexSet::indices() const {
    std::vector<int> out;
    for (uint32_t m = mask; m != 0; m &= m - 1)
        out.push_back(std::countr_zero(m) + 1);
    return out;
}

std::string IndexSet::str() const {
    std::string out;
    for (int i : indices()) {
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    }
    return out;
}

bool IndexSet::operator<(const IndexSet& o) const {
    const int sa = size(), sb = o.size();
    if (sa != sb) return sa < sb;
    uint32_t x = mask, y = o.mask;
    while (x != 0 && y != 0) {
        const int ix = std::countr_zero(x), iy = std::countr_zero(y);
        if (ix != iy) return ix < iy;
        x &= x - 1;
        y &= y - 1;
    }
    return false;  // equal sets
}

namespace {

void check_km(int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("require k >= 1 and m >= 1");
}

// Recursively extend gap compositions; parts in [1, k-1], lexicographic.
void extend_gaps(int k, int m, std::vector<int>& offsets,
                 std::vector<PreCluster>& out) {
    if (static_cast<int>(offsets.size()) == m) {
        out.push_back(PreCluster{k, offsets});
        return;
    }
    for (int gap = 1; gap <= k - 1; ++gap) {
        offsets.push_back(offsets.back() + gap);
        extend_gaps(k, m, offsets, out);
        offsets.pop_back();
    }
}

void extend_gaps_to_length(int k, int m, int L, std::vector<int>& offsets,
                           std::vector<PreCluster>& out) {
    const int row = static_cast<int>(offsets.size());
    if (row == m) {
        if (offsets.back() + k == L) out.push_back(PreCluster{k, offsets});
        return;
    }
    const int remaining_rows = m - row;
    for (int gap = 1; gap <= k - 1; ++gap) {
        const int o = offsets.back() + gap;
        // Remaining rows after this one add between (rows-1) and (rows-1)(k-1).
        const int lo = o + (remaining_rows - 1) + k;
        const int hi = o + (remaining_rows - 1) * (k - 1) + k;
        if (lo > L) break;
        if (hi < L) continue;
        offsets.push_back(o);
        extend_gaps_to_length(k, m, L, offsets, out);
        offsets.pop_back();
    }
}

}  // namespace

std::vector<PreCluster> enumerate_preclusters(int k, int m) {
    check_km(k, m);
    std::vector<PreCluster> out;
    if (m >= 2 && k == 1) return out;
    std::vector<int> offsets{0};
    extend_gaps(k, m, offsets, out);
    return out;
}

std::vector<PreCluster> enumerate_preclusters_by_length(int k, int m, int L) {
    check_km(k, m);
    if (L < k) throw std::invalid_argument("length below pattern length");
    std::vector<PreCluster> out;
    if (m == 1) {
        if (L == k) out.push_back(PreCluster{k, {0}});
        return out;
    }
    if (k == 1) return out;
    std::vector<int> offsets{0};
    extend_gaps_to_length(k, m, L, offsets, out);
    return out;
}

Word cluster_word(const Word& u, const PreCluster& P) {
    if (u.length() != P.k)
        throw std::invalid_argument("pattern length does not match pre-cluster");
    const int L = P.length();
    std::vector<int> entries(static_cast<size_t>(L), 0);
    for (int o : P.offsets)
        for (int j = 0; j < P.k; ++j)
            entries[static_cast<size_t>(o + j)] =
                std::max(entries[static_cast<size_t>(o + j)], u.at(j));
    return Word(std::move(entries));
}

SymbolicCluster symbolic_cluster(const PreCluster& P) {
    const int L = P.length();
    SymbolicCluster sc{P.k, std::vector<IndexSet>(static_cast<size_t>(L))};
    for (int o : P.offsets)
        for (int j = 0; j < P.k; ++j)
            sc.columns[static_cast<size_t>(o + j)].mask |= 1u << j;
    return sc;
}

namespace {

// Depth-first walk over appended rows with incremental column maxima and
// weight. Appending a row never decreases the weight, so weight > cap prunes
// the whole subtree.
struct ClusterWalk {
    const Word& u;
    int max_weight;
    const std::function<void(const PreCluster&, const Word&)>& visit;
    std::vector<int> offsets;
    std::vector<int> columns;
    int weight = 0;

    void run() {
        offsets.push_back(0);
        columns = u.entries();
        weight = u.weight();
        if (weight <= max_weight) {
            emit();
            descend();
        }
        offsets.pop_back();
    }

    void emit() { visit(PreCluster{u.length(), offsets}, Word(columns)); }

    void descend() {
        const int k = u.length();
        for (int gap = 1; gap <= k - 1; ++gap) {
            const int o = offsets.back() + gap;
            const int old_len = static_cast<int>(columns.size());
            const int new_len = o + k;
            if (new_len > max_weight) break;  // weight >= length

            int delta = 0;
            std::vector<std::pair<int, int>> restore;  // position, old value
            for (int j = 0; j < k; ++j) {
                const int p = o + j;
                if (p < old_len) {
                    if (u.at(j) > columns[static_cast<size_t>(p)]) {
                        restore.emplace_back(p, columns[static_cast<size_t>(p)]);
                        delta += u.at(j) - columns[static_cast<size_t>(p)];
                        columns[static_cast<size_t>(p)] = u.at(j);
                    }
                } else {
                    columns.push_back(u.at(j));
                    delta += u.at(j);
                }
            }
            weight += delta;
            offsets.push_back(o);
            if (weight <= max_weight) {
                emit();
                descend();
            }
            offsets.pop_back();
            weight -= delta;
            columns.resize(static_cast<size_t>(old_len));
            for (auto [p, v] : restore) columns[static_cast<size_t>(p)] = v;
        }
    }
};

}  // namespace

void for_each_cluster_within_weight(
    const Word& u, int max_weight,
    const std::function<void(const PreCluster&, const Word&)>& visit) {
    if (u.empty()) throw std::invalid_argument("empty pattern");
    ClusterWalk walk{u, max_weight, visit, {}, {}, 0};
    walk.run();
}

Series minimal_cluster_gf(const Word& u, TruncationSpec trunc) {
    Series M(trunc);
    for_each_cluster_within_weight(
        u, trunc.max_weight, [&](const PreCluster& P, const Word& c) {
            M.add_term(c.length(), c.weight(), P.rows(), 1);
        });
    return M;
}

YPolynomial mu_coefficient_poly(const Word& u, int n, int m) {
    if (u.empty()) throw std::invalid_argument("empty pattern");
    if (n < u.length() || m < 1)
        throw std::invalid_argument("require n >= |u| and m >= 1");
    YPolynomial p;
    for (const PreCluster& P : enumerate_preclusters_by_length(u.length(), m, n))
        p.add_term(cluster_word(u, P).weight(), 1);
    return p;
}

Chart chart(int k, int m) {
    if (k < 2) throw std::invalid_argument("chart requires k >= 2");
    Chart ch{k, m, {}};
    for (const PreCluster& P : enumerate_preclusters(k, m)) {
        auto& row = ch.rows[P.length()];
        for (const IndexSet& col : symbolic_cluster(P).columns) ++row[col];
    }
    return ch;
}

std::string chart_text(const Chart& chart) {
    // Column order: all nonempty subsets of {1..k} by (size, lex).
    std::vector<IndexSet> subsets;
    for (uint32_t mask = 1; mask < (1u << chart.k); ++mask)
        subsets.push_back(IndexSet{mask});
    std::sort(subsets.begin(), subsets.end());

    std::vector<size_t> widths;
    widths.push_back(std::string("length").size());
    for (const IndexSet& s : subsets) widths.push_back(s.str().size());

    for (const auto& [L, counts] : chart.rows) {
        widths[0] = std::max(widths[0], std::to_string(L).size());
        size_t col = 1;
        for (const IndexSet& s : subsets) {
            auto it = counts.find(s);
            if (it != counts.end())
                widths[col] =
                    std::max(widths[col], std::to_string(it->second).size());
            ++col;
        }
    }

    std::ostringstream out;
    auto cell = [&](const std::string& text, size_t col) {
        out << (col == 0 ? "" : "  ");
        out << std::string(widths[col] - text.size(), ' ') << text;
    };
    cell("length", 0);
    for (size_t i = 0; i < subsets.size(); ++i) cell(subsets[i].str(), i + 1);
    out << '\n';
    for (const auto& [L, counts] : chart.rows) {
        cell(std::to_string(L), 0);
        size_t col = 1;
        for (const IndexSet& s : subsets) {
            auto it = counts.find(s);
            cell(it == counts.end() ? "" : std::to_string(it->second), col);
            ++col;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace gfo

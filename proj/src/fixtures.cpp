#include "gfo/fixtures.hpp"

#include <initializer_list>
#include <stdexcept>

namespace gfo {

namespace {

IndexSet iset(std::initializer_list<int> indices) {
    IndexSet s;
    for (int i : indices) s.mask |= 1u << (i - 1);
    return s;
}

using Row = std::map<IndexSet, long long>;

Chart chart_m2() {
    Chart c;
    c.k = 4;
    c.m = 2;
    c.rows[5] = Row{{iset({1}), 1}, {iset({4}), 1}, {iset({1, 2}), 1},
                    {iset({2, 3}), 1}, {iset({3, 4}), 1}};
    c.rows[6] = Row{{iset({1}), 1}, {iset({2}), 1}, {iset({3}), 1},
                    {iset({4}), 1}, {iset({1, 3}), 1}, {iset({2, 4}), 1}};
    c.rows[7] = Row{{iset({1}), 1}, {iset({2}), 2}, {iset({3}), 2},
                    {iset({4}), 1}, {iset({1, 4}), 1}};
    return c;
}

Chart chart_m3() {
    Chart c;
    c.k = 4;
    c.m = 3;
    c.rows[6] = Row{{iset({1}), 1},       {iset({4}), 1},
                    {iset({1, 2}), 1},    {iset({3, 4}), 1},
                    {iset({1, 2, 3}), 1}, {iset({2, 3, 4}), 1}};
    c.rows[7] = Row{{iset({1}), 2},       {iset({2}), 1},
                    {iset({3}), 1},       {iset({4}), 2},
                    {iset({1, 2}), 1},    {iset({1, 3}), 1},
                    {iset({2, 3}), 2},    {iset({2, 4}), 1},
                    {iset({3, 4}), 1},    {iset({1, 2, 4}), 1},
                    {iset({1, 3, 4}), 1}};
    c.rows[8] = Row{{iset({1}), 3},    {iset({2}), 3},    {iset({3}), 3},
                    {iset({4}), 3},    {iset({1, 2}), 2}, {iset({1, 3}), 2},
                    {iset({1, 4}), 2}, {iset({2, 3}), 2}, {iset({2, 4}), 2},
                    {iset({3, 4}), 2}};
    c.rows[9] = Row{{iset({1}), 2},    {iset({2}), 4},    {iset({3}), 4},
                    {iset({4}), 2},    {iset({1, 3}), 2}, {iset({1, 4}), 2},
                    {iset({2, 4}), 2}};
    c.rows[10] = Row{{iset({1}), 1},
                     {iset({2}), 3},
                     {iset({3}), 3},
                     {iset({4}), 1},
                     {iset({1, 4}), 2}};
    return c;
}

Chart chart_m4() {
    Chart c;
    c.k = 4;
    c.m = 4;
    c.rows[7] = Row{{iset({1}), 1},       {iset({4}), 1},
                    {iset({1, 2}), 1},    {iset({3, 4}), 1},
                    {iset({1, 2, 3}), 1}, {iset({2, 3, 4}), 1},
                    {iset({1, 2, 3, 4}), 1}};
    c.rows[8] = Row{{iset({1}), 3},       {iset({2}), 1},
                    {iset({3}), 1},       {iset({4}), 3},
                    {iset({1, 2}), 2},    {iset({1, 3}), 1},
                    {iset({2, 3}), 2},    {iset({2, 4}), 1},
                    {iset({3, 4}), 2},    {iset({1, 2, 3}), 2},
                    {iset({1, 2, 4}), 2}, {iset({1, 3, 4}), 2},
                    {iset({2, 3, 4}), 2}};
    c.rows[9] = Row{{iset({1}), 6},       {iset({2}), 4},
                    {iset({3}), 4},       {iset({4}), 6},
                    {iset({1, 2}), 5},    {iset({1, 3}), 4},
                    {iset({1, 4}), 3},    {iset({2, 3}), 5},
                    {iset({2, 4}), 4},    {iset({3, 4}), 5},
                    {iset({1, 2, 3}), 2}, {iset({1, 2, 4}), 2},
                    {iset({1, 3, 4}), 2}, {iset({2, 3, 4}), 2}};
    c.rows[10] = Row{{iset({1}), 7},
                     {iset({2}), 9},
                     {iset({3}), 9},
                     {iset({4}), 7},
                     {iset({1, 2}), 4},
                     {iset({1, 3}), 7},
                     {iset({1, 4}), 6},
                     {iset({2, 3}), 6},
                     {iset({2, 4}), 7},
                     {iset({3, 4}), 4},
                     {iset({1, 2, 4}), 2},
                     {iset({1, 3, 4}), 2}};
    c.rows[11] = Row{{iset({1}), 6},    {iset({2}), 12},   {iset({3}), 12},
                     {iset({4}), 6},    {iset({1, 2}), 3}, {iset({1, 3}), 6},
                     {iset({1, 4}), 9}, {iset({2, 3}), 3}, {iset({2, 4}), 6},
                     {iset({3, 4}), 3}};
    c.rows[12] = Row{{iset({1}), 3},    {iset({2}), 9},    {iset({3}), 9},
                     {iset({4}), 3},    {iset({1, 3}), 3}, {iset({1, 4}), 6},
                     {iset({2, 4}), 3}};
    c.rows[13] = Row{{iset({1}), 1},
                     {iset({2}), 4},
                     {iset({3}), 4},
                     {iset({4}), 1},
                     {iset({1, 4}), 3}};
    return c;
}

}  // namespace

Chart reference_chart_k4(int m) {
    switch (m) {
        case 2: return chart_m2();
        case 3: return chart_m3();
        case 4: return chart_m4();
        default:
            throw std::invalid_argument("reference_chart_k4: m must be 2..4");
    }
}

long long reference_precluster_count_k4(int m) {
    switch (m) {
        case 2: return 3;
        case 3: return 9;
        case 4: return 27;
        default:
            throw std::invalid_argument(
                "reference_precluster_count_k4: m must be 2..4");
    }
}

std::vector<std::vector<long long>> reference_recovery_matrix_k4() {
    return {{1}, {3, 1}, {6, 3, 1}};
}

std::vector<long long> reference_ddagger_3123() { return {3, 12, 29}; }

std::vector<int> reference_lambda_3123() { return {3, 3, 2, 1}; }

}  // namespace gfo

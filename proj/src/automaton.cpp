#include "gfo/automaton.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gfo {

Series LetterClass::weight_gf(TruncationSpec trunc) const {
    Series s(trunc);
    const int top = unbounded() ? trunc.max_weight : std::min(hi, trunc.max_weight);
    for (int t = lo; t <= top; ++t) s.add_term(1, t, 0, 1);
    return s;
}

std::vector<LetterClass> letter_classes(const Word& u) {
    if (u.empty()) throw std::invalid_argument("empty pattern");
    std::vector<int> values = u.entries();
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    auto profile_of = [&](int letter) {
        uint32_t p = 0;
        for (int j = 0; j < u.length(); ++j)
            if (letter >= u.at(j)) p |= 1u << j;
        return p;
    };

    std::vector<LetterClass> classes;
    if (values.front() > 1)
        classes.push_back(LetterClass{1, values.front() - 1, profile_of(1)});
    for (size_t i = 0; i < values.size(); ++i) {
        const int lo = values[i];
        const int hi = i + 1 < values.size() ? values[i + 1] - 1 : 0;
        classes.push_back(LetterClass{lo, hi, profile_of(lo)});
    }
    return classes;
}

DominanceAutomaton DominanceAutomaton::build(const Word& u) {
    DominanceAutomaton a;
    a.k = u.length();
    a.classes = letter_classes(u);

    const uint32_t state_mask = (a.k >= 32) ? ~0u : ((1u << a.k) - 1);
    std::map<uint32_t, int> index;
    a.states.push_back(1u);  // {0}
    index.emplace(1u, 0);

    for (size_t s = 0; s < a.states.size(); ++s) {
        std::vector<Transition> row;
        for (const LetterClass& cls : a.classes) {
            const uint32_t extended = (a.states[s] & cls.profile) << 1;
            const bool emit = (extended >> a.k) & 1u;
            const uint32_t target = (extended | 1u) & state_mask;
            auto [it, inserted] =
                index.emplace(target, static_cast<int>(a.states.size()));
            if (inserted) a.states.push_back(target);
            row.push_back(Transition{it->second, emit});
        }
        a.transitions.push_back(std::move(row));
    }
    return a;
}

Series automaton_gf(const Word& u, TruncationSpec trunc,
                    bool count_occurrences) {
    const DominanceAutomaton a = DominanceAutomaton::build(u);

    std::vector<Series> class_step;
    class_step.reserve(a.classes.size());
    for (const LetterClass& cls : a.classes)
        class_step.push_back(cls.weight_gf(trunc));
    const Series z_mark = Series::monomial(trunc, 0, 0, 1);

    std::vector<Series> front(a.states.size(), Series::zero(trunc));
    front[0] = Series::one(trunc);
    Series total = front[0];

    for (int n = 0; n < trunc.max_weight; ++n) {
        std::vector<Series> next(a.states.size(), Series::zero(trunc));
        bool alive = false;
        for (size_t s = 0; s < a.states.size(); ++s) {
            if (front[s].is_zero()) continue;
            for (size_t c = 0; c < a.classes.size(); ++c) {
                const auto [target, emit] = a.transitions[s][c];
                if (emit && !count_occurrences) continue;  // avoidance pruning
                Series step = mul(front[s], class_step[c]);
                if (emit) step = mul(step, z_mark);
                if (step.is_zero()) continue;
                next[static_cast<size_t>(target)] =
                    add(next[static_cast<size_t>(target)], step);
                alive = true;
            }
        }
        if (!alive) break;
        front = std::move(next);
        for (const Series& f : front) total = add(total, f);
    }
    return total;
}

}  // namespace gfo

#include "gfo/genfun.hpp"

#include <stdexcept>

#include "gfo/clusters.hpp"

namespace gfo {

Series letter_gf(TruncationSpec trunc) {
    Series s(trunc);
    for (int b = 1; b <= trunc.max_weight; ++b) s.add_term(1, b, 0, 1);
    return s;
}

Series all_words_gf(TruncationSpec trunc) {
    return quasi_inverse(letter_gf(trunc));
}

Series cluster_gf(const Word& u, TruncationSpec trunc) {
    return substitute_x_geometric(minimal_cluster_gf(u, trunc));
}

Series avoidance_gf(const Word& u, TruncationSpec trunc) {
    Series inner = add(letter_gf(trunc), eval_z(cluster_gf(u, trunc), -1));
    return quasi_inverse(inner);
}

Series full_gf(const Word& u, TruncationSpec trunc) {
    Series inner =
        add(letter_gf(trunc), shift_z_minus_one(cluster_gf(u, trunc)));
    return quasi_inverse(inner);
}

Series prepend_transform(const Series& M) {
    for (const auto& [m, coeff] : M.terms()) {
        if (m.b == 0)
            throw std::invalid_argument(
                "prepend_transform: term of weight zero");
    }
    Series xy = Series::monomial(M.trunc(), 1, 1, 0);
    return mul(mul(xy, M), quasi_inverse(M));
}

Series plus_transform(const Series& M) { return scale_x_by_y_power(M, +1); }

Series unplus_transform(const Series& M) { return scale_x_by_y_power(M, -1); }

}  // namespace gfo

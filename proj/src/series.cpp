#include "gfo/series.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace gfo {

Series::Series(TruncationSpec trunc) : trunc_(trunc) {
    if (trunc_.max_weight < 1)
        throw std::invalid_argument("max_weight must be >= 1");
}

Series Series::monomial(TruncationSpec t, int a, int b, int c, const Int& coeff) {
    Series s(t);
    s.add_term(a, b, c, coeff);
    return s;
}

void Series::add_term(int a, int b, int c, const Int& coeff) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("negative exponent in series term");
    if (coeff == 0) return;
    const int W = trunc_.max_weight;
    if (a > W || b > W || c > W) return;  // truncated away
    Monomial key{a, b, c};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int Series::coefficient(int a, int b, int c) const {
    const int W = trunc_.max_weight;
    if (a < 0 || b < 0 || c < 0 || a > W || b > W || c > W)
        throw std::out_of_range("coefficient read outside truncation caps");
    auto it = terms_.find(Monomial{a, b, c});
    return it == terms_.end() ? Int(0) : it->second;
}

void YPolynomial::add_term(int degree, const Int& coeff) {
    if (degree < 0) throw std::invalid_argument("negative y-degree");
    if (coeff == 0) return;
    auto it = terms_.find(degree);
    if (it == terms_.end()) {
        terms_.emplace(degree, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Int YPolynomial::coefficient(int degree) const {
    auto it = terms_.find(degree);
    return it == terms_.end() ? Int(0) : it->second;
}

int YPolynomial::min_degree() const {
    if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
    return terms_.begin()->first;
}

Int YPolynomial::eval_one() const {
    Int sum = 0;
    for (const auto& [d, coeff] : terms_) sum += coeff;
    return sum;
}

YPolynomial YPolynomial::operator+(const YPolynomial& o) const {
    YPolynomial r = *this;
    for (const auto& [d, coeff] : o.terms_) r.add_term(d, coeff);
    return r;
}

YPolynomial YPolynomial::operator-(const YPolynomial& o) const {
    YPolynomial r = *this;
    for (const auto& [d, coeff] : o.terms_) r.add_term(d, -coeff);
    return r;
}

YPolynomial YPolynomial::operator*(const YPolynomial& o) const {
    YPolynomial r;
    for (const auto& [d1, c1] : terms_)
        for (const auto& [d2, c2] : o.terms_) r.add_term(d1 + d2, c1 * c2);
    return r;
}

Int deriv_y_at_1(const YPolynomial& p) {
    Int sum = 0;
    for (const auto& [d, coeff] : p.terms()) sum += Int(d) * coeff;
    return sum;
}

namespace {

void require_same_trunc(const Series& s, const Series& t) {
    if (!(s.trunc() == t.trunc()))
        throw std::invalid_argument("mismatched truncation specs");
}

}  // namespace

Series add(const Series& s, const Series& t) {
    require_same_trunc(s, t);
    Series r = s;
    for (const auto& [m, coeff] : t.terms()) r.add_term(m.a, m.b, m.c, coeff);
    return r;
}

Series sub(const Series& s, const Series& t) {
    require_same_trunc(s, t);
    Series r = s;
    for (const auto& [m, coeff] : t.terms()) r.add_term(m.a, m.b, m.c, -coeff);
    return r;
}

Series negate(const Series& s) {
    Series r(s.trunc());
    for (const auto& [m, coeff] : s.terms()) r.add_term(m.a, m.b, m.c, -coeff);
    return r;
}

Series mul(const Series& s, const Series& t) {
    require_same_trunc(s, t);
    const int W = s.trunc().max_weight;
    Series r(s.trunc());
    for (const auto& [m1, c1] : s.terms()) {
        for (const auto& [m2, c2] : t.terms()) {
            if (m1.b + m2.b > W) break;  // t iterates in ascending b
            r.add_term(m1.a + m2.a, m1.b + m2.b, m1.c + m2.c, c1 * c2);
        }
    }
    return r;
}

Series quasi_inverse(const Series& f) {
    for (const auto& [m, coeff] : f.terms()) {
        if (m.a == 0 && m.b == 0 && m.c == 0)
            throw std::invalid_argument("quasi_inverse: nonzero constant term");
        if (m.b == 0)
            throw std::invalid_argument("quasi_inverse: term of weight zero");
    }
    Series total = Series::one(f.trunc());
    Series power = Series::one(f.trunc());
    for (int n = 1; n <= f.trunc().max_weight; ++n) {
        power = mul(power, f);
        if (power.is_zero()) break;
        total = add(total, power);
    }
    return total;
}

Series substitute_x_geometric(const Series& s) {
    const int W = s.trunc().max_weight;
    Series r(s.trunc());
    for (const auto& [m, coeff] : s.terms()) {
        if (m.a == 0) {
            r.add_term(m.a, m.b, m.c, coeff);
            continue;
        }
        // (1/(1-y))^a = sum_t binom(t+a-1, a-1) y^t
        for (int t = 0; m.b + t <= W; ++t)
            r.add_term(m.a, m.b + t, m.c, coeff * binomial(t + m.a - 1, m.a - 1));
    }
    return r;
}

Series scale_x_by_y_power(const Series& s, int e) {
    Series r(s.trunc());
    for (const auto& [m, coeff] : s.terms()) {
        const int b = m.b + e * m.a;
        if (b < 0)
            throw std::invalid_argument(
                "scale_x_by_y_power: negative resulting y-exponent");
        r.add_term(m.a, b, m.c, coeff);
    }
    return r;
}

Series shift_z_minus_one(const Series& s) {
    Series r(s.trunc());
    for (const auto& [m, coeff] : s.terms()) {
        // z^c -> (z-1)^c = sum_j binom(c,j) (-1)^(c-j) z^j
        for (int j = 0; j <= m.c; ++j) {
            Int term = coeff * binomial(m.c, j);
            if ((m.c - j) % 2 != 0) term = -term;
            r.add_term(m.a, m.b, j, term);
        }
    }
    return r;
}

Series eval_z(const Series& s, long v) {
    Series r(s.trunc());
    for (const auto& [m, coeff] : s.terms()) {
        Int scale = 1;
        for (int j = 0; j < m.c; ++j) scale *= v;
        r.add_term(m.a, m.b, 0, coeff * scale);
    }
    return r;
}

YPolynomial slice_xz(const Series& s, int a, int c) {
    const int W = s.trunc().max_weight;
    if (a < 0 || c < 0 || a > W || c > W)
        throw std::out_of_range("slice_xz outside truncation caps");
    YPolynomial p;
    for (const auto& [m, coeff] : s.terms())
        if (m.a == a && m.c == c) p.add_term(m.b, coeff);
    return p;
}

std::string canonical_serialize(const Series& s) {
    std::string out;
    for (const auto& [m, coeff] : s.terms()) {
        if (!out.empty()) out += '\n';
        out += coeff.str();
        out += "*x^" + std::to_string(m.a) + "*y^" + std::to_string(m.b) +
               "*z^" + std::to_string(m.c);
    }
    return out;
}

Series parse_series(const std::string& text, TruncationSpec trunc) {
    Series s(trunc);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        int a = 0, b = 0, c = 0;
        size_t star = line.find('*');
        if (star == std::string::npos)
            throw std::invalid_argument("bad series line: " + line);
        Int coeff(line.substr(0, star));
        if (std::sscanf(line.c_str() + star, "*x^%d*y^%d*z^%d", &a, &b, &c) != 3)
            throw std::invalid_argument("bad series line: " + line);
        s.add_term(a, b, c, coeff);
    }
    return s;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

}  // namespace gfo

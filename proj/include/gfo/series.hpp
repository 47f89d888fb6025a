#ifndef GFO_SERIES_HPP
#define GFO_SERIES_HPP

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gfo {

using Int = boost::multiprecision::cpp_int;

// Truncation horizon. Weight (y-degree) is the master cap; x- and z-degrees
// are capped at the same bound, since length <= weight and occurrences <=
// length for every generating function in this code base.
struct TruncationSpec {
    int max_weight;

    bool operator==(const TruncationSpec&) const = default;
};

// Exponent triple of x^a y^b z^c. Canonical order is (b, a, c) ascending;
// it drives term-map iteration, serialization, and hashing.
struct Monomial {
    int a;  // x-degree (length)
    int b;  // y-degree (weight)
    int c;  // z-degree (marks)

    bool operator==(const Monomial&) const = default;
    bool operator<(const Monomial& o) const {
        if (b != o.b) return b < o.b;
        if (a != o.a) return a < o.a;
        return c < o.c;
    }
};

// Truncated trivariate formal power series with exact integer coefficients.
// Immutable in spirit: operations return new values. Zero coefficients are
// never stored, so equality is term-map equality.
class Series {
public:
    explicit Series(TruncationSpec trunc);

    static Series zero(TruncationSpec t) { return Series(t); }
    static Series one(TruncationSpec t) { return monomial(t, 0, 0, 0); }
    static Series monomial(TruncationSpec t, int a, int b, int c,
                           const Int& coeff = 1);

    const TruncationSpec& trunc() const { return trunc_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds coeff onto x^a y^b z^c; silently drops terms beyond the caps,
    // erases entries that cancel to zero. Negative exponents are an error.
    void add_term(int a, int b, int c, const Int& coeff);

    // Exact coefficient read. Reads outside the caps throw: a truncated
    // series cannot distinguish "0" from "discarded".
    Int coefficient(int a, int b, int c) const;

    bool operator==(const Series&) const = default;

private:
    TruncationSpec trunc_;
    std::map<Monomial, Int> terms_;
};

// Exact univariate polynomial in y; genuinely finite, never truncated.
class YPolynomial {
public:
    YPolynomial() = default;

    void add_term(int degree, const Int& coeff);
    Int coefficient(int degree) const;
    const std::map<int, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_degree() const;  // throws on the zero polynomial

    Int eval_one() const;  // sum of coefficients, p(1)

    bool operator==(const YPolynomial&) const = default;

    YPolynomial operator+(const YPolynomial&) const;
    YPolynomial operator-(const YPolynomial&) const;
    YPolynomial operator*(const YPolynomial&) const;

private:
    std::map<int, Int> terms_;
};

// p'(1) = sum of degree * coefficient.
Int deriv_y_at_1(const YPolynomial& p);

Series add(const Series& s, const Series& t);
Series sub(const Series& s, const Series& t);
Series negate(const Series& s);
Series mul(const Series& s, const Series& t);

inline Series operator+(const Series& s, const Series& t) { return add(s, t); }
inline Series operator-(const Series& s, const Series& t) { return sub(s, t); }
inline Series operator*(const Series& s, const Series& t) { return mul(s, t); }

// 1/(1-f) = sum of f^n, truncated. Requires f to have zero constant term and
// every term of positive weight, so the sum terminates at n = max_weight.
Series quasi_inverse(const Series& f);

// x -> x/(1-y): each x^a y^b z^c picks up the factor (1 + y + y^2 + ...)^a.
Series substitute_x_geometric(const Series& s);

// x^a y^b z^c -> x^a y^(b+e*a) z^c. e = +1 realizes M(xy,y,z); e = -1
// realizes M(x/y,y,z) and requires b + e*a >= 0 on every term.
Series scale_x_by_y_power(const Series& s, int e);

// z -> z-1, expanded exactly by the binomial theorem.
Series shift_z_minus_one(const Series& s);

// Substitutes the integer v for z.
Series eval_z(const Series& s, long v);

// The exact y-polynomial sitting at x^a z^c (within the caps).
YPolynomial slice_xz(const Series& s, int a, int c);

// One term per line, "coeff*x^a*y^b*z^c", in (b, a, c) ascending order.
// Deterministic; used verbatim as the equivalence-classification key.
std::string canonical_serialize(const Series& s);

// Inverse of canonical_serialize.
Series parse_series(const std::string& text, TruncationSpec trunc);

// Exact binomial coefficient; 0 when k < 0 or k > n.
Int binomial(long n, long k);

}  // namespace gfo

#endif

#ifndef SEGRE_LAURENT_HPP
#define SEGRE_LAURENT_HPP

#include "segre/numbers.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace segre {

/// Exact-coefficient Laurent polynomial in t. Zero coefficients are never
/// stored, so support accessors are always consistent with the term map.
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;

    static LaurentPolynomial constant(Rational value);
    static LaurentPolynomial monomial(long long exponent, Rational coefficient);
    /// Dense constructor: values[i] is the coefficient of t^(low + i).
    static LaurentPolynomial from_coefficients(long long low, const std::vector<Rational>& values);
    static LaurentPolynomial from_integers(const std::vector<BigInt>& values);  // exponents 0,1,...

    const std::map<long long, Rational>& terms() const { return terms_; }
    Rational coefficient(long long exponent) const;
    void set_coefficient(long long exponent, const Rational& value);

    bool is_zero() const { return terms_.empty(); }
    /// Highest / lowest exponent with nonzero coefficient; undefined on zero.
    long long degree() const;
    long long low_exponent() const;

    /// h(1), the coefficient sum.
    Rational evaluate_one() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    LaurentPolynomial operator*(const LaurentPolynomial& other) const;
    LaurentPolynomial scaled(const Rational& factor) const;
    LaurentPolynomial shifted(long long offset) const;  // multiply by t^offset

    bool divisible_by_one_minus_t() const { return is_zero() || evaluate_one() == 0; }
    /// Exact division by (1 - t); throws std::domain_error if h(1) != 0.
    LaurentPolynomial divide_one_minus_t() const;

    /// Dense coefficient run from low_exponent() to degree() (integral entries
    /// only make sense to callers that asserted integrality themselves).
    std::vector<Rational> dense_coefficients() const;

    /// "1 + 4*t + t^2" with Laurent exponents rendered as t^-2.
    std::string to_pretty_string() const;

    /// {"exponent": "coefficient"} with decimal-string coefficients.
    nlohmann::json to_json() const;
    static LaurentPolynomial from_json(const nlohmann::json& j);

    bool operator==(const LaurentPolynomial& other) const { return terms_ == other.terms_; }

  private:
    std::map<long long, Rational> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPolynomial& p) {
    return os << p.to_pretty_string();
}

}  // namespace segre

#endif

#ifndef SEGRE_SERIES_HPP
#define SEGRE_SERIES_HPP

#include "segre/laurent.hpp"
#include "segre/numbers.hpp"

#include <functional>
#include <vector>

namespace segre {

/// A sequence (a_l) with a_l = 0 below `start`, given by an exact evaluator.
struct SequenceSpec {
    std::function<Rational(long long)> eval;
    long long start = 0;  // a_l = 0 for l < start

    Rational at(long long l) const { return l < start ? Rational(0) : eval(l); }
};

/// Dense run of exact sequence values a_first, ..., a_last.
class CoefficientRange {
  public:
    CoefficientRange() = default;
    CoefficientRange(long long first, std::vector<Rational> values)
        : first_(first), values_(std::move(values)) {}

    long long first() const { return first_; }
    long long last() const { return first_ + static_cast<long long>(values_.size()) - 1; }
    const std::vector<Rational>& values() const { return values_; }

    /// 0 below the range; out of range above is a caller bug.
    Rational at(long long l) const;

    SequenceSpec as_sequence() const;

  private:
    long long first_ = 0;
    std::vector<Rational> values_;
};

/// h(t) / (1 - t)^d. Canonical form keeps d minimal: the numerator of a
/// canonical series with d > 0 is not divisible by (1 - t). The raw
/// constructor is for intermediate series whose intended pole order is
/// deliberately non-minimal.
class RationalSeries {
  public:
    static RationalSeries canonical(LaurentPolynomial numerator, long long pole_order);
    static RationalSeries raw(LaurentPolynomial numerator, long long pole_order);

    const LaurentPolynomial& numerator() const { return numerator_; }
    long long pole_order() const { return pole_order_; }
    bool is_canonical() const;

    bool operator==(const RationalSeries& other) const {
        return pole_order_ == other.pole_order_ && numerator_ == other.numerator_;
    }

  private:
    RationalSeries(LaurentPolynomial numerator, long long pole_order)
        : numerator_(std::move(numerator)), pole_order_(pole_order) {}

    LaurentPolynomial numerator_;
    long long pole_order_ = 0;
};

/// Numerator recovery: h_k = sum_{j=0}^{k-start} (-1)^j C(d,j) a_{k-j} for
/// start <= k <= r. Correct whenever the sequence really is h(t)/(1-t)^d with
/// deg h <= r; a violated precondition is detected by re-expansion, not here.
LaurentPolynomial h_from_sequence(const SequenceSpec& seq, long long d, long long r);

/// Power-series coefficients of the series from its lowest exponent to `upto`.
CoefficientRange expand(const RationalSeries& series, long long upto);

/// Single expansion coefficient (0 below the numerator's support).
Rational expansion_coefficient(const RationalSeries& series, long long l);

/// The eventual polynomial: Phi(l) = a_l for every l >= exact_from.
class HilbertPolynomial {
  public:
    HilbertPolynomial(std::vector<Rational> coefficients, long long exact_from);

    /// coefficients()[i] multiplies l^i.
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    long long exact_from() const { return exact_from_; }
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    Rational leading_coefficient() const;

    Rational operator()(long long l) const;
    std::string to_pretty_string() const;  // "1/2*l^2 + 3/2*l + 1"

  private:
    std::vector<Rational> coefficients_;
    long long exact_from_ = 0;
};

/// Computed by Newton forward differences on pole-order many exact values
/// past the threshold index deg h - d + 1. Requires pole order >= 1 after
/// canonicalization (an eventually-zero sequence has no meaningful degree
/// d-1 polynomial and is reported as a domain error).
HilbertPolynomial hilbert_polynomial(const RationalSeries& series);

/// A_n(t): sum_{l>=0} (l+1)^n t^l = A_n(t)/(1-t)^{n+1}. Coefficients are the
/// Eulerian numbers A(n,m).
LaurentPolynomial euler_polynomial(int n);

/// Eulerian number A(n,m).
BigInt eulerian_number(int n, int m);

/// Sub-sampling transform: the series of l -> a_{nl}, returned with the same
/// pole order and then canonicalized (the actual pole order is whatever the
/// canonical form reports).
RationalSeries veronese(const RationalSeries& series, long long n);

/// Exact convergence data for the dilation limit of the model series
/// 1/(1-t)^{d+1}: profile_k = d! * h^{<n>}_k / n^d against target t*A_d(t),
/// both indexed 0..d.
struct VeroneseProfile {
    std::vector<Rational> profile;
    std::vector<Rational> target;

    Rational linf_distance() const;
};

VeroneseProfile veronese_limit_profile(int d, long long n);

}  // namespace segre

#endif

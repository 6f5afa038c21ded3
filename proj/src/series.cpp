#include "segre/series.hpp"

#include "segre/combinatorics.hpp"

#include <cassert>
#include <stdexcept>

namespace segre {

Rational CoefficientRange::at(long long l) const {
    if (l < first_) return 0;
    if (l > last()) {
        throw std::logic_error("coefficient range accessed past its end");
    }
    return values_[static_cast<std::size_t>(l - first_)];
}

SequenceSpec CoefficientRange::as_sequence() const {
    CoefficientRange copy = *this;
    return SequenceSpec{[copy](long long l) { return copy.at(l); }, first_};
}

RationalSeries RationalSeries::canonical(LaurentPolynomial numerator, long long pole_order) {
    if (pole_order < 0) throw std::invalid_argument("pole order must be nonnegative");
    if (numerator.is_zero()) {
        return RationalSeries({}, 0);
    }
    while (pole_order > 0 && numerator.evaluate_one() == 0) {
        numerator = numerator.divide_one_minus_t();
        --pole_order;
        if (numerator.is_zero()) return RationalSeries({}, 0);
    }
    return RationalSeries(std::move(numerator), pole_order);
}

RationalSeries RationalSeries::raw(LaurentPolynomial numerator, long long pole_order) {
    if (pole_order < 0) throw std::invalid_argument("pole order must be nonnegative");
    return RationalSeries(std::move(numerator), pole_order);
}

bool RationalSeries::is_canonical() const {
    if (numerator_.is_zero()) return pole_order_ == 0;
    return pole_order_ == 0 || numerator_.evaluate_one() != 0;
}

LaurentPolynomial h_from_sequence(const SequenceSpec& seq, long long d, long long r) {
    if (d < 0) throw std::domain_error("h_from_sequence: negative pole order");
    if (r < seq.start) {
        throw std::domain_error("h_from_sequence: requested degree below the sequence start");
    }
    LaurentPolynomial h;
    for (long long k = seq.start; k <= r; ++k) {
        Rational hk = 0;
        for (long long j = 0; j <= k - seq.start && j <= d; ++j) {
            Rational term = Rational(binomial(d, j)) * seq.at(k - j);
            hk += (j % 2 == 0) ? term : -term;
        }
        h.set_coefficient(k, hk);
    }
    return h;
}

Rational expansion_coefficient(const RationalSeries& series, long long l) {
    const auto& h = series.numerator();
    if (h.is_zero() || l < h.low_exponent()) return 0;
    const long long d = series.pole_order();
    if (d == 0) return h.coefficient(l);
    Rational sum = 0;
    for (const auto& [e, c] : h.terms()) {
        if (e > l) break;
        sum += c * Rational(binomial(d - 1 + (l - e), d - 1));
    }
    return sum;
}

CoefficientRange expand(const RationalSeries& series, long long upto) {
    if (series.numerator().is_zero()) {
        std::vector<Rational> zeros(upto >= 0 ? static_cast<std::size_t>(upto + 1) : 0, Rational(0));
        return CoefficientRange(0, std::move(zeros));
    }
    const long long low = series.numerator().low_exponent();
    if (upto < low) {
        throw std::domain_error("expand: upto is below the numerator's lowest exponent");
    }
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(upto - low + 1));
    for (long long l = low; l <= upto; ++l) {
        values.push_back(expansion_coefficient(series, l));
    }
    return CoefficientRange(low, std::move(values));
}

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coefficients, long long exact_from)
    : coefficients_(std::move(coefficients)), exact_from_(exact_from) {
    while (!coefficients_.empty() && coefficients_.back() == 0) {
        coefficients_.pop_back();
    }
}

Rational HilbertPolynomial::leading_coefficient() const {
    return coefficients_.empty() ? Rational(0) : coefficients_.back();
}

Rational HilbertPolynomial::operator()(long long l) const {
    Rational value = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
        value = value * l + *it;
    }
    return value;
}

std::string HilbertPolynomial::to_pretty_string() const {
    if (coefficients_.empty()) return "0";
    std::string out;
    for (int i = static_cast<int>(coefficients_.size()) - 1; i >= 0; --i) {
        const Rational& c = coefficients_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool negative = c < 0;
        Rational abs_c = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string power = i == 0 ? "" : (i == 1 ? "l" : "l^" + std::to_string(i));
        if (power.empty()) {
            out += abs_c.str();
        } else if (abs_c == 1) {
            out += power;
        } else {
            out += abs_c.str() + "*" + power;
        }
    }
    return out.empty() ? "0" : out;
}

HilbertPolynomial hilbert_polynomial(const RationalSeries& series) {
    RationalSeries s = RationalSeries::canonical(series.numerator(), series.pole_order());
    const long long d = s.pole_order();
    if (d == 0) {
        throw std::domain_error(
            "hilbert_polynomial: pole order 0 means the sequence is eventually zero; "
            "the eventual polynomial is identically zero");
    }
    const long long threshold = s.numerator().degree() - d + 1;

    // Newton forward differences on the d exact values at threshold..threshold+d-1.
    std::vector<Rational> table;
    for (long long l = threshold; l < threshold + d; ++l) {
        table.push_back(expansion_coefficient(s, l));
    }
    std::vector<Rational> deltas;  // deltas[j] = (forward difference of order j) at threshold
    deltas.reserve(table.size());
    for (std::size_t j = 0; j < static_cast<std::size_t>(d); ++j) {
        deltas.push_back(table[0]);
        for (std::size_t i = 0; i + 1 < table.size(); ++i) {
            table[i] = table[i + 1] - table[i];
        }
        table.pop_back();
    }

    // Phi(l) = sum_j deltas[j] * C(l - threshold, j), expanded in powers of l.
    std::vector<Rational> coeffs(static_cast<std::size_t>(d), Rational(0));
    std::vector<Rational> basis = {1};  // C(l - threshold, j) as polynomial in l
    Rational j_factorial = 1;
    for (long long j = 0; j < d; ++j) {
        if (j > 0) {
            // multiply by (l - threshold - (j-1)) and divide by j
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            const Rational shift = Rational(-(threshold + j - 1));
            for (std::size_t i = 0; i < basis.size(); ++i) {
                next[i + 1] += basis[i];
                next[i] += basis[i] * shift;
            }
            j_factorial *= j;
            basis = std::move(next);
        }
        const Rational weight = deltas[static_cast<std::size_t>(j)] / j_factorial;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            coeffs[i] += basis[i] * weight;
        }
    }

    HilbertPolynomial phi(std::move(coeffs), threshold);
    // Leading coefficient e_0/(d-1)! is forced when the input is a genuine
    // rational series; guard against internal arithmetic slips.
    Rational factorial = 1;
    for (long long i = 2; i < d; ++i) factorial *= i;
    assert(phi.degree() < d);
    if (phi.degree() == d - 1 &&
        phi.leading_coefficient() != s.numerator().evaluate_one() / factorial) {
        throw std::logic_error("hilbert_polynomial: leading coefficient mismatch");
    }
    return phi;
}

LaurentPolynomial euler_polynomial(int n) {
    if (n < 0) throw std::domain_error("euler_polynomial: n must be nonnegative");
    SequenceSpec powers{[n](long long l) {
                            BigInt base = l + 1;
                            BigInt p = 1;
                            for (int i = 0; i < n; ++i) p *= base;
                            return Rational(p);
                        },
                        0};
    return h_from_sequence(powers, n + 1, n);
}

BigInt eulerian_number(int n, int m) {
    return to_integer(euler_polynomial(n).coefficient(m));
}

RationalSeries veronese(const RationalSeries& series, long long n) {
    if (n < 1) throw std::domain_error("veronese: n must be positive");
    RationalSeries s = RationalSeries::canonical(series.numerator(), series.pole_order());
    if (s.numerator().is_zero()) return s;
    if (n == 1) return s;

    const long long lo = s.numerator().low_exponent();
    const long long hi = s.numerator().degree();
    const long long d = s.pole_order();
    const long long start = ceil_div(lo, n);  // a_{nl} = 0 below this
    long long r;
    if (d == 0) {
        r = floor_div(hi, n);  // only finitely many terms at all
    } else {
        // a_l agrees with a degree d-1 polynomial from threshold on, so the
        // sub-sampled numerator cannot reach past ceil(threshold/n) + d - 1.
        r = ceil_div(hi - d + 1, n) + d - 1;
    }
    if (r < start) r = start;

    SequenceSpec sub{[&s, n](long long l) { return expansion_coefficient(s, n * l); }, start};
    LaurentPolynomial h = h_from_sequence(sub, d, r);
    return RationalSeries::canonical(std::move(h), d);
}

Rational VeroneseProfile::linf_distance() const {
    Rational best = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        Rational diff = profile[i] - target[i];
        if (diff < 0) diff = -diff;
        if (diff > best) best = diff;
    }
    return best;
}

VeroneseProfile veronese_limit_profile(int d, long long n) {
    if (d < 1) throw std::domain_error("veronese_limit_profile: d must be positive");
    if (n < 1) throw std::domain_error("veronese_limit_profile: n must be positive");
    RationalSeries model = RationalSeries::raw(LaurentPolynomial::constant(1), d + 1);
    RationalSeries sub = veronese(model, n);
    if (sub.pole_order() != d + 1) {
        throw std::logic_error("veronese_limit_profile: model dilation lost pole order");
    }

    BigInt d_factorial = 1;
    for (int i = 2; i <= d; ++i) d_factorial *= i;
    BigInt n_power = 1;
    for (int i = 0; i < d; ++i) n_power *= n;
    const Rational scale = Rational(d_factorial) / Rational(n_power);

    LaurentPolynomial target_poly = euler_polynomial(d).shifted(1);
    VeroneseProfile out;
    for (int k = 0; k <= d; ++k) {
        out.profile.push_back(sub.numerator().coefficient(k) * scale);
        out.target.push_back(target_poly.coefficient(k));
    }
    return out;
}

}  // namespace segre

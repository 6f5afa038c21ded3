#include "segre/laurent.hpp"

#include <stdexcept>

namespace segre {

LaurentPolynomial LaurentPolynomial::constant(Rational value) {
    return monomial(0, std::move(value));
}

LaurentPolynomial LaurentPolynomial::monomial(long long exponent, Rational coefficient) {
    LaurentPolynomial p;
    p.set_coefficient(exponent, coefficient);
    return p;
}

LaurentPolynomial LaurentPolynomial::from_coefficients(long long low, const std::vector<Rational>& values) {
    LaurentPolynomial p;
    for (std::size_t i = 0; i < values.size(); ++i) {
        p.set_coefficient(low + static_cast<long long>(i), values[i]);
    }
    return p;
}

LaurentPolynomial LaurentPolynomial::from_integers(const std::vector<BigInt>& values) {
    LaurentPolynomial p;
    for (std::size_t i = 0; i < values.size(); ++i) {
        p.set_coefficient(static_cast<long long>(i), Rational(values[i]));
    }
    return p;
}

Rational LaurentPolynomial::coefficient(long long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::set_coefficient(long long exponent, const Rational& value) {
    if (value == 0) {
        terms_.erase(exponent);
    } else {
        terms_[exponent] = value;
    }
}

long long LaurentPolynomial::degree() const {
    if (is_zero()) throw std::logic_error("degree of zero polynomial");
    return terms_.rbegin()->first;
}

long long LaurentPolynomial::low_exponent() const {
    if (is_zero()) throw std::logic_error("low exponent of zero polynomial");
    return terms_.begin()->first;
}

Rational LaurentPolynomial::evaluate_one() const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) sum += c;
    return sum;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) {
        set_coefficient(e, coefficient(e) + c);
    }
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) {
        set_coefficient(e, coefficient(e) - c);
    }
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
    LaurentPolynomial result;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            result.set_coefficient(e1 + e2, result.coefficient(e1 + e2) + c1 * c2);
        }
    }
    return result;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& factor) const {
    LaurentPolynomial result;
    if (factor == 0) return result;
    for (const auto& [e, c] : terms_) {
        result.terms_[e] = c * factor;
    }
    return result;
}

LaurentPolynomial LaurentPolynomial::shifted(long long offset) const {
    LaurentPolynomial result;
    for (const auto& [e, c] : terms_) {
        result.terms_[e + offset] = c;
    }
    return result;
}

LaurentPolynomial LaurentPolynomial::divide_one_minus_t() const {
    if (is_zero()) return {};
    if (evaluate_one() != 0) {
        throw std::domain_error("polynomial is not divisible by (1 - t)");
    }
    // h = (1 - t) q  <=>  q_e = sum of h-coefficients up to e.
    LaurentPolynomial q;
    Rational running = 0;
    const long long hi = degree();
    for (long long e = low_exponent(); e < hi; ++e) {
        running += coefficient(e);
        q.set_coefficient(e, running);
    }
    return q;
}

std::vector<Rational> LaurentPolynomial::dense_coefficients() const {
    if (is_zero()) return {};
    std::vector<Rational> out;
    for (long long e = low_exponent(); e <= degree(); ++e) {
        out.push_back(coefficient(e));
    }
    return out;
}

std::string LaurentPolynomial::to_pretty_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        Rational abs_c = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string power;
        if (e == 1) {
            power = "t";
        } else if (e != 0) {
            power = "t^" + std::to_string(e);
        }
        if (power.empty()) {
            out += abs_c.str();
        } else if (abs_c == 1) {
            out += power;
        } else {
            out += abs_c.str() + "*" + power;
        }
    }
    return out;
}

nlohmann::json LaurentPolynomial::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : terms_) {
        j[std::to_string(e)] = c.str();
    }
    return j;
}

LaurentPolynomial LaurentPolynomial::from_json(const nlohmann::json& j) {
    LaurentPolynomial p;
    for (const auto& [key, value] : j.items()) {
        p.set_coefficient(std::stoll(key), Rational(value.get<std::string>()));
    }
    return p;
}

}  // namespace segre

#ifndef SEGRE_NUMBERS_HPP
#define SEGRE_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace segre {

// All arithmetic in this library is exact: arbitrary-precision integers,
// with rationals wherever a formula divides before the result is known
// to be integral.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return BigInt(boost::multiprecision::numerator(q)); }
inline BigInt denominator(const Rational& q) { return BigInt(boost::multiprecision::denominator(q)); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// Converts an exact rational known to be integral; throws std::logic_error otherwise.
inline BigInt to_integer(const Rational& q) {
    if (!is_integer(q)) {
        throw std::logic_error("expected integral value, got " + q.str());
    }
    return numerator(q);
}

/// Decimal string; rationals print as "p/q" when the denominator is not 1.
inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const Rational& q) { return q.str(); }

// ceil(a/b) for b > 0, exact for negative a as well.
inline long long ceil_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && (a > 0) == (b > 0)) ++q;
    return q;
}

// floor(a/b) for b > 0.
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

}  // namespace segre

#endif

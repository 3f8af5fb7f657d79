#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "sumcard/error.hpp"

namespace sumcard {

// Arbitrary-precision scalars.  Rational values are always canonical:
// gcd(numerator, denominator) = 1 and denominator > 0 (cpp_rational
// maintains this; make_rational below normalizes signs on construction).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int abs_int(const Int& a) { return boost::multiprecision::abs(a); }

inline Rational make_rational(Int num, Int den) {
    if (den == 0) raise(ErrorKind::Argument, "rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Largest integer <= r.  cpp_int division truncates toward zero, so
// negative non-integers need one correction step.
inline Int rational_floor(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline std::string rational_str(const Rational& r) { return r.str(); }

// Binomial coefficient with the evaluation convention used throughout:
// C(n, k) = 0 whenever k < 0, n < 0 or n < k.  This lets every piecewise
// counting display be evaluated as a single expression for all h.
inline Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || n < k) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;  // exact: product of j consecutive integers divides j!
    }
    return result;
}

// Falling-factorial form of C(x, k) as a polynomial value, defined for all
// integer x (including negatives, where it need not vanish).  Used by the
// polynomial fit, which must evaluate fitted polynomials outside the
// combinatorial range.
inline Rational binomial_poly(const Rational& x, std::int64_t k) {
    if (k < 0) return Rational(0);
    Rational result(1);
    for (std::int64_t i = 0; i < k; ++i) {
        result *= x - Rational(i);
        result /= Rational(i + 1);
    }
    return result;
}

}  // namespace sumcard

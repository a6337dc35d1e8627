#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ordconic/errors.hpp"

namespace ordconic {

/// Exact arbitrary-precision fraction, the toolkit's default scalar.
/// mpq_class keeps the canonical form we require: gcd(|num|, den) = 1,
/// den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

using QVec = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw PreconditionError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q" or "p" (decimal-free).
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    if (s.find_first_of(".eE") != std::string::npos && s.find('/') == std::string::npos)
        throw ParseError("expected exact rational 'p/q', got '" + s + "'");
    Rational r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + s + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string format_rational(const Rational& r) {
    return r.get_str();  // canonical "p/q" or "p"
}

inline int sign(const Rational& r) { return sgn(r); }

/// Scales a rational vector to a primitive integer vector: clear
/// denominators, divide by the gcd of the numerators, and make the first
/// nonzero coordinate positive. The all-zero vector is returned unchanged.
QVec primitive_integer_vector(const QVec& v);

} // namespace ordconic

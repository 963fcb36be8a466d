#pragma once

#include <gmpxx.h>

#include <string>

namespace rsc {

/// Arbitrary-precision rational, canonicalized (gcd 1, positive denominator).
using Rational = mpq_class;

/// base^e with the 0^0 = 1 convention.
Rational rat_pow(const Rational& base, unsigned long e);

/// Canonical "num/den" string ("3/2"), plain integer when den == 1 ("2").
std::string rat_str(const Rational& x);

/// Parses "num/den", a plain integer, or a finite decimal ("0.25" -> 1/4).
Rational parse_rational(const std::string& s);

/// num/den in canonical form (the two-argument mpq_class constructor does
/// not canonicalize on its own, and mpq comparisons require canonical form).
inline Rational make_rat(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline double rat_d(const Rational& x) { return x.get_d(); }

} // namespace rsc

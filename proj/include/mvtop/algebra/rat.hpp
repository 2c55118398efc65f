#pragma once

#include <gmpxx.h>

#include <string>

namespace mvtop {

/// Arbitrary-precision integers and rationals. mpq_class keeps the
/// denominator positive and the fraction reduced after every arithmetic op.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "3", "-7/2". Throws ParseError otherwise.
Rat parse_rat(const std::string& text);

std::string to_string(const Rat& r);

/// Exact power with a possibly negative exponent (r must be nonzero then).
Rat rat_pow(const Rat& base, long exponent);

/// Max of |numerator| and denominator; the usual height of a rational.
Int height(const Rat& r);

} // namespace mvtop

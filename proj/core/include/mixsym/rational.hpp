#pragma once

#include <gmpxx.h>

#include <string>

namespace mixsym {

// Exact rational in lowest terms with positive denominator (GMP keeps the
// canonical form as long as every value passes through canonicalize()).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "num/den", always with an explicit denominator.
std::string to_fraction_string(const Rational& r);

// "num" when the denominator is 1, otherwise "num/den".
std::string to_short_string(const Rational& r);

// Accepts "n", "-n", "n/d". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(const std::string& text);

Integer factorial(unsigned n);

}  // namespace mixsym

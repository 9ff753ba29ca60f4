#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ucalg/error.hpp"

namespace ucalg {

using Int = boost::multiprecision::cpp_int;

// Exact rational, always reduced with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q". Throws InvalidInput on malformed text or q == 0.
Rat parse_rat(const std::string& s);

// Renders "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

// Division with an explicit zero check (cpp_rational would assert).
Rat rat_div(const Rat& a, const Rat& b);

// Integer power; negative exponents invert (zero base then throws).
Rat rat_pow(const Rat& base, long long e);

inline Int numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rat& r) { return boost::multiprecision::denominator(r); }

Int factorial(int n);
Rat binomial(int n, int k);

}  // namespace ucalg

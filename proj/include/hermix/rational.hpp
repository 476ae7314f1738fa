#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace hermix {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational rational_factorial(unsigned n);
Rational rational_binomial(unsigned n, unsigned k);

// Exact conversion of decimal/integer/fraction text ("1.25", "-3", "7/2")
// to a rational. Throws InvalidParameter on malformed text.
Rational rational_from_text(std::string_view text);

// Exact rational square root, or nullopt when the value is not a perfect
// square of a rational. Negative inputs yield nullopt.
std::optional<Rational> rational_sqrt(const Rational& q);

// Nearest rational with the given power-of-ten denominator.
Rational round_to_denominator(double x, long long denom);

std::string rational_to_string(const Rational& q);

}  // namespace hermix

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace slrk {

/// Exact rational with arbitrary-precision numerator and denominator.
///
/// Always normalized (lowest terms, positive denominator). Division by zero
/// throws std::overflow_error.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p", "p/q", or a plain decimal such as "-0.125" / "1e-3".
/// Decimals are read exactly, so "0.1" is 1/10. Throws std::invalid_argument
/// on malformed input and std::domain_error on a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

double to_double(const Rational& r);

/// Exact value of a finite double.
Rational from_double(double x);

Rational pow(const Rational& base, int exponent);

/// Best rational approximation with denominator <= max_denominator
/// (continued-fraction convergents and semiconvergents).
Rational best_rational(const Rational& x, const BigInt& max_denominator);
Rational best_rational(double x, long long max_denominator);

}  // namespace slrk

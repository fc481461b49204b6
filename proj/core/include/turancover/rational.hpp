#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace turancover {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// `num/den` with the denominator always printed, e.g. `1/1`, `4/3`.
std::string to_string(const Rational& value);

/// Parses `num/den` or a bare integer.
Rational parse_rational(const std::string& text);

/// Exact conversion of a finite double.
Rational from_double(double value);

double to_double(const Rational& value);

/// floor(value * 10^6) / 10^6.
Rational floor_to_micro(double value);

std::int64_t floor_to_int(const Rational& value);
std::int64_t ceil_to_int(const Rational& value);

}  // namespace turancover

#include "turancover/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "turancover/errors.hpp"

namespace turancover {

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParameterError("zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw ParameterError("not a rational: '" + text + "'");
  }
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw ParameterError("non-finite value");
  return Rational(value);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational floor_to_micro(double value) {
  constexpr std::int64_t kScale = 1'000'000;
  auto scaled = static_cast<std::int64_t>(std::floor(value * kScale));
  return Rational(scaled, kScale);
}

std::int64_t floor_to_int(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q.convert_to<std::int64_t>();
}

std::int64_t ceil_to_int(const Rational& value) { return -floor_to_int(-value); }

}  // namespace turancover

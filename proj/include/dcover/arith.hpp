#pragma once

// Exact integer and rational arithmetic used throughout the library.
// Nothing in the math core touches floating point; decimal rendering is
// done once, at output time, by to_fixed().

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace dcover {

// Expression templates are off so that `auto` and aggregate initialisation
// always see plain values.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  return Rational(num, den);
}

inline Integer numerator(const Rational& r) {
  return boost::multiprecision::numerator(r);
}

inline Integer denominator(const Rational& r) {
  return boost::multiprecision::denominator(r);
}

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const Integer& v) { return v.str(); }

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  if (is_integral(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Floor division for a positive divisor.
inline Integer floor_div(const Integer& num, const Integer& den) {
  Integer q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

inline std::optional<std::int64_t> to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    return std::nullopt;
  return static_cast<std::int64_t>(v);
}

/// Decimal rendering of a rational with `digits` places, rounded half away
/// from zero.
std::string to_fixed(const Rational& r, int digits);

/// Exact integer square root if `v` is a perfect square.
std::optional<Integer> exact_sqrt(const Integer& v);

}  // namespace dcover

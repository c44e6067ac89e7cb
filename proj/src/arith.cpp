#include "dcover/arith.hpp"

namespace dcover {

std::string to_fixed(const Rational& r, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;

  const bool negative = r < 0;
  const Rational mag = negative ? Rational(-r) : r;
  const Rational scaled = mag * scale;
  // round half up on the magnitude
  Integer units = floor_div(numerator(scaled) * 2 + denominator(scaled),
                            denominator(scaled) * 2);

  std::string whole = (units / scale).str();
  std::string frac = (units % scale).str();
  if (digits > 0) frac.insert(0, static_cast<size_t>(digits) - frac.size(), '0');

  std::string out;
  if (negative && units != 0) out += '-';
  out += whole;
  if (digits > 0) out += "." + frac;
  return out;
}

std::optional<Integer> exact_sqrt(const Integer& v) {
  if (v < 0) return std::nullopt;
  Integer root = boost::multiprecision::sqrt(v);
  if (root * root != v) return std::nullopt;
  return root;
}

}  // namespace dcover

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace wordmaps {

// Exact unbounded integers/rationals. All probabilities computed by the exact
// engines are (count, total) pairs of these; doubles appear only in Monte
// Carlo summaries and trend fitting.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt bpow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline BigInt factorial(unsigned m) {
  BigInt r = 1;
  for (unsigned i = 2; i <= m; ++i) r *= i;
  return r;
}

inline double to_double(const Rational& q) {
  return q.convert_to<double>();
}

// Decimal rendering of num/den (0 <= num/den <= 1) with `sig` significant
// digits, round-half-up on the last digit. Deterministic: computed with
// integer arithmetic only.
inline std::string decimal_string(const BigInt& num, const BigInt& den, int sig = 20) {
  if (num == 0) return "0";
  // lead = number of digits the value sits behind the decimal point:
  // value in [10^-lead, 10^-lead+1). lead == 0 iff value == 1.
  int lead = 0;
  BigInt t = num;
  while (t < den) {
    t *= 10;
    ++lead;
  }
  BigInt scaled = num * bpow(BigInt(10), static_cast<unsigned>(lead + sig - 1));
  BigInt q = (2 * scaled + den) / (2 * den);  // floor(scaled/den + 1/2)
  BigInt cap = bpow(BigInt(10), static_cast<unsigned>(sig));
  if (q >= cap) {  // rounding carried into one more digit (0.99..9 -> 1.00..0)
    --lead;
    q = cap / 10;
  }
  std::string digits = q.str();
  if (lead == 0) return digits.substr(0, 1) + "." + digits.substr(1);
  return "0." + std::string(static_cast<size_t>(lead - 1), '0') + digits;
}

}  // namespace wordmaps

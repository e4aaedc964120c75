#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

#include "errors.hpp"

namespace forestbound {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& base, std::size_t exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

inline BigRational rpow(const BigRational& base, std::size_t exp) {
  BigRational result = 1;
  BigRational b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp > 0) b *= b;
  }
  return result;
}

inline BigInt pow10(std::size_t exp) { return ipow(BigInt(10), exp); }

// floor(x^(1/n)) for x >= 0, by integer Newton iteration from above.
inline BigInt iroot_floor(const BigInt& x, std::size_t n) {
  if (x < 0) throw DomainError("iroot_floor: negative radicand");
  if (n == 0) throw InputError("iroot_floor: zero-th root");
  if (x < 2 || n == 1) return x;
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  BigInt r = BigInt(1) << ((bits + n - 1) / n);  // r^n > x
  const BigInt nn = n;
  for (;;) {
    BigInt next = ((nn - 1) * r + x / ipow(r, n - 1)) / nn;
    if (next >= r) break;
    r = std::move(next);
  }
  while (ipow(r, n) > x) --r;
  while (ipow(r + 1, n) <= x) ++r;
  return r;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigInt floor(const BigRational& x) {
  return floor_div(boost::multiprecision::numerator(x),
                   boost::multiprecision::denominator(x));
}

inline BigInt ceil(const BigRational& x) { return -floor(-x); }

inline std::string to_string(const BigInt& x) { return x.str(); }

// Parses a plain decimal literal such as "-3.857142" into an exact rational.
inline BigRational parse_decimal(const std::string& text) {
  if (text.empty()) throw InputError("parse_decimal: empty string");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  BigInt digits = 0;
  std::size_t frac_digits = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits = digits * 10 + (c - '0');
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else {
      throw InputError("parse_decimal: bad character in '" + text + "'");
    }
  }
  if (!seen_digit) throw InputError("parse_decimal: no digits in '" + text + "'");
  BigRational value(digits, pow10(frac_digits));
  return negative ? BigRational(-value) : value;
}

}  // namespace forestbound

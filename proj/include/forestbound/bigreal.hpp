#pragma once

#include <algorithm>
#include <cstddef>
#include <string>

#include "bigint.hpp"
#include "errors.hpp"

namespace forestbound {

/// A real number known to lie in [mid - radius, mid + radius], both ends
/// exact rationals. Arithmetic widens the radius so that enclosure is kept.
class BigReal {
 public:
  BigReal() = default;
  BigReal(BigRational mid, BigRational radius = 0) : mid_(std::move(mid)), radius_(std::move(radius)) {
    if (radius_ < 0) throw InputError("BigReal: negative error radius");
  }
  static BigReal exact(const BigRational& v) { return BigReal(v, 0); }

  const BigRational& mid() const { return mid_; }
  const BigRational& radius() const { return radius_; }
  BigRational lower() const { return mid_ - radius_; }
  BigRational upper() const { return mid_ + radius_; }
  bool is_exact() const { return radius_ == 0; }
  bool contains(const BigRational& v) const { return lower() <= v && v <= upper(); }

  friend BigReal operator+(const BigReal& a, const BigReal& b) {
    return {a.mid_ + b.mid_, a.radius_ + b.radius_};
  }
  friend BigReal operator-(const BigReal& a, const BigReal& b) {
    return {a.mid_ - b.mid_, a.radius_ + b.radius_};
  }
  friend BigReal operator-(const BigReal& a) { return {-a.mid_, a.radius_}; }
  friend BigReal operator*(const BigReal& a, const BigReal& b) {
    BigRational r = abs(a.mid_) * b.radius_ + abs(b.mid_) * a.radius_ + a.radius_ * b.radius_;
    return {a.mid_ * b.mid_, r};
  }
  // Division by an interval that excludes zero.
  friend BigReal operator/(const BigReal& a, const BigReal& b) {
    const BigRational lo = b.lower();
    const BigRational hi = b.upper();
    if (lo <= 0 && hi >= 0) throw DomainError("BigReal: division by an interval containing zero");
    const BigRational candidates[4] = {a.lower() / lo, a.lower() / hi, a.upper() / lo, a.upper() / hi};
    const auto [mn, mx] = std::minmax_element(std::begin(candidates), std::end(candidates));
    return {(*mn + *mx) / 2, (*mx - *mn) / 2};
  }

  friend BigReal abs_diff(const BigReal& a, const BigReal& b) {
    BigReal d = a - b;
    if (d.mid_ < 0) d.mid_ = -d.mid_;
    return d;
  }

  // Certain orderings: true only when the enclosures prove the relation.
  friend bool certainly_less(const BigReal& a, const BigReal& b) { return a.upper() < b.lower(); }
  friend bool certainly_greater(const BigReal& a, const BigReal& b) { return certainly_less(b, a); }

  double to_double() const { return static_cast<double>(mid_); }

 private:
  static BigRational abs(const BigRational& v) { return v < 0 ? BigRational(-v) : v; }

  BigRational mid_ = 0;
  BigRational radius_ = 0;
};

inline constexpr std::size_t kRootGuardDigits = 20;

/// x^(1/n) with error at most 10^-digits. The root is bracketed by exact
/// integer nth roots on the grid 10^-(digits + guard), so the enclosure is
/// certified without any floating-point step. Perfect powers come back exact.
inline BigReal bigreal_nth_root(const BigReal& x, std::size_t n, std::size_t digits) {
  if (n == 0) throw InputError("bigreal_nth_root: n must be positive");
  if (x.mid() < 0) throw DomainError("bigreal_nth_root: negative input");
  const std::size_t grid = digits + kRootGuardDigits;
  const BigInt scale = pow10(grid);
  const BigInt scale_n = ipow(scale, n);

  const BigRational lo_in = std::max(BigRational(0), x.lower());
  const BigRational hi_in = x.upper();

  if (x.is_exact()) {
    const BigInt num = numerator(lo_in);
    const BigInt den = denominator(lo_in);
    const BigInt rn = iroot_floor(num, n);
    const BigInt rd = iroot_floor(den, n);
    if (ipow(rn, n) == num && ipow(rd, n) == den) return BigReal::exact(BigRational(rn, rd));
  }

  // m^n <= floor(lo * scale^n) <= lo * scale^n, so m / scale <= lo^(1/n).
  const BigInt lo_root = iroot_floor(floor(lo_in * scale_n), n);
  // M^n >= ceil(hi * scale^n), so M / scale >= hi^(1/n).
  const BigInt hi_scaled = ceil(hi_in * scale_n);
  BigInt hi_root = iroot_floor(hi_scaled, n);
  if (ipow(hi_root, n) < hi_scaled) ++hi_root;
  const BigRational lo(lo_root, scale);
  const BigRational hi(hi_root, scale);
  return {(lo + hi) / 2, (hi - lo) / 2};
}

inline BigReal bigreal_nth_root(const BigRational& x, std::size_t n, std::size_t digits) {
  return bigreal_nth_root(BigReal::exact(x), n, digits);
}

/// Round half away from zero to `sig` significant decimal digits.
inline std::string to_significant(const BigRational& value, std::size_t sig) {
  if (sig == 0) throw InputError("to_significant: need at least one digit");
  if (value == 0) return "0";
  const bool negative = value < 0;
  const BigRational a = negative ? BigRational(-value) : value;
  // e = floor(log10 a)
  long long e = 0;
  while (a >= BigRational(pow10(static_cast<std::size_t>(e + 1)))) ++e;
  while (e < 0 ? a < BigRational(1, pow10(static_cast<std::size_t>(-e)))
               : a < BigRational(pow10(static_cast<std::size_t>(e)))) --e;
  auto scaled_for = [&](long long exp) {
    const long long shift = static_cast<long long>(sig) - 1 - exp;
    BigRational s = a;
    if (shift >= 0) s *= BigRational(pow10(static_cast<std::size_t>(shift)));
    else s /= BigRational(pow10(static_cast<std::size_t>(-shift)));
    return floor(s + BigRational(1, 2));
  };
  BigInt digits = scaled_for(e);
  if (digits >= pow10(sig)) {
    ++e;
    digits = scaled_for(e);
  }
  std::string ds = digits.str();
  std::string out;
  if (e >= 0) {
    const auto int_len = static_cast<std::size_t>(e + 1);
    if (ds.size() < int_len) ds.append(int_len - ds.size(), '0');
    out = ds.substr(0, int_len);
    if (ds.size() > int_len) out += "." + ds.substr(int_len);
  } else {
    out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
  }
  return negative ? "-" + out : out;
}

inline std::string to_significant(const BigReal& value, std::size_t sig) {
  return to_significant(value.mid(), sig);
}

/// Fixed-point rendering with `decimals` places, round half away from zero.
inline std::string to_fixed(const BigRational& value, std::size_t decimals) {
  const bool negative = value < 0;
  const BigRational a = negative ? BigRational(-value) : value;
  const BigInt scaled = floor(a * BigRational(pow10(decimals)) + BigRational(1, 2));
  std::string ds = scaled.str();
  if (ds.size() <= decimals) ds.insert(0, decimals + 1 - ds.size(), '0');
  std::string out = ds.substr(0, ds.size() - decimals);
  if (decimals > 0) out += "." + ds.substr(ds.size() - decimals);
  return (negative && scaled != 0) ? "-" + out : out;
}

}  // namespace forestbound

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "bigreal.hpp"
#include "errors.hpp"
#include "matching.hpp"
#include "report.hpp"

namespace forestbound {

inline constexpr std::size_t kMaxCertifyDigits = 256;
inline constexpr std::size_t kMaxTableDigits = 30;

namespace detail {

// a^(e/2) / b^(f/2) style constants: the square of the value is rational, so
// odd half-powers reduce to one certified square root.
inline BigReal sqrt_of_rational(const BigRational& square, std::size_t digits) {
  return bigreal_nth_root(square, 2, digits);
}

// (d-1)^(d-1) / base^(d/2 - 1).
inline BigReal growth_constant(std::size_t d, const BigInt& base, std::size_t digits) {
  const BigInt top = ipow(BigInt(d - 1), d - 1);
  if (d % 2 == 0) return BigReal::exact(BigRational(top, ipow(base, (d - 2) / 2)));
  return sqrt_of_rational(BigRational(top * top, ipow(base, d - 2)), digits);
}

}  // namespace detail

/// (d-1)^(d-1) / (d^2-2d-1)^(d/2-1), the conjectured optimal growth rate of
/// forests in d-regular graphs. Exact for even d.
inline BigReal conjecture_constant(std::size_t d, std::size_t digits) {
  if (d < 3) throw DomainError("conjecture_constant: need d >= 3");
  const BigInt dd = d;
  return detail::growth_constant(d, dd * dd - 2 * dd - 1, digits);
}

/// (d-1)^(d-1) / (d^2-2d)^(d/2-1), McKay's spanning tree growth constant.
inline BigReal mckay_tree_constant(std::size_t d, std::size_t digits) {
  if (d < 3) throw DomainError("mckay_tree_constant: need d >= 3");
  const BigInt dd = d;
  return detail::growth_constant(d, dd * dd - 2 * dd, digits);
}

/// S_n = 2^(n/2) mu_{K_n}(n / sqrt 2) = sum_k (-1)^k m_k(K_n) 2^k n^(n-2k).
inline BigInt matching_bound_integer(std::size_t n) {
  if (n < 5) throw DomainError("matching_bound_integer: need n >= 5");
  const auto m = matching_counts_complete(n);
  BigInt total = 0;
  for (std::size_t k = 0; k < m.size(); ++k) {
    BigInt term = m[k] * ipow(BigInt(2), k) * ipow(BigInt(n), n - 2 * k);
    total += k % 2 == 0 ? term : BigInt(-term);
  }
  return total;
}

/// sqrt(2) mu_{K_{d+1}}((d+1)/sqrt 2)^(1/(d+1)), which equals S_{d+1}^(1/(d+1)).
inline BigReal matching_bound_constant(std::size_t d, std::size_t digits) {
  if (d < 4) throw DomainError("matching_bound_constant: need d >= 4");
  return bigreal_nth_root(BigRational(matching_bound_integer(d + 1)), d + 1, digits);
}

// d - 1/(2d)
inline BigReal simple_bound(std::size_t d) {
  if (d == 0) throw DomainError("simple_bound: need d >= 1");
  return BigReal::exact(BigRational(BigInt(d)) - BigRational(1, 2 * BigInt(d)));
}

/// Decides a < b (-1) or a > b (+1) for values given at a requested precision,
/// doubling the precision until the enclosures separate.
inline int certified_compare(const std::function<BigReal(std::size_t)>& a,
                             const std::function<BigReal(std::size_t)>& b,
                             std::size_t start_digits = 20) {
  for (std::size_t digits = start_digits; digits <= kMaxCertifyDigits; digits *= 2) {
    const BigReal x = a(digits);
    const BigReal y = b(digits);
    if (certainly_less(x, y)) return -1;
    if (certainly_greater(x, y)) return 1;
    if (x.is_exact() && y.is_exact()) break;
  }
  throw DomainError("certified_compare: values not separated at 256 digits");
}

/// Exact check of S_n < (n-1)^n for each n in [n_min, n_max], with margin
/// (n-1)^n - S_n and S_n > 0 recorded per n.
inline VerificationReport verify_key_inequality(std::size_t n_min, std::size_t n_max) {
  if (n_min < 5 || n_min > n_max) throw InputError("verify_key_inequality: need 5 <= n_min <= n_max");
  VerificationReport report("inequality");
  for (std::size_t n = n_min; n <= n_max; ++n) {
    const BigInt s = matching_bound_integer(n);
    const BigInt rhs = ipow(BigInt(n - 1), n);
    report.check("key-inequality", "n=" + std::to_string(n), s > 0 && s < rhs, "< " + rhs.str(), s.str(),
                 BigInt(rhs - s).str());
  }
  return report;
}

struct BoundRow {
  std::size_t d = 0;
  BigReal c_conj;
  BigReal c_match;
  BigReal c_simple;
  BigInt s_integer;
};

inline BoundRow bound_row(std::size_t d, std::size_t digits) {
  return {d, conjecture_constant(d, digits), matching_bound_constant(d, digits), simple_bound(d),
          matching_bound_integer(d + 1)};
}

/// Rows of the constant table for d_min..d_max, each value within 10^-digits.
inline std::vector<BoundRow> table1(std::size_t d_min, std::size_t d_max, std::size_t digits) {
  if (d_min < 4 || d_min > d_max) throw InputError("table1: need 4 <= d_min <= d_max");
  if (digits > kMaxTableDigits) throw InputError("table1: at most 30 digits");
  std::vector<BoundRow> rows;
  for (std::size_t d = d_min; d <= d_max; ++d) rows.push_back(bound_row(d, digits));
  return rows;
}

// d - 1/(2d) - 1/(3d^2) - 1/(8d^3)
inline BigRational conjecture_series(std::size_t d) {
  const BigRational x{BigInt(d)};
  return x - 1 / (2 * x) - 1 / (3 * x * x) - 1 / (8 * x * x * x);
}

// Truncated expansion of the Kahale-Schulman constant:
// d + 1/2 + 1/(8d) + 13/(48 d^2).
inline BigRational kahale_schulman_series(std::size_t d) {
  const BigRational x{BigInt(d)};
  return x + BigRational(1, 2) + 1 / (8 * x) + BigRational(13, 48) / (x * x);
}

enum class ExpansionKind { kConjecture, kKahaleSchulman };

struct ExpansionCheck {
  BigRational series;
  BigReal reference;
  // kConjecture: |conjecture_constant - series|.
  // kKahaleSchulman: series - matching_bound_constant.
  BigReal difference;
};

inline ExpansionCheck expansion_check(std::size_t d, ExpansionKind which, std::size_t digits = 40) {
  if (d < 4) throw DomainError("expansion_check: need d >= 4");
  if (which == ExpansionKind::kConjecture) {
    const BigRational series = conjecture_series(d);
    const BigReal c = conjecture_constant(d, digits);
    return {series, c, abs_diff(c, BigReal::exact(series))};
  }
  const BigRational series = kahale_schulman_series(d);
  const BigReal c = matching_bound_constant(d, digits);
  return {series, c, BigReal::exact(series) - c};
}

}  // namespace forestbound

#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace forestbound {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroPolynomialDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial over an exact ring. Coefficient i multiplies
/// x^i; the highest stored coefficient is never zero, so the zero polynomial
/// is the empty coefficient list.
template <typename T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
  }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }
  static Polynomial monomial(T c, std::size_t power) {
    std::vector<T> v(power + 1, T(0));
    v[power] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(T(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const {
    return coeffs_.empty() ? kZeroPolynomialDegree : static_cast<int>(coeffs_.size()) - 1;
  }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<T>& coefficients() const { return coeffs_; }

  // Coefficient of x^i, zero beyond the stored range.
  T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
  const T& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  // Multiply by x^k.
  Polynomial shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<T> out(k, T(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<T> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * T(static_cast<long long>(i));
    return Polynomial(std::move(out));
  }

  template <typename U>
  U evaluate(const U& at) const {
    U acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + U(*it);
    return acc;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<BigRational>;

template <typename T>
Polynomial<T> poly_add(const Polynomial<T>& p, const Polynomial<T>& q) { return p + q; }

template <typename T>
Polynomial<T> poly_mul(const Polynomial<T>& p, const Polynomial<T>& q) { return p * q; }

template <typename T>
Polynomial<T> poly_scale(const Polynomial<T>& p, const T& s) {
  std::vector<T> out = p.coefficients();
  for (auto& c : out) c *= s;
  return Polynomial<T>(std::move(out));
}

template <typename T>
Polynomial<T> poly_pow(Polynomial<T> base, std::size_t exp) {
  Polynomial<T> result = Polynomial<T>::constant(T(1));
  while (exp > 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp > 0) base *= base;
  }
  return result;
}

// p(z + c) by repeated synthetic division (Taylor shift).
template <typename T>
Polynomial<T> poly_shift(const Polynomial<T>& p, const T& c) {
  std::vector<T> a = p.coefficients();
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) a[j] += c * a[j + 1];
  return Polynomial<T>(std::move(a));
}

// p(z + 1).
template <typename T>
Polynomial<T> poly_shift(const Polynomial<T>& p) { return poly_shift(p, T(1)); }

inline BigRational poly_eval_rational(const IntPolynomial& p, const BigRational& at) {
  return p.evaluate(at);
}

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<BigRational> out(p.coefficients().begin(), p.coefficients().end());
  return RatPolynomial(std::move(out));
}

/// Unnormalized power sums p_k = sum_i alpha_i^k of the roots of a monic
/// polynomial, for k = 0..k_max, via Newton's identities. p_0 is the degree.
template <typename T>
std::vector<T> power_sums(const Polynomial<T>& p, std::size_t k_max) {
  if (!p.is_monic()) throw InputError("power_sums: polynomial must be monic");
  const auto n = static_cast<std::size_t>(p.degree());
  // c[j] is the coefficient of x^(n-j).
  std::vector<T> c(n + 1);
  for (std::size_t j = 0; j <= n; ++j) c[j] = p[n - j];
  std::vector<T> sums(k_max + 1, T(0));
  sums[0] = T(static_cast<long long>(n));
  for (std::size_t k = 1; k <= k_max; ++k) {
    T acc = 0;
    for (std::size_t j = 1; j <= std::min(k - 1, n); ++j) acc += c[j] * sums[k - j];
    if (k <= n) acc += T(static_cast<long long>(k)) * c[k];
    sums[k] = -acc;
  }
  return sums;
}

// Division with remainder over a field.
inline std::pair<RatPolynomial, RatPolynomial> poly_divmod(const RatPolynomial& num,
                                                           const RatPolynomial& den) {
  if (den.is_zero()) throw DomainError("poly_divmod: division by zero polynomial");
  std::vector<BigRational> rem = num.coefficients();
  const std::size_t dn = den.size();
  if (rem.size() < dn) return {RatPolynomial{}, num};
  std::vector<BigRational> quot(rem.size() - dn + 1, BigRational(0));
  const BigRational& lead = den.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigRational factor = rem[k + dn - 1] / lead;
    quot[k] = factor;
    if (factor != 0)
      for (std::size_t j = 0; j < dn; ++j) rem[k + j] -= factor * den.coefficients()[j];
  }
  rem.resize(dn - 1);
  return {RatPolynomial(std::move(quot)), RatPolynomial(std::move(rem))};
}

inline RatPolynomial make_monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return poly_scale(p, BigRational(1 / p.leading()));
}

inline RatPolynomial poly_gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

// p / gcd(p, p'), monic.
inline RatPolynomial squarefree_part(const RatPolynomial& p) {
  if (p.degree() <= 0) return make_monic(p);
  return make_monic(poly_divmod(p, poly_gcd(p, p.derivative())).first);
}

namespace detail {

inline std::vector<RatPolynomial> sturm_chain(const RatPolynomial& p) {
  std::vector<RatPolynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    RatPolynomial r = poly_divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

inline int sign_variations(const std::vector<RatPolynomial>& chain, const BigRational& at) {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain) {
    const BigRational v = q.evaluate(at);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

inline std::size_t distinct_roots_in(const RatPolynomial& squarefree, const BigRational& a,
                                     const BigRational& b) {
  if (squarefree.degree() <= 0) return 0;
  const auto chain = sturm_chain(squarefree);
  return static_cast<std::size_t>(sign_variations(chain, a) - sign_variations(chain, b));
}

}  // namespace detail

/// Number of distinct real roots of p in the half-open interval (a, b],
/// counted with a Sturm sequence of the squarefree part of p.
inline std::size_t count_real_roots_in(const IntPolynomial& p, const BigRational& a,
                                       const BigRational& b) {
  if (!(a < b)) throw InputError("count_real_roots_in: need a < b");
  if (p.is_zero()) throw InputError("count_real_roots_in: zero polynomial");
  return detail::distinct_roots_in(squarefree_part(to_rational(p)), a, b);
}

/// Same as count_real_roots_in but each root counts with its multiplicity:
/// distinct roots of gcd(p, p') have multiplicity >= 2, and so on.
inline std::size_t count_real_roots_with_multiplicity(const IntPolynomial& p,
                                                      const BigRational& a,
                                                      const BigRational& b) {
  if (!(a < b)) throw InputError("count_real_roots_with_multiplicity: need a < b");
  if (p.is_zero()) throw InputError("count_real_roots_with_multiplicity: zero polynomial");
  std::size_t total = 0;
  RatPolynomial current = make_monic(to_rational(p));
  while (current.degree() > 0) {
    total += detail::distinct_roots_in(squarefree_part(current), a, b);
    current = poly_gcd(current, current.derivative());
  }
  return total;
}

template <typename T>
std::vector<std::string> coefficient_strings(const Polynomial<T>& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

}  // namespace forestbound

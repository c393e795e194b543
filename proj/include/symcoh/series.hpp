#pragma once

// Exact integer polynomials, truncated power series and rational functions
// whose denominators are products of cyclotomic-style factors (1 - t^m).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symcoh/bigint.hpp"
#include "symcoh/errors.hpp"

namespace symcoh {

/// Dense integer polynomial in t. Index i holds the coefficient of t^i.
/// The coefficient vector never ends in a zero, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<BigInt> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(BigInt v) { return Polynomial(std::vector<BigInt>{std::move(v)}); }

  static Polynomial monomial(BigInt coeff, std::size_t exponent) {
    std::vector<BigInt> c(exponent + 1);
    c[exponent] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }

  /// Degree of a nonzero polynomial; -1 for zero.
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }

  const BigInt& leading_coefficient() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  BigInt coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
  std::span<const BigInt> coefficients() const { return c_; }

  /// Multiply in place by (1 - t^m).
  Polynomial& mul_one_minus(std::uint64_t m) {
    if (c_.empty()) return *this;
    const std::size_t old = c_.size();
    c_.resize(old + m);
    for (std::size_t i = c_.size(); i-- > m;) c_[i] -= c_[i - m];
    trim();
    return *this;
  }

  /// The substitution t -> t^k.
  Polynomial substitute_power(std::uint64_t k) const {
    if (k == 0) throw DomainError("substitution t -> t^0 is not supported");
    if (c_.empty()) return {};
    std::vector<BigInt> out((c_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i * k] = c_[i];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a) {
    std::vector<BigInt> out(a.c_);
    for (auto& x : out) x = -x;
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const BigInt& s, const Polynomial& a) {
    std::vector<BigInt> out(a.c_);
    for (auto& x : out) x *= s;
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

/// Product of factors (1 - t^m), stored as a multiset of the exponents m.
class FactoredDenominator {
 public:
  FactoredDenominator() = default;
  FactoredDenominator(std::initializer_list<std::uint64_t> ms) {
    for (auto m : ms) add(m);
  }

  FactoredDenominator& add(std::uint64_t m, unsigned times = 1) {
    if (m == 0) throw DomainError("denominator factor (1 - t^0) vanishes");
    if (times > 0) counts_[m] += times;
    return *this;
  }

  bool empty() const { return counts_.empty(); }
  const std::map<std::uint64_t, unsigned>& counts() const { return counts_; }

  /// Factor exponents in ascending order, with repetition.
  std::vector<std::uint64_t> factors() const {
    std::vector<std::uint64_t> out;
    for (const auto& [m, c] : counts_) out.insert(out.end(), c, m);
    return out;
  }

  std::uint64_t factor_count() const {
    std::uint64_t n = 0;
    for (const auto& [m, c] : counts_) n += c;
    return n;
  }

  /// Degree of the expanded product.
  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const auto& [m, c] : counts_) d += m * c;
    return d;
  }

  /// Leading coefficient of the expanded product, (-1)^(number of factors).
  int leading_sign() const { return factor_count() % 2 == 0 ? 1 : -1; }

  Polynomial expand() const {
    Polynomial out = Polynomial::constant(1);
    for (const auto& [m, c] : counts_)
      for (unsigned i = 0; i < c; ++i) out.mul_one_minus(m);
    if (out.coefficient(0) != 1) throw InvariantViolation("factored denominator lost its unit constant term");
    return out;
  }

  /// Multiset sum.
  friend FactoredDenominator operator+(const FactoredDenominator& a, const FactoredDenominator& b) {
    FactoredDenominator out = a;
    for (const auto& [m, c] : b.counts_) out.counts_[m] += c;
    return out;
  }

  /// Multiset max-union, the smallest factored common multiple.
  static FactoredDenominator max_union(const FactoredDenominator& a, const FactoredDenominator& b) {
    FactoredDenominator out = a;
    for (const auto& [m, c] : b.counts_) {
      auto& slot = out.counts_[m];
      slot = std::max(slot, c);
    }
    return out;
  }

  /// Multiset difference a \ b (counts clamp at zero).
  static FactoredDenominator difference(const FactoredDenominator& a, const FactoredDenominator& b) {
    FactoredDenominator out;
    for (const auto& [m, c] : a.counts_) {
      auto it = b.counts_.find(m);
      const unsigned sub = it == b.counts_.end() ? 0U : it->second;
      if (c > sub) out.counts_[m] = c - sub;
    }
    return out;
  }

  FactoredDenominator substitute_power(std::uint64_t k) const {
    FactoredDenominator out;
    for (const auto& [m, c] : counts_) out.add(m * k, c);
    return out;
  }

  friend bool operator==(const FactoredDenominator&, const FactoredDenominator&) = default;

 private:
  std::map<std::uint64_t, unsigned> counts_;
};

/// Power series known modulo t^(order+1).
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}

  explicit TruncatedSeries(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw ContractViolation("a truncated series needs at least one coefficient");
  }

  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order) {
    TruncatedSeries out(order);
    const auto cs = p.coefficients();
    for (std::size_t i = 0; i < cs.size() && i <= order; ++i) out.c_[i] = cs[i];
    return out;
  }

  std::size_t order() const { return c_.size() - 1; }
  const BigInt& operator[](std::size_t i) const { return c_.at(i); }
  BigInt& operator[](std::size_t i) { return c_.at(i); }
  std::span<const BigInt> coefficients() const { return c_; }

  /// In-place division by (1 - t^m).
  TruncatedSeries& div_one_minus(std::uint64_t m) {
    if (m == 0) throw DomainError("division by (1 - t^0)");
    for (std::size_t n = m; n < c_.size(); ++n) c_[n] += c_[n - m];
    return *this;
  }

  /// In-place multiplication by (1 - t^m).
  TruncatedSeries& mul_one_minus(std::uint64_t m) {
    if (m == 0) throw DomainError("multiplication by (1 - t^0)");
    if (m < c_.size())
      for (std::size_t n = c_.size(); n-- > m;) c_[n] -= c_[n - m];
    return *this;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    TruncatedSeries out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
    return out;
  }

  friend TruncatedSeries operator*(const BigInt& s, const TruncatedSeries& a) {
    TruncatedSeries out = a;
    for (auto& x : out.c_) x *= s;
    return out;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  static void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
      throw ContractViolation("series order mismatch: " + std::to_string(a.order()) + " vs " +
                              std::to_string(b.order()));
  }

 private:
  std::vector<BigInt> c_;
};

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries::require_same_order(a, b);
  const std::size_t order = a.order();
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j <= order; ++j)
    if (b[j] != 0) support.push_back(j);
  TruncatedSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j : support) {
      if (i + j > order) break;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

/// a / b; the constant term of b must be a unit (+1 or -1).
inline TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries::require_same_order(a, b);
  const BigInt& b0 = b[0];
  if (b0 != 1 && b0 != -1) throw DomainError("series_div: divisor constant term is not a unit");
  const std::size_t order = a.order();
  std::vector<std::size_t> support;  // nonzero b_j with j >= 1
  for (std::size_t j = 1; j <= order; ++j)
    if (b[j] != 0) support.push_back(j);
  TruncatedSeries out(order);
  for (std::size_t n = 0; n <= order; ++n) {
    BigInt acc = a[n];
    for (std::size_t j : support) {
      if (j > n) break;
      acc -= b[j] * out[n - j];
    }
    out[n] = b0 == 1 ? std::move(acc) : BigInt(-acc);
  }
  return out;
}

/// t^m / (1 - t^m).
inline TruncatedSeries geometric_series(std::uint64_t m, std::size_t order) {
  if (m == 0) throw DomainError("geometric_series: m must be positive");
  TruncatedSeries out(order);
  for (std::uint64_t n = m; n <= order; n += m) out[n] = 1;
  return out;
}

/// Sum over all integers j of (-1)^j t^(j(3j+1)/2).
inline TruncatedSeries pentagonal_series(std::size_t order) {
  TruncatedSeries out(order);
  out[0] = 1;
  for (std::uint64_t j = 1;; ++j) {
    const std::uint64_t lo = j * (3 * j - 1) / 2;
    const std::uint64_t hi = j * (3 * j + 1) / 2;
    if (lo > order) break;
    const int sign = j % 2 == 0 ? 1 : -1;
    out[lo] += sign;
    if (hi <= order) out[hi] += sign;
  }
  return out;
}

/// Truncation of the infinite product prod_{m>=1} 1/(1 - t^m).
inline TruncatedSeries euler_product_series(std::size_t order) {
  TruncatedSeries out(order);
  out[0] = 1;
  for (std::uint64_t m = 1; m <= order; ++m) out.div_one_minus(m);
  return out;
}

/// Partition generating function P(t) to the given order. The pentagonal
/// reciprocal is checked against the product form before returning.
inline TruncatedSeries euler_partition_series(std::size_t order) {
  TruncatedSeries one(order);
  one[0] = 1;
  TruncatedSeries primary = series_div(one, pentagonal_series(order));
  if (primary != euler_product_series(order))
    throw InvariantViolation("pentagonal reciprocal disagrees with the Euler product");
  return primary;
}

/// numerator / prod (1 - t^m). Equality is semantic; no reduction is ever performed.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(Polynomial num, FactoredDenominator den = {})
      : num_(std::move(num)), den_(std::move(den)) {}

  static RationalFunction one() { return RationalFunction(Polynomial::constant(1)); }

  /// t^m / (1 - t^m).
  static RationalFunction geometric(std::uint64_t m, BigInt coeff = 1) {
    return RationalFunction(Polynomial::monomial(std::move(coeff), m), FactoredDenominator{m});
  }

  const Polynomial& numerator() const { return num_; }
  const FactoredDenominator& denominator() const { return den_; }

  /// The substitution t -> t^k applied to numerator and every factor.
  RationalFunction substitute_power(std::uint64_t k) const {
    return RationalFunction(num_.substitute_power(k), den_.substitute_power(k));
  }

 private:
  Polynomial num_;
  FactoredDenominator den_;
};

inline RationalFunction rf_scale(const RationalFunction& a, const BigInt& s) {
  return RationalFunction(s * a.numerator(), a.denominator());
}

inline Polynomial lift_numerator(const RationalFunction& a, const FactoredDenominator& target) {
  Polynomial num = a.numerator();
  for (std::uint64_t m : FactoredDenominator::difference(target, a.denominator()).factors()) num.mul_one_minus(m);
  return num;
}

inline RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) {
  FactoredDenominator common = FactoredDenominator::max_union(a.denominator(), b.denominator());
  Polynomial num = lift_numerator(a, common) + lift_numerator(b, common);
  return RationalFunction(std::move(num), std::move(common));
}

inline RationalFunction rf_sub(const RationalFunction& a, const RationalFunction& b) {
  return rf_add(a, rf_scale(b, -1));
}

inline RationalFunction rf_mul(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.numerator() * b.numerator(), a.denominator() + b.denominator());
}

inline bool rf_eq(const RationalFunction& a, const RationalFunction& b) {
  // Shared factors cancel on both sides of the cross-multiplication.
  const FactoredDenominator only_a = FactoredDenominator::difference(a.denominator(), b.denominator());
  const FactoredDenominator only_b = FactoredDenominator::difference(b.denominator(), a.denominator());
  Polynomial lhs = a.numerator();
  for (std::uint64_t m : only_b.factors()) lhs.mul_one_minus(m);
  Polynomial rhs = b.numerator();
  for (std::uint64_t m : only_a.factors()) rhs.mul_one_minus(m);
  return lhs == rhs;
}

inline RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return rf_add(a, b); }
inline RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return rf_sub(a, b); }
inline RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) { return rf_mul(a, b); }
inline bool operator==(const RationalFunction& a, const RationalFunction& b) { return rf_eq(a, b); }

inline TruncatedSeries rf_expand(const RationalFunction& a, std::size_t order) {
  TruncatedSeries out = TruncatedSeries::from_polynomial(a.numerator(), order);
  for (const auto& [m, c] : a.denominator().counts())
    for (unsigned i = 0; i < c; ++i) out.div_one_minus(m);
  return out;
}

struct Asymptotics {
  std::int64_t total_degree;
  ExactRatio leading_coefficient;

  friend bool operator==(const Asymptotics&, const Asymptotics&) = default;
};

/// Degree difference and leading-coefficient ratio of numerator over the
/// expanded denominator.
inline Asymptotics rf_asymptotics(const RationalFunction& a) {
  if (a.numerator().is_zero()) throw DomainError("rf_asymptotics: zero numerator");
  const auto& den = a.denominator();
  return Asymptotics{a.numerator().degree() - static_cast<std::int64_t>(den.degree()),
                     ExactRatio(a.numerator().leading_coefficient(), BigInt(den.leading_sign()))};
}

/// Coefficients of R(t) * P(t) to the given order, R a rational multiplier.
inline TruncatedSeries expand_with_partition_factor(const RationalFunction& multiplier, std::size_t order) {
  return series_mul(rf_expand(multiplier, order), euler_partition_series(order));
}

}  // namespace symcoh

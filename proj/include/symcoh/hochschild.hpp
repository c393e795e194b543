#pragma once

// Dimensions of HH^r(F_p S_n) for r = 0, 1, 2.
//
// Three routes are provided:
//   formula  - closed sums of p(n) (the F, C, E statistics),
//   series   - coefficients of R_{p,r}(t) P(t),
//   oracle   - a sum over cycle types lambda of the degree-r part of the
//              tensor product of H^*(Z/m wr S_{lambda_m}, F_p), each factor
//              read off the dimension tables below.

#include <cstddef>
#include <cstdint>
#include <string>

#include "symcoh/bigint.hpp"
#include "symcoh/errors.hpp"
#include "symcoh/partitions.hpp"
#include "symcoh/series.hpp"
#include "symcoh/statistics.hpp"

namespace symcoh {

class Prime {
 public:
  explicit Prime(std::uint64_t value) : value_(value) {
    if (!is_prime(value)) throw DomainError(std::to_string(value) + " is not a prime");
  }

  std::uint64_t value() const { return value_; }
  bool is_two() const { return value_ == 2; }

  static bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

/// Cohomological degree, restricted to 0, 1, 2.
inline unsigned checked_degree(unsigned r) {
  if (r > 2) throw DomainError("only degrees 0, 1 and 2 are supported, got " + std::to_string(r));
  return r;
}

/// How the cycle length m enters the wreath tables. For odd p only p | m
/// matters; for p = 2 the class of m mod 4 is kept even though degrees <= 2
/// only look at parity.
enum class CycleClass { Coprime, Divisible, Odd, TwoModFour, ZeroModFour };

inline CycleClass cycle_class(std::uint64_t m, const Prime& p) {
  if (m == 0) throw DomainError("cycle length must be positive");
  if (!p.is_two()) return m % p.value() == 0 ? CycleClass::Divisible : CycleClass::Coprime;
  if (m % 2 == 1) return CycleClass::Odd;
  return m % 4 == 0 ? CycleClass::ZeroModFour : CycleClass::TwoModFour;
}

inline bool prime_divides(CycleClass c) {
  return c == CycleClass::Divisible || c == CycleClass::TwoModFour || c == CycleClass::ZeroModFour;
}

namespace wreath_tables {

// Each table is a component of H^d(Z/m wr S_l, F_p) after the Nakaoka
// splitting H^*(S_l, H^*((Z/m)^l)). All vanish at l = 0 except H^0.

/// dim H^0(S_l, H^1((Z/m)^l)).
inline unsigned invariants_of_h1(CycleClass c, std::uint64_t l) { return l >= 1 && prime_divides(c) ? 1 : 0; }

/// dim H^1(S_l, F_p).
inline unsigned symmetric_h1(std::uint64_t l, const Prime& p) { return p.is_two() && l >= 2 ? 1 : 0; }

/// dim H^0(S_l, H^2((Z/m)^l)); H^2 splits as M_l plus Lambda^2(M_l) when p | m.
inline unsigned invariants_of_h2(CycleClass c, std::uint64_t l, const Prime& p) {
  if (l == 0 || !prime_divides(c)) return 0;
  if (!p.is_two()) return 1;
  return l == 1 ? 1 : 2;
}

/// dim H^1(S_l, H^1((Z/m)^l)) = dim H^1(S_l, M_l) when p | m.
inline unsigned h1_of_h1(CycleClass c, std::uint64_t l, const Prime& p) {
  return p.is_two() && prime_divides(c) && l >= 3 ? 1 : 0;
}

/// dim H^2(S_l, F_p).
inline unsigned symmetric_h2(std::uint64_t l, const Prime& p) {
  if (!p.is_two() || l <= 1) return 0;
  return l <= 3 ? 1 : 2;
}

}  // namespace wreath_tables

/// dim H^1(Z/m wr S_l, F_p).
inline unsigned wreath_h1_dim(std::uint64_t m, std::uint64_t l, const Prime& p) {
  const CycleClass c = cycle_class(m, p);
  return wreath_tables::invariants_of_h1(c, l) + wreath_tables::symmetric_h1(l, p);
}

/// dim H^2(Z/m wr S_l, F_p).
inline unsigned wreath_h2_dim(std::uint64_t m, std::uint64_t l, const Prime& p) {
  const CycleClass c = cycle_class(m, p);
  return wreath_tables::invariants_of_h2(c, l, p) + wreath_tables::h1_of_h1(c, l, p) +
         wreath_tables::symmetric_h2(l, p);
}

/// dim H^d(Z/m wr S_l, F_p) for a fixed prime and degree d <= 2.
class WreathCohomologyDims {
 public:
  WreathCohomologyDims(Prime p, unsigned degree) : p_(p), degree_(checked_degree(degree)) {}

  const Prime& prime() const { return p_; }
  unsigned degree() const { return degree_; }

  unsigned operator()(std::uint64_t m, std::uint64_t l) const {
    switch (degree_) {
      case 0:
        cycle_class(m, p_);
        return 1;
      case 1:
        return wreath_h1_dim(m, l, p_);
      default:
        return wreath_h2_dim(m, l, p_);
    }
  }

 private:
  Prime p_;
  unsigned degree_;
};

/// Closed combinatorial formula for dim HH^r(F_p S_n).
inline BigInt hh_dim_formula(unsigned r, std::uint64_t n, const Prime& p) {
  checked_degree(r);
  if (r == 0) return partition_count(static_cast<std::int64_t>(n));
  if (n == 0) return 0;
  if (r == 1) return p.is_two() ? BigInt(2 * F_closed(2, n)) : F_closed(p.value(), n);
  if (p.is_two())
    return 2 * F_closed(2, n) + 2 * F_closed(4, n) + F_closed(6, n) + 2 * C_closed(2, 2, n) + E_closed(n);
  return F_closed(p.value(), n) + C_closed(p.value(), 2, n);
}

/// dim HH^r(F_p S_n) as a sum over cycle types of centraliser cohomology.
inline BigInt hh_dim_oracle(unsigned r, std::uint64_t n, const Prime& p, const EnumerationCap& cap = {}) {
  checked_degree(r);
  const WreathCohomologyDims h1(p, 1);
  const WreathCohomologyDims h2(p, 2);
  BigInt total = 0;
  for (const Partition& lambda : enumerate_partitions(n, cap)) {
    if (r == 0) {
      total += 1;
      continue;
    }
    const auto& parts = lambda.parts();
    std::uint64_t contribution = 0;
    if (r == 1) {
      for (const Part& part : parts) contribution += h1(part.length, part.multiplicity);
    } else {
      // Kunneth in degree 2: one factor in degree 2, or two distinct factors in degree 1.
      for (const Part& part : parts) contribution += h2(part.length, part.multiplicity);
      for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
          contribution += std::uint64_t{h1(parts[i].length, parts[i].multiplicity)} *
                          h1(parts[j].length, parts[j].multiplicity);
    }
    total += contribution;
  }
  return total;
}

/// R_{p,r}(t) with sum_n dim HH^r(F_p S_n) t^n = R_{p,r}(t) P(t).
inline RationalFunction hh_rational(unsigned r, const Prime& p) {
  checked_degree(r);
  const std::uint64_t q = p.value();
  switch (r) {
    case 0:
      return RationalFunction::one();
    case 1:
      return p.is_two() ? RationalFunction::geometric(2, 2) : RationalFunction::geometric(q);
    default:
      if (p.is_two()) return RationalFunction(Polynomial{0, 0, 2, 0, 3, 0, -1}, FactoredDenominator{2, 4});
      return RationalFunction(Polynomial::monomial(1, q), FactoredDenominator{q, 2 * q});
  }
}

inline TruncatedSeries hh_dim_series(unsigned r, const Prime& p, std::size_t order) {
  return expand_with_partition_factor(hh_rational(r, p), order);
}

/// The p = 2 degree-two multiplier assembled term by term from the F, C and
/// E generating functions: 2F_2 + 2F_4 + F_6 + 2C_{2,2} + E.
inline RationalFunction hh2_p2_term_sum() {
  RationalFunction sum = RationalFunction::geometric(2, 2);
  sum = rf_add(sum, RationalFunction::geometric(4, 2));
  sum = rf_add(sum, RationalFunction::geometric(6));
  sum = rf_add(sum, RationalFunction(Polynomial::monomial(2, 6), FactoredDenominator{2, 4}));
  sum = rf_add(sum, RationalFunction(Polynomial{0, 0, 0, 0, 1, 0, 0, 0, 2}, FactoredDenominator{2, 6}));
  return sum;
}

inline bool hh2_p2_identity_check() { return rf_eq(hh2_p2_term_sum(), hh_rational(2, Prime(2))); }

}  // namespace symcoh

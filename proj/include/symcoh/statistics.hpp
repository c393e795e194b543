#pragma once

// Aggregate partition statistics F, G, C, D, E. Each has a closed form built
// on p(n) alone and an oracle that walks every partition; the two routes
// share nothing except partition_count.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "symcoh/bigint.hpp"
#include "symcoh/partitions.hpp"
#include "symcoh/series.hpp"

namespace symcoh {

struct StatisticTable {
  std::string name;
  std::vector<std::uint64_t> params;
  std::vector<BigInt> values;  // values[n]
};

inline StatisticTable tabulate(std::string name, std::vector<std::uint64_t> params, std::size_t n_max,
                               const std::function<BigInt(std::uint64_t)>& statistic) {
  StatisticTable t{std::move(name), std::move(params), {}};
  t.values.reserve(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) t.values.push_back(statistic(n));
  return t;
}

inline void require_positive(std::uint64_t v, const char* what) {
  if (v == 0) throw DomainError(std::string(what) + " must be a positive integer");
}

// ---- closed forms ---------------------------------------------------------

/// F_k(n) = sum_{i=1}^{floor(n/k)} p(n - ik).
inline BigInt F_closed(std::uint64_t k, std::uint64_t n) {
  require_positive(k, "k");
  BigInt total = 0;
  for (std::uint64_t i = 1; i <= n / k; ++i) total += partition_count(static_cast<std::int64_t>(n - i * k));
  return total;
}

/// G_{k,l}(n) = sum_{i=1}^{floor(n/k)} p(n - ikl). The upper index stays at
/// floor(n/k); terms with a negative argument vanish through p(<0) = 0.
inline BigInt G_closed(std::uint64_t k, std::uint64_t l, std::uint64_t n) {
  require_positive(k, "k");
  require_positive(l, "l");
  BigInt total = 0;
  for (std::uint64_t i = 1; i <= n / k; ++i)
    total += partition_count(static_cast<std::int64_t>(n) - static_cast<std::int64_t>(i * k * l));
  return total;
}

/// C_{k,r}(n) = sum_s q(s, r) p(n - ks): choose r distinct lengths ki_1..ki_r,
/// then partition what remains.
inline BigInt C_closed(std::uint64_t k, std::uint64_t r, std::uint64_t n) {
  require_positive(k, "k");
  require_positive(r, "r");
  BigInt total = 0;
  for (std::uint64_t s = r * (r + 1) / 2; k * s <= n; ++s) {
    const std::uint64_t q = q_count(s, r);
    if (q != 0) total += q * partition_count(static_cast<std::int64_t>(n - k * s));
  }
  return total;
}

/// E(n) = sum_i R_i p(n - 2i) with R_i = i - 1, or i - 2 when 3 | i.
inline BigInt E_closed(std::uint64_t n) {
  BigInt total = 0;
  for (std::uint64_t i = 2; 2 * i <= n; ++i) {
    const std::uint64_t pairs = i % 3 == 0 ? i - 2 : i - 1;
    total += pairs * partition_count(static_cast<std::int64_t>(n - 2 * i));
  }
  return total;
}

// ---- enumeration oracles --------------------------------------------------

/// Sum of lambda_k over all partitions of n.
inline BigInt F_oracle(std::uint64_t k, std::uint64_t n, const EnumerationCap& cap = {}) {
  require_positive(k, "k");
  BigInt total = 0;
  for (const Partition& lambda : enumerate_partitions(n, cap)) total += lambda.multiplicity(k);
  return total;
}

inline BigInt G_oracle(std::uint64_t k, std::uint64_t l, std::uint64_t n, const EnumerationCap& cap = {}) {
  BigInt total = 0;
  for (const Partition& lambda : enumerate_partitions(n, cap)) total += g_stat(lambda, k, l);
  return total;
}

struct CDPair {
  BigInt c;
  BigInt d;
};

/// C_{k,r}(n) = sum c_{k,r}(lambda) and D_{k,r}(n) = sum binom(g_{1,k}(lambda), r).
inline CDPair CD_oracle(std::uint64_t k, std::uint64_t r, std::uint64_t n, const EnumerationCap& cap = {}) {
  require_positive(r, "r");
  CDPair out{0, 0};
  for (const Partition& lambda : enumerate_partitions(n, cap)) {
    out.c += c_stat(lambda, k, r);
    out.d += binomial(static_cast<std::int64_t>(g_stat(lambda, 1, k)), static_cast<std::int64_t>(r));
  }
  return out;
}

inline BigInt E_oracle(std::uint64_t n, const EnumerationCap& cap = {}) {
  BigInt total = 0;
  for (const Partition& lambda : enumerate_partitions(n, cap)) total += e_stat(lambda);
  return total;
}

// ---- generating-function multipliers of P(t) -------------------------------

/// t^k / (1 - t^k), the multiplier for F_k.
inline RationalFunction F_series(std::uint64_t k) {
  require_positive(k, "k");
  return RationalFunction::geometric(k);
}

/// prod_{i=1}^r t^{ik} / (1 - t^{ik}), the multiplier shared by C_{k,r} and D_{k,r}.
inline RationalFunction CD_series(std::uint64_t k, std::uint64_t r) {
  require_positive(k, "k");
  require_positive(r, "r");
  RationalFunction out = RationalFunction::one();
  for (std::uint64_t i = 1; i <= r; ++i) out = rf_mul(out, RationalFunction::geometric(i * k));
  return out;
}

/// Q_r(t) = prod_{i=1}^r t^i / (1 - t^i), generating q(n, r).
inline RationalFunction q_series(std::uint64_t r) { return CD_series(1, r); }

/// t^2/(1-t)^2 - t^3/(1-t^3), the ordered-pair count before t -> t^2.
inline RationalFunction E_pair_series() {
  const RationalFunction sq(Polynomial::monomial(1, 2), FactoredDenominator{1, 1});
  return rf_sub(sq, RationalFunction::geometric(3));
}

/// (t^4 + 2t^8) / ((1 - t^2)(1 - t^6)), checked against E_pair_series at t^2.
inline RationalFunction E_series() {
  RationalFunction closed(Polynomial{0, 0, 0, 0, 1, 0, 0, 0, 2}, FactoredDenominator{2, 6});
  if (!rf_eq(closed, E_pair_series().substitute_power(2)))
    throw InvariantViolation("E closed form disagrees with its pair-count construction");
  return closed;
}

}  // namespace symcoh

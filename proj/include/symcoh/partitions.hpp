#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "symcoh/bigint.hpp"
#include "symcoh/errors.hpp"

namespace symcoh {

/// One block of equal parts: `multiplicity` copies of `length`.
struct Part {
  std::uint64_t length;
  std::uint64_t multiplicity;

  friend bool operator==(const Part&, const Part&) = default;
};

/// Integer partition in sparse form, part lengths strictly decreasing.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i].length == 0 || parts_[i].multiplicity == 0)
        throw ContractViolation("partition parts need positive length and multiplicity");
      if (i > 0 && parts_[i].length >= parts_[i - 1].length)
        throw ContractViolation("partition lengths must be strictly decreasing");
      n_ += parts_[i].length * parts_[i].multiplicity;
    }
  }

  /// Build from a list of parts in any order, e.g. {2, 1, 2}.
  static Partition from_parts(std::vector<std::uint64_t> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    std::vector<Part> sparse;
    for (auto len : parts) {
      if (!sparse.empty() && sparse.back().length == len)
        ++sparse.back().multiplicity;
      else
        sparse.push_back({len, 1});
    }
    return Partition(std::move(sparse));
  }

  std::uint64_t n() const { return n_; }
  const std::vector<Part>& parts() const { return parts_; }
  std::size_t distinct_lengths() const { return parts_.size(); }

  /// lambda_k, the number of parts of length k.
  std::uint64_t multiplicity(std::uint64_t k) const {
    for (const auto& p : parts_)
      if (p.length == k) return p.multiplicity;
    return 0;
  }

  std::uint64_t largest_part() const { return parts_.empty() ? 0 : parts_.front().length; }

  std::uint64_t part_count() const {
    std::uint64_t c = 0;
    for (const auto& p : parts_) c += p.multiplicity;
    return c;
  }

  /// Dense view: index k holds lambda_k for 0 <= k <= n.
  std::vector<std::uint64_t> dense_multiplicities() const {
    std::vector<std::uint64_t> out(n_ + 1);
    for (const auto& p : parts_) out[p.length] = p.multiplicity;
    return out;
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i].length);
      if (parts_[i].multiplicity > 1) s += '^' + std::to_string(parts_[i].multiplicity);
    }
    return s + ')';
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  friend class PartitionIterator;
  std::vector<Part> parts_;
  std::uint64_t n_ = 0;
};

inline constexpr std::size_t kEnumerationHardCap = 80;

/// Upper bound on n for anything that walks every partition of n.
struct EnumerationCap {
  std::size_t limit = kEnumerationHardCap;
  bool override_hard_cap = false;

  void check(std::size_t n) const {
    if (n > limit)
      throw ResourceError("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(limit));
    if (n > kEnumerationHardCap && !override_hard_cap)
      throw ResourceError("n = " + std::to_string(n) + " exceeds the hard enumeration cap " +
                          std::to_string(kEnumerationHardCap) + " without an override");
  }
};

/// Steps through partitions of n in decreasing lexicographic order, (n) first
/// and (1^n) last.
class PartitionIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = Partition;
  using difference_type = std::ptrdiff_t;
  using pointer = const Partition*;
  using reference = const Partition&;

  PartitionIterator() = default;
  explicit PartitionIterator(std::uint64_t n) : done_(false) {
    if (n > 0) current_.parts_.push_back({n, 1});
    current_.n_ = n;
  }

  const Partition& operator*() const { return current_; }
  const Partition* operator->() const { return &current_; }

  PartitionIterator& operator++() {
    advance();
    return *this;
  }
  void operator++(int) { advance(); }

  friend bool operator==(const PartitionIterator& it, std::default_sentinel_t) { return it.done_; }

 private:
  void advance() {
    auto& parts = current_.parts_;
    std::uint64_t ones = 0;
    if (!parts.empty() && parts.back().length == 1) {
      ones = parts.back().multiplicity;
      parts.pop_back();
    }
    if (parts.empty()) {
      done_ = true;
      return;
    }
    // Break one copy of the smallest non-unit part into pieces of size x - 1.
    const std::uint64_t x = parts.back().length;
    if (--parts.back().multiplicity == 0) parts.pop_back();
    const std::uint64_t rest = ones + x;
    const std::uint64_t piece = x - 1;
    if (piece == 1) {
      parts.push_back({1, rest});
      return;
    }
    parts.push_back({piece, rest / piece});
    if (rest % piece != 0) parts.push_back({rest % piece, 1});
  }

  Partition current_;
  bool done_ = true;
};

class PartitionRange {
 public:
  explicit PartitionRange(std::uint64_t n) : n_(n) {}
  PartitionIterator begin() const { return PartitionIterator(n_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::uint64_t n_;
};

/// Every partition of n exactly once, in decreasing lexicographic order.
inline PartitionRange enumerate_partitions(std::uint64_t n, const EnumerationCap& cap = {}) {
  cap.check(n);
  return PartitionRange(n);
}

namespace detail {

struct PartitionMemo {
  std::mutex mu;
  std::vector<BigInt> values{BigInt(1)};

  void extend_to(std::size_t n) {
    values.reserve(n + 1);
    for (std::size_t k = values.size(); k <= n; ++k) {
      BigInt acc = 0;
      for (std::size_t j = 1;; ++j) {
        const std::size_t g1 = j * (3 * j - 1) / 2;
        if (g1 > k) break;
        const std::size_t g2 = j * (3 * j + 1) / 2;
        BigInt term = values[k - g1];
        if (g2 <= k) term += values[k - g2];
        if (j % 2 == 1)
          acc += term;
        else
          acc -= term;
      }
      values.push_back(std::move(acc));
    }
  }
};

inline PartitionMemo& partition_memo() {
  static PartitionMemo memo;
  return memo;
}

}  // namespace detail

/// p(n) by the pentagonal recurrence, memoized; p(n) = 0 for negative n.
inline BigInt partition_count(std::int64_t n) {
  if (n < 0) return 0;
  auto& memo = detail::partition_memo();
  std::lock_guard lock(memo.mu);
  memo.extend_to(static_cast<std::size_t>(n));
  return memo.values[static_cast<std::size_t>(n)];
}

/// p(0), ..., p(n) in one call.
inline std::vector<BigInt> partition_numbers(std::size_t n) {
  auto& memo = detail::partition_memo();
  std::lock_guard lock(memo.mu);
  memo.extend_to(n);
  return {memo.values.begin(), memo.values.begin() + static_cast<std::ptrdiff_t>(n + 1)};
}

/// g_{k,l}: distinct part lengths divisible by k that occur at least l times.
inline std::uint64_t g_stat(const Partition& lambda, std::uint64_t k, std::uint64_t l) {
  if (k == 0 || l == 0) throw DomainError("g_stat needs k >= 1 and l >= 1");
  std::uint64_t c = 0;
  for (const auto& p : lambda.parts())
    if (p.length % k == 0 && p.multiplicity >= l) ++c;
  return c;
}

/// c_{k,r}: unordered r-sets of distinct part lengths divisible by k.
inline BigInt c_stat(const Partition& lambda, std::uint64_t k, std::uint64_t r) {
  if (k == 0 || r == 0) throw DomainError("c_stat needs k >= 1 and r >= 1");
  return binomial(static_cast<std::int64_t>(g_stat(lambda, k, 1)), static_cast<std::int64_t>(r));
}

/// e: ordered pairs (m, m') of distinct part lengths with lambda_m >= 2 and m' even.
inline std::uint64_t e_stat(const Partition& lambda) {
  std::uint64_t c = 0;
  for (const auto& a : lambda.parts()) {
    if (a.multiplicity < 2) continue;
    for (const auto& b : lambda.parts())
      if (b.length != a.length && b.length % 2 == 0) ++c;
  }
  return c;
}

namespace detail {

inline std::uint64_t count_distinct_parts(std::uint64_t n, std::uint64_t r, std::uint64_t max_part) {
  if (r == 0) return n == 0 ? 1 : 0;
  // r distinct parts below max_part+1 sum to at least r(r+1)/2 and at most r*max_part - r(r-1)/2.
  if (n < r * (r + 1) / 2) return 0;
  if (max_part < r || n > r * max_part - r * (r - 1) / 2) return 0;
  std::uint64_t c = 0;
  for (std::uint64_t first = std::min(max_part, n); first >= r; --first)
    c += count_distinct_parts(n - first, r - 1, first - 1);
  return c;
}

}  // namespace detail

/// q(n, r): partitions of n into exactly r distinct parts, by direct enumeration.
inline std::uint64_t q_count(std::uint64_t n, std::uint64_t r) {
  if (r == 0) throw DomainError("q_count needs r >= 1");
  return detail::count_distinct_parts(n, r, n);
}

}  // namespace symcoh

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "symcoh/errors.hpp"

namespace symcoh {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

/// Exact rational number kept in lowest terms with a positive denominator.
class ExactRatio {
 public:
  ExactRatio() = default;
  ExactRatio(BigInt num, BigInt den = 1) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DomainError("ExactRatio: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  friend bool operator==(const ExactRatio&, const ExactRatio&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ExactRatio& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

}  // namespace symcoh

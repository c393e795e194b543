// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "symcoh/symcoh.hpp"

using namespace symcoh;

namespace {

// Thrown by require() so a criterion can stop at the first mismatch with a message.
struct Mismatch {
  std::string what;
};

template <class A, class B>
void require(const A& lhs, const B& rhs, const std::string& where) {
  if (!(lhs == rhs)) {
    std::ostringstream msg;
    msg << where << ": " << lhs << " != " << rhs;
    throw Mismatch{msg.str()};
  }
}

void require_true(bool ok, const std::string& where) {
  if (!ok) throw Mismatch{where};
}

std::string at(std::initializer_list<std::uint64_t> xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0 means no stated limit
  std::function<void()> body;
};

// ---- criteria -------------------------------------------------------------

void euler_identity() {
  const auto pent = euler_partition_series(500);
  const auto prod = euler_product_series(500);
  for (std::uint64_t n = 0; n <= 500; ++n) require(pent[n], prod[n], "pentagonal vs product " + at({n}));
  for (std::uint64_t n = 0; n <= 60; ++n) {
    std::uint64_t count = 0;
    for ([[maybe_unused]] const auto& lambda : enumerate_partitions(n)) ++count;
    require(pent[n], BigInt(count), "series vs enumeration " + at({n}));
  }
}

void elder_identity() {
  for (std::uint64_t k = 1; k <= 4; ++k)
    for (std::uint64_t l = 1; l <= 4; ++l)
      for (std::uint64_t n = 0; n <= 40; ++n) require(G_oracle(k, l, n), F_closed(k * l, n), "G vs F " + at({k, l, n}));
}

void f_generating_function() {
  for (std::uint64_t k = 1; k <= 10; ++k) {
    const auto s = expand_with_partition_factor(RationalFunction::geometric(k), 200);
    for (std::uint64_t n = 0; n <= 200; ++n) require(s[n], F_closed(k, n), "F series " + at({k, n}));
  }
}

void c_and_d() {
  for (std::uint64_t k = 1; k <= 3; ++k)
    for (std::uint64_t r = 1; r <= 3; ++r) {
      const auto s = expand_with_partition_factor(CD_series(k, r), 40);
      for (std::uint64_t n = 0; n <= 40; ++n) {
        const auto cd = CD_oracle(k, r, n);
        require(cd.c, cd.d, "C vs D " + at({k, r, n}));
        require(cd.c, s[n], "C vs series " + at({k, r, n}));
      }
    }
  const auto spot = CD_oracle(2, 2, 8);
  require(spot.c, BigInt(3), "C_{2,2}(8)");
  require(spot.d, BigInt(3), "D_{2,2}(8)");
}

void e_statistic() {
  const RationalFunction stated(Polynomial{0, 0, 0, 0, 1, 0, 0, 0, 2}, FactoredDenominator{2, 6});
  const auto s = expand_with_partition_factor(stated, 40);
  for (std::uint64_t n = 0; n <= 40; ++n) require(E_oracle(n), s[n], "E " + at({n}));
  require(E_oracle(4), BigInt(1), "E(4)");
  require_true(rf_eq(E_pair_series().substitute_power(2), stated), "R(t^2) construction");
}

void hh_triple_agreement() {
  for (std::uint64_t pv : {2, 3, 5, 7}) {
    const Prime p(pv);
    for (unsigned r = 0; r <= 2; ++r) {
      const auto s = hh_dim_series(r, p, 200);
      for (std::uint64_t n = 0; n <= 200; ++n) {
        const auto f = hh_dim_formula(r, n, p);
        require(f, s[n], "formula vs series " + at({pv, r, n}));
        if (n <= 40) require(f, hh_dim_oracle(r, n, p), "formula vs oracle " + at({pv, r, n}));
      }
    }
  }
  const Prime two(2), three(3);
  require(hh_dim_oracle(1, 4, two), BigInt(6), "HH^1(F_2 S_4)");
  require(hh_dim_oracle(2, 4, two), BigInt(9), "HH^2(F_2 S_4)");
  require(hh_dim_oracle(2, 2, two), BigInt(2), "HH^2(F_2 S_2)");
  require(hh_dim_oracle(2, 6, three), BigInt(4), "HH^2(F_3 S_6)");
}

void p2_simplification() {
  const RationalFunction closed(Polynomial{0, 0, 2, 0, 3, 0, -1}, FactoredDenominator{2, 4});
  require_true(rf_eq(hh2_p2_term_sum(), closed), "five-term sum vs closed form");
}

void signed_graph_sum() {
  for (unsigned r = 1; r <= 6; ++r) {
    const BigInt expected = (r % 2 == 0 ? 1 : -1) * factorial(r);
    require(BigInt(chromatic_sum_check(r)), expected, "chromatic sum " + at({r}));
  }
}

std::vector<WeightSpec> small_specs() {
  std::vector<WeightSpec> out;
  std::vector<WeightPair> cur;
  std::function<void(unsigned)> rec = [&](unsigned r) {
    if (cur.size() == r) {
      out.emplace_back(cur);
      return;
    }
    for (std::uint64_t k = 1; k <= 3; ++k)
      for (std::uint64_t l = 1; l <= 3; ++l) {
        cur.push_back({k, l});
        rec(r);
        cur.pop_back();
      }
  };
  for (unsigned r = 1; r <= 3; ++r) rec(r);
  return out;
}

void tuple_counting() {
  for (const auto& spec : small_specs()) {
    const auto q = q_graph_sum(spec);
    const auto s = rf_expand(q, 30);
    for (std::uint64_t n = 1; n <= 30; ++n) require(s[n], tuple_count_oracle(n, spec), spec.to_string() + " n=" + std::to_string(n));
    const auto r = static_cast<unsigned>(spec.size());
    const Asymptotics expected{0, ExactRatio((r % 2 == 0 ? 1 : -1) * factorial(r))};
    require_true(rf_asymptotics(q) == expected, "asymptotics " + spec.to_string());
  }
}

void theta_sum_series() {
  for (const auto& spec : small_specs()) {
    const auto s = expand_with_partition_factor(q_graph_sum(spec), 30);
    for (std::uint64_t n = 1; n <= 30; ++n)
      require(theta_sum_oracle(n, spec), s[n], spec.to_string() + " n=" + std::to_string(n));
  }
}

void verify_all() {
  const std::string cmd = std::string(SYMCOH_CLI_PATH) + " verify --suite all > /dev/null";
  const int status = std::system(cmd.c_str());
  require_true(status != -1 && WIFEXITED(status), "verify did not exit normally");
  require(WEXITSTATUS(status), 0, "verify exit status");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Euler identity: pentagonal, product and enumeration agree", 5, euler_identity},
      {2, "G_{k,l}(n) = F_{kl}(n) for k,l <= 4, n <= 40", 60, elder_identity},
      {3, "F_k generating function for k <= 10, n <= 200", 0, f_generating_function},
      {4, "C = D = series for k,r <= 3, n <= 40; C_{2,2}(8) = 3", 0, c_and_d},
      {5, "E oracle vs closed form for n <= 40; R(t^2) construction", 0, e_statistic},
      {6, "HH triple-route agreement, p in {2,3,5,7}", 120, hh_triple_agreement},
      {7, "p = 2 degree-two simplification", 1, p2_simplification},
      {8, "signed graph sum = (-1)^r r! for r <= 6", 1, signed_graph_sum},
      {9, "graph sum counts ordered tuples; asymptotics (0, (-1)^r r!)", 60, tuple_counting},
      {10, "theta sums equal Q(t) P(t)", 0, theta_sum_series},
      {11, "verify --suite all exits 0", 300, verify_all},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      c.body();
    } catch (const Mismatch& m) {
      ok = false;
      detail = m.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      ok = false;
      detail = "exceeded " + std::to_string(c.limit_seconds) + " s";
    }
    failures += !ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "  (" << secs << " s";
    if (c.limit_seconds > 0) line << ", limit " << c.limit_seconds << " s";
    line << ")";
    if (!detail.empty()) line << "  " << detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

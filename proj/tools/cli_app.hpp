#pragma once

// Command-line front end: `dim`, `series` and `verify`.
// Exit status: 0 success, 1 verification failure, 2 usage error, 3 cap exceeded.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "symcoh/symcoh.hpp"

namespace symcoh::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResource = 3 };

inline constexpr std::size_t kDefaultEnumCap = 40;
inline constexpr std::size_t kDefaultOrderCap = 1000;
inline constexpr std::size_t kHardOrderCap = 5000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One output row: index n plus label -> decimal string.
struct OutputRecord {
  std::uint64_t n;
  std::vector<std::pair<std::string, std::string>> values;
};

using Json = nlohmann::ordered_json;

struct Report {
  std::string command;
  Json params = Json::object();
  std::vector<std::string> labels;
  std::vector<OutputRecord> records;
};

inline void write_report(const Report& report, const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json doc;
    doc["meta"] = {{"command", report.command}, {"params", report.params}, {"version", kVersion}};
    doc["data"] = Json::array();
    for (const auto& rec : report.records) {
      Json values = Json::object();
      for (const auto& [label, value] : rec.values) values[label] = value;
      doc["data"].push_back({{"n", rec.n}, {"values", values}});
    }
    out << doc.dump(2) << '\n';
    return;
  }
  auto field = [](const std::string& s) -> const std::string& {
    if (s.find_first_of(",\n\r") != std::string::npos) throw InvariantViolation("CSV field needs quoting: " + s);
    return s;
  };
  out << 'n';
  for (const auto& label : report.labels) out << ',' << field(label);
  out << '\n';
  for (const auto& rec : report.records) {
    out << rec.n;
    for (const auto& [label, value] : rec.values) out << ',' << field(value);
    out << '\n';
  }
}

struct Caps {
  std::size_t enum_cap = kDefaultEnumCap;
  std::size_t order_cap = kDefaultOrderCap;

  EnumerationCap enumeration() const { return EnumerationCap{enum_cap, false}; }

  void check_enum(std::uint64_t n) const {
    if (n > enum_cap)
      throw ResourceError("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(enum_cap) +
                          " (raise it with --enum-cap, at most " + std::to_string(kEnumerationHardCap) + ")");
  }

  void check_order(std::uint64_t n) const {
    if (n > order_cap)
      throw ResourceError("order " + std::to_string(n) + " exceeds the order cap " + std::to_string(order_cap) +
                          " (raise it with --order-cap, at most " + std::to_string(kHardOrderCap) + ")");
  }
};

// ---- dim ------------------------------------------------------------------

struct DimArgs {
  unsigned degree = 0;
  std::uint64_t prime = 2;
  std::uint64_t n_max = 10;
  std::string route = "formula";
};

inline int cmd_dim(const DimArgs& args, const Caps& caps, const std::string& format, std::ostream& out,
                   std::ostream& err) {
  const Prime p(args.prime);
  const bool all = args.route == "all";
  const bool want_formula = all || args.route == "formula";
  const bool want_series = all || args.route == "series";
  const bool want_oracle = all || args.route == "oracle";
  caps.check_order(args.n_max);
  if (want_oracle) caps.check_enum(args.n_max);

  Report report{"dim", {{"degree", args.degree}, {"prime", args.prime}, {"n_max", args.n_max}, {"route", args.route}}};
  if (want_formula) report.labels.push_back("formula");
  if (want_series) report.labels.push_back("series");
  if (want_oracle) report.labels.push_back("oracle");

  std::optional<TruncatedSeries> series;
  if (want_series) series = hh_dim_series(args.degree, p, args.n_max);

  std::optional<std::string> disagreement;
  for (std::uint64_t n = 0; n <= args.n_max; ++n) {
    OutputRecord rec{n, {}};
    std::vector<BigInt> seen;
    if (want_formula) seen.push_back(hh_dim_formula(args.degree, n, p));
    if (want_series) seen.push_back((*series)[n]);
    if (want_oracle) seen.push_back(hh_dim_oracle(args.degree, n, p, caps.enumeration()));
    for (std::size_t i = 0; i < seen.size(); ++i) rec.values.emplace_back(report.labels[i], to_decimal(seen[i]));
    for (const auto& v : seen)
      if (v != seen.front() && !disagreement) {
        std::ostringstream msg;
        msg << "routes disagree at n=" << n << ":";
        for (const auto& [label, value] : rec.values) msg << ' ' << label << '=' << value;
        disagreement = msg.str();
      }
    report.records.push_back(std::move(rec));
  }
  write_report(report, format, out);
  if (disagreement) {
    err << "error: " << *disagreement << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

// ---- series ---------------------------------------------------------------

struct SeriesArgs {
  std::string which = "P";
  std::vector<std::uint64_t> params;
  std::uint64_t order = 10;
};

inline std::size_t series_arity(const std::string& which) {
  static const std::map<std::string, std::size_t> arity{{"P", 0}, {"F", 1}, {"G", 2}, {"CD", 2}, {"E", 0}, {"HH", 2}};
  return arity.at(which);
}

/// Multiplier R(t) of P(t) for the named statistic.
inline RationalFunction series_multiplier(const SeriesArgs& args) {
  const auto& q = args.params;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] == 0 && !(args.which == "HH" && i == 0)) throw UsageError("series parameters must be positive");
  if (args.which == "P") return RationalFunction::one();
  if (args.which == "F") return F_series(q[0]);
  if (args.which == "G") return F_series(q[0] * q[1]);
  if (args.which == "CD") return CD_series(q[0], q[1]);
  if (args.which == "E") return E_series();
  if (q[0] > 2) throw UsageError("HH degree must be 0, 1 or 2");
  return hh_rational(static_cast<unsigned>(q[0]), Prime(q[1]));
}

inline int cmd_series(const SeriesArgs& args, const Caps& caps, const std::string& format, std::ostream& out) {
  if (args.params.size() != series_arity(args.which))
    throw UsageError("--which " + args.which + " takes " + std::to_string(series_arity(args.which)) +
                     " parameter(s), got " + std::to_string(args.params.size()));
  caps.check_order(args.order);
  const RationalFunction multiplier = series_multiplier(args);
  const TruncatedSeries coeffs = expand_with_partition_factor(multiplier, args.order);

  std::string label = args.which;
  for (auto v : args.params) label += '_' + std::to_string(v);
  Report report{"series", {{"which", args.which}, {"params", args.params}, {"order", args.order}}, {label}, {}};
  for (std::uint64_t n = 0; n <= args.order; ++n) report.records.push_back({n, {{label, to_decimal(coeffs[n])}}});
  write_report(report, format, out);
  return kOk;
}

// ---- verify ---------------------------------------------------------------

struct Counterexample {
  std::uint64_t n;
  std::string params;
  BigInt lhs;
  BigInt rhs;
};

using CheckResult = std::optional<Counterexample>;

struct Check {
  std::string suite;
  std::string identity;
  std::string reference;
  std::string range;
  std::function<CheckResult()> run;
};

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t n_max = 40;
  unsigned r_max = 6;
};

inline CheckResult compare(std::uint64_t n, std::string params, const BigInt& lhs, const BigInt& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Counterexample{n, std::move(params), lhs, rhs};
}

inline std::vector<Check> build_checks(const VerifyArgs& args, const Caps& caps) {
  const std::uint64_t N = args.n_max;
  const EnumerationCap cap = caps.enumeration();
  const std::string n_range = "n<=" + std::to_string(N);
  std::vector<Check> checks;

  // euler
  constexpr std::size_t kEulerSeriesOrder = 500;
  checks.push_back({"euler", "pentagonal reciprocal equals Euler product", "Euler pentagonal number theorem",
                    "n<=500", [] {
                      const auto a = series_div(
                          [] {
                            TruncatedSeries one(kEulerSeriesOrder);
                            one[0] = 1;
                            return one;
                          }(),
                          pentagonal_series(kEulerSeriesOrder));
                      const auto b = euler_product_series(kEulerSeriesOrder);
                      for (std::uint64_t n = 0; n <= kEulerSeriesOrder; ++n)
                        if (auto c = compare(n, "", a[n], b[n])) return c;
                      return CheckResult{};
                    }});
  checks.push_back({"euler", "P(t) times prod(1-t^m) is 1", "Euler product identity", "n<=500", [] {
                      TruncatedSeries prod(kEulerSeriesOrder);
                      prod[0] = 1;
                      for (std::uint64_t m = 1; m <= kEulerSeriesOrder; ++m) prod.mul_one_minus(m);
                      const auto one = series_mul(euler_partition_series(kEulerSeriesOrder), prod);
                      for (std::uint64_t n = 0; n <= kEulerSeriesOrder; ++n)
                        if (auto c = compare(n, "", one[n], n == 0 ? 1 : 0)) return c;
                      return CheckResult{};
                    }});
  checks.push_back({"euler", "P(t) coefficients equal partition enumeration", "partition count", n_range, [=] {
                      const auto P = euler_partition_series(N);
                      for (std::uint64_t n = 0; n <= N; ++n) {
                        std::uint64_t count = 0;
                        for ([[maybe_unused]] const auto& lambda : enumerate_partitions(n, cap)) ++count;
                        if (auto c = compare(n, "", P[n], count)) return c;
                        if (auto c = compare(n, "", partition_count(static_cast<std::int64_t>(n)), count)) return c;
                      }
                      return CheckResult{};
                    }});

  // elder
  checks.push_back({"elder", "G_k_l(n) = F_kl(n)", "Elder-Stanley theorem", "k<=4 l<=4 " + n_range, [=] {
                      for (std::uint64_t k = 1; k <= 4; ++k)
                        for (std::uint64_t l = 1; l <= 4; ++l)
                          for (std::uint64_t n = 0; n <= N; ++n) {
                            const std::string ps = "k=" + std::to_string(k) + " l=" + std::to_string(l);
                            const BigInt oracle = G_oracle(k, l, n, cap);
                            if (auto c = compare(n, ps + " oracle-vs-F", oracle, F_closed(k * l, n))) return c;
                            if (auto c = compare(n, ps + " oracle-vs-G", oracle, G_closed(k, l, n))) return c;
                          }
                      return CheckResult{};
                    }});
  checks.push_back({"elder", "F_k(n) closed sum equals part count", "F_k definition", "k<=6 " + n_range, [=] {
                      for (std::uint64_t k = 1; k <= 6; ++k)
                        for (std::uint64_t n = 0; n <= N; ++n) {
                          const std::string ps = "k=" + std::to_string(k);
                          if (auto c = compare(n, ps, F_oracle(k, n, cap), F_closed(k, n))) return c;
                          if (n >= k)
                            if (auto c = compare(n, ps + " recurrence", F_closed(k, n),
                                                 F_closed(k, n - k) + partition_count(std::int64_t(n - k))))
                              return c;
                        }
                      return CheckResult{};
                    }});
  checks.push_back({"elder", "sum F_k(n) t^n = t^k/(1-t^k) P(t)", "F_k generating function", "k<=10 n<=200", [] {
                      for (std::uint64_t k = 1; k <= 10; ++k) {
                        const auto s = expand_with_partition_factor(F_series(k), 200);
                        for (std::uint64_t n = 0; n <= 200; ++n)
                          if (auto c = compare(n, "k=" + std::to_string(k), s[n], F_closed(k, n))) return c;
                      }
                      return CheckResult{};
                    }});

  // cd
  checks.push_back({"cd", "C_k_r(n) = D_k_r(n) = series", "C and D partition identity", "k<=3 r<=3 " + n_range, [=] {
                      for (std::uint64_t k = 1; k <= 3; ++k)
                        for (std::uint64_t r = 1; r <= 3; ++r) {
                          const auto s = expand_with_partition_factor(CD_series(k, r), N);
                          const std::string ps = "k=" + std::to_string(k) + " r=" + std::to_string(r);
                          for (std::uint64_t n = 0; n <= N; ++n) {
                            const auto [cv, dv] = CD_oracle(k, r, n, cap);
                            if (auto c = compare(n, ps + " C-vs-D", cv, dv)) return c;
                            if (auto c = compare(n, ps + " C-vs-series", cv, s[n])) return c;
                            if (auto c = compare(n, ps + " C-vs-closed", cv, C_closed(k, r, n))) return c;
                          }
                        }
                      return CheckResult{};
                    }});
  checks.push_back({"cd", "q(n;r) = [t^n] Q_r(t)", "distinct-part generating function", "r<=4 n<=30", [] {
                      for (std::uint64_t r = 1; r <= 4; ++r) {
                        const auto s = rf_expand(q_series(r), 30);
                        for (std::uint64_t n = 0; n <= 30; ++n)
                          if (auto c = compare(n, "r=" + std::to_string(r), q_count(n, r), s[n])) return c;
                      }
                      return CheckResult{};
                    }});

  // e
  checks.push_back({"e", "E(n) = [t^n] (t^4+2t^8)/((1-t^2)(1-t^6)) P(t)", "E generating function", n_range, [=] {
                      const auto s = expand_with_partition_factor(E_series(), N);
                      for (std::uint64_t n = 0; n <= N; ++n) {
                        const BigInt oracle = E_oracle(n, cap);
                        if (auto c = compare(n, "oracle-vs-series", oracle, s[n])) return c;
                        if (auto c = compare(n, "oracle-vs-closed", oracle, E_closed(n))) return c;
                      }
                      return CheckResult{};
                    }});
  checks.push_back({"e", "R(t^2) equals the closed E multiplier", "E pair-count construction", "exact", [] {
                      const RationalFunction closed(Polynomial{0, 0, 0, 0, 1, 0, 0, 0, 2}, FactoredDenominator{2, 6});
                      const bool ok = rf_eq(E_pair_series().substitute_power(2), closed);
                      return compare(0, "rf_eq", ok ? 1 : 0, 1);
                    }});

  // hh
  const std::vector<std::uint64_t> primes{2, 3, 5, 7};
  checks.push_back({"hh", "formula equals centraliser oracle", "HH dimension formulas", "p<=7 r<=2 " + n_range, [=] {
                      for (auto pv : primes)
                        for (unsigned r = 0; r <= 2; ++r)
                          for (std::uint64_t n = 0; n <= N; ++n) {
                            const Prime p(pv);
                            const std::string ps = "p=" + std::to_string(pv) + " r=" + std::to_string(r);
                            if (auto c = compare(n, ps, hh_dim_formula(r, n, p), hh_dim_oracle(r, n, p, cap))) return c;
                          }
                      return CheckResult{};
                    }});
  checks.push_back({"hh", "formula equals R_p_r(t) P(t)", "HH generating functions", "p<=7 r<=2 n<=200", [primes] {
                      for (auto pv : primes)
                        for (unsigned r = 0; r <= 2; ++r) {
                          const Prime p(pv);
                          const auto s = hh_dim_series(r, p, 200);
                          for (std::uint64_t n = 0; n <= 200; ++n)
                            if (auto c = compare(n, "p=" + std::to_string(pv) + " r=" + std::to_string(r),
                                                 hh_dim_formula(r, n, p), s[n]))
                              return c;
                        }
                      return CheckResult{};
                    }});
  checks.push_back({"hh", "five-term p=2 sum simplifies", "HH2 p=2 simplification", "exact", [] {
                      return compare(0, "rf_eq", hh2_p2_identity_check() ? 1 : 0, 1);
                    }});
  checks.push_back({"hh", "HH1 and HH2 as sums of G C D E", "HH1 and HH2 decompositions", n_range, [=] {
                      const Prime two(2);
                      for (std::uint64_t n = 0; n <= N; ++n) {
                        auto G = [&](std::uint64_t k, std::uint64_t l) { return G_oracle(k, l, n, cap); };
                        const BigInt hh1 = G(2, 1) + G(1, 2);
                        if (auto c = compare(n, "p=2 r=1", hh_dim_formula(1, n, two), hh1)) return c;
                        const auto cd = CD_oracle(2, 2, n, cap);
                        const BigInt hh2 = G(2, 1) + G(2, 2) + G(2, 3) + G(1, 2) + G(1, 4) + cd.c + E_oracle(n, cap) + cd.d;
                        if (auto c = compare(n, "p=2 r=2", hh_dim_formula(2, n, two), hh2)) return c;
                        for (std::uint64_t pv : {3, 5, 7}) {
                          const Prime p(pv);
                          const std::string ps = "p=" + std::to_string(pv);
                          if (auto c = compare(n, ps + " r=1", hh_dim_formula(1, n, p), G(pv, 1))) return c;
                          if (auto c = compare(n, ps + " r=2", hh_dim_formula(2, n, p),
                                               G(pv, 1) + CD_oracle(pv, 2, n, cap).c))
                            return c;
                        }
                      }
                      return CheckResult{};
                    }});

  // graph
  const unsigned r_graph = args.r_max;
  checks.push_back({"graph", "sum (-1)^(c+e) = (-1)^r r!", "chromatic polynomial at -1",
                    "r<=" + std::to_string(r_graph), [=] {
                      for (unsigned r = 1; r <= r_graph; ++r) {
                        const BigInt expected = (r % 2 == 0 ? 1 : -1) * factorial(r);
                        if (auto c = compare(r, "r=" + std::to_string(r), chromatic_sum_check(r), expected)) return c;
                      }
                      return CheckResult{};
                    }});

  // rational
  const unsigned r_spec = std::min(args.r_max, 3U);
  const std::uint64_t n_rat = std::min<std::uint64_t>(30, N);
  auto for_each_spec = [r_spec](const std::function<CheckResult(const WeightSpec&)>& body) -> CheckResult {
    for (unsigned r = 1; r <= r_spec; ++r) {
      std::vector<WeightPair> pairs(r, WeightPair{1, 1});
      while (true) {
        if (auto c = body(WeightSpec(pairs))) return c;
        std::size_t i = 0;
        for (; i < 2 * r; ++i) {
          auto& slot = i % 2 == 0 ? pairs[i / 2].k : pairs[i / 2].l;
          if (slot < 3) {
            ++slot;
            break;
          }
          slot = 1;
        }
        if (i == 2 * r) break;
      }
    }
    return CheckResult{};
  };
  const std::string spec_range = "r<=" + std::to_string(r_spec) + " k<=3 l<=3";
  checks.push_back({"rational", "[t^n] Q(t) counts distinct weighted tuples", "signed graph sum",
                    spec_range + " n<=30", [=] {
                      return for_each_spec([](const WeightSpec& spec) -> CheckResult {
                        const auto s = rf_expand(q_graph_sum(spec), 30);
                        for (std::uint64_t n = 1; n <= 30; ++n)
                          if (auto c = compare(n, spec.to_string(), s[n], tuple_count_oracle(n, spec))) return c;
                        return CheckResult{};
                      });
                    }});
  checks.push_back({"rational", "Q(t) has total degree 0 and leading coefficient (-1)^r r!",
                    "signed graph sum asymptotics", spec_range, [=] {
                      return for_each_spec([](const WeightSpec& spec) -> CheckResult {
                        const auto a = rf_asymptotics(q_graph_sum(spec));
                        const auto r = static_cast<unsigned>(spec.size());
                        const BigInt expected = (r % 2 == 0 ? 1 : -1) * factorial(r);
                        if (auto c = compare(0, spec.to_string() + " degree", a.total_degree, 0)) return c;
                        if (auto c = compare(0, spec.to_string() + " denominator", a.leading_coefficient.denominator(), 1))
                          return c;
                        return compare(0, spec.to_string() + " leading", a.leading_coefficient.numerator(), expected);
                      });
                    }});
  checks.push_back({"rational", "theta sum equals [t^n] Q(t) P(t)", "theta-weighted partition sums",
                    spec_range + " n<=" + std::to_string(n_rat), [=] {
                      return for_each_spec([=](const WeightSpec& spec) -> CheckResult {
                        const auto s = expand_with_partition_factor(q_graph_sum(spec), n_rat);
                        for (std::uint64_t n = 1; n <= n_rat; ++n)
                          if (auto c = compare(n, spec.to_string(), theta_sum_oracle(n, spec, cap), s[n])) return c;
                        return CheckResult{};
                      });
                    }});

  if (args.suite == "all") return checks;
  std::vector<Check> selected;
  for (auto& c : checks)
    if (c.suite == args.suite) selected.push_back(std::move(c));
  return selected;
}

inline int cmd_verify(const VerifyArgs& args, const Caps& caps, const std::string& format, std::ostream& out,
                      std::ostream& err) {
  if (args.r_max < 1 || args.r_max > kMaxGraphSumVertices)
    throw UsageError("--r-max must lie in 1.." + std::to_string(kMaxGraphSumVertices));
  caps.check_enum(args.n_max);
  const auto checks = build_checks(args, caps);

  Report report{"verify",
                {{"suite", args.suite}, {"n_max", args.n_max}, {"r_max", args.r_max}},
                {"suite", "identity", "reference", "range", "status"},
                {}};
  std::optional<Counterexample> first_failure;
  std::uint64_t index = 0;
  for (const auto& check : checks) {
    const CheckResult result = check.run();
    if (result && !first_failure) first_failure = result;
    report.records.push_back({index++,
                              {{"suite", check.suite},
                               {"identity", check.identity},
                               {"reference", check.reference},
                               {"range", check.range},
                               {"status", result ? "fail" : "pass"}}});
  }
  write_report(report, format, out);
  if (first_failure) {
    err << "error: first counterexample: n=" << first_failure->n << " params=" << first_failure->params
        << " lhs=" << first_failure->lhs << " rhs=" << first_failure->rhs << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

// ---- entry point ----------------------------------------------------------

inline int run(std::vector<std::string> argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dimensions of Hochschild cohomology of symmetric groups and related partition identities",
               "symcoh"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Caps caps;
  std::string format = "csv";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--enum-cap", caps.enum_cap, "Largest n for partition enumeration")
        ->check(CLI::Range(std::size_t{0}, kEnumerationHardCap));
    sub->add_option("--order-cap", caps.order_cap, "Largest series order")
        ->check(CLI::Range(std::size_t{0}, kHardOrderCap));
  };

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "dim HH^r(F_p S_n) for n = 0..n_max");
  dim_cmd->add_option("--degree", dim.degree, "Cohomological degree")->required()->check(CLI::Range(0, 2));
  dim_cmd->add_option("--prime", dim.prime, "Prime p")->required();
  dim_cmd->add_option("--n-max", dim.n_max, "Largest n")->required();
  dim_cmd->add_option("--route", dim.route, "Computation route")
      ->check(CLI::IsMember({"formula", "series", "oracle", "all"}));
  add_common(dim_cmd);

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "Coefficients of a generating function");
  series_cmd->add_option("--which", series.which, "Generating function")
      ->required()
      ->check(CLI::IsMember({"P", "F", "G", "CD", "E", "HH"}));
  series_cmd->add_option("--params", series.params, "Parameters (comma separated)")->delimiter(',');
  series_cmd->add_option("--order", series.order, "Series order")->required();
  add_common(series_cmd);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check identities over bounded ranges");
  verify_cmd->add_option("--suite", verify.suite, "Identity suite")
      ->check(CLI::IsMember({"euler", "elder", "cd", "e", "hh", "graph", "rational", "all"}));
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n for enumeration checks");
  verify_cmd->add_option("--r-max", verify.r_max, "Largest vertex count for graph checks");
  add_common(verify_cmd);

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*dim_cmd) return cmd_dim(dim, caps, format, out, err);
    if (*series_cmd) return cmd_series(series, caps, format, out);
    return cmd_verify(verify, caps, format, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace symcoh::cli

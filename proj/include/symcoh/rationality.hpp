#pragma once

// Signed sums over labelled graphs that turn "distinct part lengths" conditions
// into rational functions, together with brute-force tuple and partition
// oracles for the same quantities.

#include <algorithm>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "symcoh/bigint.hpp"
#include "symcoh/errors.hpp"
#include "symcoh/partitions.hpp"
#include "symcoh/series.hpp"

namespace symcoh {

inline constexpr unsigned kMaxGraphVertices = 12;
inline constexpr unsigned kMaxGraphSumVertices = 8;

/// Simple graph on the vertex set {1..r}, edges kept as a bitmask over the
/// C(r,2) vertex pairs in lexicographic order.
class LabeledGraph {
 public:
  using EdgeMask = std::bitset<kMaxGraphVertices * (kMaxGraphVertices - 1) / 2>;

  explicit LabeledGraph(unsigned r, EdgeMask edges = {}) : r_(r), edges_(edges) {
    if (r < 1 || r > kMaxGraphVertices)
      throw DomainError("graph vertex count must lie in 1.." + std::to_string(kMaxGraphVertices));
    for (std::size_t i = pair_count(r); i < edges_.size(); ++i)
      if (edges_[i]) throw ContractViolation("edge bit outside the vertex pairs of the graph");
  }

  static std::size_t pair_count(unsigned r) { return std::size_t{r} * (r - 1) / 2; }

  /// Bit index of the pair {i, j}, 1 <= i < j <= r.
  static std::size_t edge_index(unsigned r, unsigned i, unsigned j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > r || i == j) throw DomainError("invalid vertex pair");
    // Pairs starting at vertex a < i come first; vertex a has r - a partners.
    const std::size_t before = std::size_t{i - 1} * r - std::size_t{i - 1} * i / 2;
    return before + (j - i - 1);
  }

  LabeledGraph& add_edge(unsigned i, unsigned j) {
    edges_.set(edge_index(r_, i, j));
    return *this;
  }

  bool has_edge(unsigned i, unsigned j) const { return edges_.test(edge_index(r_, i, j)); }

  unsigned vertex_count() const { return r_; }
  std::size_t edge_count() const { return edges_.count(); }
  const EdgeMask& edges() const { return edges_; }

  /// Edges as 1-based vertex pairs.
  std::vector<std::pair<unsigned, unsigned>> edge_list() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    std::size_t idx = 0;
    for (unsigned i = 1; i <= r_; ++i)
      for (unsigned j = i + 1; j <= r_; ++j, ++idx)
        if (edges_[idx]) out.emplace_back(i, j);
    return out;
  }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  unsigned r_;
  EdgeMask edges_;
};

/// Set partition of {1..r}; blocks ascending internally and ordered by least element.
class ComponentPartition {
 public:
  explicit ComponentPartition(std::vector<std::vector<unsigned>> blocks) : blocks_(std::move(blocks)) {
    for (auto& b : blocks_) {
      if (b.empty()) throw ContractViolation("empty block in set partition");
      std::sort(b.begin(), b.end());
    }
    std::sort(blocks_.begin(), blocks_.end());
  }

  const std::vector<std::vector<unsigned>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  friend auto operator<=>(const ComponentPartition&, const ComponentPartition&) = default;

 private:
  std::vector<std::vector<unsigned>> blocks_;
};

class GraphIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = LabeledGraph;
  using difference_type = std::ptrdiff_t;

  explicit GraphIterator(unsigned r) : graph_(r), pairs_(LabeledGraph::pair_count(r)) {}

  const LabeledGraph& operator*() const { return graph_; }
  const LabeledGraph* operator->() const { return &graph_; }

  GraphIterator& operator++() {
    // Binary increment of the edge mask; carrying past the last pair ends the walk.
    LabeledGraph::EdgeMask mask = graph_.edges();
    std::size_t i = 0;
    while (i < pairs_ && mask[i]) mask.reset(i++);
    if (i == pairs_) {
      done_ = true;
      return *this;
    }
    mask.set(i);
    graph_ = LabeledGraph(graph_.vertex_count(), mask);
    return *this;
  }
  void operator++(int) { ++*this; }

  friend bool operator==(const GraphIterator& it, std::default_sentinel_t) { return it.done_; }

 private:
  LabeledGraph graph_;
  std::size_t pairs_;
  bool done_ = false;
};

class GraphRange {
 public:
  explicit GraphRange(unsigned r) : r_(r) {}
  GraphIterator begin() const { return GraphIterator(r_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  unsigned r_;
};

/// All 2^C(r,2) graphs on {1..r} in increasing edge-mask order.
inline GraphRange enumerate_graphs(unsigned r) {
  if (r < 1 || r > kMaxGraphVertices)
    throw DomainError("graph vertex count must lie in 1.." + std::to_string(kMaxGraphVertices));
  return GraphRange(r);
}

inline ComponentPartition graph_components(const LabeledGraph& y) {
  const unsigned r = y.vertex_count();
  std::vector<unsigned> parent(r);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](unsigned v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [i, j] : y.edge_list()) {
    const unsigned a = find(i - 1), b = find(j - 1);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<unsigned, std::vector<unsigned>> by_root;
  for (unsigned v = 0; v < r; ++v) by_root[find(v)].push_back(v + 1);
  std::vector<std::vector<unsigned>> blocks;
  for (auto& [root, block] : by_root) blocks.push_back(std::move(block));
  return ComponentPartition(std::move(blocks));
}

/// Sum over all graphs Y on {1..r} of (-1)^(c(Y) + e(Y)).
inline BigInt chromatic_sum_check(unsigned r) {
  if (r < 1 || r > kMaxGraphSumVertices)
    throw DomainError("chromatic_sum_check needs 1 <= r <= " + std::to_string(kMaxGraphSumVertices));
  std::int64_t total = 0;
  for (const LabeledGraph& y : enumerate_graphs(r)) {
    const std::size_t parity = graph_components(y).block_count() + y.edge_count();
    total += parity % 2 == 0 ? 1 : -1;
  }
  return total;
}

struct WeightPair {
  std::uint64_t k;
  std::uint64_t l;

  friend bool operator==(const WeightPair&, const WeightPair&) = default;
};

/// Ordered list of (k_i, l_i); position i weights vertex i + 1.
class WeightSpec {
 public:
  WeightSpec(std::initializer_list<WeightPair> pairs) : WeightSpec(std::vector<WeightPair>(pairs)) {}
  explicit WeightSpec(std::vector<WeightPair> pairs) : pairs_(std::move(pairs)) {
    if (pairs_.empty()) throw DomainError("weight spec needs at least one pair");
    for (const auto& p : pairs_)
      if (p.k == 0 || p.l == 0) throw DomainError("weight spec entries must be positive");
  }

  std::size_t size() const { return pairs_.size(); }
  const WeightPair& operator[](std::size_t i) const { return pairs_.at(i); }
  const std::vector<WeightPair>& pairs() const { return pairs_; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (i) s += ' ';
      s += '(' + std::to_string(pairs_[i].k) + ' ' + std::to_string(pairs_[i].l) + ')';
    }
    return s + ']';
  }

 private:
  std::vector<WeightPair> pairs_;
};

/// t^(k_A l_A) / (1 - t^(k_A l_A)) for a block A: k_A = lcm, l_A = sum.
inline RationalFunction block_weight_rf(const std::vector<unsigned>& block, const WeightSpec& spec) {
  BigInt k_lcm = 1;
  BigInt l_sum = 0;
  for (unsigned v : block) {
    const WeightPair& w = spec[v - 1];
    k_lcm = boost::multiprecision::lcm(k_lcm, BigInt(w.k));
    l_sum += w.l;
  }
  const BigInt exponent = k_lcm * l_sum;
  if (exponent > std::numeric_limits<std::uint64_t>::max()) throw DomainError("block weight exponent overflows");
  return RationalFunction::geometric(exponent.convert_to<std::uint64_t>());
}

/// E_Y(t) = product over components A of Y of E_A(t).
inline RationalFunction graph_weight_rf(const LabeledGraph& y, const WeightSpec& spec) {
  if (spec.size() != y.vertex_count()) throw ContractViolation("weight spec length differs from vertex count");
  RationalFunction out = RationalFunction::one();
  const ComponentPartition components = graph_components(y);
  for (const auto& block : components.blocks()) out = rf_mul(out, block_weight_rf(block, spec));
  return out;
}

/// Q(t) = sum over graphs Y of (-1)^e(Y) E_Y(t). Graphs with the same
/// component partition share E_Y, so signs are tallied per partition first.
inline RationalFunction q_graph_sum(const WeightSpec& spec) {
  if (spec.size() > kMaxGraphSumVertices)
    throw DomainError("q_graph_sum needs at most " + std::to_string(kMaxGraphSumVertices) + " pairs");
  const auto r = static_cast<unsigned>(spec.size());
  std::map<ComponentPartition, std::int64_t> signed_counts;
  for (const LabeledGraph& y : enumerate_graphs(r))
    signed_counts[graph_components(y)] += y.edge_count() % 2 == 0 ? 1 : -1;

  RationalFunction sum(Polynomial{}, FactoredDenominator{});
  for (const auto& [components, count] : signed_counts) {
    if (count == 0) continue;
    RationalFunction term = RationalFunction::one();
    for (const auto& block : components.blocks()) term = rf_mul(term, block_weight_rf(block, spec));
    sum = rf_add(sum, rf_scale(term, BigInt(count)));
  }
  return sum;
}

inline constexpr std::uint64_t kTupleOracleMaxN = 60;
inline constexpr std::size_t kTupleOracleMaxR = 4;

namespace detail {

inline std::uint64_t count_tuples(const WeightSpec& spec, std::size_t i, std::uint64_t remaining,
                                  std::vector<std::uint64_t>& values) {
  if (i == spec.size()) return remaining == 0 ? 1 : 0;
  std::uint64_t min_rest = 0;
  for (std::size_t j = i + 1; j < spec.size(); ++j) min_rest += spec[j].k * spec[j].l;
  const std::uint64_t step = spec[i].k * spec[i].l;
  std::uint64_t count = 0;
  for (std::uint64_t u = 1; u * step + min_rest <= remaining; ++u) {
    const std::uint64_t value = spec[i].k * u;
    if (std::find(values.begin(), values.end(), value) != values.end()) continue;
    values.push_back(value);
    count += count_tuples(spec, i + 1, remaining - u * step, values);
    values.pop_back();
  }
  return count;
}

}  // namespace detail

/// Ordered tuples (u_1..u_r) of positive integers with n = sum l_i k_i u_i
/// and the products k_i u_i pairwise distinct.
inline BigInt tuple_count_oracle(std::uint64_t n, const WeightSpec& spec) {
  if (n > kTupleOracleMaxN || spec.size() > kTupleOracleMaxR)
    throw ResourceError("tuple_count_oracle is capped at n <= " + std::to_string(kTupleOracleMaxN) +
                        " and r <= " + std::to_string(kTupleOracleMaxR));
  std::vector<std::uint64_t> values;
  return detail::count_tuples(spec, 0, n, values);
}

/// 1 if k | x and y >= l, else 0.
inline unsigned theta(std::uint64_t k, std::uint64_t l, std::uint64_t x, std::uint64_t y) {
  if (k == 0) throw DomainError("theta needs k > 0");
  return x % k == 0 && y >= l ? 1 : 0;
}

namespace detail {

inline std::uint64_t count_theta_tuples(const std::vector<Part>& parts, const WeightSpec& spec, std::size_t i,
                                        std::vector<bool>& used) {
  if (i == spec.size()) return 1;
  std::uint64_t count = 0;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (used[j] || theta(spec[i].k, spec[i].l, parts[j].length, parts[j].multiplicity) == 0) continue;
    used[j] = true;
    count += count_theta_tuples(parts, spec, i + 1, used);
    used[j] = false;
  }
  return count;
}

}  // namespace detail

/// G(n) = sum over lambda |- n and ordered r-tuples of distinct part lengths
/// (m_1..m_r) of prod theta_{k_i,l_i}(m_i, lambda_{m_i}).
inline BigInt theta_sum_oracle(std::uint64_t n, const WeightSpec& spec, const EnumerationCap& cap = {}) {
  BigInt total = 0;
  for (const Partition& lambda : enumerate_partitions(n, cap)) {
    if (lambda.distinct_lengths() < spec.size()) continue;
    std::vector<bool> used(lambda.distinct_lengths());
    total += detail::count_theta_tuples(lambda.parts(), spec, 0, used);
  }
  return total;
}

}  // namespace symcoh

#pragma once

// Edge counts of J_n(a) by three independent routes, the complete-prefix
// count and the search for the smallest graph with a single Jaconian vertex
// of degree a(a+1).

#include <memory>
#include <string>
#include <vector>

#include "jaco/errors.hpp"
#include "jaco/graph.hpp"
#include "jaco/sequences.hpp"

namespace jaco {

// Sum of the finite out-degrees.
inline Int edge_count_direct(const JacoGraph& g) {
  Int total = 0;
  for (Int i = 1; i <= g.size(); ++i) total += g.out_degree(i);
  return total;
}

// Arcs of the complete Hope subgraph plus the out-degrees of v_1..v_k, with
// k the prime Jaconian vertex. Every arc whose tail lies above k stays inside
// the Hope subgraph, so the two parts are disjoint and exhaustive.
inline Int edge_count_theorem(const JacoGraph& g) {
  const Int k = jaconian(g).prime;
  const Int hope = g.size() - k;
  Int total = hope * (hope - 1) / 2;
  for (Int i = 1; i <= k; ++i) total += g.out_degree(i);
  return total;
}

// Edge counts of J_1(a)..J_N(a), one vertex at a time. Adding v_{n+1} to
// J_n(a) with prime Jaconian vertex v_i links v_{i+1}..v_n to it, and also
// v_i itself unless v_i is already saturated at degree a*i.
inline std::vector<Int> edge_count_recursive(Order a, Int n_max) {
  if (n_max < 1) throw DomainError("edge_count_recursive needs N >= 1");
  const auto table = std::make_shared<const SequenceTable>(a, n_max);
  std::vector<Int> eps{0};
  eps.reserve(static_cast<std::size_t>(n_max));
  for (Int n = 1; n < n_max; ++n) {
    const JacoGraph g(table, n);
    const Int i = jaconian(g).prime;
    const bool saturated = g.degree(i) == a.value() * i;
    eps.push_back(eps.back() - i + n + (saturated ? 0 : 1));
  }
  return eps;
}

struct EdgeCountReport {
  Int a = 1;
  Int n = 1;
  Int direct = 0;
  Int theorem = 0;
  Int recursive = 0;

  bool agree() const noexcept { return direct == theorem && theorem == recursive; }
};

inline EdgeCountReport edge_count_report(Order a, Int n) {
  const JacoGraph g = build(a, n);
  return {a.value(), n, edge_count_direct(g), edge_count_theorem(g),
          edge_count_recursive(a, n).back()};
}

// Edge count of J_m(a) while m <= a+1, where the graph is complete.
inline Int complete_prefix_count(Order a, Int m) {
  if (m < 1 || m > a.value() + 1)
    throw DomainError("complete_prefix_count needs 1 <= m <= a+1, got m = " +
                      std::to_string(m));
  return m * (m - 1) / 2;
}

struct MilestoneResult {
  Int a = 1;
  Int n_star = 0;
};

// Smallest n with maximum degree a(a+1) attained by v_{a+1} alone. The
// answer is a(a+1)+1; the search gives up at twice that.
inline MilestoneResult milestone_delta(Order a) {
  const Int av = a.value();
  const Int target = av * (av + 1);
  const Int bound = 2 * (target + 1);
  const auto table = std::make_shared<const SequenceTable>(a, bound);
  for (Int n = 1; n <= bound; ++n) {
    const JaconianInfo info = jaconian(JacoGraph(table, n));
    if (info.delta == target && info.jaconian.size() == 1 && info.jaconian.front() == av + 1)
      return {av, n};
  }
  throw TheoremViolation("no J_n(" + std::to_string(av) + ") with n <= " +
                         std::to_string(bound) + " has a single Jaconian vertex v_" +
                         std::to_string(av + 1) + " of degree " + std::to_string(target));
}

}  // namespace jaco

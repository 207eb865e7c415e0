#pragma once

// Slow reference implementations. Each one works straight from a definition
// and shares no code path with the routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "jaco/graph.hpp"
#include "jaco/sequences.hpp"

namespace jaco::oracle {

// c_{a,n} by scanning every k < n; O(N^2).
inline std::vector<Int> c_series_brute_force(Order a, Int horizon) {
  std::vector<Int> c(static_cast<std::size_t>(horizon) + 1, 0);
  if (horizon >= 1) c[1] = 1;
  for (Int n = 2; n <= horizon; ++n) {
    for (Int k = 1; k < n; ++k) {
      if (a.value() * k + c[k] >= n) {
        c[n] = k;
        break;
      }
    }
  }
  return c;
}

// Explicit arc lists built by inserting v_1, v_2, ... and linking each new
// v_j from every earlier v_i with (a+1)i - d-(v_i) >= j, where d-(v_i) is
// the in-degree v_i has in the graph built so far.
struct NaiveGraph {
  Int n = 0;
  std::vector<std::pair<Int, Int>> arcs;  // (tail, head), lexicographic
  std::vector<Int> in_degree;             // 1-based
};

inline NaiveGraph naive_build(Order a, Int n) {
  NaiveGraph g;
  g.n = n;
  g.in_degree.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Int j = 2; j <= n; ++j) {
    for (Int i = 1; i < j; ++i) {
      if ((a.value() + 1) * i - g.in_degree[i] >= j) {
        g.arcs.emplace_back(i, j);
        ++g.in_degree[j];
      }
    }
  }
  std::sort(g.arcs.begin(), g.arcs.end());
  return g;
}

// Arcs of the range-based graph, enumerated in (tail, head) order.
inline std::vector<std::pair<Int, Int>> arc_list(const JacoGraph& g) {
  std::vector<std::pair<Int, Int>> arcs;
  for (Int i = 1; i <= g.size(); ++i)
    for (Int j : g.out_neighbors(i)) arcs.emplace_back(i, j);
  return arcs;
}

// Hop distances from v_1 by breadth-first search over directed arcs.
inline std::vector<Int> bfs_distances(const JacoGraph& g) {
  std::vector<Int> dist(static_cast<std::size_t>(g.size()) + 1, -1);
  std::deque<Int> queue{1};
  dist[1] = 0;
  while (!queue.empty()) {
    const Int v = queue.front();
    queue.pop_front();
    for (Int w : g.out_neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  dist[0] = 0;
  return dist;
}

struct ShortestPathCount {
  Int length = 0;
  std::uint64_t count = 0;
};

namespace detail {

inline std::uint64_t count_walks_of_length(const JacoGraph& g, Int from, Int to, Int hops) {
  if (hops == 0) return from == to ? 1 : 0;
  std::uint64_t total = 0;
  for (Int w : g.out_neighbors(from)) {
    if (w > to) break;
    total += count_walks_of_length(g, w, to, hops - 1);
  }
  return total;
}

}  // namespace detail

// For each target, enumerates every path from v_1 with 0, 1, 2, ... hops and
// stops at the first length that reaches it. Exponential; small n only.
inline std::vector<ShortestPathCount> enumerate_shortest_paths(const JacoGraph& g) {
  std::vector<ShortestPathCount> out(static_cast<std::size_t>(g.size()) + 1);
  for (Int target = 1; target <= g.size(); ++target) {
    for (Int hops = 0; hops < target; ++hops) {
      const std::uint64_t paths = detail::count_walks_of_length(g, 1, target, hops);
      if (paths > 0) {
        out[target] = {hops, paths};
        break;
      }
    }
  }
  return out;
}

// Counts, for every value 0..limit, the digit strings over the Lucas basis
// that obey the generalized Zeckendorf rules. The enumeration walks the full
// box of digits 0..a at every basis position with U_i <= limit and filters
// afterwards, so it does not assume the rules produce at most one string.
struct ZeckCensus {
  std::vector<Int> valid;   // per value
  std::uint64_t examined = 0;
};

inline ZeckCensus zeck_census(Order a, Int limit) {
  const Int av = a.value();
  std::vector<Int> basis;  // U_1, U_2, ... <= limit
  for (Int prev = 0, cur = 1; cur <= limit;) {
    basis.push_back(cur);
    const Int next = av * cur + prev;
    prev = cur;
    cur = next;
  }
  ZeckCensus census;
  census.valid.assign(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<Int> digits(basis.size(), 0);

  auto obeys_rules = [&] {
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (i == 0 && digits[0] >= av) return false;
      if (digits[i] == av && i > 0 && digits[i - 1] != 0) return false;
    }
    return true;
  };

  // positions are filled from the most significant down
  auto recurse = [&](auto&& self, std::size_t pos, Int value) -> void {
    if (pos == 0) {
      ++census.examined;
      if (obeys_rules()) ++census.valid[value];
      return;
    }
    const std::size_t i = pos - 1;
    for (Int d = 0; d <= av && value + d * basis[i] <= limit; ++d) {
      digits[i] = d;
      self(self, i, value + d * basis[i]);
    }
    digits[i] = 0;
  };
  recurse(recurse, basis.size(), 0);
  return census;
}

}  // namespace jaco::oracle

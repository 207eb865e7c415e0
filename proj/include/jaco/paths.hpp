#pragma once

// Shortest paths from v_1 in J_n(a): hop distances, shortest-path counts
// psi, the uniqueness criterion at a = 1, distance-root vertices and the
// non-repetition scanner.
//
// All per-vertex arrays are indexed by vertex number; slot 0 is unused.

#include <algorithm>
#include <cstddef>
#include <future>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "jaco/errors.hpp"
#include "jaco/graph.hpp"
#include "jaco/sequences.hpp"

namespace jaco {

// Shortest-path counts pass 2^63 near n = 10^4 at a = 1 and keep growing.
using PathCount = boost::multiprecision::cpp_int;

// Positive Fibonacci numbers 1, 2, 3, 5, 8, ...
inline bool is_fibonacci(Int x) {
  if (x < 1) return false;
  for (Int prev = 1, cur = 1; cur <= x;) {
    if (cur == x) return true;
    const Int next = prev + cur;
    prev = cur;
    cur = next;
  }
  return false;
}

// dist[i] = dist[k] + 1 with k the smallest vertex whose reach covers i.
inline std::vector<Int> distances(const JacoGraph& g) {
  const SequenceTable& seq = g.sequence();
  std::vector<Int> dist(static_cast<std::size_t>(g.size()) + 1, 0);
  Int k = 1;
  for (Int i = 2; i <= g.size(); ++i) {
    while (seq.reach(k) < i) ++k;
    dist[i] = dist[k] + 1;
  }
  return dist;
}

// Shortest-path counting by dynamic programming over in-neighborhoods.
inline std::vector<PathCount> psi_oracle(const JacoGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<Int> dist(n + 1, 0);
  std::vector<PathCount> psi(n + 1);
  psi[1] = 1;
  for (Int j = 2; j <= g.size(); ++j) {
    const VertexRange preds = g.in_neighbors(j);
    Int best = dist[preds.front()];
    for (Int i : preds) best = std::min(best, dist[i]);
    dist[j] = best + 1;
    for (Int i : preds)
      if (dist[i] == best) psi[j] += psi[i];
  }
  return psi;
}

// psi at a = 1 from the Fibonacci-window recursion: a vertex whose infinite
// out-degree is Fibonacci has a unique shortest path, every other v_j sums
// psi over the consecutive run from its lowest in-neighbor up to the largest
// Fibonacci number below j.
inline std::vector<PathCount> psi_recursive(const JacoGraph& g) {
  if (g.order().value() != 1)
    throw UnsupportedOrder("the psi recursion is only stated for a = 1");
  const SequenceTable& seq = g.sequence();
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<PathCount> psi(n + 1);
  std::vector<PathCount> prefix(n + 1);  // prefix[i] = psi[1] + ... + psi[i]

  Int fib_prev = 1, fib = 2;  // fib_prev = largest Fibonacci number < j
  for (Int j = 1; j <= g.size(); ++j) {
    while (fib < j) {
      const Int next = fib_prev + fib;
      fib_prev = fib;
      fib = next;
    }
    if (is_fibonacci(seq.d_plus(j))) {
      psi[j] = 1;
    } else {
      const Int low = seq.c(j);
      if (low > fib_prev)
        throw TheoremViolation("empty Fibonacci window at vertex " + std::to_string(j));
      psi[j] = prefix[fib_prev] - prefix[low - 1];
    }
    prefix[j] = prefix[j - 1] + psi[j];
  }
  return psi;
}

struct UniquenessCheck {
  std::vector<bool> unique;        // psi(v_j) == 1
  std::vector<Int> disagreements;  // j where uniqueness != (d+(v_j) is Fibonacci)

  bool agrees() const noexcept { return disagreements.empty(); }
};

// Compares the shortest-path count criterion psi = 1 against Fibonacci
// membership of the infinite out-degree, vertex by vertex.
inline UniquenessCheck uniqueness_check(const JacoGraph& g) {
  if (g.order().value() != 1)
    throw UnsupportedOrder("the uniqueness criterion is only stated for a = 1");
  const std::vector<PathCount> psi = psi_oracle(g);
  UniquenessCheck check;
  check.unique.assign(psi.size(), false);
  for (Int j = 1; j <= g.size(); ++j) {
    check.unique[j] = psi[j] == 1;
    if (check.unique[j] != is_fibonacci(g.sequence().d_plus(j)))
      check.disagreements.push_back(j);
  }
  return check;
}

struct PathTable {
  Int n = 0;
  std::vector<Int> dist;
  std::vector<PathCount> psi;  // empty unless requested
};

// Liz-number indices B_2, B_3, ... below n, plus n.
struct DistanceRootSet {
  Int n = 0;
  std::vector<Int> indices;  // ascending, no duplicates
};

inline DistanceRootSet distance_roots(const JacoGraph& g) {
  DistanceRootSet roots{g.size(), {}};
  const Int a = g.order().value();
  for (Int prev = 1, cur = 1; cur < g.size();) {  // B_1, B_2
    if (roots.indices.empty() || roots.indices.back() != cur) roots.indices.push_back(cur);
    const Int next = detail::checked_add(detail::checked_mul(a, cur, "Liz number"), prev,
                                         "Liz number");
    prev = cur;
    cur = next;
  }
  if (roots.indices.empty() || roots.indices.back() != g.size())
    roots.indices.push_back(g.size());
  return roots;
}

// One scanned vertex k of J_N(1): out-degrees and psi at k-1, k, k+1.
struct ConjectureRow {
  Int k = 0;
  Int d_plus[3] = {0, 0, 0};
  PathCount psi[3];
  bool forward = true;   // d+ non-repetitive => psi non-repetitive
  bool converse = true;  // psi non-repetitive => d+ non-repetitive
};

struct ConjectureReport {
  Int n_max = 0;
  std::vector<ConjectureRow> rows;  // k = 7 .. n_max - 1

  std::size_t violations() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) {
      return !r.forward || !r.converse;
    }));
  }
};

namespace detail {

template <class T>
bool non_repetitive(const T& before, const T& at, const T& after) {
  return before != at && at != after;
}

}  // namespace detail

// Tests whether non-repetition of d+ at k and non-repetition of psi at k go
// together, for 7 <= k <= n_max - 1 at a = 1. Reports, never throws on a
// violation. The k-range may be sharded over `jobs` threads; rows are always
// merged in k order.
inline ConjectureReport conjecture_scan(Int n_max, unsigned jobs = 1) {
  if (n_max < 9) throw DomainError("conjecture_scan needs N >= 9");
  const JacoGraph g = build(Order(1), n_max);
  const std::vector<PathCount> psi = psi_oracle(g);
  const SequenceTable& seq = g.sequence();

  auto scan = [&](Int first, Int last) {
    std::vector<ConjectureRow> rows;
    for (Int k = first; k <= last; ++k) {
      ConjectureRow row;
      row.k = k;
      for (int d = 0; d < 3; ++d) {
        row.d_plus[d] = seq.d_plus(k - 1 + d);
        row.psi[d] = psi[k - 1 + d];
      }
      const bool dplus_nr = detail::non_repetitive(row.d_plus[0], row.d_plus[1], row.d_plus[2]);
      const bool psi_nr = detail::non_repetitive(row.psi[0], row.psi[1], row.psi[2]);
      row.forward = !dplus_nr || psi_nr;
      row.converse = !psi_nr || dplus_nr;
      rows.push_back(std::move(row));
    }
    return rows;
  };

  const Int first = 7, last = n_max - 1;
  const Int span = last - first + 1;
  const Int shards = std::clamp<Int>(jobs, 1, span);
  std::vector<std::future<std::vector<ConjectureRow>>> parts;
  for (Int s = 0; s < shards; ++s) {
    const Int lo = first + span * s / shards;
    const Int hi = first + span * (s + 1) / shards - 1;
    parts.push_back(std::async(shards == 1 ? std::launch::deferred : std::launch::async, scan,
                               lo, hi));
  }

  ConjectureReport report{n_max, {}};
  report.rows.reserve(static_cast<std::size_t>(span));
  for (auto& part : parts)
    for (auto& row : part.get()) report.rows.push_back(std::move(row));
  return report;
}

inline std::string to_text(const ConjectureReport& report) {
  std::ostringstream out;
  for (const ConjectureRow& r : report.rows) {
    out << "k=" << r.k << " dplus=(" << r.d_plus[0] << ',' << r.d_plus[1] << ','
        << r.d_plus[2] << ") psi=(" << r.psi[0] << ',' << r.psi[1] << ',' << r.psi[2]
        << ") forward=" << (r.forward ? "OK" : "VIOLATION")
        << " converse=" << (r.converse ? "OK" : "VIOLATION") << '\n';
  }
  out << "SUMMARY scanned=7.." << report.n_max - 1 << " violations=" << report.violations()
      << '\n';
  return out.str();
}

}  // namespace jaco

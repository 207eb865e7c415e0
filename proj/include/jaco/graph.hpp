#pragma once

// Finite Jaco graphs J_n(a).
//
// Arcs are never materialized. Both neighborhoods of every vertex are
// contiguous index intervals read off the c-series:
//   out(v_i) = [i+1, min(reach[i], n)]
//   in(v_j)  = [c[j], j-1]
// Vertices are 1-based.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <ranges>
#include <string>
#include <utility>
#include <vector>

#include "jaco/errors.hpp"
#include "jaco/sequences.hpp"

namespace jaco {

// Half-open run of vertex indices.
using VertexRange = std::ranges::iota_view<Int, Int>;

class JacoGraph {
 public:
  // J_n(a) over a c-series table whose horizon is at least n.
  JacoGraph(std::shared_ptr<const SequenceTable> table, Int n)
      : table_(std::move(table)), n_(n) {
    if (!table_) throw DomainError("JacoGraph needs a sequence table");
    if (n < 1) throw DomainError("a Jaco graph needs n >= 1, got " + std::to_string(n));
    if (table_->horizon() < n)
      throw DomainError("sequence horizon " + std::to_string(table_->horizon()) +
                        " is below n = " + std::to_string(n));
  }

  Order order() const noexcept { return table_->order(); }
  Int size() const noexcept { return n_; }
  const SequenceTable& sequence() const noexcept { return *table_; }

  VertexRange out_neighbors(Int i) const {
    check(i);
    return {i + 1, std::min(table_->reach(i), n_) + 1};
  }

  VertexRange in_neighbors(Int j) const {
    check(j);
    return {table_->c(j), j};
  }

  Int out_degree(Int i) const { return std::ranges::ssize(out_neighbors(i)); }
  Int in_degree(Int j) const { return std::ranges::ssize(in_neighbors(j)); }
  // degree in the underlying simple graph
  Int degree(Int i) const { return in_degree(i) + out_degree(i); }

  bool has_arc(Int i, Int j) const {
    return 1 <= i && i < j && j <= n_ && j <= table_->reach(i);
  }

  // J_m(a) for m <= n, sharing this graph's table.
  JacoGraph prefix(Int m) const {
    if (m > n_) throw DomainError("prefix larger than the graph");
    return JacoGraph(table_, m);
  }

 private:
  void check(Int v) const {
    if (v < 1 || v > n_)
      throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                              std::to_string(n_));
  }

  std::shared_ptr<const SequenceTable> table_;
  Int n_;
};

inline JacoGraph build(Order a, Int n) {
  if (n < 1) throw DomainError("a Jaco graph needs n >= 1, got " + std::to_string(n));
  return JacoGraph(std::make_shared<const SequenceTable>(a, n), n);
}

struct VertexDegree {
  Int index;
  Int in;
  Int out;  // out-degree inside J_n, truncated at n
  Int total;

  friend bool operator==(const VertexDegree&, const VertexDegree&) = default;
};

struct DegreeProfile {
  std::vector<VertexDegree> vertices;  // v_1..v_n

  const VertexDegree& at(Int i) const { return vertices.at(static_cast<std::size_t>(i - 1)); }
};

inline DegreeProfile degree_profile(const JacoGraph& g) {
  DegreeProfile p;
  p.vertices.reserve(static_cast<std::size_t>(g.size()));
  for (Int i = 1; i <= g.size(); ++i) {
    const Int in = g.in_degree(i);
    const Int out = g.out_degree(i);
    p.vertices.push_back({i, in, out, in + out});
  }
  return p;
}

struct JaconianInfo {
  Int delta = 0;                // maximum degree
  std::vector<Int> jaconian;    // all vertices attaining delta, ascending
  Int prime = 1;                // lowest member of `jaconian`
  VertexRange hope{1, 1};       // [prime+1, n], empty when prime = n
};

inline JaconianInfo jaconian(const JacoGraph& g) {
  JaconianInfo info;
  for (Int i = 1; i <= g.size(); ++i) {
    const Int d = g.degree(i);
    if (info.jaconian.empty() || d > info.delta) {
      info.delta = d;
      info.jaconian.assign(1, i);
    } else if (d == info.delta) {
      info.jaconian.push_back(i);
    }
  }
  info.prime = info.jaconian.front();
  info.hope = VertexRange(info.prime + 1, g.size() + 1);
  return info;
}

struct HopeCheck {
  bool complete = true;
  std::optional<std::pair<Int, Int>> missing;  // first absent arc

  explicit operator bool() const noexcept { return complete; }
};

// Every pair in the Hope range must be joined by an arc.
inline HopeCheck hope_is_complete(const JacoGraph& g) {
  const JaconianInfo info = jaconian(g);
  for (Int i : info.hope) {
    const Int last = std::min(g.sequence().reach(i), g.size());
    if (last < g.size()) return {false, std::pair{i, last + 1}};
  }
  return {};
}

}  // namespace jaco

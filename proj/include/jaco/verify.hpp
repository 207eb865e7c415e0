#pragma once

// Registry of executable claims about Jaco graphs and their sequences, run
// over a grid of orders a and sizes n. Each claim reports the range it
// covered and the first counterexample it met, if any.
//
// Report text:
//   CLAIM <id> <PASS|FAIL> checked=<range> [counterexample=<params>]
//   ...
//   OVERALL <PASS|FAIL>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "jaco/analysis.hpp"
#include "jaco/graph.hpp"
#include "jaco/oracles.hpp"
#include "jaco/paths.hpp"
#include "jaco/sequences.hpp"

namespace jaco {

struct VerifyConfig {
  Int a_min = 1;
  Int a_max = 3;
  Int n = 200;
  unsigned jobs = 1;
  // exponential or cubic oracles stop at these sizes
  Int naive_graph_limit = 300;
  Int path_enumeration_limit = 25;
};

struct ClaimOutcome {
  std::string checked;
  std::optional<std::string> counterexample;
};

struct Claim {
  std::string id;
  std::function<ClaimOutcome(const VerifyConfig&)> check;
};

struct ClaimResult {
  std::string id;
  bool pass = false;
  std::string checked;
  std::optional<std::string> counterexample;
};

struct VerificationReport {
  std::vector<ClaimResult> claims;

  bool pass() const {
    return std::all_of(claims.begin(), claims.end(), [](const auto& c) { return c.pass; });
  }
  const ClaimResult* find(const std::string& id) const {
    for (const auto& c : claims)
      if (c.id == id) return &c;
    return nullptr;
  }
};

namespace verify_detail {

inline std::string range(const char* name, Int lo, Int hi) {
  return std::string(name) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

inline std::string grid(const VerifyConfig& cfg, Int n_hi) {
  return range("a", cfg.a_min, cfg.a_max) + "," + range("n", 1, n_hi);
}

inline std::string at(Int a, const char* name, Int v) {
  return "a=" + std::to_string(a) + "," + name + "=" + std::to_string(v);
}

// Runs `body(a)` for each order until one returns a counterexample.
template <class Body>
std::optional<std::string> each_order(const VerifyConfig& cfg, Body&& body) {
  for (Int a = cfg.a_min; a <= cfg.a_max; ++a)
    if (auto found = body(Order(a))) return found;
  return std::nullopt;
}

inline std::optional<std::string> sequence_claim(
    const VerifyConfig& cfg,
    const std::function<std::optional<std::string>(const SequenceTable&)>& body) {
  return each_order(cfg, [&](Order a) { return body(SequenceTable(a, cfg.n)); });
}

inline std::vector<Claim> sequence_claims() {
  std::vector<Claim> claims;

  claims.push_back({"c-series-seeds", [](const VerifyConfig& cfg) {
    return ClaimOutcome{grid(cfg, 1), sequence_claim(cfg, [](const SequenceTable& t)
        -> std::optional<std::string> {
      if (t.c(0) != 0) return at(t.order().value(), "n", 0);
      if (t.c(1) != 1) return at(t.order().value(), "n", 1);
      return std::nullopt;
    })};
  }});

  claims.push_back({"c-series-definition", [](const VerifyConfig& cfg) {
    return ClaimOutcome{grid(cfg, cfg.n), sequence_claim(cfg, [](const SequenceTable& t)
        -> std::optional<std::string> {
      const auto brute = oracle::c_series_brute_force(t.order(), t.horizon());
      for (Int n = 0; n <= t.horizon(); ++n)
        if (brute[n] != t.c(n)) return at(t.order().value(), "n", n);
      return std::nullopt;
    })};
  }});

  claims.push_back({"c-series-unit-steps", [](const VerifyConfig& cfg) {
    return ClaimOutcome{grid(cfg, cfg.n), sequence_claim(cfg, [](const SequenceTable& t)
        -> std::optional<std::string> {
      for (Int n = 0; n < t.horizon(); ++n) {
        const Int step = t.c(n + 1) - t.c(n);
        if (step != 0 && step != 1) return at(t.order().value(), "n", n);
      }
      return std::nullopt;
    })};
  }});

  claims.push_back({"degree-identity", [](const VerifyConfig& cfg) {
    return ClaimOutcome{grid(cfg, cfg.n), sequence_claim(cfg, [](const SequenceTable& t)
        -> std::optional<std::string> {
      const Int a = t.order().value();
      for (Int n = 1; n <= t.horizon(); ++n)
        if (t.d_plus(n) + t.d_minus(n) != a * n || t.reach(n) != n + t.d_plus(n))
          return at(a, "n", n);
      return std::nullopt;
    })};
  }});

  claims.push_back({"c-series-fixpoints", [](const VerifyConfig& cfg) {
    return ClaimOutcome{grid(cfg, cfg.n), sequence_claim(cfg, [](const SequenceTable& t)
        -> std::optional<std::string> {
      const Int a = t.order().value();
      for (Int k = 1; k <= t.horizon(); ++k)
        for (Int b = 0; b < a; ++b) {
          const Int m = a * k + t.c(k) - b;
          if (m <= t.horizon() && t.c(m) != k)
            return at(a, "k", k) + ",b=" + std::to_string(b);
        }
      return std::nullopt;
    })};
  }});

  claims.push_back({"lucas-binet-agreement", [](const VerifyConfig& cfg) {
    std::optional<std::string> found = each_order(cfg, [](Order a)
        -> std::optional<std::string> {
      const LucasBasis u = lucas_basis_covering(a, Int{1} << 52);
      for (std::size_t n = 1; n + 1 < u.size(); ++n)
        if (std::llround(binet_estimate(a, static_cast<int>(n))) != u[n])
          return at(a.value(), "n", static_cast<Int>(n));
      return std::nullopt;
    });
    return ClaimOutcome{range("a", cfg.a_min, cfg.a_max) + ",U_n<2^52", found};
  }});

  claims.push_back({"liz-fibonacci-at-order-one", [](const VerifyConfig&) {
    const LizSequence liz = liz_terms(Order(1), 80);
    const LucasBasis fib = lucas_terms(Order(1), 80);
    std::optional<std::string> found;
    for (std::size_t i = 0; i < liz.size() && !found; ++i)
      if (liz[i] != fib[i]) found = at(1, "i", static_cast<Int>(i));
    return ClaimOutcome{"a=1,i=0..80", found};
  }});

  claims.push_back({"zeck-roundtrip", [](const VerifyConfig& cfg) {
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const LucasBasis u = lucas_basis_covering(a, cfg.n);
      for (Int n = 0; n <= cfg.n; ++n) {
        const ZeckRep rep = zeck_encode(u, n);
        try {
          if (zeck_decode(rep) != n) return at(a.value(), "n", n);
        } catch (const ValidationError&) {
          return at(a.value(), "n", n);
        }
      }
      return std::nullopt;
    });
    return ClaimOutcome{range("a", cfg.a_min, cfg.a_max) + "," + range("n", 0, cfg.n), found};
  }});

  claims.push_back({"zeck-unique", [](const VerifyConfig& cfg) {
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const oracle::ZeckCensus census = oracle::zeck_census(a, cfg.n);
      for (Int n = 1; n <= cfg.n; ++n)
        if (census.valid[n] != 1)
          return at(a.value(), "n", n) + ",representations=" + std::to_string(census.valid[n]);
      return std::nullopt;
    });
    return ClaimOutcome{grid(cfg, cfg.n), found};
  }});

  claims.push_back({"closed-form", [](const VerifyConfig& cfg) {
    return ClaimOutcome{grid(cfg, cfg.n), sequence_claim(cfg, [](const SequenceTable& t)
        -> std::optional<std::string> {
      const LucasBasis u = lucas_basis_covering(t.order(), t.horizon());
      for (Int n = 1; n <= t.horizon(); ++n)
        if (c_closed(u, n) != t.c(n)) return at(t.order().value(), "n", n);
      return std::nullopt;
    })};
  }});

  claims.push_back({"zeckendorf-out-degree", [](const VerifyConfig& cfg) {
    const SequenceTable t(Order(1), cfg.n);
    std::optional<std::string> found;
    for (Int n = 1; n <= cfg.n && !found; ++n) {
      const Int b = bettina_dplus(n);
      if (b != t.d_plus(n) || b != c_closed(Order(1), n)) found = at(1, "n", n);
    }
    return ClaimOutcome{"a=1," + range("n", 1, cfg.n), found};
  }});

  claims.push_back({"out-degree-self-inverse", [](const VerifyConfig& cfg) {
    const SequenceTable t(Order(1), cfg.n);
    std::optional<std::string> found;
    for (Int i = 2; i <= cfg.n && !found; ++i) {
      const Int j = i + t.d_plus(i);
      if (j > cfg.n) break;
      const Int l = i + t.d_plus(i - 1);
      if (t.d_plus(j) != i || t.d_plus(l) != i) found = at(1, "i", i);
    }
    return ClaimOutcome{"a=1," + range("n", 1, cfg.n), found};
  }});

  return claims;
}

inline std::vector<Claim> graph_claims() {
  std::vector<Claim> claims;

  claims.push_back({"graph-definition", [](const VerifyConfig& cfg) {
    const Int limit = std::min(cfg.n, cfg.naive_graph_limit);
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const oracle::NaiveGraph naive = oracle::naive_build(a, limit);
      const JacoGraph full = build(a, limit);
      for (Int n = 1; n <= limit; ++n) {
        std::vector<std::pair<Int, Int>> expected;
        for (const auto& arc : naive.arcs)
          if (arc.second <= n) expected.push_back(arc);
        if (oracle::arc_list(full.prefix(n)) != expected) return at(a.value(), "n", n);
      }
      return std::nullopt;
    });
    return ClaimOutcome{grid(cfg, limit), found};
  }});

  claims.push_back({"neighborhoods-contiguous", [](const VerifyConfig& cfg) {
    const Int limit = std::min(cfg.n, cfg.naive_graph_limit);
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const oracle::NaiveGraph naive = oracle::naive_build(a, limit);
      std::vector<std::vector<Int>> out(limit + 1), in(limit + 1);
      for (const auto& [i, j] : naive.arcs) {
        out[i].push_back(j);
        in[j].push_back(i);
      }
      auto contiguous = [](std::vector<Int> v) {
        std::sort(v.begin(), v.end());
        return v.empty() || v.back() - v.front() + 1 == static_cast<Int>(v.size());
      };
      for (Int v = 1; v <= limit; ++v)
        if (!contiguous(out[v]) || !contiguous(in[v])) return at(a.value(), "v", v);
      return std::nullopt;
    });
    return ClaimOutcome{grid(cfg, limit), found};
  }});

  claims.push_back({"in-degree-stable", [](const VerifyConfig& cfg) {
    const Int limit = std::min(cfg.n, cfg.naive_graph_limit);
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const SequenceTable t(a, limit);
      const Int stride = std::max<Int>(1, limit / 16);
      for (Int n = 1; n <= limit; n = n == limit ? limit + 1 : std::min(limit, n + stride)) {
        const oracle::NaiveGraph naive = oracle::naive_build(a, n);
        for (Int j = 1; j <= n; ++j)
          if (naive.in_degree[j] != t.d_minus(j))
            return at(a.value(), "n", n) + ",v=" + std::to_string(j);
      }
      return std::nullopt;
    });
    return ClaimOutcome{grid(cfg, limit), found};
  }});

  claims.push_back({"degree-bounds", [](const VerifyConfig& cfg) {
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const JacoGraph full = build(a, cfg.n);
      const Int av = a.value();
      for (Int n = 1; n <= cfg.n; ++n) {
        const DegreeProfile p = degree_profile(full.prefix(n));
        Int lowest = p.at(1).total;
        for (Int i = 1; i <= n; ++i) {
          const Int d = p.at(i).total;
          lowest = std::min(lowest, d);
          if (d > av * i) return at(av, "n", n) + ",v=" + std::to_string(i);
          if (i >= 2 && std::abs(d - p.at(i - 1).total) > av)
            return at(av, "n", n) + ",v=" + std::to_string(i);
        }
        if (lowest > av) return at(av, "n", n);
      }
      return std::nullopt;
    });
    return ClaimOutcome{grid(cfg, cfg.n), found};
  }});

  claims.push_back({"max-degree-monotone", [](const VerifyConfig& cfg) {
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const JacoGraph full = build(a, cfg.n);
      Int previous = 0;
      for (Int n = 1; n <= cfg.n; ++n) {
        const Int delta = jaconian(full.prefix(n)).delta;
        if (delta < previous || delta > previous + 1) return at(a.value(), "n", n);
        previous = delta;
      }
      return std::nullopt;
    });
    return ClaimOutcome{grid(cfg, cfg.n), found};
  }});

  claims.push_back({"saturated-prefix", [](const VerifyConfig& cfg) {
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const JacoGraph full = build(a, cfg.n);
      const Int av = a.value();
      for (Int n = 1; n <= cfg.n; ++n) {
        const JacoGraph g = full.prefix(n);
        const Int k = jaconian(g).prime;
        if (g.degree(k) != av * k) continue;
        for (Int m = 1; m <= k; ++m)
          if (g.degree(m) != av * m) return at(av, "n", n) + ",v=" + std::to_string(m);
      }
      return std::nullopt;
    });
    return ClaimOutcome{grid(cfg, cfg.n), found};
  }});

  claims.push_back({"complete-prefix", [](const VerifyConfig& cfg) {
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const Int av = a.value();
      for (Int m = 1; m <= av + 1; ++m) {
        const JacoGraph g = build(a, m);
        const JaconianInfo info = jaconian(g);
        bool complete = true;
        for (Int i = 1; i <= m; ++i) complete = complete && g.degree(i) == m - 1;
        if (!complete || info.delta != m - 1 || static_cast<Int>(info.jaconian.size()) != m)
          return at(av, "m", m);
      }
      return std::nullopt;
    });
    return ClaimOutcome{range("a", cfg.a_min, cfg.a_max) + ",m=1..a+1", found};
  }});

  claims.push_back({"lowest-in-neighbor-jaconian", [](const VerifyConfig& cfg) {
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const JacoGraph full = build(a, cfg.n);
      for (Int n = 2; n <= cfg.n; ++n) {
        const JaconianInfo info = jaconian(full.prefix(n));
        const Int low = full.sequence().c(n);
        if (!std::binary_search(info.jaconian.begin(), info.jaconian.end(), low))
          return at(a.value(), "n", n);
      }
      return std::nullopt;
    });
    return ClaimOutcome{grid(cfg, cfg.n), found};
  }});

  claims.push_back({"hope-complete", [](const VerifyConfig& cfg) {
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const JacoGraph full = build(a, cfg.n);
      for (Int n = 1; n <= cfg.n; ++n)
        if (const HopeCheck h = hope_is_complete(full.prefix(n)); !h)
          return at(a.value(), "n", n) + ",missing=" + std::to_string(h.missing->first) + "-" +
                 std::to_string(h.missing->second);
      return std::nullopt;
    });
    return ClaimOutcome{grid(cfg, cfg.n), found};
  }});

  return claims;
}

inline std::vector<Claim> analysis_claims() {
  std::vector<Claim> claims;

  claims.push_back({"edge-count-routes", [](const VerifyConfig& cfg) {
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const JacoGraph full = build(a, cfg.n);
      const std::vector<Int> recursive = edge_count_recursive(a, cfg.n);
      for (Int n = 1; n <= cfg.n; ++n) {
        const JacoGraph g = full.prefix(n);
        const Int direct = edge_count_direct(g);
        if (edge_count_theorem(g) != direct || recursive[n - 1] != direct)
          return at(a.value(), "n", n);
      }
      return std::nullopt;
    });
    return ClaimOutcome{grid(cfg, cfg.n), found};
  }});

  claims.push_back({"edge-count-complete-prefix", [](const VerifyConfig& cfg) {
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const Int av = a.value();
      const std::vector<Int> recursive = edge_count_recursive(a, av + 1);
      for (Int m = 1; m <= av + 1; ++m) {
        const JacoGraph g = build(a, m);
        const Int expected = complete_prefix_count(a, m);
        if (edge_count_direct(g) != expected || edge_count_theorem(g) != expected ||
            recursive[m - 1] != expected)
          return at(av, "m", m);
      }
      return std::nullopt;
    });
    return ClaimOutcome{range("a", cfg.a_min, cfg.a_max) + ",m=1..a+1", found};
  }});

  claims.push_back({"single-jaconian-milestone", [](const VerifyConfig& cfg) {
    std::optional<std::string> found = each_order(cfg, [](Order a)
        -> std::optional<std::string> {
      const Int av = a.value();
      const MilestoneResult r = milestone_delta(a);
      if (r.n_star != av * (av + 1) + 1) return at(av, "n_star", r.n_star);
      return std::nullopt;
    });
    return ClaimOutcome{range("a", cfg.a_min, cfg.a_max), found};
  }});

  return claims;
}

inline std::vector<Claim> path_claims() {
  std::vector<Claim> claims;

  claims.push_back({"distances-bfs", [](const VerifyConfig& cfg) {
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const JacoGraph g = build(a, cfg.n);
      const auto fast = distances(g);
      const auto bfs = oracle::bfs_distances(g);
      for (Int i = 1; i <= cfg.n; ++i)
        if (fast[i] != bfs[i]) return at(a.value(), "v", i);
      return std::nullopt;
    });
    return ClaimOutcome{grid(cfg, cfg.n), found};
  }});

  claims.push_back({"psi-enumeration", [](const VerifyConfig& cfg) {
    const Int limit = std::min(cfg.n, cfg.path_enumeration_limit);
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const JacoGraph g = build(a, limit);
      const auto psi = psi_oracle(g);
      const auto dist = distances(g);
      const auto listed = oracle::enumerate_shortest_paths(g);
      for (Int i = 1; i <= limit; ++i)
        if (listed[i].length != dist[i] || PathCount(listed[i].count) != psi[i])
          return at(a.value(), "v", i);
      return std::nullopt;
    });
    return ClaimOutcome{grid(cfg, limit), found};
  }});

  claims.push_back({"psi-recursion", [](const VerifyConfig& cfg) {
    const JacoGraph g = build(Order(1), cfg.n);
    const auto dp = psi_oracle(g);
    const auto rec = psi_recursive(g);
    std::optional<std::string> found;
    for (Int j = 1; j <= cfg.n && !found; ++j)
      if (dp[j] != rec[j]) found = at(1, "v", j);
    return ClaimOutcome{"a=1," + range("n", 1, cfg.n), found};
  }});

  claims.push_back({"psi-unique-iff-fibonacci-out-degree", [](const VerifyConfig& cfg) {
    const UniquenessCheck check = uniqueness_check(build(Order(1), cfg.n));
    std::optional<std::string> found;
    if (!check.agrees()) found = at(1, "v", check.disagreements.front());
    return ClaimOutcome{"a=1," + range("n", 1, cfg.n), found};
  }});

  claims.push_back({"psi-one-at-fibonacci-vertices", [](const VerifyConfig& cfg) {
    const auto psi = psi_oracle(build(Order(1), cfg.n));
    std::optional<std::string> found;
    for (Int prev = 1, f = 1; f <= cfg.n && !found;) {
      if (psi[f] != 1) found = at(1, "v", f);
      const Int next = prev + f;
      prev = f;
      f = next;
    }
    return ClaimOutcome{"a=1," + range("n", 1, cfg.n), found};
  }});

  claims.push_back({"distance-roots-liz", [](const VerifyConfig& cfg) {
    std::optional<std::string> found = each_order(cfg, [&](Order a)
        -> std::optional<std::string> {
      const JacoGraph full = build(a, cfg.n);
      std::vector<Int> liz;  // B_2, B_3, ... up to the first one >= n
      for (Int prev = 1, cur = 1; liz.empty() || liz.back() < cfg.n;) {
        liz.push_back(cur);
        const Int next = a.value() * cur + prev;
        prev = cur;
        cur = next;
      }
      for (Int n = 1; n <= cfg.n; ++n) {
        const DistanceRootSet roots = distance_roots(full.prefix(n));
        if (roots.indices.back() != n) return at(a.value(), "n", n);
        for (std::size_t k = 0; k + 1 < roots.indices.size(); ++k) {
          const Int v = roots.indices[k];
          const bool is_liz = std::find(liz.begin(), liz.end(), v) != liz.end();
          if (!is_liz || v >= n) return at(a.value(), "n", n);
        }
      }
      return std::nullopt;
    });
    return ClaimOutcome{grid(cfg, cfg.n), found};
  }});

  return claims;
}

}  // namespace verify_detail

inline std::vector<Claim> default_claims() {
  std::vector<Claim> all;
  for (auto group : {verify_detail::sequence_claims(), verify_detail::graph_claims(),
                     verify_detail::analysis_claims(), verify_detail::path_claims()})
    for (auto& claim : group) all.push_back(std::move(claim));
  return all;
}

// Runs every claim; claims are independent and may run on `jobs` threads.
// The report lists claims in registry order regardless of scheduling.
inline VerificationReport verify_suite(const VerifyConfig& cfg,
                                       const std::vector<Claim>& claims = default_claims()) {
  if (cfg.a_min < 1 || cfg.a_max < cfg.a_min) throw DomainError("bad order range");
  if (cfg.n < 1) throw DomainError("verify needs n >= 1");

  VerificationReport report;
  report.claims.resize(claims.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < claims.size(); i = next++) {
      ClaimResult& r = report.claims[i];
      r.id = claims[i].id;
      try {
        ClaimOutcome outcome = claims[i].check(cfg);
        r.checked = std::move(outcome.checked);
        r.counterexample = std::move(outcome.counterexample);
      } catch (const std::exception& e) {
        r.checked = "aborted";
        std::string what = e.what();
        std::replace(what.begin(), what.end(), ' ', '_');
        r.counterexample = "error:" + what;
      }
      r.pass = !r.counterexample.has_value();
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(cfg.jobs, claims.size()));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return report;
}

inline std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  for (const ClaimResult& c : report.claims) {
    out << "CLAIM " << c.id << ' ' << (c.pass ? "PASS" : "FAIL") << " checked=" << c.checked;
    if (c.counterexample) out << " counterexample=" << *c.counterexample;
    out << '\n';
  }
  out << "OVERALL " << (report.pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace jaco

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "jaco/graph.hpp"
#include "jaco/oracles.hpp"

namespace jaco {
namespace {

using Arcs = std::vector<std::pair<Int, Int>>;

std::vector<Int> collect(VertexRange r) { return {r.begin(), r.end()}; }

std::vector<Int> totals(const DegreeProfile& p) {
  std::vector<Int> t;
  for (const auto& v : p.vertices) t.push_back(v.total);
  return t;
}

TEST(BuildTest, SmallGraphs) {
  EXPECT_EQ(oracle::arc_list(build(Order(1), 3)), (Arcs{{1, 2}, {2, 3}}));
  EXPECT_EQ(oracle::arc_list(build(Order(2), 4)),
            (Arcs{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(oracle::arc_list(build(Order(3), 4)),
            (Arcs{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
}

TEST(BuildTest, RejectsEmptyGraph) {
  EXPECT_THROW(build(Order(1), 0), DomainError);
  const auto table = std::make_shared<const SequenceTable>(Order(1), 5);
  EXPECT_THROW(JacoGraph(table, 6), DomainError);
}

TEST(BuildTest, MatchesNaiveInsertionBuilder) {
  for (Int a = 1; a <= 4; ++a) {
    const oracle::NaiveGraph naive = oracle::naive_build(Order(a), 300);
    const JacoGraph full = build(Order(a), 300);
    for (Int n : {1, 2, 3, 5, 8, 13, 50, 127, 299, 300}) {
      Arcs expected;
      std::copy_if(naive.arcs.begin(), naive.arcs.end(), std::back_inserter(expected),
                   [n](const auto& arc) { return arc.second <= n; });
      EXPECT_EQ(oracle::arc_list(full.prefix(n)), expected) << "a=" << a << " n=" << n;
      EXPECT_EQ(oracle::arc_list(build(Order(a), n)), expected);
    }
  }
}

TEST(BuildTest, HasArcAgreesWithRanges) {
  const JacoGraph g = build(Order(2), 40);
  std::set<std::pair<Int, Int>> arcs;
  for (const auto& arc : oracle::arc_list(g)) arcs.insert(arc);
  for (Int i = 0; i <= 41; ++i)
    for (Int j = 0; j <= 41; ++j) EXPECT_EQ(g.has_arc(i, j), arcs.count({i, j}) == 1);
}

TEST(NeighborsTest, OutNeighbors) {
  EXPECT_EQ(collect(build(Order(1), 8).out_neighbors(5)), (std::vector<Int>{6, 7, 8}));
  EXPECT_TRUE(build(Order(1), 8).out_neighbors(8).empty());
  EXPECT_EQ(collect(build(Order(2), 10).out_neighbors(4)),
            (std::vector<Int>{5, 6, 7, 8, 9, 10}));
}

TEST(NeighborsTest, InNeighbors) {
  EXPECT_EQ(collect(build(Order(1), 8).in_neighbors(8)), (std::vector<Int>{5, 6, 7}));
  for (Int a = 1; a <= 4; ++a) EXPECT_TRUE(build(Order(a), 5).in_neighbors(1).empty());
  EXPECT_EQ(collect(build(Order(2), 8).in_neighbors(4)), (std::vector<Int>{2, 3}));
}

TEST(NeighborsTest, OutOfRangeVertex) {
  const JacoGraph g = build(Order(1), 8);
  EXPECT_THROW(g.out_neighbors(0), std::out_of_range);
  EXPECT_THROW(g.out_neighbors(9), std::out_of_range);
  EXPECT_THROW(g.in_neighbors(9), std::out_of_range);
}

TEST(NeighborsTest, InNeighborhoodDoesNotDependOnGraphSize) {
  for (Int a = 1; a <= 3; ++a) {
    const SequenceTable t(Order(a), 200);
    for (Int n : {20, 77, 200}) {
      const oracle::NaiveGraph naive = oracle::naive_build(Order(a), n);
      const JacoGraph g = build(Order(a), n);
      for (Int j = 1; j <= n; ++j) {
        ASSERT_EQ(naive.in_degree[j], t.d_minus(j));
        ASSERT_EQ(g.in_degree(j), t.d_minus(j));
      }
    }
  }
}

TEST(DegreeProfileTest, Examples) {
  EXPECT_EQ(totals(degree_profile(build(Order(1), 8))),
            (std::vector<Int>{1, 2, 3, 4, 5, 4, 4, 3}));
  EXPECT_EQ(totals(degree_profile(build(Order(2), 4))), (std::vector<Int>{2, 3, 3, 2}));
  EXPECT_EQ(totals(degree_profile(build(Order(1), 1))), (std::vector<Int>{0}));
}

TEST(DegreeProfileTest, Bounds) {
  for (Int a = 1; a <= 4; ++a) {
    const JacoGraph full = build(Order(a), 400);
    for (Int n = 1; n <= 400; ++n) {
      const JacoGraph g = full.prefix(n);
      const DegreeProfile p = degree_profile(g);
      Int lowest = p.at(1).total;
      for (Int i = 1; i <= n; ++i) {
        const VertexDegree& v = p.at(i);
        ASSERT_EQ(v.total, v.in + v.out);
        ASSERT_LE(v.total, a * i);
        ASSERT_EQ(v.out, std::min(g.sequence().reach(i), n) - i);
        if (g.sequence().reach(i) <= n) {
          ASSERT_EQ(v.total, a * i);
        }
        if (i >= 2) {
          ASSERT_LE(std::abs(v.total - p.at(i - 1).total), a);
        }
        lowest = std::min(lowest, v.total);
      }
      ASSERT_LE(lowest, a);
    }
  }
}

TEST(JaconianTest, Examples) {
  JaconianInfo info = jaconian(build(Order(1), 8));
  EXPECT_EQ(info.delta, 5);
  EXPECT_EQ(info.jaconian, std::vector<Int>{5});
  EXPECT_EQ(info.prime, 5);
  EXPECT_EQ(collect(info.hope), (std::vector<Int>{6, 7, 8}));

  info = jaconian(build(Order(1), 7));
  EXPECT_EQ(info.delta, 4);
  EXPECT_EQ(info.jaconian, (std::vector<Int>{4, 5}));
  EXPECT_EQ(info.prime, 4);

  info = jaconian(build(Order(2), 3));
  EXPECT_EQ(info.delta, 2);
  EXPECT_EQ(info.jaconian, (std::vector<Int>{1, 2, 3}));
}

TEST(JaconianTest, SingleVertex) {
  const JaconianInfo info = jaconian(build(Order(3), 1));
  EXPECT_EQ(info.delta, 0);
  EXPECT_EQ(info.jaconian, std::vector<Int>{1});
  EXPECT_EQ(info.prime, 1);
  EXPECT_TRUE(info.hope.empty());
}

TEST(JaconianTest, CompletePrefix) {
  for (Int a = 1; a <= 10; ++a) {
    for (Int m = 1; m <= a + 1; ++m) {
      const JacoGraph g = build(Order(a), m);
      const JaconianInfo info = jaconian(g);
      EXPECT_EQ(info.delta, m - 1);
      EXPECT_EQ(static_cast<Int>(info.jaconian.size()), m);
      EXPECT_EQ(static_cast<Int>(oracle::arc_list(g).size()), m * (m - 1) / 2);
    }
  }
}

// The lowest in-neighbor of v_n always attains the maximum degree, but it
// need not be the lowest vertex that does: in J_4(1) the degrees are
// 1,2,2,1, so v_2 is prime while v_4's only in-neighbor is v_3.
TEST(JaconianTest, LowestInNeighborIsJaconianButNotAlwaysPrime) {
  const JacoGraph g = build(Order(1), 4);
  const JaconianInfo info = jaconian(g);
  EXPECT_EQ(info.jaconian, (std::vector<Int>{2, 3}));
  EXPECT_EQ(info.prime, 2);
  EXPECT_EQ(g.sequence().c(4), 3);

  for (Int a = 1; a <= 4; ++a) {
    const JacoGraph full = build(Order(a), 1000);
    for (Int n = 2; n <= 1000; ++n) {
      const JaconianInfo in = jaconian(full.prefix(n));
      ASSERT_TRUE(std::binary_search(in.jaconian.begin(), in.jaconian.end(), full.sequence().c(n)))
          << "a=" << a << " n=" << n;
      if (in.jaconian.size() == 1) {
        ASSERT_EQ(in.prime, full.sequence().c(n));
      }
    }
  }
}

TEST(JaconianTest, MaxDegreeGrowsByAtMostOne) {
  for (Int a = 1; a <= 4; ++a) {
    const JacoGraph full = build(Order(a), 600);
    Int previous = 0;
    for (Int n = 1; n <= 600; ++n) {
      const Int delta = jaconian(full.prefix(n)).delta;
      ASSERT_GE(delta, previous);
      ASSERT_LE(delta, previous + 1);
      previous = delta;
    }
  }
}

TEST(JaconianTest, SaturatedPrimeImpliesSaturatedPrefix) {
  for (Int a = 1; a <= 4; ++a) {
    const JacoGraph full = build(Order(a), 600);
    for (Int n = 1; n <= 600; ++n) {
      const JacoGraph g = full.prefix(n);
      const Int k = jaconian(g).prime;
      if (g.degree(k) != a * k) continue;
      for (Int m = 1; m <= k; ++m) ASSERT_EQ(g.degree(m), a * m) << "a=" << a << " n=" << n;
    }
  }
}

TEST(HopeTest, Examples) {
  EXPECT_TRUE(hope_is_complete(build(Order(1), 8)));
  EXPECT_TRUE(hope_is_complete(build(Order(1), 1)));
  const JacoGraph g = build(Order(2), 4);
  EXPECT_EQ(collect(jaconian(g).hope), (std::vector<Int>{3, 4}));
  EXPECT_TRUE(hope_is_complete(g));
  EXPECT_TRUE(g.has_arc(3, 4));
}

TEST(HopeTest, AlwaysComplete) {
  for (Int a = 1; a <= 5; ++a) {
    const JacoGraph full = build(Order(a), 1000);
    for (Int n = 1; n <= 1000; ++n) {
      const HopeCheck h = hope_is_complete(full.prefix(n));
      ASSERT_TRUE(h.complete) << "a=" << a << " n=" << n;
      ASSERT_FALSE(h.missing.has_value());
    }
  }
}

}  // namespace
}  // namespace jaco

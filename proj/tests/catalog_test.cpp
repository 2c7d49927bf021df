#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "imsplit/catalog.hpp"
#include "imsplit/connectivity.hpp"
#include "imsplit/error.hpp"
#include "imsplit/isomorphism.hpp"
#include "imsplit/mgr_format.hpp"

namespace imsplit {
namespace {

bool simple(const MultiGraph &g) {
  for (const Edge &e : g.edges()) {
    if (e.is_loop() || g.multiplicity(e.u, e.v) > 1) return false;
  }
  return true;
}

bool regular(const MultiGraph &g, int d) {
  for (VertexId v : g.vertices()) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

TEST(NamedGraph, Shapes) {
  auto q3 = named_graph("Q3");
  EXPECT_EQ(q3.num_vertices(), 8);
  EXPECT_EQ(q3.num_edges(), 12);
  EXPECT_TRUE(regular(q3, 3));
  EXPECT_TRUE(in_i4_class(q3));

  auto oct = named_graph("octahedron");
  EXPECT_EQ(oct.num_vertices(), 6);
  EXPECT_EQ(oct.num_edges(), 12);
  EXPECT_TRUE(regular(oct, 4));
  EXPECT_TRUE(is_k_edge_connected(oct, 4));

  auto k23 = named_graph("K2^3");
  EXPECT_EQ(k23.num_vertices(), 2);
  EXPECT_EQ(k23.multiplicity(0, 1), 3);

  auto k33 = named_graph("K33");
  EXPECT_EQ(k33.num_edges(), 9);
  EXPECT_TRUE(regular(k33, 3));
  EXPECT_TRUE(simple(k33));

  auto p = named_graph("petersen");
  EXPECT_EQ(p.num_edges(), 15);
  EXPECT_TRUE(regular(p, 3));

  EXPECT_EQ(named_graph("K6").num_edges(), 15);
  EXPECT_EQ(named_graph("C7").num_edges(), 7);
  auto w5 = named_graph("W5");
  EXPECT_EQ(w5.num_vertices(), 6);
  EXPECT_EQ(w5.num_edges(), 10);
}

TEST(NamedGraph, ClassMembership) {
  for (const char *name : {"K4", "K5", "Q3", "octahedron", "K2^3", "K33", "petersen"}) {
    EXPECT_TRUE(in_graph_class(named_graph(name), GraphClass::kI4, 0)) << name;
  }
  for (const char *name : {"K5", "octahedron", "K2^4", "K2^5"}) {
    EXPECT_TRUE(in_graph_class(named_graph(name), GraphClass::kKEdgeConnected, 4)) << name;
  }
  EXPECT_FALSE(in_graph_class(named_graph("Q3"), GraphClass::kKEdgeConnected, 4));
  EXPECT_FALSE(in_graph_class(named_graph("C5"), GraphClass::kI4, 0));
  // two adjacent rim vertices: a nontrivial cut of exactly 4
  EXPECT_TRUE(in_graph_class(named_graph("W5"), GraphClass::kI4, 0));
}

TEST(NamedGraph, UnknownName) {
  for (const char *name : {"", "K", "K0", "Q4", "K2^", "Kx", "dodecahedron"}) {
    try {
      named_graph(name);
      ADD_FAILURE() << name;
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), Errc::kUnknownName) << name;
    }
  }
}

TEST(Enumerate, SmallConnectedByHand) {
  auto got = enumerate_graphs({1, 3, 0, 3, GraphClass::kConnected, 0, true});
  std::vector<MultiGraph> hand = {
      MultiGraph(1),
      MultiGraph::from_pairs(2, {{0, 1}}),
      MultiGraph::from_pairs(2, {{0, 1}, {0, 1}}),
      MultiGraph::from_pairs(2, {{0, 1}, {0, 1}, {0, 1}}),
      MultiGraph::from_pairs(3, {{0, 1}, {1, 2}}),
      MultiGraph::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}}),
      MultiGraph::from_pairs(3, {{0, 1}, {0, 1}, {1, 2}}),
  };
  ASSERT_EQ(got.size(), hand.size());
  for (const auto &h : hand) {
    EXPECT_EQ(std::count_if(got.begin(), got.end(), [&](const MultiGraph &g) { return is_isomorphic(g, h); }), 1)
        << to_mgr(h);
  }
}

TEST(Enumerate, TwoVertexFourConnected) {
  auto got = enumerate_graphs({2, 2, 0, 5, GraphClass::kKEdgeConnected, 4, true});
  ASSERT_EQ(got.size(), 2u);
  EXPECT_TRUE(is_isomorphic(got[0], named_graph("K2^4")));
  EXPECT_TRUE(is_isomorphic(got[1], named_graph("K2^5")));
}

// Independent of the generator: every labeled edge multiset, grouped by
// pairwise isomorphism.
TEST(Enumerate, CompleteAgainstLabeledSweep) {
  const int n = 4;
  std::vector<std::pair<int, int>> slots;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) slots.emplace_back(a, b);
  }
  std::vector<MultiGraph> reps;
  std::vector<std::pair<int, int>> chosen;
  auto rec = [&](auto &self, std::size_t from, int left) -> void {
    auto g = MultiGraph::from_pairs(n, chosen);
    if (std::none_of(reps.begin(), reps.end(), [&](const MultiGraph &r) { return is_isomorphic(r, g); })) {
      reps.push_back(g);
    }
    if (left == 0) return;
    for (std::size_t i = from; i < slots.size(); ++i) {
      chosen.push_back(slots[i]);
      self(self, i, left - 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 4);
  auto got = enumerate_graphs({n, n, 0, 4, GraphClass::kAll, 0, false});
  EXPECT_EQ(got.size(), reps.size());
}

TEST(Enumerate, KnownSimpleGraphCounts) {
  auto five = enumerate_graphs({5, 5, 4, 10, GraphClass::kConnected, 0, true});
  EXPECT_EQ(std::count_if(five.begin(), five.end(), simple), 21);
  auto seven = enumerate_graphs({7, 7, 14, 14, GraphClass::kConnected, 0, true});
  EXPECT_EQ(std::count_if(seven.begin(), seven.end(),
                          [](const MultiGraph &g) { return simple(g) && regular(g, 4); }),
            2);
  auto six = enumerate_graphs({6, 6, 12, 12, GraphClass::kKEdgeConnected, 4, true});
  EXPECT_EQ(std::count_if(six.begin(), six.end(),
                          [](const MultiGraph &g) { return simple(g) && regular(g, 4); }),
            1);
}

TEST(Enumerate, DuplicateFreeAndSorted) {
  auto got = enumerate_graphs({1, 5, 0, 7, GraphClass::kAll, 0, false});
  std::set<std::string> codes;
  for (const auto &g : got) codes.insert(canonical_code(g));
  EXPECT_EQ(codes.size(), got.size());
  for (std::size_t i = 1; i < got.size(); ++i) {
    auto key = [](const MultiGraph &g) {
      return std::tuple(g.num_vertices(), g.num_edges(), canonical_code(g));
    };
    EXPECT_LT(key(got[i - 1]), key(got[i]));
  }
  std::vector<MultiGraph> same(got.begin(), got.begin() + std::min<std::size_t>(got.size(), 120));
  for (std::size_t i = 0; i < same.size(); ++i) {
    for (std::size_t j = i + 1; j < same.size(); ++j) EXPECT_FALSE(is_isomorphic(same[i], same[j]));
  }
}

TEST(Enumerate, ClassFilterMatchesPredicate) {
  auto all = enumerate_graphs({2, 5, 0, 9, GraphClass::kAll, 0, true});
  auto i4 = enumerate_graphs({2, 5, 0, 9, GraphClass::kI4, 0, true});
  std::set<std::string> kept;
  for (const auto &g : i4) kept.insert(canonical_code(g));
  for (const auto &g : all) {
    bool in = is_k_edge_connected(g, 3) && is_internally_k_edge_connected(g, 4).holds;
    EXPECT_EQ(kept.count(canonical_code(g)) == 1, in) << to_mgr(g);
  }
}

TEST(Enumerate, I4CensusPin) {
  auto a = enumerate_graphs({1, 6, 0, 12, GraphClass::kI4, 0, true});
  EXPECT_EQ(a.size(), 1572u);
  auto b = enumerate_graphs({1, 6, 0, 12, GraphClass::kI4, 0, true});
  EXPECT_EQ(format_mgr_blocks(a), format_mgr_blocks(b));
}

TEST(Enumerate, Guards) {
  EXPECT_THROW(enumerate_graphs({1, 9, 0, 4, GraphClass::kAll, 0, true}), Error);
  EXPECT_THROW(enumerate_graphs({1, 4, 0, 17, GraphClass::kAll, 0, true}), Error);
  setenv("IMM_SPLIT_MAX_N", "9", 1);
  EXPECT_EQ(enumeration_max_n(), 9);
  EXPECT_NO_THROW(enumerate_graphs({9, 9, 0, 0, GraphClass::kAll, 0, true}));
  unsetenv("IMM_SPLIT_MAX_N");
  EXPECT_EQ(enumeration_max_n(), 8);
}

TEST(Random, Deterministic) {
  auto a = seeded_random_multigraph(5, 8, 42);
  auto b = seeded_random_multigraph(5, 8, 42);
  EXPECT_EQ(to_mgr(a), to_mgr(b));
  EXPECT_NE(to_mgr(a), to_mgr(seeded_random_multigraph(5, 8, 43)));
  auto one = seeded_random_multigraph(1, 0, 7);
  EXPECT_EQ(one.num_vertices(), 1);
  EXPECT_EQ(one.num_edges(), 0);
}

TEST(Random, HandshakeAndLoops) {
  int loops = 0;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    auto g = seeded_random_multigraph(1 + seed % 8, seed % 16, seed);
    int sum = 0;
    for (VertexId v : g.vertices()) sum += g.degree(v);
    EXPECT_EQ(sum, 2 * g.num_edges());
    EXPECT_EQ(g.num_edges(), static_cast<int>(seed % 16));
    loops += !g.is_loopless();
    if (g.num_vertices() > 1) {
      EXPECT_TRUE(seeded_random_multigraph(g.num_vertices(), g.num_edges(), seed, true).is_loopless());
    }
  }
  EXPECT_GT(loops, 0);
}

TEST(Random, XoshiroReference) {
  // seed 0 expanded by splitmix64, computed independently
  Xoshiro256 a(0);
  EXPECT_EQ(a.next(), 0x99ec5f36cb75f2b4ull);
  EXPECT_EQ(a.next(), 0xbf6e1f784956452aull);
  EXPECT_EQ(a.next(), 0x1a5f849d4933e6e0ull);
  Xoshiro256 r(123);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(7), 7u);
}

}  // namespace
}  // namespace imsplit

#include <algorithm>
#include <climits>
#include <vector>

#include <gtest/gtest.h>

#include "imsplit/catalog.hpp"
#include "imsplit/connectivity.hpp"
#include "imsplit/error.hpp"
#include "imsplit/isomorphism.hpp"
#include "imsplit/operations.hpp"

namespace imsplit {
namespace {

// Brute force over vertex subsets, by dense index.
int mask_cut(const DenseGraph &d, unsigned mask) {
  int c = 0;
  for (const auto &e : d.edges) c += ((mask >> e.a) & 1) != ((mask >> e.b) & 1);
  return c;
}

int brute_lambda(const MultiGraph &g, int a, int b) {
  DenseGraph d(g);
  int best = INT_MAX;
  for (unsigned mask = 0; mask < (1u << d.n); ++mask) {
    if (((mask >> a) & 1) && !((mask >> b) & 1)) best = std::min(best, mask_cut(d, mask));
  }
  return best;
}

int brute_min_cut(const MultiGraph &g, bool nontrivial_only) {
  DenseGraph d(g);
  int best = INT_MAX;
  for (unsigned mask = 1; mask + 1 < (1u << d.n); ++mask) {
    int size = __builtin_popcount(mask);
    if (nontrivial_only && (size < 2 || size > d.n - 2)) continue;
    best = std::min(best, mask_cut(d, mask));
  }
  return best;
}

std::vector<VertexId> side_of(const MultiGraph &g, unsigned mask) {
  std::vector<VertexId> side;
  for (int i = 0; i < g.num_vertices(); ++i) {
    if ((mask >> i) & 1) side.push_back(g.vertices()[i]);
  }
  return side;
}

TEST(Lambda, Examples) {
  auto k5 = named_graph("K5");
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) EXPECT_EQ(lambda(k5, a, b), 4);
  }
  EXPECT_EQ(lambda(named_graph("K2^3"), 0, 1), 3);
  auto q3 = named_graph("Q3");
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      EXPECT_EQ(lambda(q3, a, b), 3);
      EXPECT_EQ(brute_lambda(q3, a, b), 3);
    }
  }
}

TEST(Lambda, MatchesBruteForce) {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    auto g = seeded_random_multigraph(2 + seed % 7, seed % 15, seed);
    for (int a = 0; a < g.num_vertices(); ++a) {
      for (int b = a + 1; b < g.num_vertices(); ++b) {
        EXPECT_EQ(lambda(g, a, b), brute_lambda(g, a, b)) << seed;
      }
    }
  }
}

TEST(EdgeConnectivity, Examples) {
  EXPECT_EQ(edge_connectivity(named_graph("K5")), 4);
  EXPECT_EQ(edge_connectivity(named_graph("octahedron")), 4);
  EXPECT_EQ(brute_min_cut(named_graph("octahedron"), false), 4);
  EXPECT_EQ(edge_connectivity(MultiGraph::from_pairs(3, {{0, 1}, {1, 2}})), 1);
  EXPECT_EQ(edge_connectivity(MultiGraph(3)), 0);
  EXPECT_EQ(edge_connectivity(named_graph("petersen")), 3);
}

TEST(EdgeConnectivity, WitnessIsARealCut) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    auto g = seeded_random_multigraph(2 + seed % 6, 2 + seed % 14, seed);
    for (int k = 1; k <= 4; ++k) {
      auto check = check_k_edge_connected(g, k);
      EXPECT_EQ(check.holds, brute_min_cut(g, false) >= k);
      if (!check.holds) {
        ASSERT_TRUE(check.witness.has_value());
        EXPECT_LT(check.witness->size, k);
        EXPECT_EQ(check.witness->size, cut_size(g, check.witness->side));
      }
    }
  }
}

TEST(InternalConnectivity, Examples) {
  EXPECT_TRUE(is_internally_k_edge_connected(named_graph("Q3"), 4).holds);
  EXPECT_TRUE(in_i4_class(named_graph("Q3")));
  EXPECT_TRUE(is_internally_k_edge_connected(named_graph("octahedron"), 4).holds);
  auto g = named_graph("K4");
  EXPECT_THROW(imsplit::apply(g, SplitOff{0, 0, 0}), Error);
  // subdivide 0-1 with a new vertex
  MultiGraph k4s = named_graph("K4");
  k4s.remove_edge(0);
  VertexId m = k4s.add_vertex();
  k4s.add_edge(0, m);
  k4s.add_edge(m, 1);
  auto check = is_internally_k_edge_connected(k4s, 4);
  EXPECT_FALSE(check.holds);
  ASSERT_TRUE(check.witness.has_value());
  EXPECT_FALSE(check.witness->trivial());
  EXPECT_LT(check.witness->size, 4);
}

TEST(InternalConnectivity, MatchesBruteForce) {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    auto g = seeded_random_multigraph(4 + seed % 5, 6 + seed % 12, seed, true);
    for (int k = 2; k <= 5; ++k) {
      bool expected = brute_min_cut(g, true) >= k;
      EXPECT_EQ(is_internally_k_edge_connected(g, k).holds, expected) << seed << " k=" << k;
    }
  }
}

TEST(Nearly, Examples) {
  auto k5 = is_nearly_k_edge_connected(named_graph("K5"), 4);
  EXPECT_TRUE(k5.is_nearly);
  EXPECT_FALSE(k5.special.has_value());
  auto g = MultiGraph::from_pairs(3, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {2, 0}, {2, 0}});
  auto r = is_nearly_k_edge_connected(g, 4);
  EXPECT_TRUE(r.is_nearly);
  ASSERT_TRUE(r.special.has_value());
  EXPECT_EQ(*r.special, 2);
  EXPECT_FALSE(is_nearly_k_edge_connected(named_graph("C4"), 4).is_nearly);
  // odd degree 3 < 4 at the small vertex is not allowed
  auto odd = MultiGraph::from_pairs(3, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {2, 0}, {2, 0}, {2, 1}});
  EXPECT_FALSE(is_nearly_k_edge_connected(odd, 4).is_nearly);
}

TEST(Cuts, Enumeration) {
  auto k4 = enumerate_cuts_upto(named_graph("K4"), 3);
  ASSERT_EQ(k4.size(), 4u);
  for (const auto &c : k4) EXPECT_TRUE(c.trivial());
  auto k23 = enumerate_cuts_upto(named_graph("K2^3"), 3);
  ASSERT_EQ(k23.size(), 1u);
  EXPECT_EQ(k23[0].size, 3);
  auto q3 = named_graph("Q3");
  auto cuts = enumerate_cuts_upto(q3, 4);
  // brute force: each unordered bipartition once
  int expected = 0;
  for (unsigned mask = 1; mask < (1u << 7); ++mask) expected += mask_cut(DenseGraph(q3), mask) <= 4;
  EXPECT_EQ(static_cast<int>(cuts.size()), expected);
  EXPECT_EQ(std::count_if(cuts.begin(), cuts.end(), [](const Cut &c) { return c.trivial(); }), 8);
  for (const auto &c : cuts) {
    EXPECT_EQ(c.size, cut_size(q3, c.side));
    EXPECT_EQ(static_cast<int>(c.boundary.size()), c.size);
  }
}

TEST(Cuts, MakeAndCanonical) {
  auto k4 = named_graph("K4");
  std::vector<VertexId> big{1, 2, 3};
  auto c = canonical_cut(k4, big);
  EXPECT_EQ(c.side, std::vector<VertexId>{0});
  EXPECT_EQ(c.size, 3);
  std::vector<VertexId> none;
  EXPECT_EQ(make_cut(k4, none).size, 0);
}

TEST(Identities, K5Example) {
  auto k5 = named_graph("K5");
  std::vector<VertexId> x{1, 2};
  std::vector<VertexId> y{2, 3};
  EXPECT_TRUE(verify_cut_identities(k5, x, y));
  std::vector<VertexId> z1{1};
  std::vector<VertexId> z2{2, 3};
  EXPECT_EQ(cross_edges(k5, z1, z2), 2);
  std::vector<VertexId> none;
  EXPECT_THROW(verify_cut_identities(k5, none, y), Error);
}

TEST(Identities, RandomTriples) {
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    auto g = seeded_random_multigraph(2 + seed % 7, seed % 16, seed);
    Xoshiro256 rng(seed ^ 0x5eed);
    unsigned limit = 1u << g.num_vertices();
    auto x = side_of(g, 1 + rng.below(limit - 1));
    auto y = side_of(g, 1 + rng.below(limit - 1));
    EXPECT_TRUE(verify_cut_identities(g, x, y)) << seed;
  }
}

TEST(Mader, C4) {
  auto c4 = named_graph("C4");
  auto split = mader_split(c4, 0);
  auto raw = imsplit::apply(c4, split);
  raw.remove_vertex(0);
  EXPECT_TRUE(is_isomorphic(raw, named_graph("C3")));
  EXPECT_EQ(lambda(raw, 1, 2), 2);
  EXPECT_EQ(lambda(raw, 1, 3), 2);
  EXPECT_EQ(lambda(raw, 2, 3), 2);
}

TEST(Mader, K5) {
  auto k5 = named_graph("K5");
  for (VertexId s = 0; s < 5; ++s) {
    auto raw = imsplit::apply(k5, mader_split(k5, s));
    for (VertexId a = 0; a < 5; ++a) {
      for (VertexId b = a + 1; b < 5; ++b) {
        if (a == s || b == s) continue;
        EXPECT_EQ(lambda(raw, a, b), 4);
      }
    }
  }
}

TEST(Mader, Gates) {
  auto star = MultiGraph::from_pairs(4, {{0, 1}, {0, 2}, {0, 3}});
  try {
    mader_split(star, 0);
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_TRUE(e.code() == Errc::kDegreeThree || e.code() == Errc::kCutEdgeIncident) << e.what();
  }
  auto star4 = MultiGraph::from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  try {
    mader_split(star4, 0);
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kCutEdgeIncident);
  }
}

TEST(Lemma3, K4) {
  auto k4 = named_graph("K4");
  for (VertexId x = 0; x < 4; ++x) {
    VertexId y = lemma3_witness(k4, x, 2);
    EXPECT_NE(y, x);
    EXPECT_GE(lambda(k4, x, y), 3);
  }
}

// Every census graph and cut meeting the lemma hypotheses must produce a
// witness the flow oracle confirms.
TEST(Lemma4, CensusWitnesses) {
  int checked = 0;
  for (int k : {2, 4}) {
    GraphFamilySpec spec{4, 6, 4, 12, GraphClass::kInternallyKEdgeConnected, k, true};
    for (const auto &g : enumerate_graphs(spec)) {
      bool low_even = true;
      for (VertexId v : g.vertices()) low_even &= g.degree(v) >= k || g.degree(v) % 2 == 0;
      if (!low_even) continue;
      DenseGraph d(g);
      for (unsigned mask = 1; mask + 1 < (1u << d.n); ++mask) {
        if (mask_cut(d, mask) != k + 1) continue;
        auto side = side_of(g, mask);
        auto [x, y] = lemma4_witness(g, side, k);
        EXPECT_TRUE(std::binary_search(side.begin(), side.end(), x));
        EXPECT_FALSE(std::binary_search(side.begin(), side.end(), y));
        EXPECT_GE(brute_lambda(g, g.index_of(x), g.index_of(y)), k + 1);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Lemma3, CensusWitnesses) {
  int checked = 0;
  GraphFamilySpec spec{4, 6, 4, 12, GraphClass::kInternallyKEdgeConnected, 4, true};
  for (const auto &g : enumerate_graphs(spec)) {
    bool low_even = true;
    for (VertexId v : g.vertices()) low_even &= g.degree(v) >= 4 || g.degree(v) % 2 == 0;
    if (!low_even) continue;
    for (VertexId x : g.vertices()) {
      if (g.degree(x) % 2 == 0) continue;
      VertexId y = lemma3_witness(g, x, 4);
      EXPECT_GE(brute_lambda(g, g.index_of(x), g.index_of(y)), 5);
      ++checked;
    }
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace imsplit

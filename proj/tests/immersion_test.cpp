#include <vector>

#include <gtest/gtest.h>

#include "imsplit/catalog.hpp"
#include "imsplit/immersion.hpp"
#include "imsplit/isomorphism.hpp"

namespace imsplit {
namespace {

ImmersionCertificate identity_certificate(const MultiGraph &g) {
  ImmersionCertificate c;
  for (VertexId v : g.vertices()) c.phi[v] = v;
  for (const Edge &e : g.edges()) c.paths[e.id] = {e.id};
  return c;
}

TEST(VerifyImmersion, Identity) {
  for (const char *name : {"K5", "Q3", "K2^3", "petersen", "W5"}) {
    auto g = named_graph(name);
    EXPECT_TRUE(verify_immersion(g, g, identity_certificate(g)).ok()) << name;
  }
}

TEST(VerifyImmersion, Defects) {
  auto g = named_graph("K4");
  auto h = named_graph("K4");
  auto expect_defect = [&](const ImmersionCertificate &c, CertificateDefect d) {
    auto check = verify_immersion(g, h, c);
    EXPECT_EQ(check.defect, d) << defect_name(check.defect) << " " << check.detail;
  };
  auto base = identity_certificate(g);

  auto reuse = base;
  reuse.paths[1] = {0, 3};  // 0-1 then 1-2 covers h edge 0-2 but reuses edge 0
  expect_defect(reuse, CertificateDefect::kEdgeReuse);

  auto missing_phi = base;
  missing_phi.phi.erase(3);
  expect_defect(missing_phi, CertificateDefect::kPhiIncomplete);

  auto clash = base;
  clash.phi[3] = 2;
  expect_defect(clash, CertificateDefect::kPhiNotInjective);

  auto ghost = base;
  ghost.phi[3] = 42;
  expect_defect(ghost, CertificateDefect::kUnknownVertex);

  auto no_path = base;
  no_path.paths.erase(5);
  expect_defect(no_path, CertificateDefect::kMissingPath);

  auto bad_edge = base;
  bad_edge.paths[5] = {77};
  expect_defect(bad_edge, CertificateDefect::kUnknownEdge);

  auto empty = base;
  empty.paths[5] = {};
  expect_defect(empty, CertificateDefect::kEmptyPath);

  auto wrong = base;
  wrong.paths[5] = {0};  // edge 0-1 for h edge 2-3
  CertificateCheck check = verify_immersion(g, h, wrong);
  EXPECT_FALSE(check.ok());

  auto k5 = named_graph("K5");
  auto hk = named_graph("K2^2");
  ImmersionCertificate split;
  split.phi = {{0, 0}, {1, 3}};
  split.paths[0] = {0, 7};  // 0-1, 2-3: not a walk
  split.paths[1] = {2};
  auto walk = verify_immersion(k5, hk, split);
  EXPECT_EQ(walk.defect, CertificateDefect::kBrokenWalk) << defect_name(walk.defect);
}

TEST(VerifyImmersion, WalkInEitherDirection) {
  auto g = named_graph("C4");  // 0:01 1:12 2:23 3:30
  auto h = MultiGraph::from_pairs(2, {{0, 1}});
  ImmersionCertificate c;
  c.phi = {{0, 0}, {1, 2}};
  c.paths[0] = {0, 1};
  EXPECT_TRUE(verify_immersion(g, h, c).ok());
  c.paths[0] = {1, 0};
  EXPECT_TRUE(verify_immersion(g, h, c).ok());
  c.paths[0] = {3, 2};
  EXPECT_TRUE(verify_immersion(g, h, c).ok());
}

TEST(FindImmersion, Examples) {
  auto k5 = named_graph("K5");
  auto k4 = named_graph("K4");
  auto cert = find_immersion(k5, k4);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_immersion(k5, k4, *cert).ok());

  auto oct = named_graph("octahedron");
  EXPECT_FALSE(find_immersion(oct, named_graph("K33")).has_value());
  auto ok5 = find_immersion(oct, k5);
  ASSERT_TRUE(ok5.has_value());
  EXPECT_TRUE(verify_immersion(oct, k5, *ok5).ok());

  EXPECT_FALSE(immerses(named_graph("C4"), named_graph("C5")));
  EXPECT_TRUE(immerses(named_graph("C5"), named_graph("C4")));
}

TEST(FindImmersion, K4InQ3) {
  auto q3 = named_graph("Q3");
  auto k4 = named_graph("K4");
  auto cert = find_immersion(q3, k4);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_immersion(q3, k4, *cert).ok());
  EXPECT_TRUE(immerses(q3, named_graph("K2^3")));
  EXPECT_FALSE(immerses(q3, named_graph("K5")));
}

TEST(FindImmersion, ParallelAndLoopEdgesInGuest) {
  auto oct = named_graph("octahedron");
  auto k24 = named_graph("K2^4");
  auto cert = find_immersion(oct, k24);
  ASSERT_TRUE(cert.has_value());
  EXPECT_TRUE(verify_immersion(oct, k24, *cert).ok());
  EXPECT_FALSE(immerses(oct, named_graph("K2^5")));

  auto looped = MultiGraph::from_pairs(2, {{0, 0}, {0, 1}});
  auto cert2 = find_immersion(named_graph("K4"), looped);
  ASSERT_TRUE(cert2.has_value());
  EXPECT_TRUE(verify_immersion(named_graph("K4"), looped, *cert2).ok());
  // a path has no cycle to host the loop
  EXPECT_FALSE(immerses(MultiGraph::from_pairs(3, {{0, 1}, {1, 2}}), looped));
}

TEST(FindImmersion, Petersen) {
  auto p = named_graph("petersen");
  EXPECT_TRUE(immerses(p, named_graph("K4")));
  EXPECT_TRUE(immerses(p, named_graph("K33")));
  EXPECT_FALSE(immerses(p, named_graph("K5")));
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(immersion_oracle_by_splits(named_graph("K4"), named_graph("C3")));
  EXPECT_FALSE(immersion_oracle_by_splits(named_graph("K2^3"), named_graph("C3")));
  SplitClosure closure(named_graph("K4"));
  EXPECT_TRUE(closure.contains(named_graph("K2^3")));
  EXPECT_TRUE(closure.contains(named_graph("K4")));
  EXPECT_FALSE(closure.contains(named_graph("K2^4")));
  EXPECT_TRUE(closure.contains(MultiGraph(4)));
}

// Guests and hosts with loops, on a range small enough to run in a unit test.
TEST(Oracle, AgreesWithSearchOnLoopedGraphs) {
  auto hosts = enumerate_graphs({1, 4, 0, 5, GraphClass::kAll, 0, false});
  auto guests = enumerate_graphs({1, 3, 0, 4, GraphClass::kAll, 0, false});
  long pairs = 0;
  for (const auto &g : hosts) {
    SplitClosure closure(g);
    for (const auto &h : guests) {
      if (h.num_vertices() > g.num_vertices() || h.num_edges() > g.num_edges()) continue;
      auto cert = find_immersion(g, h);
      ASSERT_EQ(cert.has_value(), closure.contains(h));
      if (cert) {
        ASSERT_TRUE(verify_immersion(g, h, *cert).ok());
      }
      ++pairs;
    }
  }
  EXPECT_GT(pairs, 1000);
}

TEST(FindImmersion, CertificatesVerifyOnRandomPairs) {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    auto g = seeded_random_multigraph(3 + seed % 5, 4 + seed % 10, seed, true);
    auto h = seeded_random_multigraph(2 + seed % 3, 1 + seed % 5, seed + 1000, true);
    auto cert = find_immersion(g, h);
    if (cert) {
      EXPECT_TRUE(verify_immersion(g, h, *cert).ok()) << seed;
    }
    if (g.num_vertices() <= 6 && g.num_edges() <= 10) {
      EXPECT_EQ(cert.has_value(), immersion_oracle_by_splits(g, h)) << seed;
    }
  }
}

}  // namespace
}  // namespace imsplit

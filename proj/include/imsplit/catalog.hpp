#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "imsplit/multigraph.hpp"

namespace imsplit {

/// K4, K5, K6, K<n>, K33, Q3, K2^<k>, C<n>, W<n> (n rim vertices plus a hub),
/// octahedron, petersen. Throws kUnknownName.
MultiGraph named_graph(std::string_view name);

enum class GraphClass {
  kAll,
  kConnected,
  kKEdgeConnected,
  kInternallyKEdgeConnected,
  /// 3-edge-connected and internally 4-edge-connected.
  kI4,
};

struct GraphFamilySpec {
  int n_min = 1;
  int n_max = 1;
  int m_min = 0;
  int m_max = 0;
  GraphClass predicate = GraphClass::kAll;
  int k = 0;
  bool loopless = true;
};

/// Largest n accepted by enumerate_graphs: 8, or IMM_SPLIT_MAX_N if set.
int enumeration_max_n();

/// One canonical representative per isomorphism class in the family, sorted by
/// (vertex count, edge count, canonical code). Throws kTooLarge past the
/// guards (n <= enumeration_max_n(), m <= 16).
std::vector<MultiGraph> enumerate_graphs(const GraphFamilySpec &spec);

bool in_graph_class(const MultiGraph &g, GraphClass predicate, int k);

/// xoshiro256** seeded through splitmix64.
class Xoshiro256 {
 public:
  explicit Xoshiro256(uint64_t seed);
  uint64_t next();
  /// Uniform in [0, bound) by rejection; bound > 0.
  uint64_t below(uint64_t bound);

 private:
  std::array<uint64_t, 4> s_{};
};

/// n vertices, m edges with both endpoints drawn uniformly and independently
/// (so loops occur unless `loopless`). Same seed, same graph, on every platform.
MultiGraph seeded_random_multigraph(int n, int m, uint64_t seed, bool loopless = false);

}  // namespace imsplit

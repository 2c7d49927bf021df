#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "imsplit/multigraph.hpp"
#include "imsplit/operations.hpp"

namespace imsplit {

/// Edge cut delta(X). `side` is sorted; `boundary` lists the edge ids with
/// exactly one end in `side`. delta of the empty set is empty.
struct Cut {
  std::vector<VertexId> side;
  std::vector<EdgeId> boundary;
  int size = 0;
  int complement_size = 0;

  bool trivial() const { return side.size() == 1 || complement_size == 1; }
  friend bool operator==(const Cut &, const Cut &) = default;
};

Cut make_cut(const MultiGraph &g, std::span<const VertexId> side);
int cut_size(const MultiGraph &g, std::span<const VertexId> side);
/// Same cut described from its smaller side (ties: lexicographically smaller).
Cut canonical_cut(const MultiGraph &g, std::span<const VertexId> side);

/// Unit-capacity max-flow on the dense form of a graph. Parallel edges are
/// separate unit arcs and loops are ignored. Reusable across many queries.
class EdgeFlow {
 public:
  explicit EdgeFlow(const MultiGraph &g);
  explicit EdgeFlow(const DenseGraph &g);

  struct Result {
    int value = 0;
    /// Dense indices reachable from the sources in the final residual graph;
    /// a minimum cut side whenever `value` did not hit the limit.
    std::vector<char> source_side;
  };

  /// Max flow between two disjoint dense vertex sets, stopping at `limit`.
  Result max_flow(std::span<const int> sources, std::span<const int> sinks,
                  int limit = 1 << 29);
  int lambda(int a, int b, int limit = 1 << 29);

  int size() const { return n_; }

 private:
  void build(const DenseGraph &g);

  int n_ = 0;
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<int> to_;
  std::vector<int> cap_;
};

/// Maximum number of pairwise edge-disjoint x-y paths.
int lambda(const MultiGraph &g, VertexId x, VertexId y);

/// min over vertex pairs of lambda; 0 when disconnected. Needs two vertices.
int edge_connectivity(const MultiGraph &g);

struct ConnectivityCheck {
  bool holds = false;
  /// A violating cut when `holds` is false.
  std::optional<Cut> witness;
  explicit operator bool() const { return holds; }
};

ConnectivityCheck check_k_edge_connected(const MultiGraph &g, int k);
bool is_k_edge_connected(const MultiGraph &g, int k);

/// Every nontrivial cut has at least k edges. Runs one flow per choice of two
/// vertices kept together with a fixed anchor against two vertices on the far
/// side, which covers every nontrivial cut.
ConnectivityCheck is_internally_k_edge_connected(const MultiGraph &g, int k);

/// 3-edge-connected and internally 4-edge-connected.
bool in_i4_class(const MultiGraph &g);

struct NearlyReport {
  bool is_nearly = false;
  std::optional<VertexId> special;
  int k = 0;
  /// The special vertex is isolated. Allowed, but no argument relies on it.
  bool special_isolated = false;
};

NearlyReport is_nearly_k_edge_connected(const MultiGraph &g, int k);

/// Every cut of size <= bound, each reported once from its canonical side,
/// sorted by side size then lexicographically. Subset sweep; n <= 14.
std::vector<Cut> enumerate_cuts_upto(const MultiGraph &g, int bound);

/// Number of edges with one end in `z1` and the other in `z2`.
int cross_edges(const MultiGraph &g, std::span<const VertexId> z1,
                std::span<const VertexId> z2);

/// Checks, by direct counting,
///   d(X^Y) + d(XuY) + 2 e(X^c ^ Y, X ^ Y^c) == d(X) + d(Y)
/// and d(Z) == d(Z1) + d(Z2) - 2 e(Z1, Z2) for the splits X = (X\Y) + (X^Y)
/// and XuY = (X\Y) + Y.
bool verify_cut_identities(const MultiGraph &g, std::span<const VertexId> x,
                           std::span<const VertexId> y);

/// A split at s keeping lambda(x, y) for every pair x, y other than s.
/// Exhaustive over incident pairs; kNotFound would contradict Mader's theorem.
SplitOff mader_split(const MultiGraph &g, VertexId s);

/// Some y != x with lambda(x, y) >= k + 1, for odd-degree x in an internally
/// k-edge-connected graph whose low-degree vertices all have even degree.
VertexId lemma3_witness(const MultiGraph &g, VertexId x, int k);

/// x in X, y outside X with lambda(x, y) >= k + 1 when d(X) == k + 1, under
/// the same hypotheses as lemma3_witness.
std::pair<VertexId, VertexId> lemma4_witness(const MultiGraph &g,
                                             std::span<const VertexId> side, int k);

}  // namespace imsplit

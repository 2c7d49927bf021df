#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "imsplit/multigraph.hpp"

namespace imsplit {

/// Isomorphism-invariant code plus the labeling that produces it.
struct CanonicalForm {
  /// Vertex count followed by the upper triangle (diagonal included) of the
  /// multiplicity matrix in canonical order, one byte per entry.
  std::string code;
  /// order[i] is the dense index of the vertex placed at canonical position i.
  std::vector<int> order;
};

/// Canonical form of a dense multiplicity matrix (row-major n*n, symmetric).
/// Colour refinement plus individualisation; interchangeable twin vertices are
/// branched on once, so complete graphs stay linear.
CanonicalForm canonical_form(int n, std::span<const int> mult);
CanonicalForm canonical_form(const MultiGraph &g);
std::string canonical_code(const MultiGraph &g);

/// The graph relabeled into canonical order: vertices 0..n-1, edges sorted.
MultiGraph canonical_graph(const MultiGraph &g);
/// Inverse of `canonical_form(...).code`.
MultiGraph graph_from_code(const std::string &code);

/// Vertex bijection g -> h preserving every multiplicity (loops included).
std::optional<std::map<VertexId, VertexId>> find_isomorphism(const MultiGraph &g,
                                                            const MultiGraph &h);
bool is_isomorphic(const MultiGraph &g, const MultiGraph &h);

/// All automorphisms as permutations of dense indices, stopping after `limit`.
/// The identity comes first.
std::vector<std::vector<int>> automorphisms(const DenseGraph &g, std::size_t limit);

}  // namespace imsplit

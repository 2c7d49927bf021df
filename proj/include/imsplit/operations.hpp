#pragma once

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "imsplit/multigraph.hpp"

namespace imsplit {

struct DeleteEdge {
  EdgeId edge;
  friend bool operator==(const DeleteEdge &, const DeleteEdge &) = default;
};

/// Replace first = x-pivot and second = pivot-z by a fresh edge x-z.
struct SplitOff {
  EdgeId first;
  EdgeId second;
  VertexId pivot;
  friend bool operator==(const SplitOff &, const SplitOff &) = default;
};

/// Split every edge-end at `vertex` according to `pairing`, then delete the
/// isolated vertex. A loop at the vertex owns two ends, so its id appears in two
/// different pairs; pairing a loop with itself is rejected.
struct CompleteSplit {
  VertexId vertex;
  std::vector<std::pair<EdgeId, EdgeId>> pairing;
  friend bool operator==(const CompleteSplit &, const CompleteSplit &) = default;
};

using Operation = std::variant<DeleteEdge, SplitOff, CompleteSplit>;

/// Raw result of `op` on `g`; `g` is untouched. Throws kUnknownId,
/// kBadIncidence or kOddDegreeCompleteSplit.
MultiGraph apply(const MultiGraph &g, const Operation &op);

/// Fixpoint of: delete every loop, then suppress the smallest-id vertex of
/// degree 2. Vertices whose degree drops to zero along the way are removed;
/// vertices isolated in the input are kept.
MultiGraph normalize(const MultiGraph &g);

/// Replace the degree-2 vertex v and its two edges u-v, v-w by a fresh u-w.
MultiGraph suppress_vertex(const MultiGraph &g, VertexId v);

/// G.X: `side` collapses into one fresh vertex, edges inside `side` vanish and
/// boundary edges keep their ids. Throws kEmptySide unless side is a nonempty
/// proper subset.
MultiGraph identify(const MultiGraph &g, std::span<const VertexId> side);

/// Human-readable one-liner, e.g. "split 3,7 @2".
std::string describe(const Operation &op);

}  // namespace imsplit

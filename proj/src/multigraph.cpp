#include "imsplit/multigraph.hpp"

#include <algorithm>

#include "imsplit/error.hpp"

namespace imsplit {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kUnknownId: return "UnknownId";
    case Errc::kBadIncidence: return "BadIncidence";
    case Errc::kOddDegreeCompleteSplit: return "OddDegreeCompleteSplit";
    case Errc::kEmptySide: return "EmptySide";
    case Errc::kSameVertex: return "SameVertex";
    case Errc::kTooSmall: return "TooSmall";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kOverlap: return "Overlap";
    case Errc::kEmptySet: return "EmptySet";
    case Errc::kDegreeThree: return "DegreeThree";
    case Errc::kCutEdgeIncident: return "CutEdgeIncident";
    case Errc::kNotFound: return "NotFound";
    case Errc::kPreconditionViolated: return "PreconditionViolated";
    case Errc::kBadMode: return "BadMode";
    case Errc::kUnknownName: return "UnknownName";
    case Errc::kParseError: return "ParseError";
  }
  return "Unknown";
}

MultiGraph::MultiGraph(int n) {
  vertices_.reserve(n);
  for (int i = 0; i < n; ++i) vertices_.push_back(i);
  next_vertex_ = n;
}

MultiGraph MultiGraph::from_pairs(
    int n, std::span<const std::pair<VertexId, VertexId>> pairs) {
  MultiGraph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

MultiGraph MultiGraph::from_pairs(
    int n, std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  return from_pairs(n, std::span<const std::pair<VertexId, VertexId>>(
                           pairs.begin(), pairs.size()));
}

VertexId MultiGraph::add_vertex() {
  VertexId id = next_vertex_++;
  vertices_.push_back(id);
  return id;
}

void MultiGraph::add_vertex(VertexId id) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it != vertices_.end() && *it == id) {
    throw Error(Errc::kBadIncidence, "vertex " + std::to_string(id) + " already present");
  }
  vertices_.insert(it, id);
  next_vertex_ = std::max(next_vertex_, id + 1);
}

EdgeId MultiGraph::add_edge(VertexId u, VertexId v) {
  require_vertex(u);
  require_vertex(v);
  EdgeId id = next_edge_++;
  edges_.push_back(Edge{id, u, v});
  return id;
}

void MultiGraph::insert_edge(const Edge &e) {
  require_vertex(e.u);
  require_vertex(e.v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e.id,
                             [](const Edge &x, EdgeId id) { return x.id < id; });
  if (it != edges_.end() && it->id == e.id) {
    throw Error(Errc::kBadIncidence, "edge " + std::to_string(e.id) + " already present");
  }
  edges_.insert(it, e);
  next_edge_ = std::max(next_edge_, e.id + 1);
}

void MultiGraph::reserve_ids(VertexId next_vertex, EdgeId next_edge) {
  next_vertex_ = std::max(next_vertex_, next_vertex);
  next_edge_ = std::max(next_edge_, next_edge);
}

void MultiGraph::remove_edge(EdgeId id) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge &e, EdgeId x) { return e.id < x; });
  if (it == edges_.end() || it->id != id) {
    throw Error(Errc::kUnknownId, "edge " + std::to_string(id));
  }
  edges_.erase(it);
}

void MultiGraph::remove_vertex(VertexId v) {
  require_vertex(v);
  std::erase_if(edges_, [v](const Edge &e) { return e.incident_to(v); });
  vertices_.erase(std::lower_bound(vertices_.begin(), vertices_.end(), v));
}

bool MultiGraph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool MultiGraph::has_edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge &e, EdgeId x) { return e.id < x; });
  return it != edges_.end() && it->id == id;
}

const Edge &MultiGraph::edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge &e, EdgeId x) { return e.id < x; });
  if (it == edges_.end() || it->id != id) {
    throw Error(Errc::kUnknownId, "edge " + std::to_string(id));
  }
  return *it;
}

int MultiGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int MultiGraph::degree(VertexId v) const {
  require_vertex(v);
  int d = 0;
  for (const Edge &e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

std::vector<int> MultiGraph::degrees() const {
  std::vector<int> d(vertices_.size(), 0);
  for (const Edge &e : edges_) {
    ++d[index_of(e.u)];
    ++d[index_of(e.v)];
  }
  return d;
}

std::vector<EdgeId> MultiGraph::incident_edges(VertexId v) const {
  require_vertex(v);
  std::vector<EdgeId> out;
  for (const Edge &e : edges_) {
    if (e.incident_to(v)) out.push_back(e.id);
  }
  return out;
}

int MultiGraph::multiplicity(VertexId u, VertexId v) const {
  int count = 0;
  for (const Edge &e : edges_) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) ++count;
  }
  return count;
}

bool MultiGraph::is_loopless() const {
  return std::none_of(edges_.begin(), edges_.end(),
                      [](const Edge &e) { return e.is_loop(); });
}

bool MultiGraph::is_normalized() const {
  if (!is_loopless()) return false;
  auto d = degrees();
  return std::find(d.begin(), d.end(), 2) == d.end();
}

bool operator==(const MultiGraph &a, const MultiGraph &b) {
  if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge &x = a.edges_[i];
    const Edge &y = b.edges_[i];
    if (x.id != y.id) return false;
    bool same = (x.u == y.u && x.v == y.v) || (x.u == y.v && x.v == y.u);
    if (!same) return false;
  }
  return true;
}

void MultiGraph::require_vertex(VertexId v) const {
  if (!has_vertex(v)) throw Error(Errc::kUnknownId, "vertex " + std::to_string(v));
}

DenseGraph::DenseGraph(const MultiGraph &g)
    : n(g.num_vertices()),
      ids(g.vertices()),
      mult(static_cast<std::size_t>(n) * n, 0),
      degree(n, 0) {
  edges.reserve(g.num_edges());
  for (const Edge &e : g.edges()) {
    int a = g.index_of(e.u);
    int b = g.index_of(e.v);
    edges.push_back(Arc{a, b, e.id});
    ++degree[a];
    ++degree[b];
    if (a == b) {
      ++mult[a * n + a];
    } else {
      ++mult[a * n + b];
      ++mult[b * n + a];
    }
  }
}

}  // namespace imsplit

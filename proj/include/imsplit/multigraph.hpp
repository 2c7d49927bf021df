#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace imsplit {

using VertexId = int;
using EdgeId = int;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;

  bool is_loop() const { return u == v; }
  bool incident_to(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return u == x ? v : u; }

  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Undirected multigraph with opaque, stable vertex and edge ids.
///
/// Vertices are kept sorted by id and edges sorted by id. Fresh ids are always
/// larger than any id the graph has ever held, so an edge that survives an
/// operation keeps its id and new edges never collide with old certificates.
/// A loop contributes 2 to the degree of its endpoint.
class MultiGraph {
 public:
  MultiGraph() = default;
  /// Vertices 0..n-1, no edges.
  explicit MultiGraph(int n);

  static MultiGraph from_pairs(int n,
                               std::span<const std::pair<VertexId, VertexId>> pairs);
  static MultiGraph from_pairs(int n,
                               std::initializer_list<std::pair<VertexId, VertexId>> pairs);

  VertexId add_vertex();
  void add_vertex(VertexId id);
  EdgeId add_edge(VertexId u, VertexId v);
  /// Inserts an edge under an explicit id that must not be in use.
  void insert_edge(const Edge &e);
  /// Raises the fresh-id counters to at least the given values.
  void reserve_ids(VertexId next_vertex, EdgeId next_edge);
  void remove_edge(EdgeId id);
  /// Removes the vertex together with every incident edge.
  void remove_vertex(VertexId v);

  const std::vector<VertexId> &vertices() const { return vertices_; }
  const std::vector<Edge> &edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;
  const Edge &edge(EdgeId e) const;
  /// Position of v in vertices(), or -1.
  int index_of(VertexId v) const;

  int degree(VertexId v) const;
  std::vector<int> degrees() const;
  /// Incident edge ids in id order; a loop is listed once.
  std::vector<EdgeId> incident_edges(VertexId v) const;
  int multiplicity(VertexId u, VertexId v) const;

  bool is_loopless() const;
  /// No loops and no vertex of degree 2.
  bool is_normalized() const;
  /// At most one vertex left; splitter engines never accept such a result.
  bool degenerate() const { return num_vertices() <= 1; }

  VertexId next_vertex_id() const { return next_vertex_; }
  EdgeId next_edge_id() const { return next_edge_; }

  /// Same vertex ids and same edges (ids and endpoints up to orientation).
  friend bool operator==(const MultiGraph &a, const MultiGraph &b);

 private:
  void require_vertex(VertexId v) const;

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

/// Dense snapshot of a MultiGraph: vertices renumbered 0..n-1 in id order and a
/// symmetric multiplicity matrix (loops on the diagonal).
struct DenseGraph {
  int n = 0;
  std::vector<VertexId> ids;
  std::vector<int> mult;
  std::vector<int> degree;
  /// (a, b, edge id) with dense endpoints, in edge id order.
  struct Arc {
    int a;
    int b;
    EdgeId id;
  };
  std::vector<Arc> edges;

  DenseGraph() = default;
  explicit DenseGraph(const MultiGraph &g);

  int at(int a, int b) const { return mult[a * n + b]; }
};

}  // namespace imsplit

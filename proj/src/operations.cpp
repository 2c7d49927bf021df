#include "imsplit/operations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "imsplit/error.hpp"

namespace imsplit {
namespace {

const Edge &incident_edge(const MultiGraph &g, EdgeId id, VertexId pivot) {
  const Edge &e = g.edge(id);
  if (!e.incident_to(pivot)) {
    throw Error(Errc::kBadIncidence, "edge " + std::to_string(id) +
                                         " is not incident to vertex " +
                                         std::to_string(pivot));
  }
  return e;
}

MultiGraph apply_delete(const MultiGraph &g, const DeleteEdge &op) {
  MultiGraph out = g;
  out.remove_edge(op.edge);
  return out;
}

MultiGraph apply_split(const MultiGraph &g, const SplitOff &op) {
  if (!g.has_vertex(op.pivot)) {
    throw Error(Errc::kUnknownId, "vertex " + std::to_string(op.pivot));
  }
  if (op.first == op.second) {
    throw Error(Errc::kBadIncidence, "split needs two distinct edges");
  }
  const Edge &a = incident_edge(g, op.first, op.pivot);
  const Edge &b = incident_edge(g, op.second, op.pivot);
  VertexId x = a.other(op.pivot);
  VertexId z = b.other(op.pivot);
  MultiGraph out = g;
  out.remove_edge(op.first);
  out.remove_edge(op.second);
  out.add_edge(x, z);
  return out;
}

MultiGraph apply_complete_split(const MultiGraph &g, const CompleteSplit &op) {
  const VertexId v = op.vertex;
  if (!g.has_vertex(v)) throw Error(Errc::kUnknownId, "vertex " + std::to_string(v));
  if (g.degree(v) % 2 != 0) {
    throw Error(Errc::kOddDegreeCompleteSplit,
                "vertex " + std::to_string(v) + " has odd degree");
  }

  // Each pair contributes two slots; slot 2p and 2p+1 are partners.
  const int slots = static_cast<int>(op.pairing.size()) * 2;
  std::vector<EdgeId> slot_edge(slots);
  std::map<EdgeId, int> uses;
  for (std::size_t p = 0; p < op.pairing.size(); ++p) {
    auto [a, b] = op.pairing[p];
    const Edge &ea = incident_edge(g, a, v);
    incident_edge(g, b, v);
    if (a == b) {
      throw Error(Errc::kBadIncidence, ea.is_loop()
                                           ? "loop paired with itself"
                                           : "edge paired with itself");
    }
    slot_edge[2 * p] = a;
    slot_edge[2 * p + 1] = b;
    ++uses[a];
    ++uses[b];
  }
  for (EdgeId id : g.incident_edges(v)) {
    int need = g.edge(id).is_loop() ? 2 : 1;
    auto it = uses.find(id);
    int have = it == uses.end() ? 0 : it->second;
    if (have != need) {
      throw Error(Errc::kBadIncidence, "pairing covers edge " + std::to_string(id) + " " +
                                           std::to_string(have) + " times, expected " +
                                           std::to_string(need));
    }
  }

  // The second slot of a loop continues the chain through v.
  std::vector<int> loop_twin(slots, -1);
  std::map<EdgeId, int> first_loop_slot;
  for (int s = 0; s < slots; ++s) {
    if (!g.edge(slot_edge[s]).is_loop()) continue;
    auto [it, fresh] = first_loop_slot.emplace(slot_edge[s], s);
    if (!fresh) {
      loop_twin[s] = it->second;
      loop_twin[it->second] = s;
    }
  }

  MultiGraph out = g;
  std::vector<char> seen(slots, 0);
  std::vector<std::pair<VertexId, VertexId>> created;
  for (int s = 0; s < slots; ++s) {
    if (seen[s] || loop_twin[s] >= 0) continue;
    seen[s] = 1;
    VertexId x = g.edge(slot_edge[s]).other(v);
    int q = s ^ 1;
    while (loop_twin[q] >= 0) {
      seen[q] = 1;
      int t = loop_twin[q];
      seen[t] = 1;
      q = t ^ 1;
    }
    seen[q] = 1;
    created.emplace_back(x, g.edge(slot_edge[q]).other(v));
  }
  out.remove_vertex(v);
  for (auto [x, z] : created) out.add_edge(x, z);
  return out;
}

}  // namespace

MultiGraph apply(const MultiGraph &g, const Operation &op) {
  return std::visit(
      [&](const auto &o) -> MultiGraph {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, DeleteEdge>) {
          return apply_delete(g, o);
        } else if constexpr (std::is_same_v<T, SplitOff>) {
          return apply_split(g, o);
        } else {
          return apply_complete_split(g, o);
        }
      },
      op);
}

MultiGraph suppress_vertex(const MultiGraph &g, VertexId v) {
  auto inc = g.incident_edges(v);
  if (inc.size() != 2 || g.degree(v) != 2) {
    throw Error(Errc::kBadIncidence,
                "vertex " + std::to_string(v) + " is not a loopless degree-2 vertex");
  }
  VertexId u = g.edge(inc[0]).other(v);
  VertexId w = g.edge(inc[1]).other(v);
  MultiGraph out = g;
  out.remove_vertex(v);
  out.add_edge(u, w);
  return out;
}

MultiGraph normalize(const MultiGraph &g) {
  MultiGraph out = g;
  const std::vector<int> start_degree = g.degrees();
  for (;;) {
    std::vector<EdgeId> loops;
    for (const Edge &e : out.edges()) {
      if (e.is_loop()) loops.push_back(e.id);
    }
    for (EdgeId id : loops) out.remove_edge(id);

    auto d = out.degrees();
    auto it = std::find(d.begin(), d.end(), 2);
    if (it == d.end()) break;
    out = suppress_vertex(out, out.vertices()[it - d.begin()]);
  }
  auto d = out.degrees();
  std::vector<VertexId> drop;
  for (int i = 0; i < out.num_vertices(); ++i) {
    VertexId v = out.vertices()[i];
    if (d[i] == 0 && start_degree[g.index_of(v)] > 0) drop.push_back(v);
  }
  for (VertexId v : drop) out.remove_vertex(v);
  return out;
}

MultiGraph identify(const MultiGraph &g, std::span<const VertexId> side) {
  std::set<VertexId> x(side.begin(), side.end());
  if (x.empty()) throw Error(Errc::kEmptySide, "identified set is empty");
  for (VertexId v : x) {
    if (!g.has_vertex(v)) throw Error(Errc::kUnknownId, "vertex " + std::to_string(v));
  }
  if (static_cast<int>(x.size()) == g.num_vertices()) {
    throw Error(Errc::kEmptySide, "complement of identified set is empty");
  }

  MultiGraph out;
  for (VertexId v : g.vertices()) {
    if (!x.count(v)) out.add_vertex(v);
  }
  const VertexId s = g.next_vertex_id();
  out.add_vertex(s);
  for (const Edge &e : g.edges()) {
    bool in_u = x.count(e.u) > 0;
    bool in_v = x.count(e.v) > 0;
    if (in_u && in_v) continue;
    out.insert_edge(Edge{e.id, in_u ? s : e.u, in_v ? s : e.v});
  }
  out.reserve_ids(s + 1, g.next_edge_id());
  return out;
}

std::string describe(const Operation &op) {
  std::ostringstream os;
  std::visit(
      [&](const auto &o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, DeleteEdge>) {
          os << "delete " << o.edge;
        } else if constexpr (std::is_same_v<T, SplitOff>) {
          os << "split " << o.first << "," << o.second << " @" << o.pivot;
        } else {
          os << "complete-split @" << o.vertex << " {";
          for (std::size_t i = 0; i < o.pairing.size(); ++i) {
            os << (i ? " " : "") << o.pairing[i].first << "+" << o.pairing[i].second;
          }
          os << "}";
        }
      },
      op);
  return os.str();
}

}  // namespace imsplit

#include "imsplit/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "imsplit/error.hpp"

namespace imsplit {
namespace {

std::vector<char> membership(const MultiGraph &g, std::span<const VertexId> side) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : side) {
    int i = g.index_of(v);
    if (i < 0) throw Error(Errc::kUnknownId, "vertex " + std::to_string(v));
    in[i] = 1;
  }
  return in;
}

void require_two_vertices(const MultiGraph &g) {
  if (g.num_vertices() < 2) throw Error(Errc::kTooSmall, "need at least two vertices");
}

}  // namespace

Cut make_cut(const MultiGraph &g, std::span<const VertexId> side) {
  auto in = membership(g, side);
  Cut cut;
  for (int i = 0; i < g.num_vertices(); ++i) {
    if (in[i]) cut.side.push_back(g.vertices()[i]);
  }
  cut.complement_size = g.num_vertices() - static_cast<int>(cut.side.size());
  for (const Edge &e : g.edges()) {
    if (in[g.index_of(e.u)] != in[g.index_of(e.v)]) cut.boundary.push_back(e.id);
  }
  cut.size = static_cast<int>(cut.boundary.size());
  return cut;
}

int cut_size(const MultiGraph &g, std::span<const VertexId> side) {
  return make_cut(g, side).size;
}

Cut canonical_cut(const MultiGraph &g, std::span<const VertexId> side) {
  Cut cut = make_cut(g, side);
  std::vector<VertexId> other;
  for (VertexId v : g.vertices()) {
    if (!std::binary_search(cut.side.begin(), cut.side.end(), v)) other.push_back(v);
  }
  bool flip = other.size() < cut.side.size() ||
              (other.size() == cut.side.size() && other < cut.side);
  if (flip && !other.empty()) {
    cut.complement_size = static_cast<int>(cut.side.size());
    cut.side = std::move(other);
  }
  return cut;
}

EdgeFlow::EdgeFlow(const MultiGraph &g) { build(DenseGraph(g)); }

EdgeFlow::EdgeFlow(const DenseGraph &g) { build(g); }

void EdgeFlow::build(const DenseGraph &g) {
  n_ = g.n;
  head_.assign(n_, -1);
  for (const auto &e : g.edges) {
    if (e.a == e.b) continue;
    for (auto [from, to] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
      to_.push_back(to);
      cap_.push_back(1);
      next_.push_back(head_[from]);
      head_[from] = static_cast<int>(to_.size()) - 1;
    }
  }
}

EdgeFlow::Result EdgeFlow::max_flow(std::span<const int> sources,
                                    std::span<const int> sinks, int limit) {
  std::vector<int> cap(cap_.size(), 1);
  std::vector<char> is_sink(n_, 0);
  for (int t : sinks) is_sink[t] = 1;
  for (int s : sources) {
    if (is_sink[s]) throw Error(Errc::kSameVertex, "source and sink sets overlap");
  }
  std::vector<int> parent(n_);
  std::vector<int> queue(n_);
  Result result;
  result.source_side.assign(n_, 0);
  for (;;) {
    std::fill(parent.begin(), parent.end(), -2);
    int qh = 0;
    int qt = 0;
    for (int s : sources) {
      parent[s] = -1;
      queue[qt++] = s;
    }
    int reached = -1;
    while (qh < qt && reached < 0) {
      int v = queue[qh++];
      for (int a = head_[v]; a >= 0; a = next_[a]) {
        int w = to_[a];
        if (cap[a] == 0 || parent[w] != -2) continue;
        parent[w] = a;
        if (is_sink[w]) {
          reached = w;
          break;
        }
        queue[qt++] = w;
      }
    }
    if (reached < 0 || result.value >= limit) {
      for (int v = 0; v < n_; ++v) result.source_side[v] = parent[v] != -2 && !is_sink[v];
      return result;
    }
    for (int w = reached; parent[w] >= 0;) {
      int a = parent[w];
      --cap[a];
      ++cap[a ^ 1];
      w = to_[a ^ 1];
    }
    ++result.value;
    if (result.value >= limit) return result;
  }
}

int EdgeFlow::lambda(int a, int b, int limit) {
  int s[1] = {a};
  int t[1] = {b};
  return max_flow(s, t, limit).value;
}

int lambda(const MultiGraph &g, VertexId x, VertexId y) {
  int a = g.index_of(x);
  int b = g.index_of(y);
  if (a < 0) throw Error(Errc::kUnknownId, "vertex " + std::to_string(x));
  if (b < 0) throw Error(Errc::kUnknownId, "vertex " + std::to_string(y));
  if (a == b) throw Error(Errc::kSameVertex, "lambda needs two distinct vertices");
  return EdgeFlow(g).lambda(a, b);
}

int edge_connectivity(const MultiGraph &g) {
  require_two_vertices(g);
  EdgeFlow flow(g);
  int best = 1 << 29;
  for (int v = 1; v < g.num_vertices(); ++v) best = std::min(best, flow.lambda(0, v, best));
  return best;
}

namespace {

std::optional<Cut> cut_from_side(const MultiGraph &g, const std::vector<char> &side) {
  std::vector<VertexId> x;
  for (int i = 0; i < g.num_vertices(); ++i) {
    if (side[i]) x.push_back(g.vertices()[i]);
  }
  return canonical_cut(g, x);
}

}  // namespace

ConnectivityCheck check_k_edge_connected(const MultiGraph &g, int k) {
  require_two_vertices(g);
  EdgeFlow flow(g);
  for (int v = 1; v < g.num_vertices(); ++v) {
    int s[1] = {0};
    int t[1] = {v};
    auto r = flow.max_flow(s, t, k);
    if (r.value < k) return {false, cut_from_side(g, r.source_side)};
  }
  return {true, std::nullopt};
}

bool is_k_edge_connected(const MultiGraph &g, int k) {
  return check_k_edge_connected(g, k).holds;
}

ConnectivityCheck is_internally_k_edge_connected(const MultiGraph &g, int k) {
  require_two_vertices(g);
  const int n = g.num_vertices();
  if (n <= 3) return {true, std::nullopt};
  EdgeFlow flow(g);
  for (int u = 1; u < n; ++u) {
    for (int v = 1; v < n; ++v) {
      if (v == u) continue;
      for (int w = v + 1; w < n; ++w) {
        if (w == u) continue;
        int s[2] = {0, u};
        int t[2] = {v, w};
        auto r = flow.max_flow(s, t, k);
        if (r.value < k) return {false, cut_from_side(g, r.source_side)};
      }
    }
  }
  return {true, std::nullopt};
}

bool in_i4_class(const MultiGraph &g) {
  return g.num_vertices() >= 2 && g.is_loopless() && is_k_edge_connected(g, 3) &&
         is_internally_k_edge_connected(g, 4).holds;
}

NearlyReport is_nearly_k_edge_connected(const MultiGraph &g, int k) {
  require_two_vertices(g);
  NearlyReport report;
  report.k = k;
  if (is_k_edge_connected(g, k)) {
    report.is_nearly = true;
    return report;
  }
  const int n = g.num_vertices();
  const auto deg = g.degrees();
  EdgeFlow flow(g);
  for (int u = 0; u < n; ++u) {
    if (deg[u] % 2 != 0 || deg[u] >= k) continue;
    // Every cut other than delta(u) separates two vertices distinct from u.
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = a + 1; b < n && ok; ++b) {
        if (a == u || b == u) continue;
        ok = flow.lambda(a, b, k) >= k;
      }
    }
    if (ok) {
      report.is_nearly = true;
      report.special = g.vertices()[u];
      report.special_isolated = deg[u] == 0;
      return report;
    }
  }
  return report;
}

std::vector<Cut> enumerate_cuts_upto(const MultiGraph &g, int bound) {
  const int n = g.num_vertices();
  if (n > 14) throw Error(Errc::kTooLarge, "cut enumeration is capped at 14 vertices");
  DenseGraph d(g);
  std::vector<std::pair<std::vector<int>, Cut>> found;
  const unsigned full = (1u << n) - 1;
  for (unsigned mask = 1; mask < full; ++mask) {
    int size = std::popcount(mask);
    int other = n - size;
    if (size > other) continue;
    if (size == other) {
      // Lexicographic tie-break on sorted dense indices: the side holding the
      // smallest index where the two differ wins, i.e. the side with vertex 0.
      if (!(mask & 1u)) continue;
    }
    int cut = 0;
    for (const auto &e : d.edges) cut += ((mask >> e.a) & 1u) != ((mask >> e.b) & 1u);
    if (cut > bound) continue;
    std::vector<int> key;
    std::vector<VertexId> side;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) {
        key.push_back(i);
        side.push_back(d.ids[i]);
      }
    }
    found.emplace_back(std::move(key), make_cut(g, side));
  }
  std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Cut> out;
  out.reserve(found.size());
  for (auto &f : found) out.push_back(std::move(f.second));
  return out;
}

int cross_edges(const MultiGraph &g, std::span<const VertexId> z1,
                std::span<const VertexId> z2) {
  auto in1 = membership(g, z1);
  auto in2 = membership(g, z2);
  for (int i = 0; i < g.num_vertices(); ++i) {
    if (in1[i] && in2[i]) throw Error(Errc::kOverlap, "sets share a vertex");
  }
  int count = 0;
  for (const Edge &e : g.edges()) {
    int a = g.index_of(e.u);
    int b = g.index_of(e.v);
    if ((in1[a] && in2[b]) || (in2[a] && in1[b])) ++count;
  }
  return count;
}

bool verify_cut_identities(const MultiGraph &g, std::span<const VertexId> x,
                           std::span<const VertexId> y) {
  if (x.empty() || y.empty()) throw Error(Errc::kEmptySet, "identity needs nonempty X and Y");
  auto in_x = membership(g, x);
  auto in_y = membership(g, y);
  std::vector<VertexId> both, either, x_only, y_only;
  for (int i = 0; i < g.num_vertices(); ++i) {
    VertexId v = g.vertices()[i];
    if (in_x[i] && in_y[i]) both.push_back(v);
    if (in_x[i] || in_y[i]) either.push_back(v);
    if (in_x[i] && !in_y[i]) x_only.push_back(v);
    if (!in_x[i] && in_y[i]) y_only.push_back(v);
  }
  std::vector<VertexId> ys(y.begin(), y.end());
  std::vector<VertexId> xs(x.begin(), x.end());
  const int dx = cut_size(g, xs);
  const int dy = cut_size(g, ys);
  const int lhs = cut_size(g, both) + cut_size(g, either) + 2 * cross_edges(g, y_only, x_only);
  bool ok = lhs == dx + dy;
  // (*) with X = (X\Y) + (X^Y).
  ok = ok && dx == cut_size(g, x_only) + cut_size(g, both) - 2 * cross_edges(g, x_only, both);
  // (*) with XuY = (X\Y) + Y.
  ok = ok && cut_size(g, either) == cut_size(g, x_only) + dy - 2 * cross_edges(g, x_only, ys);
  return ok;
}

SplitOff mader_split(const MultiGraph &g, VertexId s) {
  const int si = g.index_of(s);
  if (si < 0) throw Error(Errc::kUnknownId, "vertex " + std::to_string(s));
  const int ds = g.degree(s);
  if (ds == 3) throw Error(Errc::kDegreeThree, "vertex " + std::to_string(s) + " has degree 3");
  auto inc = g.incident_edges(s);
  EdgeFlow base(g);
  for (EdgeId id : inc) {
    const Edge &e = g.edge(id);
    if (e.is_loop()) continue;
    if (base.lambda(g.index_of(e.u), g.index_of(e.v), 2) < 2) {
      throw Error(Errc::kCutEdgeIncident,
                  "edge " + std::to_string(id) + " at vertex " + std::to_string(s) + " is a cut-edge");
    }
  }
  if (ds < 2) {
    throw Error(Errc::kPreconditionViolated, "vertex " + std::to_string(s) + " has no pair to split");
  }

  const int n = g.num_vertices();
  std::vector<int> before(n * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (a != si && b != si) before[a * n + b] = base.lambda(a, b);
    }
  }
  std::set<std::pair<VertexId, VertexId>> tried;
  std::erase_if(inc, [&](EdgeId id) { return g.edge(id).is_loop(); });
  for (std::size_t i = 0; i < inc.size(); ++i) {
    for (std::size_t j = i + 1; j < inc.size(); ++j) {
      VertexId x = g.edge(inc[i]).other(s);
      VertexId z = g.edge(inc[j]).other(s);
      // Splits with the same far ends give the same graph up to edge ids.
      if (!tried.insert(std::minmax(x, z)).second) continue;
      SplitOff op{inc[i], inc[j], s};
      MultiGraph next = apply(g, op);
      EdgeFlow flow(next);
      bool keeps = true;
      for (int a = 0; a < n && keeps; ++a) {
        for (int b = a + 1; b < n && keeps; ++b) {
          if (a == si || b == si) continue;
          keeps = flow.lambda(a, b, before[a * n + b]) >= before[a * n + b];
        }
      }
      if (keeps) return op;
    }
  }
  throw Error(Errc::kNotFound, "no admissible split at vertex " + std::to_string(s));
}

namespace {

void require_lemma_hypotheses(const MultiGraph &g, int k) {
  if (!is_internally_k_edge_connected(g, k).holds) {
    throw Error(Errc::kPreconditionViolated, "graph is not internally k-edge-connected");
  }
  auto deg = g.degrees();
  for (int i = 0; i < g.num_vertices(); ++i) {
    if (deg[i] < k && deg[i] % 2 != 0) {
      throw Error(Errc::kPreconditionViolated,
                  "vertex " + std::to_string(g.vertices()[i]) + " has odd degree below k");
    }
  }
}

}  // namespace

VertexId lemma3_witness(const MultiGraph &g, VertexId x, int k) {
  const int xi = g.index_of(x);
  if (xi < 0) throw Error(Errc::kUnknownId, "vertex " + std::to_string(x));
  require_lemma_hypotheses(g, k);
  if (g.degree(x) % 2 == 0) {
    throw Error(Errc::kPreconditionViolated, "vertex " + std::to_string(x) + " has even degree");
  }
  EdgeFlow flow(g);
  for (int y = 0; y < g.num_vertices(); ++y) {
    if (y != xi && flow.lambda(xi, y, k + 1) >= k + 1) return g.vertices()[y];
  }
  throw Error(Errc::kNotFound, "no partner with lambda >= k+1 for vertex " + std::to_string(x));
}

std::pair<VertexId, VertexId> lemma4_witness(const MultiGraph &g,
                                             std::span<const VertexId> side, int k) {
  auto in = membership(g, side);
  require_lemma_hypotheses(g, k);
  if (cut_size(g, side) != k + 1) {
    throw Error(Errc::kPreconditionViolated, "cut does not have k+1 edges");
  }
  EdgeFlow flow(g);
  for (int a = 0; a < g.num_vertices(); ++a) {
    if (!in[a]) continue;
    for (int b = 0; b < g.num_vertices(); ++b) {
      if (in[b]) continue;
      if (flow.lambda(a, b, k + 1) >= k + 1) return {g.vertices()[a], g.vertices()[b]};
    }
  }
  throw Error(Errc::kNotFound, "no pair across the cut with lambda >= k+1");
}

}  // namespace imsplit

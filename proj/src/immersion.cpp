#include "imsplit/immersion.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

#include "imsplit/connectivity.hpp"
#include "imsplit/error.hpp"
#include "imsplit/isomorphism.hpp"

namespace imsplit {

std::string_view defect_name(CertificateDefect d) {
  switch (d) {
    case CertificateDefect::kNone: return "None";
    case CertificateDefect::kPhiIncomplete: return "PhiIncomplete";
    case CertificateDefect::kPhiNotInjective: return "PhiNotInjective";
    case CertificateDefect::kUnknownVertex: return "UnknownVertex";
    case CertificateDefect::kMissingPath: return "MissingPath";
    case CertificateDefect::kUnknownEdge: return "UnknownEdge";
    case CertificateDefect::kEmptyPath: return "EmptyPath";
    case CertificateDefect::kEdgeReuse: return "EdgeReuse";
    case CertificateDefect::kBrokenWalk: return "BrokenWalk";
    case CertificateDefect::kWrongEndpoints: return "WrongEndpoints";
  }
  return "Unknown";
}

namespace {

CertificateCheck fail(CertificateDefect d, std::string detail) {
  return CertificateCheck{d, std::move(detail)};
}

// Walks `path` from `start`; returns the end vertex or nullopt if two
// consecutive edges do not meet.
std::optional<VertexId> walk(const MultiGraph &g, VertexId start,
                             const std::vector<EdgeId> &path) {
  VertexId cur = start;
  for (EdgeId id : path) {
    const Edge &e = g.edge(id);
    if (!e.incident_to(cur)) return std::nullopt;
    cur = e.other(cur);
  }
  return cur;
}

}  // namespace

CertificateCheck verify_immersion(const MultiGraph &g, const MultiGraph &h,
                                  const ImmersionCertificate &cert) {
  for (const auto &[hv, gv] : cert.phi) {
    if (!h.has_vertex(hv)) return fail(CertificateDefect::kUnknownVertex, "h vertex " + std::to_string(hv));
    if (!g.has_vertex(gv)) return fail(CertificateDefect::kUnknownVertex, "g vertex " + std::to_string(gv));
  }
  for (VertexId hv : h.vertices()) {
    if (!cert.phi.count(hv)) return fail(CertificateDefect::kPhiIncomplete, "h vertex " + std::to_string(hv));
  }
  std::set<VertexId> images;
  for (const auto &[hv, gv] : cert.phi) {
    if (!images.insert(gv).second) {
      return fail(CertificateDefect::kPhiNotInjective, "g vertex " + std::to_string(gv) + " used twice");
    }
  }
  for (const auto &[he, path] : cert.paths) {
    if (!h.has_edge(he)) return fail(CertificateDefect::kUnknownEdge, "h edge " + std::to_string(he));
  }
  std::set<EdgeId> used;
  for (const Edge &he : h.edges()) {
    auto it = cert.paths.find(he.id);
    if (it == cert.paths.end()) return fail(CertificateDefect::kMissingPath, "h edge " + std::to_string(he.id));
    const auto &path = it->second;
    if (path.empty()) return fail(CertificateDefect::kEmptyPath, "h edge " + std::to_string(he.id));
    for (EdgeId id : path) {
      if (!g.has_edge(id)) return fail(CertificateDefect::kUnknownEdge, "g edge " + std::to_string(id));
      if (!used.insert(id).second) {
        return fail(CertificateDefect::kEdgeReuse, "g edge " + std::to_string(id) + " used twice");
      }
    }
    VertexId a = cert.phi.at(he.u);
    VertexId b = cert.phi.at(he.v);
    auto forward = walk(g, a, path);
    auto backward = walk(g, b, path);
    if (!forward && !backward) {
      return fail(CertificateDefect::kBrokenWalk, "path of h edge " + std::to_string(he.id));
    }
    if (!(forward && *forward == b) && !(backward && *backward == a)) {
      return fail(CertificateDefect::kWrongEndpoints, "path of h edge " + std::to_string(he.id));
    }
  }
  return {};
}

namespace {

class ImmersionSearch {
 public:
  ImmersionSearch(const MultiGraph &g, const MultiGraph &h) : g_(g), h_(h), dg_(g), dh_(h) {}

  std::optional<ImmersionCertificate> run() {
    n_ = dg_.n;
    nh_ = dh_.n;
    m_ = static_cast<int>(dg_.edges.size());
    if (nh_ > n_ || dh_.edges.size() > dg_.edges.size()) return std::nullopt;
    {
      auto a = dg_.degree;
      auto b = dh_.degree;
      std::sort(a.rbegin(), a.rend());
      std::sort(b.rbegin(), b.rend());
      for (int i = 0; i < nh_; ++i) {
        if (b[i] > a[i]) return std::nullopt;
      }
    }
    build_adjacency();
    build_routing_order();

    autos_ = automorphisms(dh_, 40320);
    if (autos_.size() >= 40320) autos_.resize(1);

    h_order_.resize(nh_);
    std::iota(h_order_.begin(), h_order_.end(), 0);
    std::stable_sort(h_order_.begin(), h_order_.end(),
                     [&](int a, int b) { return dh_.degree[a] > dh_.degree[b]; });
    g_order_.resize(n_);
    std::iota(g_order_.begin(), g_order_.end(), 0);
    std::stable_sort(g_order_.begin(), g_order_.end(),
                     [&](int a, int b) { return dg_.degree[a] > dg_.degree[b]; });

    phi_.assign(nh_, -1);
    taken_.assign(n_, 0);
    used_.assign(m_, 0);
    visited_.assign(order_.size(), std::vector<char>(n_, 0));
    path_edges_.assign(order_.size(), {});
    path_verts_.assign(order_.size(), {});
    use_memo_ = n_ <= 12 && m_ <= 64;
    if (!assign(0)) return std::nullopt;
    return certificate();
  }

 private:
  struct Link {
    int to;
    std::vector<int> edges;
  };
  struct Demand {
    int hu;
    int hv;
    EdgeId id;
  };

  void build_adjacency() {
    adj_.assign(n_, {});
    loops_.assign(n_, {});
    for (int i = 0; i < m_; ++i) {
      const auto &e = dg_.edges[i];
      if (e.a == e.b) {
        loops_[e.a].push_back(i);
        continue;
      }
      for (auto [x, y] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
        auto &links = adj_[x];
        auto it = std::find_if(links.begin(), links.end(), [y = y](const Link &l) { return l.to == y; });
        if (it == links.end()) {
          links.push_back(Link{y, {}});
          it = links.end() - 1;
        }
        it->edges.push_back(i);
      }
    }
    for (auto &links : adj_) {
      std::sort(links.begin(), links.end(), [](const Link &a, const Link &b) { return a.to < b.to; });
    }
    edge_bits_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      edge_bits_[i] = {dg_.edges[i].a, dg_.edges[i].b};
    }
  }

  // Heaviest terminal pairs first, then lexicographic by pair, then edge id.
  void build_routing_order() {
    for (const auto &e : dh_.edges) {
      int a = std::min(e.a, e.b);
      int b = std::max(e.a, e.b);
      order_.push_back(Demand{a, b, e.id});
    }
    std::stable_sort(order_.begin(), order_.end(), [&](const Demand &x, const Demand &y) {
      int dx = dh_.at(x.hu, x.hv);
      int dy = dh_.at(y.hu, y.hv);
      if (dx != dy) return dx > dy;
      if (x.hu != y.hu) return x.hu < y.hu;
      if (x.hv != y.hv) return x.hv < y.hv;
      return x.id < y.id;
    });
  }

  bool assign(int pos) {
    if (pos == nh_) {
      if (!canonical_phi()) return false;
      memo_.clear();
      return route(0);
    }
    int hv = h_order_[pos];
    for (int gv : g_order_) {
      if (taken_[gv] || dg_.degree[gv] < dh_.degree[hv]) continue;
      phi_[hv] = gv;
      taken_[gv] = 1;
      bool ok = assign(pos + 1);
      taken_[gv] = 0;
      if (ok) return true;
      phi_[hv] = -1;
    }
    return false;
  }

  // Only the lexicographically least map in each Aut(h)-orbit is routed.
  bool canonical_phi() const {
    for (std::size_t s = 1; s < autos_.size(); ++s) {
      const auto &sigma = autos_[s];
      for (int i = 0; i < nh_; ++i) {
        int image = phi_[sigma[i]];
        if (image < phi_[i]) return false;
        if (image > phi_[i]) break;
      }
    }
    return true;
  }

  bool cut_condition(std::size_t depth) const {
    if (n_ <= 10) {
      const unsigned limit = 1u << (n_ - 1);
      for (unsigned mask = 1; mask < limit; ++mask) {
        int demand = 0;
        for (std::size_t d = depth; d < order_.size(); ++d) {
          int a = phi_[order_[d].hu];
          int b = phi_[order_[d].hv];
          demand += ((mask >> a) & 1u) != ((mask >> b) & 1u);
        }
        if (demand == 0) continue;
        int cut = 0;
        for (int i = 0; i < m_ && cut < demand; ++i) {
          if (used_[i]) continue;
          cut += ((mask >> edge_bits_[i].first) & 1u) != ((mask >> edge_bits_[i].second) & 1u);
        }
        if (cut < demand) return false;
      }
      return true;
    }
    // Larger graphs: per-pair flow bound on the residual graph.
    MultiGraph residual(n_);
    for (int i = 0; i < m_; ++i) {
      if (!used_[i]) residual.add_edge(dg_.edges[i].a, dg_.edges[i].b);
    }
    EdgeFlow flow(residual);
    std::map<std::pair<int, int>, int> need;
    for (std::size_t d = depth; d < order_.size(); ++d) {
      int a = phi_[order_[d].hu];
      int b = phi_[order_[d].hv];
      if (a != b) ++need[std::minmax(a, b)];
    }
    for (auto [pair, count] : need) {
      if (flow.lambda(pair.first, pair.second, count) < count) return false;
    }
    return true;
  }

  uint64_t used_mask() const {
    uint64_t mask = 0;
    for (int i = 0; i < m_; ++i) {
      if (used_[i]) mask |= uint64_t{1} << i;
    }
    return mask;
  }

  bool same_pair(std::size_t depth) const {
    return depth > 0 && order_[depth].hu == order_[depth - 1].hu &&
           order_[depth].hv == order_[depth - 1].hv;
  }

  bool route(std::size_t depth) {
    if (depth == order_.size()) return true;
    if (!cut_condition(depth)) return false;
    std::pair<uint64_t, uint64_t> key{};
    if (use_memo_) {
      uint64_t tag = depth;
      if (same_pair(depth)) {
        int shift = 8;
        for (int v : path_verts_[depth - 1]) {
          tag |= static_cast<uint64_t>(v + 1) << shift;
          shift += 4;
        }
      }
      key = {used_mask(), tag};
      if (memo_.count(key)) return false;
    }
    const Demand &dem = order_[depth];
    target_ = phi_[dem.hv];
    source_ = phi_[dem.hu];
    depth_ = depth;
    prev_ = same_pair(depth) ? &path_verts_[depth - 1] : nullptr;
    auto &verts = path_verts_[depth];
    auto &edges = path_edges_[depth];
    verts.assign(1, source_);
    edges.clear();
    bool ok = false;
    int state = 0;
    if (prev_ && !prev_->empty()) {
      if (source_ < (*prev_)[0]) return remember(key);
      if (source_ > (*prev_)[0]) state = 1;
    } else {
      state = 1;
    }
    if (source_ == target_) {
      for (int e : loops_[source_]) {
        if (used_[e]) continue;
        used_[e] = 1;
        edges.assign(1, e);
        verts.assign({source_, source_});
        if (!prev_ || verts >= *prev_) ok = route(depth + 1);
        used_[e] = 0;
        restore(depth);
        break;
      }
      if (ok) return true;
      verts.assign(1, source_);
      edges.clear();
    }
    visited_[depth][source_] = 1;
    ok = extend(source_, state);
    visited_[depth][source_] = 0;
    if (ok) return true;
    return remember(key);
  }

  bool remember(std::pair<uint64_t, uint64_t> key) {
    if (use_memo_) memo_.insert(key);
    return false;
  }

  bool accept_equal(const std::vector<int> &verts) const {
    return !prev_ || verts.size() >= prev_->size();
  }

  // The recursive call in route() overwrites the per-depth cursor fields.
  void restore(std::size_t depth) {
    const Demand &dem = order_[depth];
    target_ = phi_[dem.hv];
    source_ = phi_[dem.hu];
    depth_ = depth;
    prev_ = same_pair(depth) ? &path_verts_[depth - 1] : nullptr;
  }

  bool extend(int cur, int state) {
    auto &verts = path_verts_[depth_];
    auto &edges = path_edges_[depth_];
    const std::size_t pos = verts.size();
    for (const Link &link : adj_[cur]) {
      int w = link.to;
      int e = -1;
      for (int cand : link.edges) {
        if (!used_[cand]) {
          e = cand;
          break;
        }
      }
      if (e < 0) continue;
      int next_state = state;
      if (state == 0) {
        if (pos < prev_->size()) {
          if (w < (*prev_)[pos]) continue;
          if (w > (*prev_)[pos]) next_state = 1;
        } else {
          next_state = 1;
        }
      }
      if (w == target_) {
        verts.push_back(w);
        edges.push_back(e);
        used_[e] = 1;
        bool ok = false;
        if (next_state == 1 || accept_equal(verts)) {
          std::size_t here = depth_;
          ok = route(here + 1);
          restore(here);
        }
        used_[e] = 0;
        if (ok) return true;
        verts.pop_back();
        edges.pop_back();
        continue;
      }
      auto &visited = visited_[depth_];
      if (visited[w]) continue;
      visited[w] = 1;
      used_[e] = 1;
      verts.push_back(w);
      edges.push_back(e);
      bool ok = extend(w, next_state);
      if (ok) return true;
      verts.pop_back();
      edges.pop_back();
      used_[e] = 0;
      visited[w] = 0;
    }
    return false;
  }

  ImmersionCertificate certificate() const {
    ImmersionCertificate cert;
    for (int i = 0; i < nh_; ++i) cert.phi[dh_.ids[i]] = dg_.ids[phi_[i]];
    for (std::size_t d = 0; d < order_.size(); ++d) {
      const Demand &dem = order_[d];
      std::vector<EdgeId> path;
      for (int e : path_edges_[d]) path.push_back(dg_.edges[e].id);
      // Demands are stored with hu < hv in dense order; orient along the h edge.
      const Edge &he = h_.edge(dem.id);
      if (h_.index_of(he.u) != dem.hu) std::reverse(path.begin(), path.end());
      cert.paths[dem.id] = std::move(path);
    }
    return cert;
  }

  const MultiGraph &g_;
  const MultiGraph &h_;
  DenseGraph dg_;
  DenseGraph dh_;
  int n_ = 0;
  int nh_ = 0;
  int m_ = 0;
  std::vector<std::vector<Link>> adj_;
  std::vector<std::vector<int>> loops_;
  std::vector<std::pair<int, int>> edge_bits_;
  std::vector<Demand> order_;
  std::vector<std::vector<int>> autos_;
  std::vector<int> h_order_;
  std::vector<int> g_order_;
  std::vector<int> phi_;
  std::vector<char> taken_;
  std::vector<char> used_;
  // Per routing depth: vertices on the path being built.
  std::vector<std::vector<char>> visited_;
  std::vector<std::vector<int>> path_edges_;
  std::vector<std::vector<int>> path_verts_;
  bool use_memo_ = false;
  struct PairHash {
    std::size_t operator()(const std::pair<uint64_t, uint64_t> &p) const {
      return std::hash<uint64_t>()(p.first * 0x9E3779B97F4A7C15ull ^ p.second);
    }
  };
  std::unordered_set<std::pair<uint64_t, uint64_t>, PairHash> memo_;
  int source_ = 0;
  int target_ = 0;
  std::size_t depth_ = 0;
  const std::vector<int> *prev_ = nullptr;
};

}  // namespace

std::optional<ImmersionCertificate> find_immersion(const MultiGraph &g, const MultiGraph &h) {
  return ImmersionSearch(g, h).run();
}

bool immerses(const MultiGraph &g, const MultiGraph &h) {
  return find_immersion(g, h).has_value();
}

namespace {

// Successor states of a dense multiplicity matrix under one elementary step.
void expand(int n, const std::vector<int> &m, bool strip_loops,
            const std::function<void(int, std::vector<int> &)> &emit) {
  auto at = [&](const std::vector<int> &x, int a, int b) -> int { return x[a * n + b]; };
  // Delete one edge.
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      if (at(m, a, b) == 0) continue;
      auto next = m;
      --next[a * n + b];
      if (a != b) --next[b * n + a];
      emit(n, next);
    }
  }
  // Delete an isolated vertex.
  for (int v = 0; v < n; ++v) {
    bool isolated = true;
    for (int u = 0; u < n && isolated; ++u) isolated = at(m, v, u) == 0;
    if (!isolated) continue;
    std::vector<int> next;
    next.reserve((n - 1) * (n - 1));
    for (int a = 0; a < n; ++a) {
      if (a == v) continue;
      for (int b = 0; b < n; ++b) {
        if (b != v) next.push_back(at(m, a, b));
      }
    }
    emit(n - 1, next);
  }
  // Split x-y, y-z at y. Splitting a loop at y is the same as deleting it.
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      if (x == y || at(m, x, y) == 0) continue;
      for (int z = x; z < n; ++z) {
        if (z == y || at(m, y, z) == 0) continue;
        if (z == x && at(m, x, y) < 2) continue;
        auto next = m;
        --next[x * n + y];
        --next[y * n + x];
        --next[y * n + z];
        --next[z * n + y];
        if (x == z) {
          if (!strip_loops) ++next[x * n + x];
        } else {
          ++next[x * n + z];
          ++next[z * n + x];
        }
        emit(n, next);
      }
    }
  }
}

std::vector<int> matrix_of(const std::string &code, int &n) {
  n = static_cast<unsigned char>(code[0]);
  std::vector<int> m(n * n, 0);
  std::size_t k = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      m[i * n + j] = m[j * n + i] = static_cast<unsigned char>(code[k++]);
    }
  }
  return m;
}

// All states reachable from g. With strip_loops every loop is dropped as soon
// as it appears, which loses nothing when the target is loopless.
std::unordered_set<std::string> closure(const MultiGraph &g, bool strip_loops,
                                        const std::string *target) {
  DenseGraph d(g);
  auto start = d.mult;
  if (strip_loops) {
    for (int v = 0; v < d.n; ++v) start[v * d.n + v] = 0;
  }
  std::unordered_set<std::string> seen;
  std::vector<std::string> stack;
  std::string first = canonical_form(d.n, start).code;
  seen.insert(first);
  stack.push_back(first);
  bool found = target && first == *target;
  while (!stack.empty() && !found) {
    std::string cur = std::move(stack.back());
    stack.pop_back();
    int n = 0;
    auto m = matrix_of(cur, n);
    expand(n, m, strip_loops, [&](int k, std::vector<int> &next) {
      if (found) return;
      std::string code = canonical_form(k, next).code;
      if (seen.insert(code).second) {
        if (target && code == *target) found = true;
        stack.push_back(std::move(code));
      }
    });
  }
  if (target && !found) seen.erase(*target);
  return seen;
}

void guard(const MultiGraph &g) {
  if (g.num_vertices() > 6 || g.num_edges() > 10) {
    throw Error(Errc::kTooLarge, "split-closure oracle is limited to 6 vertices and 10 edges");
  }
}

}  // namespace

SplitClosure::SplitClosure(const MultiGraph &g) : g_(g) {
  guard(g);
  loopless_ = closure(g, true, nullptr);
}

bool SplitClosure::contains(const MultiGraph &h) const {
  if (h.is_loopless()) return loopless_.count(canonical_code(h)) > 0;
  std::string target = canonical_code(h);
  return closure(g_, false, &target).count(target) > 0;
}

bool immersion_oracle_by_splits(const MultiGraph &g, const MultiGraph &h) {
  guard(g);
  std::string target = canonical_code(h);
  return closure(g, h.is_loopless(), &target).count(target) > 0;
}

}  // namespace imsplit

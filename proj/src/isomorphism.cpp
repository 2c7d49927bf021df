#include "imsplit/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "imsplit/error.hpp"

namespace imsplit {
namespace {

class Canonizer {
 public:
  Canonizer(int n, std::span<const int> mult) : n_(n), m_(mult), twin_(n) {
    std::iota(twin_.begin(), twin_.end(), 0);
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        if (twin_[b] == b && twins(a, b)) twin_[b] = twin_[a];
      }
    }
  }

  CanonicalForm run() {
    std::vector<int> color(n_, 0);
    search(color);
    return best_;
  }

 private:
  int at(int a, int b) const { return m_[a * n_ + b]; }

  bool twins(int a, int b) const {
    if (at(a, a) != at(b, b)) return false;
    for (int w = 0; w < n_; ++w) {
      if (w != a && w != b && at(a, w) != at(b, w)) return false;
    }
    return true;
  }

  // Equitable refinement; new colours are ranks of (old colour, neighbourhood
  // signature), so the ordering of existing cells is preserved.
  int refine(std::vector<int> &color) const {
    int cells = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<std::vector<int>> sig(n_);
    std::vector<int> idx(n_);
    for (;;) {
      for (int v = 0; v < n_; ++v) {
        auto &s = sig[v];
        s.clear();
        s.push_back(color[v]);
        s.push_back(at(v, v));
        for (int u = 0; u < n_; ++u) {
          if (u != v && at(v, u) > 0) s.push_back(color[u] * 1024 + at(v, u));
        }
        std::sort(s.begin() + 2, s.end());
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int next = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++next;
        color[idx[i]] = next;
      }
      int now = next + 1;
      if (now == cells) return cells;
      cells = now;
    }
  }

  void search(std::vector<int> color) {
    int cells = n_ == 0 ? 0 : refine(color);
    if (cells == n_) {
      std::vector<int> order(n_);
      for (int v = 0; v < n_; ++v) order[color[v]] = v;
      std::string code;
      code.reserve(1 + n_ * (n_ + 1) / 2);
      code.push_back(static_cast<char>(n_));
      for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) code.push_back(static_cast<char>(at(order[i], order[j])));
      }
      if (!have_best_ || code < best_.code) {
        best_.code = std::move(code);
        best_.order = std::move(order);
        have_best_ = true;
      }
      return;
    }
    // First non-singleton cell.
    std::vector<int> size(cells, 0);
    for (int c : color) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;
    std::vector<int> tried_twins;
    for (int v = 0; v < n_; ++v) {
      if (color[v] != target) continue;
      if (std::find(tried_twins.begin(), tried_twins.end(), twin_[v]) != tried_twins.end()) continue;
      tried_twins.push_back(twin_[v]);
      std::vector<int> next(n_);
      for (int w = 0; w < n_; ++w) {
        next[w] = 2 * color[w] + ((color[w] == target && w != v) ? 1 : 0);
      }
      // Compress to 0..k-1 keeping order.
      std::vector<int> vals(next);
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      for (int &c : next) c = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), c) - vals.begin());
      search(std::move(next));
    }
  }

  int n_;
  std::span<const int> m_;
  std::vector<int> twin_;
  CanonicalForm best_;
  bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(int n, std::span<const int> mult) {
  if (n > 255) throw Error(Errc::kTooLarge, "canonical form supports at most 255 vertices");
  return Canonizer(n, mult).run();
}

CanonicalForm canonical_form(const MultiGraph &g) {
  DenseGraph d(g);
  for (int x : d.mult) {
    if (x > 255) throw Error(Errc::kTooLarge, "multiplicity above 255");
  }
  return canonical_form(d.n, d.mult);
}

std::string canonical_code(const MultiGraph &g) { return canonical_form(g).code; }

MultiGraph graph_from_code(const std::string &code) {
  int n = static_cast<unsigned char>(code.at(0));
  MultiGraph g(n);
  std::size_t k = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      int mult = static_cast<unsigned char>(code.at(k++));
      for (int r = 0; r < mult; ++r) g.add_edge(i, j);
    }
  }
  return g;
}

MultiGraph canonical_graph(const MultiGraph &g) { return graph_from_code(canonical_code(g)); }

std::optional<std::map<VertexId, VertexId>> find_isomorphism(const MultiGraph &g,
                                                            const MultiGraph &h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return std::nullopt;
  auto cg = canonical_form(g);
  auto ch = canonical_form(h);
  if (cg.code != ch.code) return std::nullopt;
  std::map<VertexId, VertexId> map;
  for (std::size_t i = 0; i < cg.order.size(); ++i) {
    map[g.vertices()[cg.order[i]]] = h.vertices()[ch.order[i]];
  }
  return map;
}

bool is_isomorphic(const MultiGraph &g, const MultiGraph &h) {
  return find_isomorphism(g, h).has_value();
}

std::vector<std::vector<int>> automorphisms(const DenseGraph &g, std::size_t limit) {
  const int n = g.n;
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Stable colours restrict each vertex to its own orbit candidates.
  std::vector<int> color(n, 0);
  {
    std::vector<std::vector<int>> sig(n);
    int cells = 1;
    for (;;) {
      for (int v = 0; v < n; ++v) {
        auto &s = sig[v];
        s.assign({color[v], g.at(v, v)});
        for (int u = 0; u < n; ++u) {
          if (u != v && g.at(v, u) > 0) s.push_back(color[u] * 1024 + g.at(v, u));
        }
        std::sort(s.begin() + 2, s.end());
      }
      auto uniq = sig;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      for (int v = 0; v < n; ++v) {
        color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
      }
      if (static_cast<int>(uniq.size()) == cells) break;
      cells = static_cast<int>(uniq.size());
    }
  }
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto &&self, int i) -> void {
    if (out.size() >= limit) return;
    if (i == n) {
      out.push_back(perm);
      return;
    }
    // Try the identity image first so the identity permutation leads.
    for (int step = 0; step < n; ++step) {
      int c = (i + step) % n;
      if (used[c] || color[c] != color[i] || g.at(c, c) != g.at(i, i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = g.at(i, j) == g.at(c, perm[j]);
      if (!ok) continue;
      perm[i] = c;
      used[c] = 1;
      self(self, i + 1);
      used[c] = 0;
      perm[i] = -1;
      if (out.size() >= limit) return;
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace imsplit

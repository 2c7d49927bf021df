#include "imsplit/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <tuple>

#include "imsplit/connectivity.hpp"
#include "imsplit/error.hpp"
#include "imsplit/isomorphism.hpp"

namespace imsplit {
namespace {

std::optional<int> parse_count(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

MultiGraph complete(int n) {
  MultiGraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

MultiGraph cycle(int n) {
  MultiGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return g;
}

}  // namespace

MultiGraph named_graph(std::string_view name) {
  if (name == "K33") {
    MultiGraph g(6);
    for (int a = 0; a < 3; ++a) {
      for (int b = 3; b < 6; ++b) g.add_edge(a, b);
    }
    return g;
  }
  if (name == "Q3") {
    MultiGraph g(8);
    for (int a = 0; a < 8; ++a) {
      for (int bit = 1; bit < 8; bit <<= 1) {
        if ((a & bit) == 0) g.add_edge(a, a | bit);
      }
    }
    return g;
  }
  if (name == "octahedron") {
    MultiGraph g(6);
    for (int a = 0; a < 6; ++a) {
      for (int b = a + 1; b < 6; ++b) {
        if (b != (a ^ 1)) g.add_edge(a, b);
      }
    }
    return g;
  }
  if (name == "petersen") {
    MultiGraph g(10);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(i, i + 5);
      g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
  }
  if (name.starts_with("K2^")) {
    if (auto k = parse_count(name.substr(3)); k && *k >= 0) {
      MultiGraph g(2);
      for (int i = 0; i < *k; ++i) g.add_edge(0, 1);
      return g;
    }
  } else if (name.starts_with("K")) {
    if (auto n = parse_count(name.substr(1)); n && *n >= 1) return complete(*n);
  } else if (name.starts_with("C")) {
    if (auto n = parse_count(name.substr(1)); n && *n >= 1) return cycle(*n);
  } else if (name.starts_with("W")) {
    if (auto n = parse_count(name.substr(1)); n && *n >= 3) {
      MultiGraph g = cycle(*n);
      VertexId hub = g.add_vertex();
      for (int i = 0; i < *n; ++i) g.add_edge(i, hub);
      return g;
    }
  }
  throw Error(Errc::kUnknownName, std::string(name));
}

int enumeration_max_n() {
  if (const char *env = std::getenv("IMM_SPLIT_MAX_N")) {
    if (auto n = parse_count(env); n && *n > 0) return *n;
  }
  return 8;
}

bool in_graph_class(const MultiGraph &g, GraphClass predicate, int k) {
  switch (predicate) {
    case GraphClass::kAll:
      return true;
    case GraphClass::kConnected:
      return g.num_vertices() == 1 || (g.num_vertices() >= 2 && is_k_edge_connected(g, 1));
    case GraphClass::kKEdgeConnected:
      return g.num_vertices() >= 2 && is_k_edge_connected(g, k);
    case GraphClass::kInternallyKEdgeConnected:
      return g.num_vertices() >= 2 && is_internally_k_edge_connected(g, k).holds;
    case GraphClass::kI4:
      return in_i4_class(g);
  }
  return false;
}

namespace {

class Enumerator {
 public:
  Enumerator(const GraphFamilySpec &spec, int n) : spec_(spec), n_(n), mult_(n * n, 0), deg_(n, 0) {
    switch (spec.predicate) {
      case GraphClass::kConnected: min_degree_ = n >= 2 ? 1 : 0; break;
      case GraphClass::kKEdgeConnected: min_degree_ = spec.k; break;
      case GraphClass::kI4: min_degree_ = 3; break;
      default: min_degree_ = 0; break;
    }
    for (int i = 0; i < n; ++i) {
      if (!spec.loopless) pairs_.push_back({i, i});
      for (int j = i + 1; j < n; ++j) pairs_.push_back({i, j});
    }
  }

  void run(std::set<std::string> &codes) {
    codes_ = &codes;
    rec(0, 0);
    // A row with no pairs (last vertex, loopless) is never closed inside rec.
  }

 private:
  bool row_ends(std::size_t p) const {
    return p + 1 == pairs_.size() || pairs_[p + 1].first != pairs_[p].first;
  }

  // Degrees are non-increasing in vertex order and each closed vertex meets
  // the minimum degree; enough edges must remain to lift the rest.
  bool close_row(int i, int used) const {
    if (deg_[i] < min_degree_) return false;
    if (i > 0 && deg_[i] > deg_[i - 1]) return false;
    int need = 0;
    for (int v = i + 1; v < n_; ++v) need += std::max(0, min_degree_ - deg_[v]);
    return (need + 1) / 2 <= spec_.m_max - used;
  }

  void emit(int used) {
    if (used < spec_.m_min) return;
    // Vertices after the last closed row still need their checks.
    int last_closed = pairs_.empty() ? -1 : pairs_.back().first;
    for (int v = last_closed + 1; v < n_; ++v) {
      if (deg_[v] < min_degree_) return;
      if (v > 0 && deg_[v] > deg_[v - 1]) return;
    }
    codes_->insert(canonical_form(n_, mult_).code);
  }

  void rec(std::size_t p, int used) {
    if (p == pairs_.size()) {
      emit(used);
      return;
    }
    auto [i, j] = pairs_[p];
    const int step = i == j ? 2 : 1;
    for (int c = 0; used + c <= spec_.m_max; ++c) {
      if (c > 0) {
        mult_[i * n_ + j] += 1;
        if (i != j) mult_[j * n_ + i] += 1;
        deg_[i] += step;
        if (i != j) deg_[j] += 1;
      }
      if (i > 0 && deg_[i] > deg_[i - 1]) break;
      if (j > 0 && i > 0 && deg_[j] > deg_[i - 1]) break;
      if (!row_ends(p) || close_row(i, used + c)) rec(p + 1, used + c);
    }
    int c = mult_[i * n_ + j];
    mult_[i * n_ + j] = 0;
    if (i != j) mult_[j * n_ + i] = 0;
    deg_[i] -= step * c;
    if (i != j) deg_[j] -= c;
  }

  const GraphFamilySpec &spec_;
  int n_;
  int min_degree_ = 0;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> mult_;
  std::vector<int> deg_;
  std::set<std::string> *codes_ = nullptr;
};

}  // namespace

std::vector<MultiGraph> enumerate_graphs(const GraphFamilySpec &spec) {
  if (spec.n_max > enumeration_max_n() || spec.m_max > 16) {
    throw Error(Errc::kTooLarge, "enumeration is limited to n <= " +
                                     std::to_string(enumeration_max_n()) + " and m <= 16");
  }
  std::vector<std::tuple<int, int, std::string>> keyed;
  for (int n = std::max(1, spec.n_min); n <= spec.n_max; ++n) {
    std::set<std::string> codes;
    Enumerator(spec, n).run(codes);
    for (const auto &code : codes) {
      MultiGraph g = graph_from_code(code);
      if (g.num_edges() < spec.m_min || g.num_edges() > spec.m_max) continue;
      if (!in_graph_class(g, spec.predicate, spec.k)) continue;
      keyed.emplace_back(n, g.num_edges(), code);
    }
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<MultiGraph> out;
  out.reserve(keyed.size());
  for (const auto &[n, m, code] : keyed) out.push_back(graph_from_code(code));
  return out;
}

namespace {

uint64_t splitmix64(uint64_t &x) {
  uint64_t z = (x += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256::Xoshiro256(uint64_t seed) {
  for (auto &word : s_) word = splitmix64(seed);
}

uint64_t Xoshiro256::next() {
  const uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

uint64_t Xoshiro256::below(uint64_t bound) {
  const uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

MultiGraph seeded_random_multigraph(int n, int m, uint64_t seed, bool loopless) {
  if (n < 1 || m < 0) throw Error(Errc::kTooSmall, "need n >= 1 and m >= 0");
  if (loopless && n < 2 && m > 0) throw Error(Errc::kTooSmall, "loopless edges need two vertices");
  Xoshiro256 rng(seed);
  MultiGraph g(n);
  for (int i = 0; i < m; ++i) {
    int a = 0;
    int b = 0;
    do {
      a = static_cast<int>(rng.below(n));
      b = static_cast<int>(rng.below(n));
    } while (loopless && a == b);
    g.add_edge(std::min(a, b), std::max(a, b));
  }
  return g;
}

}  // namespace imsplit

#include "imsplit/splitter.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>

#include "imsplit/catalog.hpp"
#include "imsplit/connectivity.hpp"
#include "imsplit/error.hpp"
#include "imsplit/isomorphism.hpp"

namespace imsplit {

Mode Mode::even_k(int k, bool allow_special) {
  if (k < 2 || k % 2 != 0) throw Error(Errc::kBadMode, "k must be even and at least 2, got " + std::to_string(k));
  Mode m;
  m.kind = Kind::kEvenK;
  m.k = k;
  m.allow_special = allow_special;
  return m;
}

std::string mode_name(const Mode &mode) {
  if (mode.kind == Mode::Kind::kI4) return "i4";
  std::string s = "evenk:" + std::to_string(mode.k);
  if (mode.allow_special) s += ":nearly";
  return s;
}

Mode parse_mode(std::string_view text) {
  if (text == "i4") return Mode::i4();
  if (text.starts_with("evenk:")) {
    std::string_view rest = text.substr(6);
    bool nearly = false;
    if (rest.ends_with(":nearly")) {
      nearly = true;
      rest.remove_suffix(7);
    }
    int k = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec == std::errc() && ptr == rest.data() + rest.size() && !rest.empty()) {
      return Mode::even_k(k, nearly);
    }
  }
  throw Error(Errc::kBadMode, "unknown mode '" + std::string(text) + "'");
}

namespace {

void require_mode(const Mode &mode) {
  if (mode.kind == Mode::Kind::kEvenK && (mode.k < 2 || mode.k % 2 != 0)) {
    throw Error(Errc::kBadMode, "k must be even and at least 2");
  }
}

// Every cut except possibly delta(u) has at least k edges.
bool nearly_with_special(const MultiGraph &g, int k, VertexId u) {
  if (!g.has_vertex(u) || g.degree(u) % 2 != 0 || g.degree(u) >= k) return false;
  const int n = g.num_vertices();
  const int iu = g.index_of(u);
  EdgeFlow flow(g);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (a == iu || b == iu) continue;
      if (flow.lambda(a, b, k) < k) return false;
    }
  }
  return true;
}

std::optional<VertexId> derive_special(const MultiGraph &g, const Mode &mode,
                                       std::optional<VertexId> special) {
  if (mode.kind != Mode::Kind::kEvenK || !mode.allow_special) return std::nullopt;
  if (special) return special;
  if (g.num_vertices() < 2) return std::nullopt;
  return is_nearly_k_edge_connected(g, mode.k).special;
}

}  // namespace

ClassReport class_report(const MultiGraph &g, const Mode &mode, std::optional<VertexId> special) {
  require_mode(mode);
  ClassReport r;
  r.loopless = g.is_loopless();
  r.edge_connectivity = g.num_vertices() >= 2 ? edge_connectivity(g) : 0;
  if (mode.kind == Mode::Kind::kI4) {
    r.target = "3ec+i4ec";
    r.k = 4;
    r.internally_4ec = g.num_vertices() >= 2 && is_internally_k_edge_connected(g, 4).holds;
    r.holds = g.num_vertices() >= 2 && r.loopless && r.edge_connectivity >= 3 && r.internally_4ec;
    return r;
  }
  r.k = mode.k;
  r.target = "k-edge-connected";
  if (g.num_vertices() < 2 || !r.loopless) return r;
  if (r.edge_connectivity >= mode.k) {
    r.holds = true;
    return r;
  }
  if (mode.allow_special && special && nearly_with_special(g, mode.k, *special)) {
    r.target = "nearly-k-edge-connected";
    r.special = special;
    r.holds = true;
  }
  return r;
}

std::vector<std::vector<std::pair<EdgeId, EdgeId>>> complete_split_pairings(const MultiGraph &g,
                                                                            VertexId v) {
  std::vector<EdgeId> ends;
  for (EdgeId id : g.incident_edges(v)) {
    ends.push_back(id);
    if (g.edge(id).is_loop()) ends.push_back(id);
  }
  if (ends.size() % 2 != 0) throw Error(Errc::kOddDegreeCompleteSplit, "vertex " + std::to_string(v));
  if (ends.size() > 8) {
    throw Error(Errc::kTooLarge, "complete split pairings are enumerated up to degree 8");
  }
  std::vector<std::vector<std::pair<EdgeId, EdgeId>>> out;
  std::set<std::vector<std::pair<EdgeId, EdgeId>>> seen;
  std::vector<char> taken(ends.size(), 0);
  std::vector<std::pair<EdgeId, EdgeId>> cur;
  auto rec = [&](auto &&self) -> void {
    std::size_t first = 0;
    while (first < ends.size() && taken[first]) ++first;
    if (first == ends.size()) {
      auto key = cur;
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) out.push_back(cur);
      return;
    }
    taken[first] = 1;
    for (std::size_t j = first + 1; j < ends.size(); ++j) {
      if (taken[j] || ends[j] == ends[first]) continue;
      taken[j] = 1;
      cur.emplace_back(std::min(ends[first], ends[j]), std::max(ends[first], ends[j]));
      self(self);
      cur.pop_back();
      taken[j] = 0;
    }
    taken[first] = 0;
  };
  rec(rec);
  return out;
}

std::vector<Operation> candidate_operations(const MultiGraph &g, const Mode &mode,
                                            std::optional<VertexId> special) {
  require_mode(mode);
  std::vector<Operation> ops;
  for (const Edge &e : g.edges()) ops.push_back(DeleteEdge{e.id});
  const int split_degree = mode.kind == Mode::Kind::kI4 ? 4 : mode.k + 2;
  for (VertexId y : g.vertices()) {
    if (g.degree(y) < split_degree) continue;
    std::vector<EdgeId> inc;
    for (EdgeId id : g.incident_edges(y)) {
      if (!g.edge(id).is_loop()) inc.push_back(id);
    }
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) ops.push_back(SplitOff{inc[a], inc[b], y});
    }
  }
  if (mode.kind == Mode::Kind::kEvenK) {
    const bool has_special = mode.allow_special && special.has_value();
    const VertexId sp = has_special ? *special : -1;
    for (VertexId v : g.vertices()) {
      const bool is_special = has_special && sp == v && g.degree(v) % 2 == 0 && g.degree(v) > 0;
      if (g.degree(v) != mode.k && !is_special) continue;
      for (auto &pairing : complete_split_pairings(g, v)) {
        ops.push_back(CompleteSplit{v, std::move(pairing)});
      }
    }
  }
  return ops;
}

std::optional<bool> ImmersionCache::lookup(const std::string &key) const {
  std::lock_guard lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void ImmersionCache::store(const std::string &key, bool value) {
  std::lock_guard lock(mutex_);
  table_.emplace(key, value);
}

std::size_t ImmersionCache::size() const {
  std::lock_guard lock(mutex_);
  return table_.size();
}

namespace {

ClassReport host_class(const MultiGraph &h, const Mode &mode) {
  Mode plain = mode;
  plain.allow_special = false;
  return class_report(h, plain);
}

void check_preconditions(const MultiGraph &g, const MultiGraph &h, const Mode &mode,
                         std::optional<VertexId> special) {
  if (h.num_vertices() < 2) throw Error(Errc::kPreconditionViolated, "h has fewer than two vertices");
  if (!class_report(g, mode, special).holds) {
    throw Error(Errc::kPreconditionViolated, "g is not in the " + mode_name(mode) + " class");
  }
  if (!host_class(h, mode).holds) {
    throw Error(Errc::kPreconditionViolated, "h is not in the " + mode_name(mode) + " class");
  }
  if (is_isomorphic(g, h)) throw Error(Errc::kPreconditionViolated, "g is isomorphic to h");
  if (!immerses(g, h)) throw Error(Errc::kPreconditionViolated, "g does not immerse h");
}

}  // namespace

std::optional<GoodOpResult> find_good_operation(const MultiGraph &g, const MultiGraph &h,
                                                const Mode &mode, const FindOptions &options,
                                                std::optional<VertexId> special) {
  require_mode(mode);
  special = derive_special(g, mode, special);
  if (options.check_preconditions) check_preconditions(g, h, mode, special);
  const std::string h_code = canonical_code(h);
  for (Operation &op : candidate_operations(g, mode, special)) {
    if (options.complete_splits_only && !std::holds_alternative<CompleteSplit>(op)) continue;
    MultiGraph result = normalize(imsplit::apply(g, op));
    if (result.degenerate()) continue;
    if (result.num_vertices() < h.num_vertices() || result.num_edges() < h.num_edges()) continue;
    ClassReport report = class_report(result, mode, special);
    if (!report.holds) continue;
    std::string key;
    if (options.cache) {
      key = canonical_code(result) + '\x01' + h_code;
      if (auto known = options.cache->lookup(key); known && !*known) continue;
    }
    auto cert = find_immersion(result, h);
    if (options.cache) options.cache->store(key, cert.has_value());
    if (!cert) continue;
    return GoodOpResult{std::move(op), std::move(result), std::move(*cert), std::move(report)};
  }
  return std::nullopt;
}

namespace {

// Class membership by direct cut enumeration, independent of the flow code.
std::string class_by_cuts(const MultiGraph &g, const Mode &mode, std::optional<VertexId> special) {
  if (g.num_vertices() < 2) return "fewer than two vertices";
  if (!g.is_loopless()) return "has a loop";
  if (mode.kind == Mode::Kind::kI4) {
    for (const Cut &c : enumerate_cuts_upto(g, 3)) {
      if (c.size < 3) return "cut of size " + std::to_string(c.size);
      if (!c.trivial()) return "nontrivial 3-cut";
    }
    return {};
  }
  for (const Cut &c : enumerate_cuts_upto(g, mode.k - 1)) {
    bool allowed = special && ((c.side.size() == 1 && c.side[0] == *special) ||
                               (c.complement_size == 1 && !std::binary_search(c.side.begin(), c.side.end(), *special)));
    if (!allowed) return "cut of size " + std::to_string(c.size);
  }
  if (special && g.has_vertex(*special) && g.degree(*special) % 2 != 0) return "special vertex of odd degree";
  return {};
}

}  // namespace

std::string verify_good_op_result(const MultiGraph &g, const MultiGraph &h, const Mode &mode,
                                  const GoodOpResult &r, std::optional<VertexId> special) {
  special = derive_special(g, mode, special);
  MultiGraph replay;
  try {
    replay = normalize(imsplit::apply(g, r.op));
  } catch (const Error &e) {
    return std::string("operation does not apply: ") + e.what();
  }
  if (!(replay == r.result)) return "result differs from normalize(apply(g, op))";
  if (r.result.degenerate()) return "result is degenerate";
  if (auto check = verify_immersion(r.result, h, r.cert); !check) {
    return "certificate rejected: " + std::string(defect_name(check.defect)) + " " + check.detail;
  }
  if (!r.class_report.holds) return "class report does not hold";
  if (auto why = class_by_cuts(r.result, mode, r.class_report.special ? r.class_report.special : std::nullopt);
      !why.empty()) {
    return "result not in class: " + why;
  }
  if (r.class_report.special && r.class_report.special != special) return "special vertex changed";
  const ClassReport fresh = class_report(r.result, mode, special);
  if (fresh.target != r.class_report.target || fresh.k != r.class_report.k ||
      fresh.edge_connectivity != r.class_report.edge_connectivity ||
      fresh.internally_4ec != r.class_report.internally_4ec || fresh.loopless != r.class_report.loopless ||
      fresh.special != r.class_report.special) {
    return "class report fields do not match a recomputation";
  }
  auto ops = candidate_operations(g, mode, special);
  if (std::find(ops.begin(), ops.end(), r.op) == ops.end()) return "operation not permitted by the mode";
  return {};
}

bool is_declared_exception(const MultiGraph &g, const MultiGraph &h) {
  static const MultiGraph q3 = named_graph("Q3");
  static const MultiGraph k4 = named_graph("K4");
  static const MultiGraph k23 = named_graph("K2^3");
  return is_isomorphic(g, q3) && (is_isomorphic(h, k4) || is_isomorphic(h, k23));
}

std::string_view outcome_name(ReductionTrace::Outcome outcome) {
  switch (outcome) {
    case ReductionTrace::Outcome::kReached: return "Reached";
    case ReductionTrace::Outcome::kStuckDeclaredException: return "StuckDeclaredException";
    case ReductionTrace::Outcome::kStuckAlarm: return "StuckAlarm";
  }
  return "Unknown";
}

ReductionTrace reduce_chain(const MultiGraph &g, const MultiGraph &h, const Mode &mode,
                            const FindOptions &options) {
  require_mode(mode);
  ReductionTrace trace;
  auto special = derive_special(g, mode, std::nullopt);
  MultiGraph cur = g;
  for (bool first = true;; first = false) {
    if (!first && is_isomorphic(cur, h)) {
      trace.outcome = ReductionTrace::Outcome::kReached;
      break;
    }
    FindOptions step_options = options;
    step_options.check_preconditions = first && options.check_preconditions;
    if (special && !cur.has_vertex(*special)) special.reset();
    auto good = find_good_operation(cur, h, mode, step_options, special);
    if (!good) {
      trace.outcome = mode.kind == Mode::Kind::kI4 && is_declared_exception(cur, h)
                          ? ReductionTrace::Outcome::kStuckDeclaredException
                          : ReductionTrace::Outcome::kStuckAlarm;
      break;
    }
    MultiGraph next = good->result;
    trace.steps.push_back(ReductionStep{std::move(cur), std::move(*good)});
    cur = std::move(next);
  }
  trace.final_graph = std::move(cur);
  return trace;
}

std::string replay_trace(const MultiGraph &h, const Mode &mode, const ReductionTrace &trace) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto &step = trace.steps[i];
    if (i > 0 && !(step.before == trace.steps[i - 1].good.result)) {
      return "step " + std::to_string(i) + " does not start from the previous result";
    }
    if (auto why = verify_good_op_result(step.before, h, mode, step.good, step.good.class_report.special);
        !why.empty()) {
      return "step " + std::to_string(i) + ": " + why;
    }
  }
  const MultiGraph &last = trace.steps.empty() ? trace.final_graph : trace.steps.back().good.result;
  if (!(last == trace.final_graph)) return "final graph differs from the last result";
  if (trace.outcome == ReductionTrace::Outcome::kReached && !is_isomorphic(trace.final_graph, h)) {
    return "final graph is not isomorphic to h";
  }
  return {};
}

EdgeId lemma1_witness(const MultiGraph &g, std::span<const VertexId> side, int k) {
  Mode mode = Mode::even_k(k, true);
  auto special = derive_special(g, mode, std::nullopt);
  if (!class_report(g, mode, special).holds) {
    throw Error(Errc::kPreconditionViolated, "g is not (nearly) k-edge-connected");
  }
  if (side.empty() || side.size() > 20) throw Error(Errc::kPreconditionViolated, "X must have 1..20 vertices");
  if (cut_size(g, side) != k) throw Error(Errc::kPreconditionViolated, "d(X) != k");
  for (VertexId x : side) {
    if (g.degree(x) != k + 1) throw Error(Errc::kPreconditionViolated, "vertex of X with degree != k+1");
  }
  // Smallest subsets first, so the first hit is inclusion-minimal.
  std::vector<VertexId> xs(side.begin(), side.end());
  std::sort(xs.begin(), xs.end());
  const unsigned full = 1u << xs.size();
  std::vector<unsigned> masks;
  for (unsigned mask = 1; mask < full; ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  for (unsigned mask : masks) {
    std::vector<VertexId> sub;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (mask >> i & 1u) sub.push_back(xs[i]);
    }
    if (cut_size(g, sub) != k) continue;
    for (const Edge &e : g.edges()) {
      if (e.is_loop()) continue;
      if (!std::binary_search(sub.begin(), sub.end(), e.u) || !std::binary_search(sub.begin(), sub.end(), e.v)) {
        continue;
      }
      MultiGraph reduced = g;
      reduced.remove_edge(e.id);
      if (class_report(reduced, mode, special).holds) return e.id;
    }
    throw Error(Errc::kNotFound, "no edge inside the minimal k-cut side keeps the class");
  }
  throw Error(Errc::kNotFound, "no subset of X with d = k");
}

bool is_interesting_cut(const MultiGraph &g, std::span<const VertexId> side) {
  Cut cut = make_cut(g, side);
  if (cut.size != 4) throw Error(Errc::kPreconditionViolated, "d(X) != 4");
  std::vector<VertexId> other;
  for (VertexId v : g.vertices()) {
    if (!std::binary_search(cut.side.begin(), cut.side.end(), v)) other.push_back(v);
  }
  auto good_side = [&](const std::vector<VertexId> &s) {
    if (s.size() >= 3) return true;
    if (s.size() == 2) return !(g.degree(s[0]) == 3 && g.degree(s[1]) == 3);
    return false;
  };
  return good_side(cut.side) && good_side(other);
}

bool verify_minimal_3cut_deletion(const MultiGraph &h) {
  if (h.num_vertices() < 4 || !is_k_edge_connected(h, 3)) {
    throw Error(Errc::kPreconditionViolated, "h must be 3-edge-connected");
  }
  std::vector<std::vector<VertexId>> sides;
  for (const Cut &c : enumerate_cuts_upto(h, 3)) {
    if (c.size != 3 || c.trivial()) continue;
    sides.push_back(c.side);
    std::vector<VertexId> other;
    for (VertexId v : h.vertices()) {
      if (!std::binary_search(c.side.begin(), c.side.end(), v)) other.push_back(v);
    }
    sides.push_back(std::move(other));
  }
  if (sides.empty()) throw Error(Errc::kPreconditionViolated, "h has no nontrivial 3-cut");
  bool all = true;
  for (const auto &y : sides) {
    bool minimal = std::none_of(sides.begin(), sides.end(), [&](const std::vector<VertexId> &z) {
      return z.size() < y.size() && std::includes(y.begin(), y.end(), z.begin(), z.end());
    });
    if (!minimal) continue;
    for (const Edge &e : h.edges()) {
      if (!std::binary_search(y.begin(), y.end(), e.u) || !std::binary_search(y.begin(), y.end(), e.v)) continue;
      MultiGraph reduced = h;
      reduced.remove_edge(e.id);
      all = all && is_internally_k_edge_connected(reduced, 3).holds;
    }
  }
  return all;
}

std::string_view verdict_name(CorollaryVerdict v) {
  switch (v) {
    case CorollaryVerdict::kImmersesK33: return "ImmersesK33";
    case CorollaryVerdict::kIsOctahedron: return "IsOctahedron";
    case CorollaryVerdict::kNotApplicable: return "NotApplicable";
    case CorollaryVerdict::kViolation: return "Violation";
  }
  return "Unknown";
}

CorollaryVerdict verify_corollary_k5(const MultiGraph &g) {
  static const MultiGraph k5 = named_graph("K5");
  static const MultiGraph k33 = named_graph("K33");
  static const MultiGraph octahedron = named_graph("octahedron");
  if (g.num_vertices() < 6 || !in_i4_class(g) || !immerses(g, k5)) return CorollaryVerdict::kNotApplicable;
  if (immerses(g, k33)) return CorollaryVerdict::kImmersesK33;
  if (is_isomorphic(g, octahedron)) return CorollaryVerdict::kIsOctahedron;
  return CorollaryVerdict::kViolation;
}

}  // namespace imsplit

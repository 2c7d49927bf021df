#include "imsplit/suites.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <thread>

#include "imsplit/catalog.hpp"
#include "imsplit/connectivity.hpp"
#include "imsplit/error.hpp"
#include "imsplit/immersion.hpp"
#include "imsplit/isomorphism.hpp"
#include "imsplit/mgr_format.hpp"
#include "imsplit/splitter.hpp"

namespace imsplit {

long SuiteReport::counter(std::string_view name) const {
  for (const auto &[key, value] : counters) {
    if (key == name) return value;
  }
  return 0;
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = {"menger", "mader",     "identities", "i4",
                                                 "evenk4", "dingkanno", "corollary",  "oracle"};
  return names;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)> &body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t threads = std::min<std::size_t>(jobs, count);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto &t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

class Tally {
 public:
  void add(const std::string &name, long value = 1) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      index_[name] = order_.size();
      order_.emplace_back(name, value);
    } else {
      order_[it->second].second += value;
    }
  }
  /// Declares a counter so it is reported even when it stays at zero.
  void declare(const std::string &name) { add(name, 0); }
  std::vector<std::pair<std::string, long>> take() { return std::move(order_); }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::pair<std::string, long>> order_;
};

int bound_or(int value, int fallback) { return value > 0 ? value : fallback; }

std::string block(const std::string &title, const MultiGraph &g) { return title + "\n" + to_mgr(g); }

// Minimum cut separating dense vertices a and b, by sweeping every subset.
int brute_min_cut(const DenseGraph &d, int a, int b) {
  int best = 1 << 30;
  const unsigned full = 1u << d.n;
  for (unsigned mask = 0; mask < full; ++mask) {
    if (!(mask >> a & 1u) || (mask >> b & 1u)) continue;
    int size = 0;
    for (const auto &e : d.edges) size += ((mask >> e.a) & 1u) != ((mask >> e.b) & 1u);
    best = std::min(best, size);
  }
  return best;
}

SuiteReport menger_suite(const SuiteOptions &o) {
  const int n_max = bound_or(o.n_max, 8);
  const int m_max = bound_or(o.m_max, 16);
  const int samples = bound_or(o.samples, 1000);
  if (n_max > 16) throw Error(Errc::kTooLarge, "menger suite sweeps subsets; n <= 16");
  Xoshiro256 rng(o.seed);
  std::vector<MultiGraph> graphs;
  for (int i = 0; i < samples; ++i) {
    int n = 2 + static_cast<int>(rng.below(n_max - 1));
    int m = static_cast<int>(rng.below(m_max + 1));
    graphs.push_back(seeded_random_multigraph(n, m, rng.next()));
  }
  struct Item {
    long pairs = 0;
    std::vector<std::string> bad;
  };
  std::vector<Item> items(graphs.size());
  parallel_for(graphs.size(), o.jobs, [&](std::size_t i) {
    const MultiGraph &g = graphs[i];
    DenseGraph d(g);
    EdgeFlow flow(d);
    for (int a = 0; a < d.n; ++a) {
      for (int b = a + 1; b < d.n; ++b) {
        ++items[i].pairs;
        int by_flow = flow.lambda(a, b);
        int by_cut = brute_min_cut(d, a, b);
        if (by_flow != by_cut) {
          items[i].bad.push_back(block("lambda(" + std::to_string(a) + "," + std::to_string(b) + ") flow=" +
                                           std::to_string(by_flow) + " cut=" + std::to_string(by_cut),
                                       g));
        }
      }
    }
  });
  SuiteReport r;
  r.suite = "menger";
  Tally t;
  t.add("graphs", static_cast<long>(graphs.size()));
  t.declare("pairs");
  t.declare("mismatches");
  for (auto &item : items) {
    t.add("pairs", item.pairs);
    t.add("mismatches", static_cast<long>(item.bad.size()));
    for (auto &s : item.bad) r.counterexamples.push_back(std::move(s));
  }
  r.counters = t.take();
  r.passed = r.counterexamples.empty();
  return r;
}

SuiteReport mader_suite(const SuiteOptions &o) {
  GraphFamilySpec spec;
  spec.n_min = 2;
  spec.n_max = bound_or(o.n_max, 6);
  spec.m_max = bound_or(o.m_max, 10);
  spec.predicate = GraphClass::kConnected;
  auto graphs = enumerate_graphs(spec);
  struct Item {
    long tested = 0, degree3 = 0, cut_edge = 0, isolated = 0, found = 0;
    std::vector<std::string> bad;
  };
  std::vector<Item> items(graphs.size());
  parallel_for(graphs.size(), o.jobs, [&](std::size_t i) {
    const MultiGraph &g = graphs[i];
    Item &item = items[i];
    for (VertexId s : g.vertices()) {
      if (g.degree(s) == 3) {
        ++item.degree3;
        continue;
      }
      SplitOff op{};
      try {
        op = mader_split(g, s);
      } catch (const Error &e) {
        if (e.code() == Errc::kCutEdgeIncident) {
          ++item.cut_edge;
        } else if (e.code() == Errc::kPreconditionViolated) {
          ++item.isolated;
        } else {
          ++item.tested;
          item.bad.push_back(block(std::string("vertex ") + std::to_string(s) + ": " + e.what(), g));
        }
        continue;
      }
      ++item.tested;
      // Admissibility re-checked from scratch.
      MultiGraph next = imsplit::apply(g, op);
      bool ok = g.edge(op.first).incident_to(s) && g.edge(op.second).incident_to(s);
      for (VertexId a : g.vertices()) {
        for (VertexId b : g.vertices()) {
          if (!ok || a >= b || a == s || b == s) continue;
          ok = lambda(next, a, b) == lambda(g, a, b);
        }
      }
      if (ok) {
        ++item.found;
      } else {
        item.bad.push_back(block("vertex " + std::to_string(s) + ": split " + describe(op) + " not admissible", g));
      }
    }
  });
  SuiteReport r;
  r.suite = "mader";
  Tally t;
  t.add("graphs", static_cast<long>(graphs.size()));
  for (const char *name : {"vertices_tested", "skipped_degree3", "skipped_cut_edge", "skipped_degree_below_2",
                           "admissible_found", "not_found"}) {
    t.declare(name);
  }
  for (auto &item : items) {
    t.add("vertices_tested", item.tested);
    t.add("skipped_degree3", item.degree3);
    t.add("skipped_cut_edge", item.cut_edge);
    t.add("skipped_degree_below_2", item.isolated);
    t.add("admissible_found", item.found);
    t.add("not_found", static_cast<long>(item.bad.size()));
    for (auto &s : item.bad) r.counterexamples.push_back(std::move(s));
  }
  r.counters = t.take();
  r.passed = r.counterexamples.empty();
  return r;
}

SuiteReport identities_suite(const SuiteOptions &o) {
  const int n_max = bound_or(o.n_max, 8);
  const int m_max = bound_or(o.m_max, 16);
  const int samples = bound_or(o.samples, 10000);
  if (n_max > 30) throw Error(Errc::kTooLarge, "identities suite draws subsets as bitmasks; n <= 30");
  Xoshiro256 rng(o.seed);
  struct Triple {
    MultiGraph g;
    std::vector<VertexId> x, y;
  };
  std::vector<Triple> triples;
  for (int i = 0; i < samples; ++i) {
    int n = 1 + static_cast<int>(rng.below(n_max));
    int m = static_cast<int>(rng.below(m_max + 1));
    Triple tr{seeded_random_multigraph(n, m, rng.next()), {}, {}};
    const uint64_t full = (uint64_t{1} << n) - 1;
    uint64_t xm = 1 + rng.below(full);
    uint64_t ym = 1 + rng.below(full);
    for (int v = 0; v < n; ++v) {
      if (xm >> v & 1u) tr.x.push_back(v);
      if (ym >> v & 1u) tr.y.push_back(v);
    }
    triples.push_back(std::move(tr));
  }
  std::vector<char> ok(triples.size(), 0);
  parallel_for(triples.size(), o.jobs, [&](std::size_t i) {
    ok[i] = verify_cut_identities(triples[i].g, triples[i].x, triples[i].y);
  });
  SuiteReport r;
  r.suite = "identities";
  Tally t;
  t.add("triples", static_cast<long>(triples.size()));
  t.declare("deviations");
  for (std::size_t i = 0; i < triples.size(); ++i) {
    if (ok[i]) continue;
    t.add("deviations");
    std::string sets = "X=";
    for (VertexId v : triples[i].x) sets += std::to_string(v) + ",";
    sets += " Y=";
    for (VertexId v : triples[i].y) sets += std::to_string(v) + ",";
    r.counterexamples.push_back(block(sets, triples[i].g));
  }
  r.counters = t.take();
  r.passed = r.counterexamples.empty();
  return r;
}

struct Target {
  std::string name;
  MultiGraph graph;
};

std::vector<Target> targets(std::initializer_list<const char *> names) {
  std::vector<Target> out;
  for (const char *name : names) out.push_back({name, named_graph(name)});
  return out;
}

// One (g, h) pair of a theorem sweep.
struct PairOutcome {
  enum Kind { kNotImmersing, kIsomorphic, kFound, kDeclared, kFailure } kind = kNotImmersing;
  std::string detail;
};

PairOutcome run_pair(const MultiGraph &g, const Target &h, const Mode &mode, const FindOptions &options) {
  PairOutcome out;
  if (is_isomorphic(g, h.graph)) {
    out.kind = PairOutcome::kIsomorphic;
    return out;
  }
  if (!immerses(g, h.graph)) return out;
  auto good = find_good_operation(g, h.graph, mode, options);
  const bool declared = mode.kind == Mode::Kind::kI4 && is_declared_exception(g, h.graph);
  if (!good) {
    out.kind = declared ? PairOutcome::kDeclared : PairOutcome::kFailure;
    out.detail = block((declared ? "declared exception, h=" : "no good operation, h=") + h.name, g);
    return out;
  }
  if (auto why = verify_good_op_result(g, h.graph, mode, *good); !why.empty()) {
    out.kind = PairOutcome::kFailure;
    out.detail = block("unverified result (" + why + "), h=" + h.name, g);
    return out;
  }
  out.kind = PairOutcome::kFound;
  if (declared) out.detail = block("good operation exists for declared exception, h=" + h.name, g);
  return out;
}

SuiteReport theorem_suite(const std::string &name, std::vector<MultiGraph> graphs,
                          const std::vector<Target> &hs, const Mode &mode, FindOptions options, int jobs,
                          long census) {
  ImmersionCache cache;
  options.cache = &cache;
  options.check_preconditions = false;
  const std::size_t count = graphs.size() * hs.size();
  std::vector<PairOutcome> outcomes(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    outcomes[i] = run_pair(graphs[i / hs.size()], hs[i % hs.size()], mode, options);
  });
  SuiteReport r;
  r.suite = name;
  Tally t;
  t.add("census", census);
  for (const char *c : {"pairs", "not_immersing", "isomorphic", "found_verified", "declared_exceptions", "failures"}) {
    t.declare(c);
  }
  for (auto &o : outcomes) {
    switch (o.kind) {
      case PairOutcome::kNotImmersing: t.add("not_immersing"); break;
      case PairOutcome::kIsomorphic: t.add("isomorphic"); break;
      case PairOutcome::kFound:
        t.add("pairs");
        t.add("found_verified");
        if (!o.detail.empty()) r.notes.push_back(std::move(o.detail));
        break;
      case PairOutcome::kDeclared:
        t.add("pairs");
        t.add("declared_exceptions");
        r.notes.push_back(std::move(o.detail));
        break;
      case PairOutcome::kFailure:
        t.add("pairs");
        t.add("failures");
        r.counterexamples.push_back(std::move(o.detail));
        break;
    }
  }
  r.counters = t.take();
  r.passed = r.counterexamples.empty();
  return r;
}

std::vector<MultiGraph> census(GraphClass predicate, int k, const SuiteOptions &o, int n_default,
                               int m_default, int n_min = 2) {
  GraphFamilySpec spec;
  spec.n_min = n_min;
  spec.n_max = bound_or(o.n_max, n_default);
  spec.m_max = bound_or(o.m_max, m_default);
  spec.predicate = predicate;
  spec.k = k;
  return enumerate_graphs(spec);
}

SuiteReport i4_suite(const SuiteOptions &o) {
  auto graphs = census(GraphClass::kI4, 0, o, 7, 14);
  const long size = static_cast<long>(graphs.size());
  // The cube has 8 vertices, past the census; it carries the declared exceptions.
  MultiGraph q3 = named_graph("Q3");
  if (std::none_of(graphs.begin(), graphs.end(), [&](const MultiGraph &g) { return is_isomorphic(g, q3); })) {
    graphs.push_back(canonical_graph(q3));
  }
  auto r = theorem_suite("i4", std::move(graphs), targets({"K4", "K2^3", "K5", "Q3"}), Mode::i4(), {}, o.jobs, size);
  if (r.counter("declared_exceptions") != 2) {
    r.passed = false;
    r.counterexamples.push_back("expected exactly the two declared exceptions, saw " +
                                std::to_string(r.counter("declared_exceptions")));
  }
  return r;
}

SuiteReport evenk4_suite(const SuiteOptions &o) {
  auto graphs = census(GraphClass::kKEdgeConnected, 4, o, 7, 14);
  const long size = static_cast<long>(graphs.size());
  auto r = theorem_suite("evenk4", std::move(graphs), targets({"K5", "octahedron", "K2^4", "K2^5"}),
                         Mode::even_k(4), {}, o.jobs, size);
  // k = 2 probe: outcomes are recorded, never failed.
  MultiGraph k4 = named_graph("K4");
  MultiGraph c3 = named_graph("C3");
  std::string probe = "k=2 probe (K4, C3): ";
  try {
    FindOptions options;
    auto good = find_good_operation(k4, c3, Mode::even_k(2), options);
    probe += good ? "good operation " + describe(good->op) : "no good operation";
  } catch (const Error &e) {
    probe += std::string("precondition: ") + e.what();
  }
  r.notes.push_back(probe);
  return r;
}

SuiteReport dingkanno_suite(const SuiteOptions &o) {
  auto graphs = census(GraphClass::kKEdgeConnected, 4, o, 7, 14);
  const long size = static_cast<long>(graphs.size());
  std::erase_if(graphs, [](const MultiGraph &g) {
    auto d = g.degrees();
    return std::any_of(d.begin(), d.end(), [](int x) { return x != 4; });
  });
  FindOptions options;
  options.complete_splits_only = true;
  const long regular = static_cast<long>(graphs.size());
  auto r = theorem_suite("dingkanno", std::move(graphs), targets({"K5", "octahedron", "K2^4"}), Mode::even_k(4),
                         options, o.jobs, size);
  r.counters.insert(r.counters.begin() + 1, {"four_regular", regular});
  return r;
}

SuiteReport corollary_suite(const SuiteOptions &o) {
  auto graphs = census(GraphClass::kI4, 0, o, 7, 14, 6);
  std::vector<CorollaryVerdict> verdicts(graphs.size());
  parallel_for(graphs.size(), o.jobs, [&](std::size_t i) { verdicts[i] = verify_corollary_k5(graphs[i]); });
  SuiteReport r;
  r.suite = "corollary";
  Tally t;
  t.add("census", static_cast<long>(graphs.size()));
  for (auto v : {CorollaryVerdict::kImmersesK33, CorollaryVerdict::kIsOctahedron, CorollaryVerdict::kNotApplicable,
                 CorollaryVerdict::kViolation}) {
    t.declare(std::string(verdict_name(v)));
  }
  t.declare("IsOctahedron_with_7_or_more_vertices");
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    t.add(std::string(verdict_name(verdicts[i])));
    if (verdicts[i] == CorollaryVerdict::kViolation) r.counterexamples.push_back(block("Violation", graphs[i]));
    if (verdicts[i] == CorollaryVerdict::kIsOctahedron) {
      r.notes.push_back(block("exception", graphs[i]));
      if (graphs[i].num_vertices() >= 7) {
        t.add("IsOctahedron_with_7_or_more_vertices");
        r.counterexamples.push_back(block("IsOctahedron on 7 or more vertices", graphs[i]));
      }
    }
  }
  r.counters = t.take();
  r.passed = r.counterexamples.empty();
  return r;
}

SuiteReport oracle_suite(const SuiteOptions &o) {
  GraphFamilySpec gs;
  gs.n_max = bound_or(o.n_max, 5);
  gs.m_max = bound_or(o.m_max, 8);
  if (gs.n_max > 6 || gs.m_max > 10) throw Error(Errc::kTooLarge, "oracle suite is limited to n <= 6, m <= 10");
  auto gl = enumerate_graphs(gs);
  GraphFamilySpec hs = gs;
  hs.n_max = std::min(gs.n_max, 4);
  auto hl = enumerate_graphs(hs);
  struct Item {
    long pairs = 0, immersing = 0;
    std::vector<std::string> bad;
  };
  std::vector<Item> items(gl.size());
  parallel_for(gl.size(), o.jobs, [&](std::size_t i) {
    const MultiGraph &g = gl[i];
    SplitClosure closure(g);
    for (const MultiGraph &h : hl) {
      ++items[i].pairs;
      auto cert = find_immersion(g, h);
      bool by_oracle = closure.contains(h);
      items[i].immersing += by_oracle;
      if (cert && !verify_immersion(g, h, *cert)) {
        items[i].bad.push_back(block("invalid certificate", g) + block("h", h));
      } else if (cert.has_value() != by_oracle) {
        items[i].bad.push_back(block(std::string("search=") + (cert ? "yes" : "no") + " oracle=" +
                                         (by_oracle ? "yes" : "no"),
                                     g) +
                               block("h", h));
      }
    }
  });
  SuiteReport r;
  r.suite = "oracle";
  Tally t;
  t.add("g_graphs", static_cast<long>(gl.size()));
  t.add("h_graphs", static_cast<long>(hl.size()));
  t.declare("pairs");
  t.declare("immersing");
  t.declare("disagreements");
  for (auto &item : items) {
    t.add("pairs", item.pairs);
    t.add("immersing", item.immersing);
    t.add("disagreements", static_cast<long>(item.bad.size()));
    for (auto &s : item.bad) r.counterexamples.push_back(std::move(s));
  }
  r.counters = t.take();
  r.passed = r.counterexamples.empty();
  return r;
}

}  // namespace

SuiteReport run_suite(std::string_view name, const SuiteOptions &options) {
  if (name == "menger") return menger_suite(options);
  if (name == "mader") return mader_suite(options);
  if (name == "identities") return identities_suite(options);
  if (name == "i4") return i4_suite(options);
  if (name == "evenk4") return evenk4_suite(options);
  if (name == "dingkanno") return dingkanno_suite(options);
  if (name == "corollary") return corollary_suite(options);
  if (name == "oracle") return oracle_suite(options);
  throw Error(Errc::kUnknownName, "unknown suite '" + std::string(name) + "'");
}

nlohmann::ordered_json suite_report_to_json(const SuiteReport &report) {
  nlohmann::ordered_json counters = nlohmann::ordered_json::object();
  for (const auto &[key, value] : report.counters) counters[key] = value;
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["passed"] = report.passed;
  j["counters"] = counters;
  j["counterexamples"] = report.counterexamples;
  j["notes"] = report.notes;
  return j;
}

}  // namespace imsplit

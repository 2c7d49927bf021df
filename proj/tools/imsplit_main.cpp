// imsplit: command-line front end.
//
// Exit codes: 0 success or declared exception, 1 parse/usage error,
// 2 precondition violated, 3 theorem-violation alarm.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "imsplit/catalog.hpp"
#include "imsplit/connectivity.hpp"
#include "imsplit/error.hpp"
#include "imsplit/immersion.hpp"
#include "imsplit/mgr_format.hpp"
#include "imsplit/serialize.hpp"
#include "imsplit/splitter.hpp"
#include "imsplit/suites.hpp"

namespace {

using imsplit::MultiGraph;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitAlarm = 3;

class Digest {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ull;
    }
    // Field separator so ("ab","c") and ("a","bc") differ.
    hash_ ^= 0xff;
    hash_ *= 0x100000001b3ull;
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
    return buf;
  }

 private:
  uint64_t hash_ = 0xcbf29ce484222325ull;
};

struct Run {
  std::vector<std::string> command;
  Digest digest;
};

// "named:K5" selects a catalog graph; anything else is an MGR file.
MultiGraph load_graph(const std::string &arg, Run &run) {
  MultiGraph g = arg.starts_with("named:") ? imsplit::named_graph(arg.substr(6)) : imsplit::read_mgr_file(arg);
  run.digest.add(imsplit::to_mgr(g));
  return g;
}

void write_json_file(const std::string &path, const nlohmann::json &j) {
  std::ofstream out(path);
  if (!out) throw imsplit::Error(imsplit::Errc::kParseError, "cannot write " + path);
  out << j.dump(2) << "\n";
}

Json report(const Run &run, Json verdicts, const std::vector<std::string> &counterexamples = {}) {
  Json j;
  j["command"] = run.command;
  j["inputs_digest"] = run.digest.hex();
  j["verdicts"] = std::move(verdicts);
  j["counterexamples"] = counterexamples;
  return j;
}

Json cut_json(const MultiGraph &g, const imsplit::Cut &cut) {
  Json side = Json::array();
  for (auto v : cut.side) side.push_back(g.index_of(v));
  return {{"side", side}, {"size", cut.size}};
}

int cmd_conn(Run &run, const std::string &file, int k, bool internal, bool nearly) {
  MultiGraph g = load_graph(file, run);
  Json v;
  v["n"] = g.num_vertices();
  v["m"] = g.num_edges();
  v["k"] = k;
  v["edge_connectivity"] = g.num_vertices() >= 2 ? imsplit::edge_connectivity(g) : 0;
  auto kec = imsplit::check_k_edge_connected(g, k);
  v["k_edge_connected"] = kec.holds;
  if (kec.witness) v["k_edge_connected_witness"] = cut_json(g, *kec.witness);
  bool holds = kec.holds;
  if (internal) {
    auto iec = imsplit::is_internally_k_edge_connected(g, k);
    v["internally_k_edge_connected"] = iec.holds;
    if (iec.witness) v["internal_witness"] = cut_json(g, *iec.witness);
    holds = iec.holds;
  }
  if (nearly) {
    auto nr = imsplit::is_nearly_k_edge_connected(g, k);
    v["nearly_k_edge_connected"] = nr.is_nearly;
    if (nr.special) v["special"] = g.index_of(*nr.special);
    holds = internal ? holds && nr.is_nearly : nr.is_nearly;
  }
  v["holds"] = holds;
  std::cout << report(run, v).dump(2) << "\n";
  return kExitOk;
}

int cmd_immerse(Run &run, const std::string &gfile, const std::string &hfile, const std::string &cert_path) {
  MultiGraph g = load_graph(gfile, run);
  MultiGraph h = load_graph(hfile, run);
  auto cert = imsplit::find_immersion(g, h);
  Json v;
  v["immerses"] = cert.has_value();
  if (cert) {
    auto cj = imsplit::certificate_to_json(g, h, *cert);
    v["certificate"] = Json::parse(cj.dump());
    if (!cert_path.empty()) write_json_file(cert_path, cj);
  }
  std::cout << report(run, v).dump(2) << "\n";
  return kExitOk;
}

imsplit::FindOptions find_options(bool complete_only) {
  imsplit::FindOptions o;
  o.complete_splits_only = complete_only;
  return o;
}

int cmd_goodop(Run &run, const std::string &gfile, const std::string &hfile, const std::string &mode_text,
               const std::string &trace_path, bool complete_only) {
  auto mode = imsplit::parse_mode(mode_text);
  MultiGraph g = load_graph(gfile, run);
  MultiGraph h = load_graph(hfile, run);
  auto good = imsplit::find_good_operation(g, h, mode, find_options(complete_only));
  Json v;
  v["mode"] = imsplit::mode_name(mode);
  v["found"] = good.has_value();
  const bool declared = mode.kind == imsplit::Mode::Kind::kI4 && imsplit::is_declared_exception(g, h);
  v["declared_exception"] = declared;
  std::vector<std::string> counterexamples;
  int code = kExitOk;
  if (good) {
    v["op"] = Json::parse(imsplit::operation_to_json(g, good->op).dump());
    v["result"] = imsplit::to_mgr(good->result);
    v["class_report"] = Json::parse(imsplit::class_report_to_json(good->result, good->class_report).dump());
    v["cert"] = Json::parse(imsplit::certificate_to_json(good->result, h, good->cert).dump());
    if (!trace_path.empty()) {
      imsplit::ReductionTrace trace;
      trace.steps.push_back({g, *good});
      trace.final_graph = good->result;
      write_json_file(trace_path, imsplit::trace_to_json(h, trace));
    }
  } else if (declared) {
    v["note"] = "no good operation; (Q3, K4) and (Q3, K2^3) are excluded from the theorem";
  } else {
    counterexamples.push_back(imsplit::to_mgr(g));
    code = kExitAlarm;
  }
  std::cout << report(run, v, counterexamples).dump(2) << "\n";
  return code;
}

int cmd_reduce(Run &run, const std::string &gfile, const std::string &hfile, const std::string &mode_text,
               const std::string &trace_path) {
  auto mode = imsplit::parse_mode(mode_text);
  MultiGraph g = load_graph(gfile, run);
  MultiGraph h = load_graph(hfile, run);
  auto trace = imsplit::reduce_chain(g, h, mode);
  auto tj = imsplit::trace_to_json(h, trace);
  if (!trace_path.empty()) write_json_file(trace_path, tj);
  Json v;
  v["mode"] = imsplit::mode_name(mode);
  v["outcome"] = imsplit::outcome_name(trace.outcome);
  v["steps"] = trace.steps.size();
  v["final"] = imsplit::to_mgr(trace.final_graph);
  std::vector<std::string> counterexamples;
  int code = kExitOk;
  if (trace.outcome == imsplit::ReductionTrace::Outcome::kStuckAlarm) {
    counterexamples.push_back(imsplit::to_mgr(trace.final_graph));
    code = kExitAlarm;
  }
  std::cout << report(run, v, counterexamples).dump(2) << "\n";
  return code;
}

imsplit::GraphClass parse_class(const std::string &name) {
  if (name == "all") return imsplit::GraphClass::kAll;
  if (name == "connected") return imsplit::GraphClass::kConnected;
  if (name == "kec") return imsplit::GraphClass::kKEdgeConnected;
  if (name == "iec") return imsplit::GraphClass::kInternallyKEdgeConnected;
  if (name == "i4") return imsplit::GraphClass::kI4;
  throw imsplit::Error(imsplit::Errc::kUnknownName, "unknown class '" + name + "'");
}

int cmd_enum(const imsplit::GraphFamilySpec &spec) {
  std::cout << imsplit::format_mgr_blocks(imsplit::enumerate_graphs(spec));
  return kExitOk;
}

int cmd_verify(Run &run, const std::vector<std::string> &suites, const imsplit::SuiteOptions &options) {
  Json results = Json::array();
  std::vector<std::string> counterexamples;
  bool passed = true;
  for (const auto &name : suites) {
    auto r = imsplit::run_suite(name, options);
    passed = passed && r.passed;
    for (const auto &c : r.counterexamples) counterexamples.push_back(name + ": " + c);
    results.push_back(imsplit::suite_report_to_json(r));
  }
  Json v;
  v["passed"] = passed;
  v["seed"] = options.seed;
  v["suites"] = results;
  std::cout << report(run, v, counterexamples).dump(2) << "\n";
  return passed ? kExitOk : kExitAlarm;
}

}  // namespace

int main(int argc, char **argv) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Splitter theorems for graph immersions: connectivity, immersion and good-operation search"};
  app.require_subcommand(1);

  Run run;
  std::string gfile, hfile, mode_text = "i4", out_path;
  int k = 1;
  bool internal = false, nearly = false, complete_only = false;

  auto *conn = app.add_subcommand("conn", "Edge-connectivity verdicts with witness cuts");
  conn->add_option("graph", gfile, "MGR file or named:<graph>")->required();
  conn->add_option("--k", k, "Connectivity threshold")->required();
  conn->add_flag("--internal", internal, "Internal k-edge-connectivity");
  conn->add_flag("--nearly", nearly, "Nearly k-edge-connectivity");

  auto *imm = app.add_subcommand("immerse", "Search for an immersion of H in G");
  imm->add_option("host", gfile, "G: MGR file or named:<graph>")->required();
  imm->add_option("guest", hfile, "H: MGR file or named:<graph>")->required();
  imm->add_option("--cert", out_path, "Write the certificate JSON here");

  auto *goodop = app.add_subcommand("goodop", "Find one good operation");
  goodop->add_option("host", gfile, "G: MGR file or named:<graph>")->required();
  goodop->add_option("guest", hfile, "H: MGR file or named:<graph>")->required();
  goodop->add_option("--mode", mode_text, "evenk:<k>[:nearly] or i4");
  goodop->add_option("--trace", out_path, "Write a one-step trace JSON here");
  goodop->add_flag("--complete-splits-only", complete_only, "Only try complete splits");

  auto *reduce = app.add_subcommand("reduce", "Chain good operations down to H");
  reduce->add_option("host", gfile, "G: MGR file or named:<graph>")->required();
  reduce->add_option("guest", hfile, "H: MGR file or named:<graph>")->required();
  reduce->add_option("--mode", mode_text, "evenk:<k>[:nearly] or i4");
  reduce->add_option("--trace", out_path, "Write the trace JSON here");

  imsplit::GraphFamilySpec spec;
  std::string class_name = "all";
  bool loops = false;
  auto *enumerate = app.add_subcommand("enum", "Enumerate isomorphism classes as MGR blocks");
  enumerate->add_option("--nmin", spec.n_min);
  enumerate->add_option("--nmax", spec.n_max)->required();
  enumerate->add_option("--mmin", spec.m_min);
  enumerate->add_option("--mmax", spec.m_max)->required();
  enumerate->add_option("--class", class_name, "all, connected, kec, iec or i4");
  enumerate->add_option("--k", spec.k);
  enumerate->add_flag("--loops", loops, "Allow loops");

  imsplit::SuiteOptions suite_options;
  std::vector<std::string> suites;
  auto *verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suites, "Suite name(s) or 'all'")->required();
  verify->add_option("--nmax", suite_options.n_max);
  verify->add_option("--mmax", suite_options.m_max);
  verify->add_option("--seed", suite_options.seed);
  verify->add_option("--jobs", suite_options.jobs);
  verify->add_option("--samples", suite_options.samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  // --jobs only changes scheduling, so it stays out of the echo and digest.
  for (int i = 1; i < argc; ++i) {
    std::string_view arg = argv[i];
    if (arg == "--jobs") {
      ++i;
      continue;
    }
    if (arg.starts_with("--jobs=")) continue;
    run.command.emplace_back(arg);
  }
  for (const auto &arg : run.command) run.digest.add(arg);

  int code = kExitOk;
  try {
    if (*conn) {
      code = cmd_conn(run, gfile, k, internal, nearly);
    } else if (*imm) {
      code = cmd_immerse(run, gfile, hfile, out_path);
    } else if (*goodop) {
      code = cmd_goodop(run, gfile, hfile, mode_text, out_path, complete_only);
    } else if (*reduce) {
      code = cmd_reduce(run, gfile, hfile, mode_text, out_path);
    } else if (*enumerate) {
      spec.predicate = parse_class(class_name);
      spec.loopless = !loops;
      code = cmd_enum(spec);
    } else if (*verify) {
      if (suites.size() == 1 && suites[0] == "all") suites = imsplit::suite_names();
      code = cmd_verify(run, suites, suite_options);
    }
  } catch (const imsplit::Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    code = e.code() == imsplit::Errc::kPreconditionViolated ? kExitPrecondition : kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kExitUsage;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "wall time: " << seconds << " s\n";
  return code;
}

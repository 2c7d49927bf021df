#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "imsplit/catalog.hpp"
#include "imsplit/immersion.hpp"
#include "imsplit/isomorphism.hpp"
#include "imsplit/mgr_format.hpp"
#include "imsplit/serialize.hpp"

namespace imsplit {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int status = -1;
  std::string out;
  json report;
};

// Runs the CLI with stderr discarded; wall time goes there.
Run run(const std::string &args) {
  Run r;
  std::string cmd = std::string(IMSPLIT_CLI) + " " + args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.report = json::parse(r.out, nullptr, false);
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("imsplit_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string &name, const std::string &text) {
    auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string &name) { return (dir_ / name).string(); }

  static json read_json(const std::string &p) {
    std::ifstream in(p);
    return json::parse(in);
  }

  fs::path dir_;
};

TEST_F(Cli, Conn) {
  auto q3 = file("q3.mgr", to_mgr(named_graph("Q3")));
  auto a = run("conn " + q3 + " --k 3");
  EXPECT_EQ(a.status, 0);
  EXPECT_TRUE(a.report["verdicts"]["holds"].get<bool>());
  EXPECT_EQ(a.report["verdicts"]["edge_connectivity"], 3);

  auto b = run("conn " + q3 + " --k 4 --internal");
  EXPECT_EQ(b.status, 0);
  EXPECT_TRUE(b.report["verdicts"]["holds"].get<bool>());

  auto c = run("conn named:C4 --k 4 --nearly");
  EXPECT_EQ(c.status, 0);
  EXPECT_FALSE(c.report["verdicts"]["holds"].get<bool>());
  EXPECT_TRUE(c.report["verdicts"].contains("k_edge_connected_witness"));
}

TEST_F(Cli, ReportShape) {
  auto r = run("conn named:K5 --k 4");
  auto ordered = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto &[k, v] : ordered.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "inputs_digest", "verdicts", "counterexamples"}));
  EXPECT_EQ(r.report["command"][0], "conn");
  EXPECT_EQ(r.report["inputs_digest"].get<std::string>().size(), 16u);
  // digest follows file content, not the path
  auto f1 = file("a.mgr", to_mgr(named_graph("K5")));
  auto f2 = file("b.mgr", "# same graph\n" + to_mgr(named_graph("K5")));
  auto d1 = run("conn " + f1 + " --k 4").report["inputs_digest"];
  auto d2 = run("conn " + f2 + " --k 4").report["inputs_digest"];
  EXPECT_NE(d1, d2);
  EXPECT_EQ(d1, run("conn " + f1 + " --k 4").report["inputs_digest"]);
}

TEST_F(Cli, ImmerseWritesVerifiableCertificate) {
  auto cert_path = path("cert.json");
  auto r = run("immerse named:octahedron named:K5 --cert " + cert_path);
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.report["verdicts"]["immerses"].get<bool>());
  auto g = named_graph("octahedron");
  auto h = named_graph("K5");
  auto cert = certificate_from_json(g, h, read_json(cert_path));
  EXPECT_TRUE(verify_immersion(g, h, cert).ok());

  auto no = run("immerse named:octahedron named:K33");
  EXPECT_EQ(no.status, 0);
  EXPECT_FALSE(no.report["verdicts"]["immerses"].get<bool>());
  EXPECT_EQ(run("immerse named:K5 named:K5").report["verdicts"]["immerses"], true);
}

TEST_F(Cli, GoodOp) {
  auto a = run("goodop named:K6 named:K5 --mode i4");
  EXPECT_EQ(a.status, 0);
  EXPECT_TRUE(a.report["verdicts"]["found"].get<bool>());

  auto b = run("goodop named:Q3 named:K4 --mode i4");
  EXPECT_EQ(b.status, 0);
  EXPECT_FALSE(b.report["verdicts"]["found"].get<bool>());
  EXPECT_TRUE(b.report["verdicts"]["declared_exception"].get<bool>());

  EXPECT_EQ(run("goodop named:K5 named:K5 --mode i4").status, 2);
  EXPECT_EQ(run("goodop named:C5 named:C3 --mode evenk:4").status, 2);
}

TEST_F(Cli, ReduceTraceReplays) {
  auto trace_path = path("trace.json");
  auto r = run("reduce named:K7 named:K5 --mode evenk:4 --trace " + trace_path);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.report["verdicts"]["outcome"], "Reached");
  auto trace = read_json(trace_path);
  EXPECT_EQ(trace.size(), r.report["verdicts"]["steps"].get<std::size_t>());
  EXPECT_EQ(replay_trace_json(named_graph("K5"), trace), "");

  auto stuck = run("reduce named:Q3 named:K2^3 --mode i4");
  EXPECT_EQ(stuck.status, 0);
  EXPECT_EQ(stuck.report["verdicts"]["outcome"], "StuckDeclaredException");
  EXPECT_EQ(run("reduce named:Q3 named:Q3 --mode i4").status, 2);
}

TEST_F(Cli, EnumEmitsBlocks) {
  auto r = run("enum --nmin 1 --nmax 3 --mmax 3 --class connected");
  EXPECT_EQ(r.status, 0);
  auto graphs = parse_mgr_blocks(r.out);
  EXPECT_EQ(graphs.size(), 7u);
  auto i4 = run("enum --nmin 2 --nmax 5 --mmax 9 --class i4");
  auto expected = enumerate_graphs({2, 5, 0, 9, GraphClass::kI4, 0, true});
  EXPECT_EQ(i4.out, format_mgr_blocks(expected));
  EXPECT_EQ(run("enum --nmin 1 --nmax 12 --mmax 3").status, 1);
}

TEST_F(Cli, Verify) {
  auto ident = run("verify --suite identities --seed 7");
  EXPECT_EQ(ident.status, 0);
  EXPECT_TRUE(ident.report["verdicts"]["passed"].get<bool>());

  auto mader = run("verify --suite mader --nmax 6");
  EXPECT_EQ(mader.status, 0);
  EXPECT_EQ(mader.report["verdicts"]["suites"][0]["counters"]["not_found"], 0);

  auto cor = run("verify --suite corollary --nmax 6 --mmax 14");
  EXPECT_EQ(cor.status, 0);
  const auto &s = cor.report["verdicts"]["suites"][0];
  EXPECT_EQ(s["counters"]["IsOctahedron"], 1);
  EXPECT_EQ(s["counters"]["Violation"], 0);
  ASSERT_EQ(s["notes"].size(), 1u);
  auto note = s["notes"][0].get<std::string>();
  auto octa = parse_mgr(note.substr(note.find('\n') + 1));
  EXPECT_TRUE(is_isomorphic(octa, named_graph("octahedron")));
}

TEST_F(Cli, ExitCodeOne) {
  auto bad = file("bad.mgr", "2 1\n0 5\n");
  EXPECT_EQ(run("conn " + bad + " --k 2").status, 1);
  EXPECT_EQ(run("conn " + path("missing.mgr") + " --k 2").status, 1);
  EXPECT_EQ(run("conn named:nothing --k 2").status, 1);
  EXPECT_EQ(run("goodop named:K6 named:K5 --mode evenk:3").status, 1);
  EXPECT_EQ(run("verify --suite nope").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("").status, 1);
}

TEST_F(Cli, DeterministicOutput) {
  auto t = path("t.json");
  auto slurp = [](const std::string &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  auto a = run("reduce named:K7 named:K2^4 --mode evenk:4 --trace " + t);
  auto first = slurp(t);
  auto b = run("reduce named:K7 named:K2^4 --mode evenk:4 --trace " + t);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(first, slurp(t));
  auto v1 = run("verify --suite evenk4 --nmax 6 --mmax 12 --jobs 1");
  auto v4 = run("verify --suite evenk4 --nmax 6 --mmax 12 --jobs 4");
  EXPECT_EQ(v1.status, 0);
  EXPECT_EQ(v1.out, v4.out);
}

}  // namespace
}  // namespace imsplit

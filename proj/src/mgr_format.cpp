#include "imsplit/mgr_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "imsplit/error.hpp"

namespace imsplit {
namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view tok, int line_no) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
    throw Error(Errc::kParseError, "line " + std::to_string(line_no) +
                                       ": expected a non-negative integer, got '" +
                                       std::string(tok) + "'");
  }
  return value;
}

}  // namespace

MultiGraph parse_mgr(std::string_view text) {
  long n = -1;
  long m = -1;
  MultiGraph g;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) {
      throw Error(Errc::kParseError, "line " + std::to_string(line_no) +
                                         ": expected two integers");
    }
    long a = parse_int(tok[0], line_no);
    long b = parse_int(tok[1], line_no);
    if (n < 0) {
      n = a;
      m = b;
      g = MultiGraph(static_cast<int>(n));
      continue;
    }
    if (g.num_edges() >= m) {
      throw Error(Errc::kParseError, "line " + std::to_string(line_no) +
                                         ": more than " + std::to_string(m) + " edges");
    }
    if (a >= n || b >= n) {
      throw Error(Errc::kParseError, "line " + std::to_string(line_no) +
                                         ": endpoint out of range 0.." +
                                         std::to_string(n - 1));
    }
    g.add_edge(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) throw Error(Errc::kParseError, "line " + std::to_string(line_no) + ": missing header");
  if (g.num_edges() != m) {
    throw Error(Errc::kParseError, "line " + std::to_string(line_no) + ": expected " +
                                       std::to_string(m) + " edges, found " +
                                       std::to_string(g.num_edges()));
  }
  return g;
}

MultiGraph read_mgr_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mgr(buf.str());
}

std::vector<MultiGraph> parse_mgr_blocks(std::string_view text) {
  std::vector<MultiGraph> out;
  std::string block;
  auto flush = [&] {
    bool has_content = std::any_of(block.begin(), block.end(),
                                   [](char c) { return c >= '0' && c <= '9'; });
    if (has_content) out.push_back(parse_mgr(block));
    block.clear();
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (tokens(line).empty()) {
      flush();
    } else {
      block.append(line);
      block.push_back('\n');
    }
  }
  flush();
  return out;
}

std::string to_mgr(const MultiGraph &g) {
  std::string out = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const Edge &e : g.edges()) {
    int a = g.index_of(e.u);
    int b = g.index_of(e.v);
    if (a > b) std::swap(a, b);
    out += std::to_string(a) + " " + std::to_string(b) + "\n";
  }
  return out;
}

std::string format_mgr_blocks(const std::vector<MultiGraph> &graphs) {
  std::string out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i) out += "\n";
    out += to_mgr(graphs[i]);
  }
  return out;
}

int mgr_edge_index(const MultiGraph &g, EdgeId id) {
  const auto &e = g.edges();
  auto it = std::lower_bound(e.begin(), e.end(), id,
                             [](const Edge &x, EdgeId v) { return x.id < v; });
  if (it == e.end() || it->id != id) throw Error(Errc::kUnknownId, "edge " + std::to_string(id));
  return static_cast<int>(it - e.begin());
}

}  // namespace imsplit

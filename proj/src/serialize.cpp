#include "imsplit/serialize.hpp"

#include <map>

#include "imsplit/error.hpp"
#include "imsplit/mgr_format.hpp"

namespace imsplit {
namespace {

using nlohmann::json;

int vertex_index(const MultiGraph &g, VertexId v) {
  int i = g.index_of(v);
  if (i < 0) throw Error(Errc::kUnknownId, "vertex " + std::to_string(v));
  return i;
}

VertexId vertex_at(const MultiGraph &g, int i) {
  if (i < 0 || i >= g.num_vertices()) throw Error(Errc::kParseError, "vertex index " + std::to_string(i));
  return g.vertices()[i];
}

EdgeId edge_at(const MultiGraph &g, int i) {
  if (i < 0 || i >= g.num_edges()) throw Error(Errc::kParseError, "edge index " + std::to_string(i));
  return g.edges()[i].id;
}

int read_int(const json &j, const char *key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw Error(Errc::kParseError, std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

// Key of each h edge: "u-v" with u <= v as h indices, "#j" appended when the
// pair carries several edges.
std::map<EdgeId, std::string> path_keys(const MultiGraph &h) {
  std::map<std::pair<int, int>, std::vector<EdgeId>> groups;
  for (const Edge &e : h.edges()) {
    int a = h.index_of(e.u);
    int b = h.index_of(e.v);
    groups[{std::min(a, b), std::max(a, b)}].push_back(e.id);
  }
  std::map<EdgeId, std::string> keys;
  for (const auto &[pair, ids] : groups) {
    std::string base = std::to_string(pair.first) + "-" + std::to_string(pair.second);
    for (std::size_t j = 0; j < ids.size(); ++j) {
      keys[ids[j]] = ids.size() == 1 ? base : base + "#" + std::to_string(j);
    }
  }
  return keys;
}

}  // namespace

json operation_to_json(const MultiGraph &g, const Operation &op) {
  return std::visit(
      [&](const auto &o) -> json {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, DeleteEdge>) {
          return {{"type", "DeleteEdge"}, {"edge", mgr_edge_index(g, o.edge)}};
        } else if constexpr (std::is_same_v<T, SplitOff>) {
          return {{"type", "SplitOff"},
                  {"first", mgr_edge_index(g, o.first)},
                  {"second", mgr_edge_index(g, o.second)},
                  {"pivot", vertex_index(g, o.pivot)}};
        } else {
          json pairing = json::array();
          for (auto [a, b] : o.pairing) pairing.push_back({mgr_edge_index(g, a), mgr_edge_index(g, b)});
          return {{"type", "CompleteSplit"}, {"vertex", vertex_index(g, o.vertex)}, {"pairing", pairing}};
        }
      },
      op);
}

Operation operation_from_json(const MultiGraph &g, const json &j) {
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw Error(Errc::kParseError, "operation without a type");
  }
  const std::string type = j.at("type").get<std::string>();
  if (type == "DeleteEdge") return DeleteEdge{edge_at(g, read_int(j, "edge"))};
  if (type == "SplitOff") {
    return SplitOff{edge_at(g, read_int(j, "first")), edge_at(g, read_int(j, "second")),
                    vertex_at(g, read_int(j, "pivot"))};
  }
  if (type == "CompleteSplit") {
    CompleteSplit cs{vertex_at(g, read_int(j, "vertex")), {}};
    if (!j.contains("pairing") || !j.at("pairing").is_array()) throw Error(Errc::kParseError, "missing pairing");
    for (const json &p : j.at("pairing")) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
        throw Error(Errc::kParseError, "pairing entries must be [i, j]");
      }
      cs.pairing.emplace_back(edge_at(g, p[0].get<int>()), edge_at(g, p[1].get<int>()));
    }
    return cs;
  }
  throw Error(Errc::kParseError, "unknown operation type '" + type + "'");
}

json certificate_to_json(const MultiGraph &g, const MultiGraph &h, const ImmersionCertificate &cert) {
  json phi = json::object();
  for (const auto &[hv, gv] : cert.phi) phi[std::to_string(vertex_index(h, hv))] = vertex_index(g, gv);
  json paths = json::object();
  auto keys = path_keys(h);
  for (const auto &[he, path] : cert.paths) {
    json ids = json::array();
    for (EdgeId id : path) ids.push_back(mgr_edge_index(g, id));
    paths[keys.at(he)] = ids;
  }
  return {{"phi", phi}, {"paths", paths}};
}

ImmersionCertificate certificate_from_json(const MultiGraph &g, const MultiGraph &h, const json &j) {
  if (!j.is_object() || !j.contains("phi") || !j.contains("paths")) {
    throw Error(Errc::kParseError, "certificate needs phi and paths");
  }
  ImmersionCertificate cert;
  for (const auto &[key, value] : j.at("phi").items()) {
    if (!value.is_number_integer()) throw Error(Errc::kParseError, "phi values must be integers");
    int hv = 0;
    try {
      hv = std::stoi(key);
    } catch (const std::exception &) {
      throw Error(Errc::kParseError, "phi key '" + key + "'");
    }
    cert.phi[vertex_at(h, hv)] = vertex_at(g, value.get<int>());
  }
  std::map<std::string, EdgeId> by_key;
  for (const auto &[id, key] : path_keys(h)) by_key[key] = id;
  for (const auto &[key, value] : j.at("paths").items()) {
    auto it = by_key.find(key);
    if (it == by_key.end()) throw Error(Errc::kParseError, "unknown path key '" + key + "'");
    if (!value.is_array()) throw Error(Errc::kParseError, "path '" + key + "' must be an array");
    std::vector<EdgeId> path;
    for (const json &e : value) {
      if (!e.is_number_integer()) throw Error(Errc::kParseError, "path entries must be integers");
      path.push_back(edge_at(g, e.get<int>()));
    }
    cert.paths[it->second] = std::move(path);
  }
  return cert;
}

json class_report_to_json(const MultiGraph &g, const ClassReport &r) {
  json j = {{"holds", r.holds},
            {"target", r.target},
            {"k", r.k},
            {"edge_connectivity", r.edge_connectivity},
            {"loopless", r.loopless}};
  if (r.target == "3ec+i4ec") j["internally_4ec"] = r.internally_4ec;
  if (r.special && g.has_vertex(*r.special)) j["special"] = vertex_index(g, *r.special);
  return j;
}

json trace_to_json(const MultiGraph &h, const ReductionTrace &trace) {
  json steps = json::array();
  for (const auto &step : trace.steps) {
    steps.push_back({{"graph", to_mgr(step.before)},
                     {"op", operation_to_json(step.before, step.good.op)},
                     {"cert", certificate_to_json(step.good.result, h, step.good.cert)},
                     {"result", to_mgr(step.good.result)}});
  }
  return steps;
}

std::string replay_trace_json(const MultiGraph &h, const json &trace) {
  if (!trace.is_array()) return "trace must be an array";
  std::string previous;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const json &step = trace[i];
    const std::string where = "step " + std::to_string(i) + ": ";
    try {
      const std::string graph_text = step.at("graph").get<std::string>();
      const std::string result_text = step.at("result").get<std::string>();
      if (i > 0 && graph_text != previous) return where + "graph is not the previous result";
      MultiGraph graph = parse_mgr(graph_text);
      MultiGraph replayed = normalize(imsplit::apply(graph, operation_from_json(graph, step.at("op"))));
      if (to_mgr(replayed) != result_text) return where + "replayed result differs";
      MultiGraph result = parse_mgr(result_text);
      auto cert = certificate_from_json(result, h, step.at("cert"));
      if (auto check = verify_immersion(result, h, cert); !check) {
        return where + "certificate rejected: " + std::string(defect_name(check.defect));
      }
      previous = result_text;
    } catch (const std::exception &e) {
      return where + e.what();
    }
  }
  return {};
}

}  // namespace imsplit

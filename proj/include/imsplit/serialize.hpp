#pragma once

#include <string>

#include <json.hpp>

#include "imsplit/immersion.hpp"
#include "imsplit/multigraph.hpp"
#include "imsplit/operations.hpp"
#include "imsplit/splitter.hpp"

namespace imsplit {

// All JSON uses MGR index space: a vertex is its rank among vertex ids and an
// edge its rank among edge ids, so the JSON matches to_mgr() of the same graph.

/// {"type":"DeleteEdge","edge":i}, {"type":"SplitOff","first":i,"second":j,
/// "pivot":v} or {"type":"CompleteSplit","vertex":v,"pairing":[[i,j],...]}.
nlohmann::json operation_to_json(const MultiGraph &g, const Operation &op);
/// Throws kParseError.
Operation operation_from_json(const MultiGraph &g, const nlohmann::json &j);

/// {"phi":{"0":3,...},"paths":{"0-1":[4,7],...}}. Path keys name the h
/// endpoints; parallel h edges are told apart as "u-v#0", "u-v#1", ... in id
/// order.
nlohmann::json certificate_to_json(const MultiGraph &g, const MultiGraph &h,
                                   const ImmersionCertificate &cert);
/// Throws kParseError.
ImmersionCertificate certificate_from_json(const MultiGraph &g, const MultiGraph &h,
                                           const nlohmann::json &j);

nlohmann::json class_report_to_json(const MultiGraph &g, const ClassReport &r);

/// Array of {"graph","op","cert","result"} with graphs as MGR text.
nlohmann::json trace_to_json(const MultiGraph &h, const ReductionTrace &trace);

/// Re-parses every step of a serialized trace and replays it: the operation
/// applied to "graph" and normalized must print exactly as "result", the
/// certificate must verify, and each result must be the next step's graph.
/// Returns an empty string when everything matches.
std::string replay_trace_json(const MultiGraph &h, const nlohmann::json &trace);

}  // namespace imsplit

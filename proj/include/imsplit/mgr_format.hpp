#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "imsplit/multigraph.hpp"

namespace imsplit {

// MGR text format:
//
//   n m
//   u v        (m lines, 0-indexed endpoints, "u u" is a loop)
//
// '#' starts a comment that runs to end of line; blank lines are ignored.
// Parsed graphs have vertex ids 0..n-1 and edge ids 0..m-1 in line order.

/// Throws Error(kParseError) naming the offending line.
MultiGraph parse_mgr(std::string_view text);
MultiGraph read_mgr_file(const std::filesystem::path &path);

/// Several graphs separated by blank lines, as written by `format_mgr_blocks`.
std::vector<MultiGraph> parse_mgr_blocks(std::string_view text);

/// Vertices renumbered by rank of id, edges written in id order as "min max".
/// Two graphs related by an order-preserving relabeling of vertex and edge ids
/// produce identical text.
std::string to_mgr(const MultiGraph &g);
std::string format_mgr_blocks(const std::vector<MultiGraph> &graphs);

/// Position of each edge id in id order, i.e. the edge index used in MGR text.
int mgr_edge_index(const MultiGraph &g, EdgeId id);

}  // namespace imsplit

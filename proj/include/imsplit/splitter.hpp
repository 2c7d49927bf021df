#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "imsplit/immersion.hpp"
#include "imsplit/multigraph.hpp"
#include "imsplit/operations.hpp"

namespace imsplit {

/// Target class and operation set of a splitter engine.
struct Mode {
  enum class Kind { kEvenK, kI4 };
  Kind kind = Kind::kI4;
  /// EvenK only: the connectivity k (even, >= 2).
  int k = 4;
  /// EvenK only: inputs may be nearly k-edge-connected.
  bool allow_special = false;

  /// Throws kBadMode for odd k or k < 2.
  static Mode even_k(int k, bool allow_special = false);
  static Mode i4() { return Mode{}; }

  friend bool operator==(const Mode &, const Mode &) = default;
};

/// "evenk:4", "evenk:4:nearly" or "i4".
std::string mode_name(const Mode &mode);
/// Inverse of mode_name. Throws kBadMode.
Mode parse_mode(std::string_view text);

/// Connectivity evidence for one graph against the target class of a mode.
struct ClassReport {
  bool holds = false;
  /// "k-edge-connected", "nearly-k-edge-connected" or "3ec+i4ec".
  std::string target;
  int k = 0;
  std::optional<VertexId> special;
  /// Global edge connectivity (0 when disconnected or smaller than 2 vertices).
  int edge_connectivity = 0;
  /// I4 only.
  bool internally_4ec = false;
  bool loopless = false;
};

/// Membership of g in the class of `mode`. In EvenK mode with a special vertex
/// allowed, only `special` may be the special vertex (nullopt: none allowed).
ClassReport class_report(const MultiGraph &g, const Mode &mode,
                         std::optional<VertexId> special = std::nullopt);

/// Every operation the mode permits on g, in engine order: deletions by edge
/// id, then split-offs by (pivot, first, second), then complete splits by
/// (vertex, pairing rank). Throws kTooLarge for complete splits at degree > 8.
std::vector<Operation> candidate_operations(const MultiGraph &g, const Mode &mode,
                                            std::optional<VertexId> special = std::nullopt);

/// All pairings of the edge-ends at v (a loop owns two ends), in recursive
/// order: the first free end is matched with each later end in turn.
std::vector<std::vector<std::pair<EdgeId, EdgeId>>> complete_split_pairings(
    const MultiGraph &g, VertexId v);

/// Shared memo of "does this graph immerse that graph", keyed by canonical
/// codes. Thread-safe.
class ImmersionCache {
 public:
  std::optional<bool> lookup(const std::string &key) const;
  void store(const std::string &key, bool value);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, bool> table_;
};

struct GoodOpResult {
  Operation op;
  /// normalize(apply(g, op)).
  MultiGraph result;
  /// h inside `result`.
  ImmersionCertificate cert;
  ClassReport class_report;
};

struct FindOptions {
  bool check_preconditions = true;
  /// Ding-Kanno restriction: only complete splits are tried.
  bool complete_splits_only = false;
  ImmersionCache *cache = nullptr;
};

/// First candidate whose normalized, non-degenerate result stays in class and
/// still immerses h. Throws kPreconditionViolated naming the failed clause.
std::optional<GoodOpResult> find_good_operation(const MultiGraph &g, const MultiGraph &h,
                                                const Mode &mode, const FindOptions &options = {},
                                                std::optional<VertexId> special = std::nullopt);

/// Re-derives every claim of `r` from scratch; empty string when all hold,
/// otherwise what failed.
std::string verify_good_op_result(const MultiGraph &g, const MultiGraph &h, const Mode &mode,
                                  const GoodOpResult &r,
                                  std::optional<VertexId> special = std::nullopt);

/// (Q3, K4) and (Q3, K2^3) up to isomorphism.
bool is_declared_exception(const MultiGraph &g, const MultiGraph &h);

struct ReductionStep {
  MultiGraph before;
  GoodOpResult good;
};

struct ReductionTrace {
  enum class Outcome { kReached, kStuckDeclaredException, kStuckAlarm };
  std::vector<ReductionStep> steps;
  MultiGraph final_graph;
  Outcome outcome = Outcome::kReached;
};

std::string_view outcome_name(ReductionTrace::Outcome outcome);

/// Applies good operations until the graph is isomorphic to h or none exists.
/// Throws kPreconditionViolated when the first step's preconditions fail.
ReductionTrace reduce_chain(const MultiGraph &g, const MultiGraph &h, const Mode &mode,
                            const FindOptions &options = {});

/// Replays every step; empty string when the trace is consistent.
std::string replay_trace(const MultiGraph &h, const Mode &mode, const ReductionTrace &trace);

/// An edge inside a minimal X' subset of X with d(X') = k whose deletion keeps
/// g (nearly) k-edge-connected. Preconditions: g in the EvenK class (special
/// vertex allowed), d(X) = k, every vertex of X has degree k + 1.
EdgeId lemma1_witness(const MultiGraph &g, std::span<const VertexId> side, int k);

/// d(X) must be 4. True when each side has at least three vertices, or exactly
/// two vertices that are not both of degree 3.
bool is_interesting_cut(const MultiGraph &g, std::span<const VertexId> side);

/// For each inclusion-minimal side Y of a nontrivial 3-cut and each edge e
/// inside Y, h \ e is internally 3-edge-connected.
bool verify_minimal_3cut_deletion(const MultiGraph &h);

enum class CorollaryVerdict { kImmersesK33, kIsOctahedron, kNotApplicable, kViolation };
std::string_view verdict_name(CorollaryVerdict v);

CorollaryVerdict verify_corollary_k5(const MultiGraph &g);

}  // namespace imsplit

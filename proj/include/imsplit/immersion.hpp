#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "imsplit/multigraph.hpp"

namespace imsplit {

/// Witness that g weakly immerses h: an injective terminal map and one trail
/// in g per edge of h, pairwise edge-disjoint.
struct ImmersionCertificate {
  /// h vertex -> g vertex.
  std::map<VertexId, VertexId> phi;
  /// h edge id -> g edge ids, walked from phi(u) to phi(v) (either direction
  /// is accepted by the verifier).
  std::map<EdgeId, std::vector<EdgeId>> paths;

  friend bool operator==(const ImmersionCertificate &, const ImmersionCertificate &) = default;
};

enum class CertificateDefect {
  kNone,
  kPhiIncomplete,
  kPhiNotInjective,
  kUnknownVertex,
  kMissingPath,
  kUnknownEdge,
  kEmptyPath,
  kEdgeReuse,
  kBrokenWalk,
  kWrongEndpoints,
};

std::string_view defect_name(CertificateDefect d);

struct CertificateCheck {
  CertificateDefect defect = CertificateDefect::kNone;
  std::string detail;

  bool ok() const { return defect == CertificateDefect::kNone; }
  explicit operator bool() const { return ok(); }
};

/// Pure check of every certificate invariant; no search.
CertificateCheck verify_immersion(const MultiGraph &g, const MultiGraph &h,
                                  const ImmersionCertificate &cert);

/// Exact search. Terminal maps are tried high degree first and only one map
/// per orbit of Aut(h) is routed; each h-edge is routed as a simple path (a
/// trail can always be shortcut to one) and branches die as soon as the
/// residual graph violates a cut condition for the unrouted demands.
std::optional<ImmersionCertificate> find_immersion(const MultiGraph &g, const MultiGraph &h);
bool immerses(const MultiGraph &g, const MultiGraph &h);

/// Everything g immerses, by definition: the set of canonical codes reachable
/// from g by deleting edges, deleting isolated vertices and splitting off
/// pairs of edges. Exponential; guarded to |V| <= 6, |E| <= 10.
class SplitClosure {
 public:
  explicit SplitClosure(const MultiGraph &g);

  bool contains(const MultiGraph &h) const;
  std::size_t size() const { return loopless_.size(); }

 private:
  MultiGraph g_;
  std::unordered_set<std::string> loopless_;
};

/// Definitional oracle used to cross-check find_immersion.
bool immersion_oracle_by_splits(const MultiGraph &g, const MultiGraph &h);

}  // namespace imsplit

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace imsplit {

enum class Errc {
  kUnknownId,
  kBadIncidence,
  kOddDegreeCompleteSplit,
  kEmptySide,
  kSameVertex,
  kTooSmall,
  kTooLarge,
  kOverlap,
  kEmptySet,
  kDegreeThree,
  kCutEdgeIncident,
  kNotFound,
  kPreconditionViolated,
  kBadMode,
  kUnknownName,
  kParseError,
};

std::string_view errc_name(Errc code);

// Every library failure is reported through this type. kNotFound is reserved
// for searches whose success is guaranteed by a theorem, so seeing it means a
// counterexample or a bug, never a routine miss.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string &what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace imsplit

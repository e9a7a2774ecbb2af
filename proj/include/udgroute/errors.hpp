#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace udgroute {

enum class ErrorKind {
  kDuplicateId,
  kInvalidInput,
  kDisconnectedGraph,
  kInvalidEpsilon,
  kEpsilonTooSmall,
  kIncompatibleLabels,
  kNotANeighbor,
  kNoCommonPortal,
  kNoCommonLevel,
  kSpannerPropertyViolated,
  kDegenerateInput,
  kDepthLimitExceeded,
  kCalibrationFailed,
  kGenerationFailed,
  kNonTermination,
  kAssertionViolation,
  kMalformedData,
};

std::string_view error_kind_name(ErrorKind kind);

// Every failure the library reports carries one of the kinds above so callers
// (and tests) can dispatch on it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace udgroute

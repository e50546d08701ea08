#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperreg {

enum class ErrorCode {
  DuplicateEdge,
  EmptyEdge,
  UnknownVertex,
  DuplicateVertex,
  AntichainViolation,
  TooManyVertices,
  SameVertex,
  NoEdges,
  UnknownEdge,
  NotSemiInduced,
  InvalidBouquet,
  NotOptimalWitness,
  NotSemiStronglyDisjoint,
  FlowersNotCover,
  SearchLimitExceeded,
  SizeLimitExceeded,
  Unsatisfiable,
  UnknownFilter,
  UnknownSuite,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

/// Cap violations map to their own CLI exit code; everything else is an
/// input error.
constexpr bool is_limit_error(ErrorCode code) {
  return code == ErrorCode::SearchLimitExceeded ||
         code == ErrorCode::SizeLimitExceeded;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperreg

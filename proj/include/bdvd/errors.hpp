#pragma once

#include <stdexcept>
#include <string>

namespace bdvd {

enum class ErrorCode {
  // graph construction
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  // bipartite machinery
  OverlappingSides,
  NotAMatchingOfAuxiliary,
  UntaggedVertexIsMatched,
  // decomposition
  PartitionInvalid,
  DegreeBoundViolatedInY,
  // kernelization
  DegreeBoundTooLarge,
  NotADeletionSetOfKernel,
  // exact solver
  TooLarge,
  BudgetExceeded,
  InvalidConfig,
  // instance files
  ParseError,
  HeaderMismatch,
  TooManyEdges,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace bdvd

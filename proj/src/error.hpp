#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace indturan {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  EmptyQuery,
  InvalidPartition,
  EmptyGraph,
  DegenerateRoot,
  Multigraph,
  NotBipartite,
  EmptyBlowup,
  NotQualified,
  CertificateInvalid,
  TooLarge,
  NoPartition,
  NotKssFree,
  HypothesisUnmet,
  BadBlowup,
  NotSemiInduced,
};

std::string_view to_string(ErrorCode code) noexcept;

/// The single exception type thrown by the library. The code is what callers
/// (and the C API) dispatch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace indturan

#pragma once

#include <stdexcept>
#include <string>

namespace tsirelson {

enum class ErrorKind {
  NotMember,
  BoundExceeded,
  SupportTooLarge,
  InvalidDef,
  BadTree,
  Exhausted,
  InsufficientBasis,
  EpsilonTooSmallForBudget,
  BudgetExceeded,
  UnverifiedUnconditionality,
  Parse,
  Domain,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The text without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

/// Reasons a certificate can be rejected.
enum class BadTreeReason {
  NonSuccessive,
  NotAPartition,
  AdmissibilityViolation,
  WrongTerminalLevel,
  LeafValueMismatch,
  Malformed,
};

const char* to_string(BadTreeReason reason);

class BadTree : public Error {
 public:
  BadTree(BadTreeReason reason, const std::string& detail)
      : Error(ErrorKind::BadTree, std::string(to_string(reason)) + ": " + detail), reason_(reason) {}

  BadTreeReason reason() const noexcept { return reason_; }

 private:
  BadTreeReason reason_;
};

}  // namespace tsirelson

#pragma once

#include <stdexcept>
#include <string>

namespace cosys {

// One exception type with a kind tag; the CLI maps kinds to exit codes.
enum class ErrorKind {
  Parse,
  DivisionByZero,
  RankDeficient,
  OutOfRange,
  UnknownElement,
  UnknownName,
  GroundSetMismatch,
  Disconnected,
  Acyclic,
  NoCocircuits,
  NoAdmissibleTriple,
  ZeroTotalWeight,
  InvalidWeight,
  NotAdmissible,
  NotNormalized,
  LoopBasepoint,
  NotATriangle,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cosys

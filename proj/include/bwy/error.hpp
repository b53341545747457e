#pragma once

#include <stdexcept>
#include <string>

namespace bwy {

enum class ErrorKind {
  EmptyWord,
  MissingLetter,
  SyntaxError,
  DomainError,
  ZeroV,
  SingularU,
  SingularFactor,
  DegenerateWeight,
  DegenerateEdge,
  NonPeriodic,
  Overflow,
  BranchCut,
  NoConvergence,
  OutOfRegion,
  DegenerateShape,
  TooFewPoints,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace bwy

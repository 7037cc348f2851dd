#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace currentrep {

enum class ErrorKind {
  NotInvertible,
  NoSolution,
  AlgebraMismatch,
  InvalidDescriptor,
  UnsupportedTruncation,
  NotNilpotent,
  NeedsFieldExtension,
  BadCharacter,
  BadWeight,
  BadTwist,
  TooLarge,
  Inconclusive,
  NotWeightModule,
  NotGraded,
  FormulaDomainError,
  OutOfScope,
  BadIndex,
  ParseError,
  InternalError,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

inline void require(bool cond, ErrorKind kind, const char* what) {
  if (!cond) raise(kind, what);
}

}  // namespace currentrep

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace invdiff {

enum class ErrorCode {
  kDimensionMismatch,
  kParentMismatch,
  kIndexOutOfRange,
  kSingularMatrix,
  kNotASubalgebra,
  kNotComplementary,
  kInvalidCharacter,
  kNotAnAutomorphism,
  kInvalidStructure,
  kDependentVectors,
  kNotInDmod,
  kGeneratorNotInDmod,
  kDegreeCapExceeded,
  kSyntax,
  kUnknownIdentifier,
  kInvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace invdiff

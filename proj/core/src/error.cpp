#include "invdiff/error.hpp"

namespace invdiff {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kParentMismatch: return "parent-mismatch";
    case ErrorCode::kIndexOutOfRange: return "index-out-of-range";
    case ErrorCode::kSingularMatrix: return "singular-matrix";
    case ErrorCode::kNotASubalgebra: return "not-a-subalgebra";
    case ErrorCode::kNotComplementary: return "not-complementary";
    case ErrorCode::kInvalidCharacter: return "invalid-character";
    case ErrorCode::kNotAnAutomorphism: return "not-an-automorphism";
    case ErrorCode::kInvalidStructure: return "invalid-structure";
    case ErrorCode::kDependentVectors: return "dependent-vectors";
    case ErrorCode::kNotInDmod: return "not-in-Dmod";
    case ErrorCode::kGeneratorNotInDmod: return "generator-not-in-Dmod";
    case ErrorCode::kDegreeCapExceeded: return "degree-cap-exceeded";
    case ErrorCode::kSyntax: return "syntax-error";
    case ErrorCode::kUnknownIdentifier: return "unknown-identifier";
    case ErrorCode::kInvalidInput: return "invalid-input";
  }
  return "unknown";
}

}  // namespace invdiff

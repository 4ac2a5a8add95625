#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invdiff/linalg.hpp"
#include "invdiff/rational.hpp"

namespace invdiff {

/// Shared, immutable list of variable names. Two handles compare equal when
/// they name the same variables in the same order.
class Variables {
 public:
  Variables();
  explicit Variables(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return names_->at(i); }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// The first `count` variables, as a new handle.
  Variables prefix(std::size_t count) const;

  bool operator==(const Variables& other) const;

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

bool is_identifier(std::string_view s);

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Nonzero bracket [X_i, X_j] given in basis coordinates.
struct BracketEntry {
  std::size_t i;
  std::size_t j;
  Vector value;
};

/// A finite-dimensional Lie algebra over Q given by structure constants.
/// Only pairs i < j are stored; [X_j, X_i] = -[X_i, X_j] by construction.
/// Construction does not check Jacobi; see check_structure().
class LieAlgebra {
 public:
  /// Entries with i > j are stored negated as (j, i). Entries with i == j
  /// must be zero; duplicates are rejected.
  static LieAlgebra create(std::vector<std::string> names, const std::vector<BracketEntry>& entries);
  static LieAlgebra abelian(std::vector<std::string> names);

  std::size_t dim() const;
  const Variables& variables() const;
  const std::string& name(std::size_t i) const { return variables().name(i); }

  /// [X_i, X_j] as a sparse coordinate vector.
  const SparseVector& structure(std::size_t i, std::size_t j) const;
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;

  /// Stored constants (i < j, nonzero only), ordered by (i, j).
  std::vector<BracketEntry> nonzero_brackets() const;

  bool same_as(const LieAlgebra& other) const { return impl_ == other.impl_; }

 private:
  struct Impl;
  explicit LieAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// "2*E - 1/2*F" style rendering of a coordinate vector.
std::string format_vector(const Vector& v, const Variables& names);

struct JacobiViolation {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Vector residual;
};

struct StructureReport {
  std::vector<JacobiViolation> violations;
  bool valid() const { return violations.empty(); }
};

/// Checks Jacobi on every basis triple i < j < k (the other triples follow
/// from antisymmetry).
StructureReport check_structure(const LieAlgebra& alg);

/// Linearly independent list of vectors in an ambient coordinate space,
/// each with a display name.
class Subspace {
 public:
  Subspace() = default;
  /// Throws kDependentVectors if the vectors are not independent. Missing
  /// names default to the basis name for unit vectors, else prefix + index.
  static Subspace span(const LieAlgebra& alg, std::vector<Vector> vectors,
                       std::vector<std::string> names = {}, std::string_view default_prefix = "v");
  static Subspace zero(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<Vector>& basis() const { return vectors_; }
  const std::vector<std::string>& names() const { return names_; }
  bool contains(const Vector& v) const;

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Vector> vectors_;
  std::vector<std::string> names_;
};

/// [s, s] contained in s, checked on basis pairs.
bool is_subalgebra(const LieAlgebra& alg, const Subspace& s);

/// chi([X, Y]) = 0 for all basis pairs of h; chi holds one value per h-basis vector.
bool check_character(const LieAlgebra& alg, const Subspace& h, const Vector& chi);

/// Result of the invariant-complement search.
struct ComplementResult {
  std::optional<Subspace> complement;
  /// Human-readable inconsistent equation when infeasible.
  std::string certificate;
  bool feasible() const { return complement.has_value(); }
};

/// Looks for a subspace W with g = h + W (direct) and [h, W] in W, and
/// A W = W for each automorphism in `reps` (original coordinates). Solves
/// for a linear section s of g -> g/h that intertwines the h-actions.
ComplementResult invariant_complement(const LieAlgebra& alg, const Subspace& h,
                                      std::span<const Matrix> reps = {});

}  // namespace invdiff

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "invdiff/enveloping.hpp"
#include "invdiff/lie_algebra.hpp"
#include "invdiff/linalg.hpp"
#include "invdiff/sym_poly.hpp"

namespace invdiff {

/// Automorphism of g standing in for Ad(h0) on a non-identity component of H.
struct ComponentRep {
  std::string name;
  Matrix matrix;  // original coordinates, acts on columns
};

/// A coset space datum g = m + h with a character differential chi on h.
///
/// The adapted basis lists the m-basis first (indices 0..r-1) and the
/// h-basis last (r..n-1). Every polynomial and PBW computation for the
/// setup runs in adapted coordinates, on `adapted()` and `ring()`.
class CosetSetup {
 public:
  /// Validates and builds the setup. When `m` is absent a complement is
  /// chosen greedily from the standard basis (no invariance promised).
  /// Throws kNotASubalgebra, kNotComplementary, kInvalidCharacter or
  /// kNotAnAutomorphism.
  static CosetSetup create(const LieAlgebra& alg, const Subspace& h, std::optional<Subspace> m, Vector chi,
                           std::vector<ComponentRep> reps = {}, std::string name = {});

  const std::string& name() const;
  const LieAlgebra& algebra() const;
  const LieAlgebra& adapted() const;
  const Enveloping& ring() const;

  std::size_t dim() const;
  std::size_t r() const;       // dim m
  std::size_t h_dim() const;   // dim h

  const Subspace& h() const;
  const Subspace& m() const;
  bool m_auto_selected() const;

  /// chi on the h-basis, in adapted order.
  const Vector& chi() const;
  /// chi(y) for y given in adapted coordinates (its m-part is ignored).
  Rational chi_of(const Vector& adapted_coords) const;

  const std::vector<ComponentRep>& component_reps() const;
  /// The component representatives conjugated into adapted coordinates.
  const std::vector<Matrix>& adapted_reps() const;

  /// Columns are the adapted basis vectors in original coordinates.
  const Matrix& change_of_basis() const;
  Vector to_adapted(const Vector& original) const;
  Vector to_original(const Vector& adapted) const;

  /// Variables of S(m): the first r adapted names.
  const Variables& m_variables() const;

  bool same_as(const CosetSetup& other) const { return impl_ == other.impl_; }

 private:
  struct Impl;
  explicit CosetSetup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// sigma: g -> m, the m-component of x (original coordinates) in g = m + h;
/// returned in m-coordinates (length r).
Vector sigma(const CosetSetup& setup, const Vector& x);

bool check_character(const CosetSetup& setup);

/// Algebra homomorphism S(g) -> S(m) extending sigma; p over adapted().
SymPoly sigma_hom(const CosetSetup& setup, const SymPoly& p);

/// S(m) as a subalgebra of S(g) (adapted coordinates).
SymPoly embed_m(const CosetSetup& setup, const SymPoly& p);

}  // namespace invdiff

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "invdiff/lie_algebra.hpp"
#include "invdiff/sym_poly.hpp"

namespace invdiff {

inline constexpr int kDefaultSymmetrizeCap = 6;

/// The universal enveloping algebra U(g) with the PBW basis taken in the
/// basis order of `algebra()`: X_1^e1 ... X_n^en.
///
/// Handles are cheap to copy and share memo tables for monomial products
/// and symmetrized monomials. The caches are write-once per key and
/// guarded, so a handle may be used from several threads.
class Enveloping {
 public:
  explicit Enveloping(LieAlgebra alg, int symmetrize_cap = kDefaultSymmetrizeCap);

  const LieAlgebra& algebra() const;
  std::size_t dim() const { return algebra().dim(); }
  int symmetrize_cap() const;

  /// X^e * X_i in normal form.
  const TermMap& mul_generator(const Exponents& e, std::size_t i) const;
  /// lambda(X^e) for a commutative monomial X^e.
  const TermMap& symmetrized_monomial(const Exponents& e) const;

  bool same_as(const Enveloping& other) const { return impl_ == other.impl_; }

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Element of U(g) in PBW normal form.
class PbwElement {
 public:
  explicit PbwElement(Enveloping ring) : ring_(std::move(ring)) {}

  static PbwElement scalar(Enveloping ring, const Rational& c);
  static PbwElement one(Enveloping ring) { return scalar(std::move(ring), 1); }
  static PbwElement generator(Enveloping ring, std::size_t i);
  static PbwElement linear(Enveloping ring, const Vector& coeffs);
  /// The PBW monomial X^e (already ordered).
  static PbwElement monomial(Enveloping ring, Exponents e, const Rational& c = 1);

  const Enveloping& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Filtration degree; kDegreeOfZero for 0.
  int degree() const { return max_degree(terms_); }
  Rational coefficient(const Exponents& e) const;

  void add(const Exponents& e, const Rational& c);

  PbwElement& operator+=(const PbwElement& rhs);
  PbwElement& operator-=(const PbwElement& rhs);
  PbwElement& operator*=(const Rational& c);

  friend PbwElement operator+(PbwElement a, const PbwElement& b) { return a += b; }
  friend PbwElement operator-(PbwElement a, const PbwElement& b) { return a -= b; }
  friend PbwElement operator-(PbwElement a) { return a *= Rational(-1); }
  friend PbwElement operator*(const Rational& c, PbwElement a) { return a *= c; }

  bool operator==(const PbwElement& other) const;

 private:
  void require_same_ring(const PbwElement& other) const;
  Enveloping ring_;
  TermMap terms_;
};

/// "1*F^1*E^1 + 1*H^1": explicit coefficients and exponents, graded-lex.
std::string to_string(const PbwElement& u);

using Word = std::vector<std::size_t>;

struct WordTerm {
  Rational coefficient;
  Word letters;
};

enum class RewriteStrategy {
  kMemoized,   // cached right multiplication by generators
  kLeftmost,   // rewrite the leftmost out-of-order adjacent pair first
  kRightmost,  // rewrite the rightmost out-of-order adjacent pair first
};

/// Normal form of a linear combination of words X_{i1} ... X_{ik}, using
/// X_b X_a -> X_a X_b + [X_b, X_a] for a < b.
PbwElement pbw_normalize(const Enveloping& ring, const std::vector<WordTerm>& words,
                         RewriteStrategy strategy = RewriteStrategy::kMemoized);

PbwElement u_mul(const PbwElement& a, const PbwElement& b);
inline PbwElement operator*(const PbwElement& a, const PbwElement& b) { return u_mul(a, b); }
PbwElement pow(const PbwElement& a, int k);

/// The symmetrization map lambda: each commutative monomial goes to the
/// average of all orderings of its letters. Throws kDegreeCapExceeded
/// above the ring's symmetrize cap.
PbwElement symmetrize(const Enveloping& ring, const SymPoly& p);

/// Inverse of symmetrize, by peeling off the top filtration degree.
SymPoly lambda_coords(const PbwElement& u);

/// [x, u] = x u - u x.
PbwElement ad_u(const Vector& x, const PbwElement& u);

/// Algebra automorphism of U(g) extending the Lie algebra automorphism `a`
/// (coordinate columns): X_{i1}...X_{ik} -> (A X_{i1})...(A X_{ik}).
PbwElement ad_group_u(const Matrix& a, const PbwElement& u);

}  // namespace invdiff

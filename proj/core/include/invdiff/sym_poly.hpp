#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "invdiff/lie_algebra.hpp"
#include "invdiff/linalg.hpp"
#include "invdiff/rational.hpp"

namespace invdiff {

/// Exponent vector of a (commutative or PBW-ordered) monomial.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Graded-lex, highest first: larger total degree first, then
/// lexicographically larger exponent vector first.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

inline constexpr int kDegreeOfZero = -1;

// Sparse-map helpers shared by SymPoly and PbwElement; zero coefficients
// are never stored.
void add_term(TermMap& terms, const Exponents& e, const Rational& c);
void add_scaled(TermMap& dst, const TermMap& src, const Rational& c);
int max_degree(const TermMap& terms);

/// Element of the symmetric algebra S(V) over a named set of variables.
class SymPoly {
 public:
  explicit SymPoly(Variables vars) : vars_(std::move(vars)) {}

  static SymPoly constant(Variables vars, const Rational& c);
  static SymPoly variable(Variables vars, std::size_t i);
  static SymPoly linear(Variables vars, const Vector& coeffs);
  static SymPoly monomial(Variables vars, Exponents e, const Rational& c = 1);

  const Variables& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const { return max_degree(terms_); }
  Rational coefficient(const Exponents& e) const;
  SymPoly homogeneous_part(int d) const;
  bool is_homogeneous() const;

  void add(const Exponents& e, const Rational& c);

  SymPoly& operator+=(const SymPoly& rhs);
  SymPoly& operator-=(const SymPoly& rhs);
  SymPoly& operator*=(const Rational& c);

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator-(SymPoly a) { return a *= Rational(-1); }
  friend SymPoly operator*(const Rational& c, SymPoly a) { return a *= c; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);

  SymPoly pow(int k) const;

  bool operator==(const SymPoly& other) const { return vars_ == other.vars_ && terms_ == other.terms_; }

 private:
  void require_same_parent(const SymPoly& other) const;
  Variables vars_;
  TermMap terms_;
};

/// Canonical text: graded-lex terms, e.g. "1/2*H^2 + H".
std::string to_string(const SymPoly& p);

enum class BasisMode { kHomogeneous, kUpTo };

/// Graded-lex enumeration. Homogeneous: highest-first within the degree.
/// Up-to: ascending degree, each degree highest-first.
std::vector<Exponents> monomial_basis(std::size_t vars, int degree, BasisMode mode);

/// Derivation of S(g) extending Y -> [x, Y].
SymPoly ad_derivation(const LieAlgebra& alg, const Vector& x, const SymPoly& p);

/// Algebra automorphism of S(g) extending the linear map `a` (acting on
/// coordinate columns). Throws kSingularMatrix if `a` is not invertible.
SymPoly ad_group(const LieAlgebra& alg, const Matrix& a, const SymPoly& p);

/// Coordinates of p's terms with respect to an explicit monomial list.
/// Throws kInvalidInput if p has a term outside the list.
Vector coordinates(const SymPoly& p, const std::vector<Exponents>& basis);
SymPoly from_coordinates(const Variables& vars, const std::vector<Exponents>& basis, const Vector& coords);

}  // namespace invdiff

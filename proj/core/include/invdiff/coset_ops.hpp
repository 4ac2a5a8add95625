#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "invdiff/coset_setup.hpp"
#include "invdiff/enveloping.hpp"
#include "invdiff/sym_poly.hpp"

namespace invdiff {

inline constexpr int kDefaultCheckDegree = 4;

// Conventions: every PbwElement here lives in setup.ring() (adapted PBW
// order, m first, h last). Membership in Dmod uses connected-H semantics
// (the infinitesimal condition for each h-basis vector) plus the supplied
// component representatives.

/// Canonical representative of u modulo the left ideal generated by
/// {Y + chi(Y) : Y in h}: trailing h-factors are stripped with
/// u*Y = -chi(Y)*u. The result is supported on m-only monomials.
PbwElement project_mod_ideal(const CosetSetup& setup, const PbwElement& u);

bool in_ideal(const CosetSetup& setup, const PbwElement& u);

/// Y + chi(Y) as an element of U(g), Y in adapted coordinates.
PbwElement ideal_generator(const CosetSetup& setup, const Vector& y_adapted);

bool in_dmod(const CosetSetup& setup, const PbwElement& u);

/// Homogeneous invariants of degree d under sigma o Ad(H), i.e. the degree-d
/// part of I_mod(m), as an echelon-form basis over m_variables().
struct ImodBasis {
  int degree = 0;
  std::vector<SymPoly> polys;
};

ImodBasis imod_basis(const CosetSetup& setup, int degree);

/// Plain Ad(H)-invariants in S^d(m) (no sigma); agrees with imod_basis
/// when m is an invariant complement.
std::vector<SymPoly> plain_invariants(const CosetSetup& setup, int degree);

/// Basis of {P in S_d(m) : lambda(P) in Dmod} (degree <= d, not graded).
std::vector<SymPoly> dmod_m_part(const CosetSetup& setup, int max_degree);

/// Degree-m check of lambda(S_m(g)) = lambda(S_{m-1}(g)) h^chi (+) lambda(S_m(m)).
struct DirectSumReport {
  int degree = 0;
  std::size_t total_rank = 0;      // rank of lambda(S_m(g))
  std::size_t ideal_rank = 0;      // rank of lambda(S_{m-1}(g)) h^chi
  std::size_t m_rank = 0;          // rank of lambda(S_m(m))
  std::size_t combined_rank = 0;   // rank of the sum of the two parts
  std::size_t expected_total = 0;  // C(n+m, m)
  std::size_t expected_m = 0;      // C(r+m, m)
  bool pass = false;
};

DirectSumReport verify_direct_sum(const CosetSetup& setup, int degree);

/// Element of the quotient Dmod / ideal, stored by its canonical representative.
class QuotientClass {
 public:
  const CosetSetup& setup() const { return setup_; }
  const PbwElement& rep() const { return rep_; }
  bool operator==(const QuotientClass& other) const { return setup_.same_as(other.setup_) && rep_ == other.rep_; }

 private:
  friend QuotientClass quotient_class(const CosetSetup& setup, const PbwElement& u);
  friend QuotientClass quotient_mul(const QuotientClass& a, const QuotientClass& b);
  QuotientClass(CosetSetup setup, PbwElement rep) : setup_(std::move(setup)), rep_(std::move(rep)) {}
  CosetSetup setup_;
  PbwElement rep_;
};

/// Throws kNotInDmod unless in_dmod(u).
QuotientClass quotient_class(const CosetSetup& setup, const PbwElement& u);
/// Throws kParentMismatch for classes of different setups.
QuotientClass quotient_mul(const QuotientClass& a, const QuotientClass& b);

/// lambda(P) in Dmod for every imod_basis element of degree <= max_degree.
bool check_lambda_imod_in_dmod(const CosetSetup& setup, int max_degree);

/// For each d <= max_degree: span of lambda(I_mod) up to d equals
/// lambda(S_d(m)) intersected with Dmod. std::nullopt when
/// check_lambda_imod_in_dmod fails (the statement does not apply).
std::optional<bool> check_lambda_imod_equality(const CosetSetup& setup, int max_degree);

/// All commutators of lambda-images of imod basis elements with total
/// degree <= max_degree lie in the ideal.
bool check_commutativity(const CosetSetup& setup, int max_degree);

/// Products of the classes of lambda(generators) span the classes of
/// lambda(I_mod) at every degree <= max_degree. Throws
/// kGeneratorNotInDmod if some lambda(generator) is outside Dmod.
bool check_generation(const CosetSetup& setup, const std::vector<SymPoly>& generators, int max_degree);

/// check_generation with the single generator sum_i signature[i] * X_i^2.
bool laplace_generation_check(const CosetSetup& setup, const std::vector<int>& signature, int max_degree);

/// Quadratic form sum_i signature[i] * X_i^2 over m_variables().
SymPoly laplace_polynomial(const CosetSetup& setup, const std::vector<int>& signature);

}  // namespace invdiff

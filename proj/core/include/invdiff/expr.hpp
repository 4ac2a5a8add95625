#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "invdiff/coset_setup.hpp"
#include "invdiff/enveloping.hpp"
#include "invdiff/rational.hpp"
#include "invdiff/sym_poly.hpp"

namespace invdiff {

/// Parsed expression over rational literals and basis names.
///
///   expr   := ['-'] term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | ident | factor '^' uint | '(' expr ')'
///
/// Products keep their order; whether they commute is up to the consumer.
struct Expr {
  enum class Kind { kNumber, kIdent, kSum, kProduct, kPower };

  Kind kind = Kind::kNumber;
  Rational number;            // kNumber, always >= 0
  std::string name;           // kIdent
  std::vector<Expr> operands; // summands, factors, or the single power base
  std::vector<int> signs;     // kSum: +1 or -1 per summand
  unsigned exponent = 0;      // kPower

  static Expr make_number(Rational q);
  static Expr make_ident(std::string name);
  static Expr make_sum(std::vector<Expr> terms, std::vector<int> signs);
  static Expr make_product(std::vector<Expr> factors);
  static Expr make_power(Expr base, unsigned exponent);

  bool operator==(const Expr& other) const;
};

/// Throws kSyntax with the byte offset of the offending token.
Expr parse_expr(std::string_view text);

/// Parses and checks that every identifier names a basis vector of the
/// setup (adapted or original names). Throws kUnknownIdentifier.
Expr parse_expr(std::string_view text, const CosetSetup& setup);

/// Canonical text; parse_expr(render(e)) renders back to the same text.
std::string render(const Expr& e);

/// Identifiers in order of first appearance.
std::vector<std::string> identifiers(const Expr& e);

/// Adapted coordinates of a basis name. Adapted names win over original
/// names of g. Throws kUnknownIdentifier.
Vector resolve_identifier(const CosetSetup& setup, std::string_view name);

/// Noncommutative reading in setup.ring().
PbwElement to_pbw(const CosetSetup& setup, const Expr& e);

/// Commutative reading in S(g), over the adapted basis.
SymPoly to_sym(const CosetSetup& setup, const Expr& e);

/// Commutative reading in S(m). Throws kInvalidInput if the value
/// involves the h-part of the adapted basis.
SymPoly to_sym_m(const CosetSetup& setup, const Expr& e);

}  // namespace invdiff

#include "invdiff/expr.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <utility>

#include "invdiff/error.hpp"

namespace invdiff {

Expr Expr::make_number(Rational q) {
  Expr e;
  e.kind = Kind::kNumber;
  e.number = std::move(q);
  return e;
}

Expr Expr::make_ident(std::string name) {
  Expr e;
  e.kind = Kind::kIdent;
  e.name = std::move(name);
  return e;
}

Expr Expr::make_sum(std::vector<Expr> terms, std::vector<int> signs) {
  Expr e;
  e.kind = Kind::kSum;
  e.operands = std::move(terms);
  e.signs = std::move(signs);
  return e;
}

Expr Expr::make_product(std::vector<Expr> factors) {
  Expr e;
  e.kind = Kind::kProduct;
  e.operands = std::move(factors);
  return e;
}

Expr Expr::make_power(Expr base, unsigned exponent) {
  Expr e;
  e.kind = Kind::kPower;
  e.operands.push_back(std::move(base));
  e.exponent = exponent;
  return e;
}

bool Expr::operator==(const Expr& other) const {
  return kind == other.kind && number == other.number && name == other.name && operands == other.operands &&
         signs == other.signs && exponent == other.exponent;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kSyntax, "syntax error at byte " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Expr expr() {
    std::vector<Expr> terms;
    std::vector<int> signs;
    signs.push_back(accept('-') ? -1 : 1);
    terms.push_back(term());
    for (;;) {
      if (accept('+'))
        signs.push_back(1);
      else if (accept('-'))
        signs.push_back(-1);
      else
        break;
      terms.push_back(term());
    }
    if (terms.size() == 1 && signs[0] == 1) return std::move(terms[0]);
    return Expr::make_sum(std::move(terms), std::move(signs));
  }

  Expr term() {
    std::vector<Expr> factors;
    factors.push_back(factor());
    while (accept('*')) factors.push_back(factor());
    if (factors.size() == 1) return std::move(factors[0]);
    return Expr::make_product(std::move(factors));
  }

  Expr factor() {
    Expr base = primary();
    while (accept('^')) {
      skip_space();
      std::size_t at = pos_;
      std::string_view d = digits();
      if (d.empty()) fail("expected a nonnegative integer exponent");
      unsigned long long v = 0;
      for (char c : d) {
        v = v * 10 + static_cast<unsigned>(c - '0');
        if (v > std::numeric_limits<unsigned>::max()) {
          pos_ = at;
          fail("exponent too large");
        }
      }
      base = Expr::make_power(std::move(base), static_cast<unsigned>(v));
    }
    return base;
  }

  Expr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::string_view num = digits();
      std::string literal(num);
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::string_view den = digits();
        if (den.empty()) fail("expected a denominator");
        bool zero = den.find_first_not_of('0') == std::string_view::npos;
        if (zero) {
          pos_ = start;
          fail("zero denominator");
        }
        literal += "/" + std::string(den);
      }
      return Expr::make_number(parse_rational(literal));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      return Expr::make_ident(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void render_into(const Expr& e, std::string& out);

void render_operand(const Expr& e, std::string& out, bool wrap_products) {
  bool wrap = e.kind == Expr::Kind::kSum || (wrap_products && e.kind == Expr::Kind::kProduct);
  if (wrap) out += '(';
  render_into(e, out);
  if (wrap) out += ')';
}

void render_into(const Expr& e, std::string& out) {
  switch (e.kind) {
    case Expr::Kind::kNumber:
      out += to_string(e.number);
      break;
    case Expr::Kind::kIdent:
      out += e.name;
      break;
    case Expr::Kind::kSum:
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        if (i == 0)
          out += e.signs[0] < 0 ? "-" : "";
        else
          out += e.signs[i] < 0 ? " - " : " + ";
        render_operand(e.operands[i], out, false);
      }
      break;
    case Expr::Kind::kProduct:
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        if (i > 0) out += '*';
        render_operand(e.operands[i], out, true);
      }
      break;
    case Expr::Kind::kPower:
      render_operand(e.operands[0], out, true);
      out += '^' + std::to_string(e.exponent);
      break;
  }
}

void collect_identifiers(const Expr& e, std::vector<std::string>& out, std::set<std::string>& seen) {
  if (e.kind == Expr::Kind::kIdent && seen.insert(e.name).second) out.push_back(e.name);
  for (const auto& op : e.operands) collect_identifiers(op, out, seen);
}

template <class T, class Scalar, class Atom, class Mul>
T evaluate(const Expr& e, const Scalar& scalar, const Atom& atom, const Mul& mul) {
  switch (e.kind) {
    case Expr::Kind::kNumber:
      return scalar(e.number);
    case Expr::Kind::kIdent:
      return atom(e.name);
    case Expr::Kind::kSum: {
      T acc = scalar(Rational(0));
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        T v = evaluate<T>(e.operands[i], scalar, atom, mul);
        if (e.signs[i] < 0)
          acc -= v;
        else
          acc += v;
      }
      return acc;
    }
    case Expr::Kind::kProduct: {
      T acc = evaluate<T>(e.operands[0], scalar, atom, mul);
      for (std::size_t i = 1; i < e.operands.size(); ++i) acc = mul(acc, evaluate<T>(e.operands[i], scalar, atom, mul));
      return acc;
    }
    case Expr::Kind::kPower: {
      T base = evaluate<T>(e.operands[0], scalar, atom, mul);
      T acc = scalar(Rational(1));
      for (unsigned k = 0; k < e.exponent; ++k) acc = mul(acc, base);
      return acc;
    }
  }
  return scalar(Rational(0));
}

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

Expr parse_expr(std::string_view text, const CosetSetup& setup) {
  Expr e = parse_expr(text);
  for (const auto& id : identifiers(e)) resolve_identifier(setup, id);
  return e;
}

std::string render(const Expr& e) {
  std::string out;
  render_into(e, out);
  return out;
}

std::vector<std::string> identifiers(const Expr& e) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_identifiers(e, out, seen);
  return out;
}

Vector resolve_identifier(const CosetSetup& setup, std::string_view name) {
  if (auto i = setup.adapted().variables().index_of(name)) return unit_vector(setup.dim(), *i);
  if (auto i = setup.algebra().variables().index_of(name)) return setup.to_adapted(unit_vector(setup.dim(), *i));
  throw Error(ErrorCode::kUnknownIdentifier, "unknown identifier '" + std::string(name) + "'");
}

PbwElement to_pbw(const CosetSetup& setup, const Expr& e) {
  const Enveloping& ring = setup.ring();
  return evaluate<PbwElement>(
      e, [&](const Rational& q) { return PbwElement::scalar(ring, q); },
      [&](const std::string& id) { return PbwElement::linear(ring, resolve_identifier(setup, id)); },
      [](const PbwElement& a, const PbwElement& b) { return u_mul(a, b); });
}

SymPoly to_sym(const CosetSetup& setup, const Expr& e) {
  const Variables& vars = setup.adapted().variables();
  return evaluate<SymPoly>(
      e, [&](const Rational& q) { return SymPoly::constant(vars, q); },
      [&](const std::string& id) { return SymPoly::linear(vars, resolve_identifier(setup, id)); },
      [](const SymPoly& a, const SymPoly& b) { return a * b; });
}

SymPoly to_sym_m(const CosetSetup& setup, const Expr& e) {
  SymPoly full = to_sym(setup, e);
  SymPoly out(setup.m_variables());
  for (const auto& [exps, c] : full.terms()) {
    for (std::size_t k = setup.r(); k < exps.size(); ++k)
      if (exps[k] != 0)
        throw Error(ErrorCode::kInvalidInput, "'" + render(e) + "' is not a polynomial over m");
    out.add(Exponents(exps.begin(), exps.begin() + static_cast<std::ptrdiff_t>(setup.r())), c);
  }
  return out;
}

}  // namespace invdiff

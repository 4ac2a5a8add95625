#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "invdiff/error.hpp"
#include "invdiff/expr.hpp"

using namespace invdiff;
using namespace invdiff::testing;

namespace {

std::string data(const char* file) { return std::string(INVDIFF_TEST_DATA_DIR) + "/" + file; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInvalidInput;
}

Expr random_expr(std::mt19937& rng, int depth) {
  static const char* names[] = {"H", "E", "F", "K"};
  std::uniform_int_distribution<int> kind(depth > 0 ? 0 : 0, depth > 0 ? 4 : 1);
  std::uniform_int_distribution<int> small(0, 9), count(2, 3), pick(0, 3), sign(0, 1);
  switch (kind(rng)) {
    case 0: {
      Rational q = small(rng);
      q /= small(rng) + 1;
      return Expr::make_number(q);
    }
    case 1:
      return Expr::make_ident(names[pick(rng)]);
    case 2: {
      std::vector<Expr> terms;
      std::vector<int> signs;
      for (int k = count(rng); k > 0; --k) {
        terms.push_back(random_expr(rng, depth - 1));
        signs.push_back(sign(rng) ? 1 : -1);
      }
      return Expr::make_sum(std::move(terms), std::move(signs));
    }
    case 3: {
      std::vector<Expr> factors;
      for (int k = count(rng); k > 0; --k) factors.push_back(random_expr(rng, depth - 1));
      return Expr::make_product(std::move(factors));
    }
    default:
      return Expr::make_power(random_expr(rng, depth - 1), static_cast<unsigned>(small(rng) % 4));
  }
}

}  // namespace

TEST_CASE("parser examples") {
  Expr e = parse_expr("2*E*F + H^2 - 3");
  REQUIRE(e.kind == Expr::Kind::kSum);
  CHECK(e.operands.size() == 3);
  CHECK(e.signs == std::vector<int>{1, 1, -1});
  REQUIRE(e.operands[0].kind == Expr::Kind::kProduct);
  CHECK(e.operands[0].operands[1].name == "E");
  CHECK(e.operands[0].operands[2].name == "F");

  Expr w = parse_expr("H^2*E");
  REQUIRE(w.kind == Expr::Kind::kProduct);
  CHECK(w.operands[0].kind == Expr::Kind::kPower);
  CHECK(w.operands[0].exponent == 2);

  CHECK(render(parse_expr(" 1/2 * H ^ 2+(E - F)*K ")) == "1/2*H^2 + (E - F)*K");
  CHECK(render(parse_expr("-H + 2")) == "-H + 2");
  CHECK(render(parse_expr("(H*E)*F")) == "(H*E)*F");
}

TEST_CASE("parser errors carry byte offsets") {
  for (auto [text, offset] : {std::pair{"H + * E", 4}, std::pair{"(H + E", 6}, std::pair{"H^", 2}, std::pair{"1/0", 0},
                              std::pair{"H $", 2}, std::pair{"", 0}}) {
    CAPTURE(text);
    try {
      parse_expr(text);
      FAIL("expected a syntax error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kSyntax);
      CHECK(std::string(e.what()).find("byte " + std::to_string(offset)) != std::string::npos);
    }
  }
}

TEST_CASE("identifiers resolve against the setup") {
  CosetSetup s = preset("sl2r_horocycle");
  CHECK(code_of([&] { parse_expr("Q*W", s); }) == ErrorCode::kUnknownIdentifier);
  CHECK(resolve_identifier(s, "K") == vec({0, 1, 0}));
  CHECK(resolve_identifier(s, "F") == vec({0, -1, 1}));
  CHECK(to_pbw(s, parse_expr("E*H", s)) == to_pbw(s, parse_expr("H*E - 2*E", s)));
  CHECK(to_sym(s, parse_expr("E*H", s)) == to_sym(s, parse_expr("H*E", s)));
  CHECK(code_of([&] { to_sym_m(s, parse_expr("H*E", s)); }) == ErrorCode::kInvalidInput);
}

TEST_CASE("render and parse round trip") {
  std::mt19937 rng(77);
  for (int t = 0; t < 300; ++t) {
    Expr e = random_expr(rng, 3);
    std::string text = render(e);
    CAPTURE(text);
    CHECK(render(parse_expr(text)) == text);
  }
}

TEST_CASE("every preset loads and validates") {
  CHECK(all_presets().size() == 7);
  for (const auto& name : all_presets()) {
    CAPTURE(name);
    CosetSetup s = preset(name);
    CHECK(check_structure(s.algebra()).valid());
    CHECK(check_structure(s.adapted()).valid());
    CHECK(is_subalgebra(s.algebra(), s.h()));
    CHECK(check_character(s));
    CHECK(s.name() == name);
  }
  CosetSetup h = preset("sl2r_horocycle");
  CHECK(h.dim() == 3);
  CHECK(h.r() == 2);
  CHECK(h.adapted().variables().names() == std::vector<std::string>{"H", "K", "E"});
  CosetSetup sl3 = preset("sl3r_horocycle");
  CHECK(sl3.dim() == 8);
  CHECK(sl3.r() == 5);
  CHECK(sl3.component_reps().size() == 3);
}

TEST_CASE("setup file errors") {
  try {
    load_setup(data("corrupted_sl2.json"));
    FAIL("expected invalid structure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidStructure);
    CHECK(std::string(e.what()).find("(H,E,F)") != std::string::npos);
  }
  CHECK(code_of([] { load_setup(data("float_constant.json")); }) == ErrorCode::kInvalidInput);
  CHECK(code_of([] { load_setup(data("not_json.json")); }) == ErrorCode::kSyntax);
  CHECK(code_of([] { load_setup("no_such_preset_or_file"); }) == ErrorCode::kInvalidInput);

  CosetSetup borel = load_setup(data("sl2_no_m.json"));
  CHECK(borel.m_auto_selected());
  CHECK(borel.r() == 1);
  CHECK(borel.chi() == Vector{1, 0});
}

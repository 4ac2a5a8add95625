#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "invdiff/error.hpp"

using namespace invdiff;
using namespace invdiff::testing;

namespace {

// sl2 horocycle built by hand: basis (H, E, F), h = span{E}, m = span{H, E-F}.
CosetSetup horocycle(Vector chi = {}) {
  LieAlgebra g = sl2();
  Subspace h = Subspace::span(g, {vec({0, 1, 0})});
  Subspace m = Subspace::span(g, {vec({1, 0, 0}), vec({0, 1, -1})}, {"H", "K"});
  return CosetSetup::create(g, h, m, std::move(chi));
}

}  // namespace

TEST_CASE("check_structure on sl2 and perturbations") {
  CHECK(check_structure(sl2()).valid());
  CHECK(check_structure(LieAlgebra::abelian({"a", "b", "c"})).valid());

  // [H,E] = 2E + F: the Jacobi sum still vanishes (recorded as a deliberate oracle).
  LieAlgebra tweaked = LieAlgebra::create({"H", "E", "F"}, {{0, 1, vec({0, 2, 1})}, {0, 2, vec({0, 0, -2})}, {1, 2, vec({1, 0, 0})}});
  CHECK(check_structure(tweaked).valid());

  // [H,E] = 2E + H breaks Jacobi on (H,E,F); hand expansion gives residual -2F.
  LieAlgebra broken = LieAlgebra::create({"H", "E", "F"}, {{0, 1, vec({1, 2, 0})}, {0, 2, vec({0, 0, -2})}, {1, 2, vec({1, 0, 0})}});
  auto report = check_structure(broken);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].i == 0);
  CHECK(report.violations[0].j == 1);
  CHECK(report.violations[0].k == 2);
  CHECK(report.violations[0].residual == vec({0, 0, -2}));
}

TEST_CASE("structure constants are antisymmetric by construction") {
  LieAlgebra g = LieAlgebra::create({"A", "B"}, {{1, 0, vec({1, 0})}});
  CHECK(g.basis_bracket(0, 1) == vec({-1, 0}));
  CHECK(g.basis_bracket(1, 0) == vec({1, 0}));
  CHECK_THROWS_AS(LieAlgebra::create({"A", "B"}, {{0, 0, vec({1, 0})}}), Error);
  CHECK_THROWS_AS(LieAlgebra::create({"A", "B"}, {{0, 1, vec({1, 0})}, {1, 0, vec({1, 0})}}), Error);
  CHECK_THROWS_AS(LieAlgebra::create({"A", "A"}, {}), Error);
  CHECK_THROWS_AS(LieAlgebra::create({"1A"}, {}), Error);
}

TEST_CASE("bracket examples") {
  LieAlgebra g = sl2();
  CHECK(g.bracket(vec({1, 0, 0}), vec({0, 1, 0})) == vec({0, 2, 0}));
  CHECK(is_zero(g.bracket(vec({3, -1, 2}), vec({3, -1, 2}))));
  LieAlgebra s = so3();
  CHECK(s.bracket(vec({1, 1, 0}), vec({0, 1, 0})) == vec({0, 0, 1}));
  CHECK_THROWS_AS(g.bracket(vec({1, 0}), vec({1, 0, 0})), Error);
}

TEST_CASE("bracket is bilinear, antisymmetric and satisfies Jacobi on random vectors") {
  std::mt19937 rng(11);
  for (const LieAlgebra& g : {sl2(), so3(), heisenberg()}) {
    for (int t = 0; t < 30; ++t) {
      Vector x = random_vector(rng, 3), y = random_vector(rng, 3), z = random_vector(rng, 3);
      Rational a = small_rational(rng);
      CHECK(g.bracket(x, y) == scale(Rational(-1), g.bracket(y, x)));
      CHECK(g.bracket(add(scale(a, x), z), y) == add(scale(a, g.bracket(x, y)), g.bracket(z, y)));
      Vector jac = g.bracket(g.bracket(x, y), z);
      axpy(1, g.bracket(g.bracket(y, z), x), jac);
      axpy(1, g.bracket(g.bracket(z, x), y), jac);
      CHECK(is_zero(jac));
    }
  }
}

TEST_CASE("is_subalgebra") {
  LieAlgebra g = sl2();
  CHECK(is_subalgebra(g, Subspace::span(g, {vec({0, 1, 0})})));
  CHECK(is_subalgebra(g, Subspace::span(g, {vec({1, 0, 0}), vec({0, 1, 0})})));
  CHECK_FALSE(is_subalgebra(g, Subspace::span(g, {vec({0, 1, 0}), vec({0, 0, 1})})));
  CHECK_THROWS_AS(Subspace::span(g, {vec({1, 0, 0}), vec({2, 0, 0})}), Error);
}

TEST_CASE("make_setup builds the adapted order") {
  CosetSetup s = horocycle();
  CHECK(s.r() == 2);
  CHECK(s.adapted().variables().names() == std::vector<std::string>{"H", "K", "E"});
  CHECK_FALSE(s.m_auto_selected());

  LieAlgebra g = sl2();
  Subspace h = Subspace::span(g, {vec({0, 1, 0})});
  Subspace overlap = Subspace::span(g, {vec({0, 1, 0}), vec({1, 0, 0})});
  try {
    CosetSetup::create(g, h, overlap, {});
    FAIL("expected not-complementary");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotComplementary);
  }

  Subspace b = Subspace::span(g, {vec({1, 0, 0}), vec({0, 1, 0})});
  CosetSetup borel = CosetSetup::create(g, b, std::nullopt, {1, 0});
  CHECK(borel.m_auto_selected());
  CHECK(borel.r() == 1);

  try {
    CosetSetup::create(g, Subspace::span(g, {vec({0, 1, 0}), vec({0, 0, 1})}), std::nullopt, {});
    FAIL("expected not-a-subalgebra");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotASubalgebra);
  }
  try {
    CosetSetup::create(g, b, std::nullopt, {0, 1});
    FAIL("expected invalid character");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidCharacter);
  }
}

TEST_CASE("component representatives are validated") {
  LieAlgebra g = sl2();
  Subspace h = Subspace::span(g, {vec({0, 1, 0})});
  Subspace m = Subspace::span(g, {vec({1, 0, 0}), vec({0, 1, -1})}, {"H", "K"});
  CHECK_NOTHROW(CosetSetup::create(g, h, m, {}, {{"Ad(-I)", Matrix::identity(3)}}));

  Matrix scale2 = Matrix::identity(3);
  scale2(0, 0) = 2;
  try {
    CosetSetup::create(g, h, m, {}, {{"bad", scale2}});
    FAIL("expected not-an-automorphism");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAnAutomorphism);
  }

  // The Weyl flip H -> -H, E <-> F is an automorphism but does not preserve h.
  Matrix flip(3, 3);
  flip(0, 0) = -1;
  flip(2, 1) = 1;
  flip(1, 2) = 1;
  try {
    CosetSetup::create(g, h, m, {}, {{"flip", flip}});
    FAIL("expected not-an-automorphism");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAnAutomorphism);
  }

  // Ad(diag(t, 1/t)) scales E by t^2; with chi(E) = 1 it must not be accepted.
  Matrix ad_t = Matrix::identity(3);
  ad_t(1, 1) = 4;
  ad_t(2, 2) = Rational(1, 4);
  CHECK_NOTHROW(CosetSetup::create(g, h, m, {}, {{"Ad(t)", ad_t}}));
  try {
    CosetSetup::create(g, h, m, {1}, {{"Ad(t)", ad_t}});
    FAIL("expected chi not fixed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotAnAutomorphism);
  }
}

TEST_CASE("sigma on the horocycle") {
  CosetSetup s = horocycle();
  CHECK(sigma(s, vec({1, 0, 0})) == vec({1, 0}));
  CHECK(sigma(s, vec({0, 1, 0})) == vec({0, 0}));
  CHECK(sigma(s, vec({0, 0, 1})) == vec({0, -1}));
}

TEST_CASE("sigma is a projection onto m along h") {
  std::mt19937 rng(5);
  for (const auto& name : all_presets()) {
    CosetSetup s = preset(name);
    for (const auto& v : s.m().basis()) {
      Vector c = sigma(s, v);
      c.resize(s.dim());
      CHECK(s.to_original(c) == v);
    }
    for (const auto& v : s.h().basis()) CHECK(is_zero(sigma(s, v)));
    for (int t = 0; t < 10; ++t) {
      Vector x = random_vector(rng, s.dim());
      Vector c = sigma(s, x);
      c.resize(s.dim());
      Vector back = s.to_original(c);
      CHECK(sigma(s, back) == sigma(s, x));
      CHECK(s.to_original(s.to_adapted(x)) == x);
    }
    CHECK(inverse(s.change_of_basis()).has_value());
  }
}

TEST_CASE("check_character examples") {
  LieAlgebra g = sl2();
  Subspace b = Subspace::span(g, {vec({1, 0, 0}), vec({0, 1, 0})});
  CHECK(check_character(g, b, {0, 0}));
  CHECK(check_character(g, b, {1, 0}));
  CHECK_FALSE(check_character(g, b, {0, 1}));
  CHECK(check_character(horocycle()));
}

TEST_CASE("invariant complement") {
  LieAlgebra g = sl2();
  auto none = invariant_complement(g, Subspace::span(g, {vec({0, 1, 0})}));
  CHECK_FALSE(none.feasible());
  CHECK(none.certificate.find("0 = ") != std::string::npos);

  LieAlgebra s = so3();
  Subspace z = Subspace::span(s, {vec({0, 0, 1})});
  auto w = invariant_complement(s, z);
  REQUIRE(w.feasible());
  CHECK(same_span(3, w.complement->basis(), {vec({1, 0, 0}), vec({0, 1, 0})}));

  auto full = invariant_complement(g, Subspace::span(g, {vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}));
  REQUIRE(full.feasible());
  CHECK(full.complement->dim() == 0);

  Subspace k = Subspace::span(g, {vec({0, 1, -1})});
  auto hyp = invariant_complement(g, k);
  REQUIRE(hyp.feasible());
  CHECK(same_span(3, hyp.complement->basis(), {vec({1, 0, 0}), vec({0, 1, 1})}));
}

TEST_CASE("invariant complements are complementary and ad(h)-stable") {
  for (const auto& name : all_presets()) {
    CosetSetup s = preset(name);
    auto res = invariant_complement(s.algebra(), s.h());
    if (!res.feasible()) continue;
    std::vector<Vector> all = res.complement->basis();
    all.insert(all.end(), s.h().basis().begin(), s.h().basis().end());
    CHECK(rank_of_columns(s.dim(), all) == s.dim());
    for (const auto& x : s.h().basis())
      for (const auto& w : res.complement->basis()) CHECK(res.complement->contains(s.algebra().bracket(x, w)));
  }
}

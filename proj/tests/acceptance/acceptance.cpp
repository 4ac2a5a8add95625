// Acceptance suite: one PASS/FAIL line per criterion, exact rational
// equality throughout, wall-clock limits enforced in code.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fixtures.hpp"
#include "invdiff/expr.hpp"
#include "invdiff_cli/cli.hpp"
#include "properties.hpp"

using namespace invdiff;
using namespace invdiff::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> body;
};

nlohmann::json run_json(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "--json");
  std::ostringstream out, err;
  code = cli::run_command(args, out, err);
  if (code == cli::kExitInputError) return nlohmann::json{{"error", err.str()}};
  return nlohmann::json::parse(out.str());
}

SymPoly m_poly(const CosetSetup& s, const char* text) { return to_sym_m(s, parse_expr(text, s)); }

Outcome ac1() {
  Outcome o;
  CosetSetup s = preset("sl2r_horocycle");
  for (int d = 0; d <= 4; ++d) {
    int code = 0;
    auto doc = run_json({"--setup", "sl2r_horocycle", "invariants", "--degree", std::to_string(d)}, code);
    std::string expected = d == 0 ? "1" : d == 1 ? "H" : "H^" + std::to_string(d);
    o.require(code == 0, "invariants exit code " + std::to_string(code) + " at degree " + std::to_string(d));
    o.require(doc.value("dimension", -1) == 1, "dimension != 1 at degree " + std::to_string(d));
    o.require(doc.contains("basis") && doc["basis"].size() == 1 && doc["basis"][0] == expected,
              "basis is not {" + expected + "}");
    auto lib = imod_basis(s, d).polys;
    o.require(lib.size() == 1 && lib[0] == SymPoly::monomial(s.m_variables(), {d, 0}), "library basis differs from H^d");
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  for (auto [name, expect_reductive] : {std::pair{"sl2r_horocycle", false}, std::pair{"sl2r_GN", false},
                                        std::pair{"sl3r_horocycle", false}, std::pair{"so3_sphere", true},
                                        std::pair{"sl2r_hyperbolic", true}}) {
    auto start = std::chrono::steady_clock::now();
    int code = 0;
    auto doc = run_json({"--setup", name, "reductive"}, code);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < 5.0, std::string(name) + " took longer than 5 s");
    o.require(doc.value("reductive", !expect_reductive) == expect_reductive, std::string(name) + ": wrong verdict");
    o.require(code == (expect_reductive ? 0 : 1), std::string(name) + ": wrong exit code");
    if (expect_reductive) {
      o.require(doc.contains("invariant_complement") && doc["invariant_complement"].size() == 2,
                std::string(name) + ": complement missing");
    } else {
      o.require(doc.contains("certificate") && !doc["certificate"].get<std::string>().empty(),
                std::string(name) + ": certificate missing");
    }
  }
  return o;
}

Outcome ac3() {
  Outcome o;
  CosetSetup s = preset("sl2r_horocycle");
  o.require(check_lambda_imod_in_dmod(s, 4), "lambda(I_mod) not in Dmod up to degree 4");
  o.require(check_lambda_imod_equality(s, 3) == std::optional<bool>(true), "lambda(I_mod) != lambda(S(m)) cap Dmod up to degree 3");
  o.require(check_commutativity(s, 4), "commutator outside the ideal up to degree 4");
  return o;
}

Outcome ac4() {
  Outcome o;
  CosetSetup s = preset("sl2c_real_GN");
  auto d1 = imod_basis(s, 1).polys;
  auto d2 = imod_basis(s, 2).polys;
  o.require(d1.size() == 2, "degree-1 dimension " + std::to_string(d1.size()) + " != 2");
  o.require(d2.size() == 3, "degree-2 dimension " + std::to_string(d2.size()) + " != 3");
  // The spans must be exactly S^1 and S^2 of {H, Hi}.
  auto b1 = monomial_basis(s.r(), 1, BasisMode::kHomogeneous);
  auto b2 = monomial_basis(s.r(), 2, BasisMode::kHomogeneous);
  auto coords = [&](const std::vector<SymPoly>& ps, const std::vector<Exponents>& b) {
    std::vector<Vector> out;
    for (const auto& p : ps) out.push_back(coordinates(p, b));
    return out;
  };
  SymPoly h = m_poly(s, "H"), hi = m_poly(s, "Hi");
  o.require(same_span(b1.size(), coords(d1, b1), coords({h, hi}, b1)), "degree-1 span is not span{H, Hi}");
  o.require(same_span(b2.size(), coords(d2, b2), coords({h * h, h * hi, hi * hi}, b2)), "degree-2 span is not S^2{H, Hi}");
  o.require(check_commutativity(s, 2), "commutator outside the ideal up to degree 2");
  return o;
}

Outcome ac5() {
  Outcome o;
  CosetSetup s = preset("sl2r_horocycle");
  // Hand reduction: in the order (H, K = E - F, E) the Casimir is
  // 1/2 H^2 + H + 2 E^2 - 2 K E, and both E-trailing monomials strip to 0.
  PbwElement casimir = to_pbw(s, parse_expr("1/2*H^2 + E*F + F*E", s));
  o.require(casimir == to_pbw(s, parse_expr("1/2*H^2 + H + 2*E^2 - 2*K*E", s)), "Casimir normal form differs from hand value");
  PbwElement expected = PbwElement::monomial(s.ring(), {2, 0, 0}, Rational(1, 2)) + PbwElement::generator(s.ring(), 0);
  o.require(project_mod_ideal(s, casimir) == expected, "projection is " + to_string(project_mod_ideal(s, casimir)));
  return o;
}

Outcome ac6() {
  Outcome o;
  std::mt19937 rng(20240601);
  for (const LieAlgebra& g : {sl2(), so3(), heisenberg()}) {
    auto t = lambda_suite(g, rng, 200, 20);
    o.require(t.ok(), t.first_failure);
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  for (const auto& name : all_presets()) {
    CosetSetup s = preset(name);
    for (int m = 0; m <= 3; ++m) {
      DirectSumReport r = verify_direct_sum(s, m);
      o.require(r.pass && r.total_rank == r.expected_total && r.ideal_rank + r.expected_m == r.expected_total,
                name + " fails at m=" + std::to_string(m));
    }
  }
  return o;
}

Outcome ac8() {
  Outcome o;
  std::mt19937 rng(20240602);
  for (const auto& name : all_presets()) {
    auto t = algebra_laws(preset(name), rng, 100, 3);
    o.require(t.ok(), name + ": " + t.first_failure);
  }
  return o;
}

Outcome ac9() {
  Outcome o;
  o.require(laplace_generation_check(preset("so3_sphere"), {1, 1}, 4), "so3_sphere not generated by X^2 + Y^2");
  o.require(laplace_generation_check(preset("sl2r_hyperbolic"), {1, 1}, 2), "sl2r_hyperbolic not generated by H^2 + P^2");
  return o;
}

Outcome ac10() {
  Outcome o;
  std::mt19937 rng(20240603);
  for (const auto& name : all_presets()) {
    auto t = leading_term_laws(preset(name), rng, 100, 3);
    o.require(t.ok(), name + ": " + t.first_failure);
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "horocycle invariants are H^d, d = 0..4", 1.0, ac1},
      {"AC2", "reductivity verdicts on five presets", 25.0, ac2},
      {"AC3", "horocycle: lambda(I_mod) in Dmod, equality, commutativity", 10.0, ac3},
      {"AC4", "sl(2,C) G/N: I_mod = S(H, Hi) in degrees 1, 2 and commutativity", 60.0, ac4},
      {"AC5", "Casimir reduces to 1/2*H^2 + H", 1.0, ac5},
      {"AC6", "symmetrization round trip, equivariance, powers", 30.0, ac6},
      {"AC7", "direct sum dimensions for m = 0..3 on all presets", 60.0, ac7},
      {"AC8", "Dmod algebra laws on random pairs", 60.0, ac8},
      {"AC9", "Laplace generation on sphere and hyperbolic plane", 10.0, ac9},
      {"AC10", "leading-term and degree-drop laws", 60.0, ac10},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs >= c.limit_seconds) {
      o.pass = false;
      o.detail = "time limit exceeded";
    }
    if (!o.pass) ++failures;
    std::cout << c.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  [" << std::fixed
              << std::setprecision(3) << secs << " s, limit " << std::setprecision(0) << c.limit_seconds << " s]";
    if (!o.pass) std::cout << "  " << o.detail;
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

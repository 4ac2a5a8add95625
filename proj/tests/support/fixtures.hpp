#pragma once

#include <random>
#include <string>
#include <vector>

#include "invdiff/coset_ops.hpp"
#include "invdiff/coset_setup.hpp"
#include "invdiff/enveloping.hpp"
#include "invdiff/lie_algebra.hpp"
#include "invdiff/setup_file.hpp"
#include "invdiff/sym_poly.hpp"

namespace invdiff::testing {

inline Vector vec(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

inline std::size_t index_in(const std::vector<std::string>& names, const std::string& n) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == n) return i;
  return names.size();
}

// sl2 with [H,E] = 2E, [H,F] = -2F, [E,F] = H in any basis order.
inline LieAlgebra sl2(std::vector<std::string> order = {"H", "E", "F"}) {
  const std::size_t n = 3, h = index_in(order, "H"), e = index_in(order, "E"), f = index_in(order, "F");
  auto unit = [&](std::size_t k, int c) {
    Vector v = zero_vector(n);
    v[k] = c;
    return v;
  };
  return LieAlgebra::create(order, {{h, e, unit(e, 2)}, {h, f, unit(f, -2)}, {e, f, unit(h, 1)}});
}

inline LieAlgebra so3() {
  return LieAlgebra::create({"X", "Y", "Z"}, {{0, 1, vec({0, 0, 1})}, {1, 2, vec({1, 0, 0})}, {2, 0, vec({0, 1, 0})}});
}

inline LieAlgebra heisenberg() { return LieAlgebra::create({"X", "Y", "Z"}, {{0, 1, vec({0, 0, 1})}}); }

inline CosetSetup preset(const std::string& name) { return load_setup(name); }

inline const std::vector<std::string>& all_presets() {
  static const std::vector<std::string> names = preset_names();
  return names;
}

inline Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  Rational q = num(rng);
  q /= den(rng);
  return q;
}

inline Vector random_vector(std::mt19937& rng, std::size_t n) {
  Vector v(n);
  for (auto& x : v) {
    x = small_rational(rng);
  }
  return v;
}

inline Exponents random_exponents(std::mt19937& rng, std::size_t n, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  Exponents e(n, 0);
  if (n == 0) return e;
  int d = deg(rng);
  for (int k = 0; k < d; ++k) ++e[var(rng)];
  return e;
}

inline SymPoly random_poly(std::mt19937& rng, const Variables& vars, int max_degree, int terms = 4) {
  SymPoly p(vars);
  for (int t = 0; t < terms; ++t) {
    Rational c = small_rational(rng);
    p.add(random_exponents(rng, vars.size(), max_degree), c);
  }
  return p;
}

inline SymPoly random_homogeneous(std::mt19937& rng, const Variables& vars, int degree, int terms = 4) {
  SymPoly p(vars);
  std::uniform_int_distribution<std::size_t> var(0, vars.size() - 1);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars.size(), 0);
    for (int k = 0; k < degree; ++k) ++e[var(rng)];
    Rational c = small_rational(rng);
    p.add(e, c);
  }
  return p;
}

inline PbwElement random_pbw(std::mt19937& rng, const Enveloping& ring, int max_degree, int terms = 4) {
  PbwElement u(ring);
  for (int t = 0; t < terms; ++t) {
    Rational c = small_rational(rng);
    u.add(random_exponents(rng, ring.dim(), max_degree), c);
  }
  return u;
}

}  // namespace invdiff::testing

#include "invdiff/sym_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "invdiff/error.hpp"

namespace invdiff {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return b < a;
}

void add_term(TermMap& terms, const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

void add_scaled(TermMap& dst, const TermMap& src, const Rational& c) {
  if (c == 0) return;
  for (const auto& [e, v] : src) add_term(dst, e, c * v);
}

int max_degree(const TermMap& terms) {
  // Highest-first ordering: the first key has the largest degree.
  return terms.empty() ? kDegreeOfZero : total_degree(terms.begin()->first);
}

// --- SymPoly --------------------------------------------------------------

SymPoly SymPoly::constant(Variables vars, const Rational& c) {
  SymPoly p(std::move(vars));
  p.add(Exponents(p.num_variables(), 0), c);
  return p;
}

SymPoly SymPoly::variable(Variables vars, std::size_t i) {
  if (i >= vars.size()) throw Error(ErrorCode::kIndexOutOfRange, "variable index out of range");
  Exponents e(vars.size(), 0);
  e[i] = 1;
  return monomial(std::move(vars), std::move(e));
}

SymPoly SymPoly::linear(Variables vars, const Vector& coeffs) {
  if (coeffs.size() != vars.size()) throw Error(ErrorCode::kDimensionMismatch, "linear form has wrong length");
  SymPoly p(std::move(vars));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add(e, coeffs[i]);
  }
  return p;
}

SymPoly SymPoly::monomial(Variables vars, Exponents e, const Rational& c) {
  if (e.size() != vars.size()) throw Error(ErrorCode::kDimensionMismatch, "exponent vector has wrong length");
  if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
    throw Error(ErrorCode::kInvalidInput, "negative exponent");
  SymPoly p(std::move(vars));
  p.add(e, c);
  return p;
}

Rational SymPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

SymPoly SymPoly::homogeneous_part(int d) const {
  SymPoly out(vars_);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) == d) out.terms_.emplace(e, c);
  return out;
}

bool SymPoly::is_homogeneous() const {
  return terms_.empty() || total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

void SymPoly::add(const Exponents& e, const Rational& c) {
  if (e.size() != vars_.size()) throw Error(ErrorCode::kDimensionMismatch, "exponent vector has wrong length");
  add_term(terms_, e, c);
}

void SymPoly::require_same_parent(const SymPoly& other) const {
  if (!(vars_ == other.vars_)) throw Error(ErrorCode::kParentMismatch, "polynomials live over different variables");
}

SymPoly& SymPoly::operator+=(const SymPoly& rhs) {
  require_same_parent(rhs);
  add_scaled(terms_, rhs.terms_, Rational(1));
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& rhs) {
  require_same_parent(rhs);
  add_scaled(terms_, rhs.terms_, Rational(-1));
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  a.require_same_parent(b);
  SymPoly out(a.vars_);
  Exponents e(a.num_variables());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      add_term(out.terms_, e, ca * cb);
    }
  return out;
}

SymPoly SymPoly::pow(int k) const {
  if (k < 0) throw Error(ErrorCode::kInvalidInput, "negative power");
  SymPoly out = constant(vars_, 1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

std::string to_string(const SymPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    bool constant = total_degree(e) == 0;
    bool need_star = false;
    if (a != 1 || constant) {
      os << to_string(a);
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << p.variables().name(i);
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

namespace {

void homogeneous_rec(std::size_t vars, int remaining, std::size_t pos, Exponents& cur, std::vector<Exponents>& out) {
  if (pos + 1 == vars) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[pos] = k;
    homogeneous_rec(vars, remaining - k, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Exponents> monomial_basis(std::size_t vars, int degree, BasisMode mode) {
  if (degree < 0) throw Error(ErrorCode::kInvalidInput, "degree must be nonnegative");
  std::vector<Exponents> out;
  int lo = mode == BasisMode::kHomogeneous ? degree : 0;
  for (int d = lo; d <= degree; ++d) {
    if (vars == 0) {
      if (d == 0) out.emplace_back();
      continue;
    }
    Exponents cur(vars, 0);
    homogeneous_rec(vars, d, 0, cur, out);
  }
  return out;
}

SymPoly ad_derivation(const LieAlgebra& alg, const Vector& x, const SymPoly& p) {
  const std::size_t n = alg.dim();
  if (p.num_variables() != n) throw Error(ErrorCode::kParentMismatch, "polynomial does not live over this algebra");
  if (x.size() != n) throw Error(ErrorCode::kDimensionMismatch, "vector has wrong length");
  // [x, X_i] for every basis element, sparse.
  std::vector<SparseVector> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = alg.bracket(x, unit_vector(n, i));
    for (std::size_t k = 0; k < n; ++k)
      if (v[k] != 0) image[i].emplace_back(k, v[k]);
  }
  SymPoly out(p.variables());
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0 || image[i].empty()) continue;
      Exponents base = e;
      base[i] -= 1;
      Rational f = c * e[i];
      for (const auto& [k, s] : image[i]) {
        Exponents t = base;
        t[k] += 1;
        out.add(t, f * s);
      }
    }
  return out;
}

SymPoly ad_group(const LieAlgebra& alg, const Matrix& a, const SymPoly& p) {
  const std::size_t n = alg.dim();
  if (p.num_variables() != n) throw Error(ErrorCode::kParentMismatch, "polynomial does not live over this algebra");
  if (a.rows() != n || a.cols() != n) throw Error(ErrorCode::kDimensionMismatch, "matrix has wrong shape");
  if (!inverse(a)) throw Error(ErrorCode::kSingularMatrix, "automorphism matrix is singular");

  // powers[i][k] = (A X_i)^k, grown on demand.
  std::vector<std::vector<SymPoly>> powers(n);
  auto power = [&](std::size_t i, int k) -> const SymPoly& {
    auto& row = powers[i];
    if (row.empty()) {
      row.push_back(SymPoly::constant(p.variables(), 1));
      row.push_back(SymPoly::linear(p.variables(), a.column(i)));
    }
    while (static_cast<int>(row.size()) <= k) row.push_back(row.back() * row[1]);
    return row[static_cast<std::size_t>(k)];
  };

  SymPoly out(p.variables());
  for (const auto& [e, c] : p.terms()) {
    SymPoly term = SymPoly::constant(p.variables(), c);
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

Vector coordinates(const SymPoly& p, const std::vector<Exponents>& basis) {
  std::map<Exponents, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
  Vector v = zero_vector(basis.size());
  for (const auto& [e, c] : p.terms()) {
    auto it = index.find(e);
    if (it == index.end()) throw Error(ErrorCode::kInvalidInput, "term outside the coordinate basis");
    v[it->second] = c;
  }
  return v;
}

SymPoly from_coordinates(const Variables& vars, const std::vector<Exponents>& basis, const Vector& coords) {
  if (coords.size() != basis.size()) throw Error(ErrorCode::kDimensionMismatch, "coordinate vector has wrong length");
  SymPoly p(vars);
  for (std::size_t k = 0; k < basis.size(); ++k) p.add(basis[k], coords[k]);
  return p;
}

}  // namespace invdiff

#include "invdiff/lie_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "invdiff/error.hpp"

namespace invdiff {

// --- Variables ------------------------------------------------------------

Variables::Variables() : names_(std::make_shared<const std::vector<std::string>>()) {}

Variables::Variables(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

std::optional<std::size_t> Variables::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

Variables Variables::prefix(std::size_t count) const {
  if (count > size()) throw Error(ErrorCode::kIndexOutOfRange, "variable prefix too long");
  return Variables(std::vector<std::string>(names_->begin(), names_->begin() + static_cast<std::ptrdiff_t>(count)));
}

bool Variables::operator==(const Variables& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin(), s.end(),
                     [&](char c) { return alpha(c) || std::isdigit(static_cast<unsigned char>(c)); });
}

// --- LieAlgebra -----------------------------------------------------------

struct LieAlgebra::Impl {
  Variables vars;
  std::map<std::pair<std::size_t, std::size_t>, Vector> constants;  // i < j only
  std::vector<SparseVector> table;                                    // n*n, derived
};

LieAlgebra LieAlgebra::create(std::vector<std::string> names, const std::vector<BracketEntry>& entries) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorCode::kInvalidInput, "Lie algebra must have positive dimension");
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (!is_identifier(name)) throw Error(ErrorCode::kInvalidInput, "basis name '" + name + "' is not an identifier");
    if (!seen.insert(name).second) throw Error(ErrorCode::kInvalidInput, "duplicate basis name '" + name + "'");
  }

  auto impl = std::make_shared<Impl>();
  impl->vars = Variables(std::move(names));
  for (const auto& e : entries) {
    if (e.i >= n || e.j >= n) throw Error(ErrorCode::kIndexOutOfRange, "bracket index out of range");
    if (e.value.size() != n) throw Error(ErrorCode::kDimensionMismatch, "bracket value has wrong length");
    if (e.i == e.j) {
      if (!is_zero(e.value))
        throw Error(ErrorCode::kInvalidStructure, "[X,X] must vanish for " + impl->vars.name(e.i));
      continue;
    }
    auto key = std::minmax(e.i, e.j);
    Vector value = e.i < e.j ? e.value : scale(Rational(-1), e.value);
    if (impl->constants.count(key))
      throw Error(ErrorCode::kInvalidInput, "bracket [" + impl->vars.name(key.first) + "," +
                                                impl->vars.name(key.second) + "] given twice");
    if (!is_zero(value)) impl->constants.emplace(key, std::move(value));
  }

  impl->table.assign(n * n, {});
  for (const auto& [key, value] : impl->constants) {
    auto [i, j] = key;
    for (std::size_t k = 0; k < n; ++k) {
      if (value[k] == 0) continue;
      impl->table[i * n + j].emplace_back(k, value[k]);
      impl->table[j * n + i].emplace_back(k, -value[k]);
    }
  }
  return LieAlgebra(std::move(impl));
}

LieAlgebra LieAlgebra::abelian(std::vector<std::string> names) { return create(std::move(names), {}); }

std::size_t LieAlgebra::dim() const { return impl_->vars.size(); }

const Variables& LieAlgebra::variables() const { return impl_->vars; }

const SparseVector& LieAlgebra::structure(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  if (i >= n || j >= n) throw Error(ErrorCode::kIndexOutOfRange, "basis index out of range");
  return impl_->table[i * n + j];
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  Vector v = zero_vector(dim());
  for (const auto& [k, c] : structure(i, j)) v[k] = c;
  return v;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::kDimensionMismatch, "bracket arguments must have length " + std::to_string(n));
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0 || i == j) continue;
      Rational c = x[i] * y[j];
      for (const auto& [k, s] : impl_->table[i * n + j]) out[k] += c * s;
    }
  }
  return out;
}

std::vector<BracketEntry> LieAlgebra::nonzero_brackets() const {
  std::vector<BracketEntry> out;
  for (const auto& [key, value] : impl_->constants) out.push_back({key.first, key.second, value});
  return out;
}

std::string format_vector(const Vector& v, const Variables& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (a != 1) os << to_string(a) << "*";
    os << names.name(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

StructureReport check_structure(const LieAlgebra& alg) {
  StructureReport report;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector xi = unit_vector(n, i), xj = unit_vector(n, j), xk = unit_vector(n, k);
        Vector sum = alg.bracket(alg.basis_bracket(i, j), xk);
        axpy(Rational(1), alg.bracket(alg.basis_bracket(j, k), xi), sum);
        axpy(Rational(1), alg.bracket(alg.basis_bracket(k, i), xj), sum);
        if (!is_zero(sum)) report.violations.push_back({i, j, k, std::move(sum)});
      }
  return report;
}

// --- Subspace -------------------------------------------------------------

Subspace Subspace::span(const LieAlgebra& alg, std::vector<Vector> vectors, std::vector<std::string> names,
                        std::string_view default_prefix) {
  const std::size_t n = alg.dim();
  for (const auto& v : vectors)
    if (v.size() != n) throw Error(ErrorCode::kDimensionMismatch, "subspace vector has wrong length");
  if (rank_of_columns(n, vectors) != vectors.size())
    throw Error(ErrorCode::kDependentVectors, "subspace vectors are linearly dependent");
  if (!names.empty() && names.size() != vectors.size())
    throw Error(ErrorCode::kInvalidInput, "subspace names do not match vectors");
  if (names.empty()) {
    for (std::size_t k = 0; k < vectors.size(); ++k) {
      std::string name = std::string(default_prefix) + std::to_string(k + 1);
      for (std::size_t i = 0; i < n; ++i)
        if (vectors[k] == unit_vector(n, i)) name = alg.name(i);
      names.push_back(std::move(name));
    }
  }
  Subspace s;
  s.ambient_dim_ = n;
  s.vectors_ = std::move(vectors);
  s.names_ = std::move(names);
  return s;
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_dim_ = ambient_dim;
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim_) throw Error(ErrorCode::kDimensionMismatch, "vector has wrong length");
  if (is_zero(v)) return true;
  std::vector<Vector> cols = vectors_;
  cols.push_back(v);
  return rank_of_columns(ambient_dim_, cols) == vectors_.size();
}

bool is_subalgebra(const LieAlgebra& alg, const Subspace& s) {
  const auto& b = s.basis();
  for (std::size_t a = 0; a < b.size(); ++a)
    for (std::size_t c = a + 1; c < b.size(); ++c)
      if (!s.contains(alg.bracket(b[a], b[c]))) return false;
  return true;
}

namespace {

Rational linear_value(const Vector& coeffs, const Vector& chi) {
  Rational out = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) out += coeffs[k] * chi[k];
  return out;
}

}  // namespace

bool check_character(const LieAlgebra& alg, const Subspace& h, const Vector& chi) {
  if (chi.size() != h.dim()) throw Error(ErrorCode::kDimensionMismatch, "character needs one value per h-basis vector");
  const auto& b = h.basis();
  if (b.empty()) return true;
  Matrix basis = Matrix::from_columns(alg.dim(), b);
  for (std::size_t a = 0; a < b.size(); ++a)
    for (std::size_t c = a + 1; c < b.size(); ++c) {
      Vector br = alg.bracket(b[a], b[c]);
      auto sol = solve_affine(basis, br);
      if (!sol.solution) return false;  // not in h at all
      if (linear_value(*sol.solution, chi) != 0) return false;
    }
  return true;
}

// --- invariant complement -------------------------------------------------

ComplementResult invariant_complement(const LieAlgebra& alg, const Subspace& h, std::span<const Matrix> reps) {
  const std::size_t n = alg.dim();
  const std::size_t dh = h.dim();
  if (h.ambient_dim() != n) throw Error(ErrorCode::kDimensionMismatch, "subspace lives in a different algebra");

  // Quotient representatives w_j: greedy unit vectors independent mod h.
  std::vector<Vector> chosen = h.basis();
  std::vector<std::size_t> w_index;
  for (std::size_t i = 0; i < n && chosen.size() < n; ++i) {
    chosen.push_back(unit_vector(n, i));
    if (rank_of_columns(n, chosen) == chosen.size())
      w_index.push_back(i);
    else
      chosen.pop_back();
  }
  const std::size_t r = w_index.size();

  ComplementResult result;
  if (r == 0) {
    result.complement = Subspace::zero(n);
    return result;
  }

  // Basis W = [w_1..w_r | y_1..y_dh] and its inverse for coordinates.
  std::vector<Vector> cols;
  for (auto i : w_index) cols.push_back(unit_vector(n, i));
  for (const auto& y : h.basis()) cols.push_back(y);
  const Matrix w_inv = *inverse(Matrix::from_columns(n, cols));

  // Unknown alpha(j, k): s(w_j) = w_j + sum_k alpha(j, k) y_k.
  const std::size_t unknowns = r * dh;
  auto alpha = [&](std::size_t j, std::size_t k) { return j * dh + k; };

  std::vector<Vector> rows;
  Vector rhs;
  std::vector<std::string> labels;

  // Each operator T (ad X for X in h, or a component automorphism) with
  // T h in h contributes, for every w_j and every h-coordinate m:
  //   b(m,j) + sum_k T_h(m,k) alpha(j,k) - sum_l a(l,j) alpha(l,m) = 0
  // where T w_j = sum_l a(l,j) w_l + sum_m b(m,j) y_m.
  auto add_operator = [&](const std::string& label, auto&& apply) {
    std::vector<Vector> image_w, image_y;
    for (std::size_t j = 0; j < r; ++j) image_w.push_back(w_inv * apply(cols[j]));
    for (std::size_t k = 0; k < dh; ++k) {
      Vector c = w_inv * apply(h.basis()[k]);
      for (std::size_t l = 0; l < r; ++l)
        if (c[l] != 0) throw Error(ErrorCode::kNotAnAutomorphism, label + " does not preserve h");
      image_y.push_back(std::move(c));
    }
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t m = 0; m < dh; ++m) {
        Vector row = zero_vector(unknowns);
        for (std::size_t k = 0; k < dh; ++k) row[alpha(j, k)] += image_y[k][r + m];
        for (std::size_t l = 0; l < r; ++l) row[alpha(l, m)] -= image_w[j][l];
        rows.push_back(std::move(row));
        rhs.push_back(-image_w[j][r + m]);
        labels.push_back(label + " applied to " + alg.name(w_index[j]) + ", " + h.names()[m] + "-coordinate");
      }
  };

  for (std::size_t x = 0; x < dh; ++x) {
    const Vector& xv = h.basis()[x];
    add_operator("ad(" + h.names()[x] + ")", [&](const Vector& v) { return alg.bracket(xv, v); });
  }
  for (std::size_t a = 0; a < reps.size(); ++a) {
    const Matrix& rep = reps[a];
    if (rep.rows() != n || rep.cols() != n) throw Error(ErrorCode::kDimensionMismatch, "component representative has wrong shape");
    add_operator("rep#" + std::to_string(a + 1), [&](const Vector& v) { return rep * v; });
  }

  if (dh == 0 || rows.empty()) {
    std::vector<Vector> basis;
    std::vector<std::string> names;
    for (std::size_t j = 0; j < r; ++j) {
      basis.push_back(cols[j]);
      names.push_back("s(" + alg.name(w_index[j]) + ")");
    }
    result.complement = Subspace::span(alg, std::move(basis), std::move(names));
    return result;
  }

  Matrix system(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < unknowns; ++c) system(i, c) = rows[i][c];
  auto sol = solve_affine(system, rhs);

  if (!sol.solution) {
    const Vector& y = *sol.certificate;
    std::ostringstream os;
    Rational constant = 0;
    bool first = true;
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (y[i] == 0) continue;
      constant += y[i] * rhs[i];
      os << (first ? "" : " + ") << to_string(y[i]) << " * [" << labels[i] << "]";
      first = false;
    }
    os << " yields 0 = " << to_string(constant);
    result.certificate = os.str();
    return result;
  }

  std::vector<Vector> basis;
  std::vector<std::string> names;
  for (std::size_t j = 0; j < r; ++j) {
    Vector s = cols[j];
    for (std::size_t k = 0; k < dh; ++k) axpy((*sol.solution)[alpha(j, k)], h.basis()[k], s);
    basis.push_back(std::move(s));
    names.push_back("s(" + alg.name(w_index[j]) + ")");
  }
  result.complement = Subspace::span(alg, std::move(basis), std::move(names));
  return result;
}

}  // namespace invdiff

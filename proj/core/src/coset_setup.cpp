#include "invdiff/coset_setup.hpp"

#include <set>

#include "invdiff/error.hpp"

namespace invdiff {

struct CosetSetup::Impl {
  std::string name;
  LieAlgebra algebra;
  LieAlgebra adapted;
  Enveloping ring;
  Subspace h;
  Subspace m;
  bool m_auto = false;
  Vector chi;
  std::vector<ComponentRep> reps;
  std::vector<Matrix> adapted_reps;
  Matrix basis;
  Matrix basis_inverse;
  Variables m_vars;
};

namespace {

Subspace greedy_complement(const LieAlgebra& alg, const Subspace& h) {
  const std::size_t n = alg.dim();
  std::vector<Vector> chosen = h.basis();
  std::vector<Vector> picked;
  for (std::size_t i = 0; i < n && chosen.size() < n; ++i) {
    chosen.push_back(unit_vector(n, i));
    if (rank_of_columns(n, chosen) == chosen.size())
      picked.push_back(chosen.back());
    else
      chosen.pop_back();
  }
  return Subspace::span(alg, std::move(picked), {}, "m");
}

void check_automorphism(const LieAlgebra& alg, const Subspace& h, const Vector& chi, const ComponentRep& rep) {
  const std::size_t n = alg.dim();
  const Matrix& a = rep.matrix;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kNotAnAutomorphism, "component representative '" + rep.name + "' " + why);
  };
  if (a.rows() != n || a.cols() != n) fail("has the wrong shape");
  if (!inverse(a)) fail("is singular");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector lhs = a * alg.basis_bracket(i, j);
      Vector rhs = alg.bracket(a.column(i), a.column(j));
      if (lhs != rhs) fail("does not preserve [" + alg.name(i) + "," + alg.name(j) + "]");
    }
  if (h.dim() == 0) return;
  Matrix hb = Matrix::from_columns(n, h.basis());
  for (std::size_t k = 0; k < h.dim(); ++k) {
    auto coords = solve_affine(hb, a * h.basis()[k]);
    if (!coords.solution) fail("does not map h into h");
    Rational value = 0;
    for (std::size_t l = 0; l < h.dim(); ++l) value += (*coords.solution)[l] * chi[l];
    if (value != chi[k]) fail("does not fix the character");
  }
}

}  // namespace

CosetSetup CosetSetup::create(const LieAlgebra& alg, const Subspace& h, std::optional<Subspace> m, Vector chi,
                              std::vector<ComponentRep> reps, std::string name) {
  const std::size_t n = alg.dim();
  if (h.ambient_dim() != n) throw Error(ErrorCode::kDimensionMismatch, "h lives in a different algebra");
  if (!is_subalgebra(alg, h)) throw Error(ErrorCode::kNotASubalgebra, "h is not closed under the bracket");
  if (chi.empty() && h.dim() > 0) chi = zero_vector(h.dim());
  if (chi.size() != h.dim()) throw Error(ErrorCode::kInvalidCharacter, "character needs one value per h-basis vector");
  if (!check_character(alg, h, chi)) throw Error(ErrorCode::kInvalidCharacter, "character does not vanish on [h,h]");

  Subspace m_space;
  bool m_auto = false;
  if (m) {
    if (m->ambient_dim() != n) throw Error(ErrorCode::kDimensionMismatch, "m lives in a different algebra");
    std::vector<Vector> all = m->basis();
    all.insert(all.end(), h.basis().begin(), h.basis().end());
    if (m->dim() + h.dim() != n || rank_of_columns(n, all) != n)
      throw Error(ErrorCode::kNotComplementary, "m and h are not complementary in g");
    m_space = *m;
  } else {
    m_space = greedy_complement(alg, h);
    m_auto = true;
  }
  for (const auto& rep : reps) check_automorphism(alg, h, chi, rep);

  const std::size_t r = m_space.dim();
  std::vector<Vector> cols = m_space.basis();
  cols.insert(cols.end(), h.basis().begin(), h.basis().end());
  Matrix basis = Matrix::from_columns(n, cols);
  Matrix basis_inverse = *inverse(basis);

  std::vector<std::string> names = m_space.names();
  names.insert(names.end(), h.names().begin(), h.names().end());
  std::set<std::string> seen;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& nm = names[k];
    if (!is_identifier(nm)) throw Error(ErrorCode::kInvalidInput, "basis name '" + nm + "' is not an identifier");
    if (!seen.insert(nm).second) throw Error(ErrorCode::kInvalidInput, "adapted basis name '" + nm + "' is used twice");
    if (auto orig = alg.variables().index_of(nm); orig && cols[k] != unit_vector(n, *orig))
      throw Error(ErrorCode::kInvalidInput, "name '" + nm + "' already denotes a different basis vector");
  }

  std::vector<BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = basis_inverse * alg.bracket(cols[i], cols[j]);
      if (!is_zero(v)) entries.push_back({i, j, std::move(v)});
    }
  LieAlgebra adapted = LieAlgebra::create(names, entries);

  std::vector<Matrix> adapted_reps;
  for (const auto& rep : reps) adapted_reps.push_back(basis_inverse * rep.matrix * basis);

  auto impl = std::make_shared<Impl>(Impl{
      .name = std::move(name),
      .algebra = alg,
      .adapted = adapted,
      .ring = Enveloping(adapted),
      .h = h,
      .m = std::move(m_space),
      .m_auto = m_auto,
      .chi = std::move(chi),
      .reps = std::move(reps),
      .adapted_reps = std::move(adapted_reps),
      .basis = std::move(basis),
      .basis_inverse = std::move(basis_inverse),
      .m_vars = adapted.variables().prefix(r),
  });
  return CosetSetup(std::move(impl));
}

const std::string& CosetSetup::name() const { return impl_->name; }
const LieAlgebra& CosetSetup::algebra() const { return impl_->algebra; }
const LieAlgebra& CosetSetup::adapted() const { return impl_->adapted; }
const Enveloping& CosetSetup::ring() const { return impl_->ring; }
std::size_t CosetSetup::dim() const { return impl_->algebra.dim(); }
std::size_t CosetSetup::r() const { return impl_->m.dim(); }
std::size_t CosetSetup::h_dim() const { return impl_->h.dim(); }
const Subspace& CosetSetup::h() const { return impl_->h; }
const Subspace& CosetSetup::m() const { return impl_->m; }
bool CosetSetup::m_auto_selected() const { return impl_->m_auto; }
const Vector& CosetSetup::chi() const { return impl_->chi; }
const std::vector<ComponentRep>& CosetSetup::component_reps() const { return impl_->reps; }
const std::vector<Matrix>& CosetSetup::adapted_reps() const { return impl_->adapted_reps; }
const Matrix& CosetSetup::change_of_basis() const { return impl_->basis; }
const Variables& CosetSetup::m_variables() const { return impl_->m_vars; }

Rational CosetSetup::chi_of(const Vector& adapted_coords) const {
  if (adapted_coords.size() != dim()) throw Error(ErrorCode::kDimensionMismatch, "vector has wrong length");
  Rational v = 0;
  for (std::size_t k = 0; k < h_dim(); ++k) v += impl_->chi[k] * adapted_coords[r() + k];
  return v;
}

Vector CosetSetup::to_adapted(const Vector& original) const { return impl_->basis_inverse * original; }
Vector CosetSetup::to_original(const Vector& adapted) const { return impl_->basis * adapted; }

Vector sigma(const CosetSetup& setup, const Vector& x) {
  Vector a = setup.to_adapted(x);
  a.resize(setup.r());
  return a;
}

bool check_character(const CosetSetup& setup) {
  return check_character(setup.algebra(), setup.h(), setup.chi());
}

SymPoly sigma_hom(const CosetSetup& setup, const SymPoly& p) {
  if (!(p.variables() == setup.adapted().variables()))
    throw Error(ErrorCode::kParentMismatch, "sigma_hom expects a polynomial over the adapted basis of g");
  const std::size_t r = setup.r();
  SymPoly out(setup.m_variables());
  for (const auto& [e, c] : p.terms()) {
    bool touches_h = false;
    for (std::size_t k = r; k < e.size(); ++k)
      if (e[k] != 0) touches_h = true;
    if (touches_h) continue;
    out.add(Exponents(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(r)), c);
  }
  return out;
}

SymPoly embed_m(const CosetSetup& setup, const SymPoly& p) {
  if (!(p.variables() == setup.m_variables()))
    throw Error(ErrorCode::kParentMismatch, "embed_m expects a polynomial over m");
  SymPoly out(setup.adapted().variables());
  for (const auto& [e, c] : p.terms()) {
    Exponents full = e;
    full.resize(setup.dim(), 0);
    out.add(full, c);
  }
  return out;
}

}  // namespace invdiff

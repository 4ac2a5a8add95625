#include "invdiff/enveloping.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>

#include "invdiff/error.hpp"

namespace invdiff {

struct Enveloping::Impl {
  Impl(LieAlgebra a, int c) : alg(std::move(a)), cap(c) {}

  LieAlgebra alg;
  int cap;

  mutable std::shared_mutex mu;
  std::map<std::pair<Exponents, std::size_t>, TermMap> products;
  std::map<Exponents, TermMap> symmetrized;

  const TermMap* find_product(const std::pair<Exponents, std::size_t>& key) const {
    std::shared_lock lock(mu);
    auto it = products.find(key);
    return it == products.end() ? nullptr : &it->second;
  }

  // Concurrent writers compute identical values; the first insert wins.
  const TermMap& store_product(std::pair<Exponents, std::size_t> key, TermMap value) {
    std::unique_lock lock(mu);
    return products.try_emplace(std::move(key), std::move(value)).first->second;
  }
};

Enveloping::Enveloping(LieAlgebra alg, int symmetrize_cap)
    : impl_(std::make_shared<Impl>(std::move(alg), symmetrize_cap)) {}

const LieAlgebra& Enveloping::algebra() const { return impl_->alg; }

int Enveloping::symmetrize_cap() const { return impl_->cap; }

const TermMap& Enveloping::mul_generator(const Exponents& e, std::size_t i) const {
  auto key = std::make_pair(e, i);
  if (const TermMap* hit = impl_->find_product(key)) return *hit;

  const std::size_t n = dim();
  if (i >= n || e.size() != n) throw Error(ErrorCode::kIndexOutOfRange, "generator index out of range");

  std::size_t last = 0;
  bool any = false;
  for (std::size_t k = 0; k < n; ++k)
    if (e[k] > 0) {
      last = k;
      any = true;
    }

  TermMap result;
  if (!any || last <= i) {
    Exponents t = e;
    t[i] += 1;
    result.emplace(std::move(t), Rational(1));
  } else {
    // X^e' X_k X_i = (X^e' X_i) X_k + X^e' [X_k, X_i], with k = last.
    const std::size_t k = last;
    Exponents reduced = e;
    reduced[k] -= 1;
    const TermMap& head = mul_generator(reduced, i);
    for (const auto& [t, c] : head) add_scaled(result, mul_generator(t, k), c);
    for (const auto& [l, c] : impl_->alg.structure(k, i)) add_scaled(result, mul_generator(reduced, l), c);
  }
  return impl_->store_product(std::move(key), std::move(result));
}

namespace {

TermMap right_mul_generator(const Enveloping& ring, const TermMap& u, std::size_t i) {
  TermMap out;
  for (const auto& [e, c] : u) add_scaled(out, ring.mul_generator(e, i), c);
  return out;
}

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Sum over all distinct orderings of the multiset `remaining`, sharing
// prefix products.
void sum_arrangements(const Enveloping& ring, Exponents& remaining, int left, const TermMap& prefix, TermMap& acc) {
  if (left == 0) {
    add_scaled(acc, prefix, Rational(1));
    return;
  }
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    if (remaining[i] == 0) continue;
    --remaining[i];
    TermMap next = right_mul_generator(ring, prefix, i);
    sum_arrangements(ring, remaining, left - 1, next, acc);
    ++remaining[i];
  }
}

}  // namespace

const TermMap& Enveloping::symmetrized_monomial(const Exponents& e) const {
  {
    std::shared_lock lock(impl_->mu);
    auto it = impl_->symmetrized.find(e);
    if (it != impl_->symmetrized.end()) return it->second;
  }
  if (e.size() != dim()) throw Error(ErrorCode::kDimensionMismatch, "exponent vector has wrong length");
  const int m = total_degree(e);
  if (m > impl_->cap)
    throw Error(ErrorCode::kDegreeCapExceeded,
                "symmetrization degree " + std::to_string(m) + " exceeds cap " + std::to_string(impl_->cap));

  TermMap acc;
  Exponents remaining = e;
  TermMap unit;
  unit.emplace(Exponents(dim(), 0), Rational(1));
  sum_arrangements(*this, remaining, m, unit, acc);

  Rational arrangements = factorial(m);
  for (int x : e) arrangements /= factorial(x);
  for (auto& [t, c] : acc) c /= arrangements;

  std::unique_lock lock(impl_->mu);
  return impl_->symmetrized.try_emplace(e, std::move(acc)).first->second;
}

// --- PbwElement -----------------------------------------------------------

PbwElement PbwElement::scalar(Enveloping ring, const Rational& c) {
  PbwElement u(std::move(ring));
  u.add(Exponents(u.ring_.dim(), 0), c);
  return u;
}

PbwElement PbwElement::generator(Enveloping ring, std::size_t i) {
  if (i >= ring.dim()) throw Error(ErrorCode::kIndexOutOfRange, "generator index out of range");
  Exponents e(ring.dim(), 0);
  e[i] = 1;
  return monomial(std::move(ring), std::move(e));
}

PbwElement PbwElement::linear(Enveloping ring, const Vector& coeffs) {
  if (coeffs.size() != ring.dim()) throw Error(ErrorCode::kDimensionMismatch, "vector has wrong length");
  PbwElement u(std::move(ring));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    u.add(e, coeffs[i]);
  }
  return u;
}

PbwElement PbwElement::monomial(Enveloping ring, Exponents e, const Rational& c) {
  PbwElement u(std::move(ring));
  u.add(e, c);
  return u;
}

Rational PbwElement::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PbwElement::add(const Exponents& e, const Rational& c) {
  if (e.size() != ring_.dim()) throw Error(ErrorCode::kDimensionMismatch, "exponent vector has wrong length");
  add_term(terms_, e, c);
}

void PbwElement::require_same_ring(const PbwElement& other) const {
  if (!ring_.same_as(other.ring_)) throw Error(ErrorCode::kParentMismatch, "elements belong to different setups");
}

PbwElement& PbwElement::operator+=(const PbwElement& rhs) {
  require_same_ring(rhs);
  add_scaled(terms_, rhs.terms_, Rational(1));
  return *this;
}

PbwElement& PbwElement::operator-=(const PbwElement& rhs) {
  require_same_ring(rhs);
  add_scaled(terms_, rhs.terms_, Rational(-1));
  return *this;
}

PbwElement& PbwElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool PbwElement::operator==(const PbwElement& other) const {
  return ring_.same_as(other.ring_) && terms_ == other.terms_;
}

std::string to_string(const PbwElement& u) {
  if (u.is_zero()) return "0";
  const auto& vars = u.ring().algebra().variables();
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : u.terms()) {
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    os << to_string(Rational(abs(c)));
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) os << "*" << vars.name(i) << "^" << e[i];
    first = false;
  }
  return os.str();
}

// --- normalization --------------------------------------------------------

namespace {

PbwElement normalize_memoized(const Enveloping& ring, const std::vector<WordTerm>& words) {
  PbwElement out(ring);
  for (const auto& w : words) {
    TermMap cur;
    cur.emplace(Exponents(ring.dim(), 0), w.coefficient);
    for (std::size_t letter : w.letters) cur = right_mul_generator(ring, cur, letter);
    for (const auto& [e, c] : cur) out.add(e, c);
  }
  return out;
}

PbwElement normalize_rewriting(const Enveloping& ring, const std::vector<WordTerm>& words, bool leftmost) {
  const LieAlgebra& alg = ring.algebra();
  std::map<Word, Rational> pending;
  auto push = [&](const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = pending.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) pending.erase(it);
    }
  };
  for (const auto& w : words) push(w.letters, w.coefficient);

  PbwElement out(ring);
  while (!pending.empty()) {
    auto it = pending.begin();
    Word w = it->first;
    Rational c = it->second;
    pending.erase(it);

    std::optional<std::size_t> pos;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (w[p] > w[p + 1]) {
        pos = p;
        if (leftmost) break;
      }
    }
    if (!pos) {
      Exponents e(ring.dim(), 0);
      for (std::size_t letter : w) e[letter] += 1;
      out.add(e, c);
      continue;
    }
    const std::size_t p = *pos;
    const std::size_t b = w[p], a = w[p + 1];
    Word swapped = w;
    std::swap(swapped[p], swapped[p + 1]);
    push(swapped, c);
    for (const auto& [l, s] : alg.structure(b, a)) {
      Word shorter(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
      shorter.push_back(l);
      shorter.insert(shorter.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
      push(shorter, c * s);
    }
  }
  return out;
}

}  // namespace

PbwElement pbw_normalize(const Enveloping& ring, const std::vector<WordTerm>& words, RewriteStrategy strategy) {
  for (const auto& w : words)
    for (std::size_t letter : w.letters)
      if (letter >= ring.dim()) throw Error(ErrorCode::kIndexOutOfRange, "word letter out of range");
  switch (strategy) {
    case RewriteStrategy::kMemoized: return normalize_memoized(ring, words);
    case RewriteStrategy::kLeftmost: return normalize_rewriting(ring, words, true);
    case RewriteStrategy::kRightmost: return normalize_rewriting(ring, words, false);
  }
  return normalize_memoized(ring, words);
}

PbwElement u_mul(const PbwElement& a, const PbwElement& b) {
  if (!a.ring().same_as(b.ring())) throw Error(ErrorCode::kParentMismatch, "elements belong to different setups");
  const Enveloping& ring = a.ring();
  PbwElement out(ring);
  TermMap acc;
  for (const auto& [f, cb] : b.terms()) {
    TermMap cur = a.terms();
    for (std::size_t j = 0; j < f.size(); ++j)
      for (int rep = 0; rep < f[j]; ++rep) cur = right_mul_generator(ring, cur, j);
    add_scaled(acc, cur, cb);
  }
  for (const auto& [e, c] : acc) out.add(e, c);
  return out;
}

PbwElement pow(const PbwElement& a, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidInput, "negative power");
  PbwElement out = PbwElement::one(a.ring());
  for (int i = 0; i < k; ++i) out = u_mul(out, a);
  return out;
}

PbwElement symmetrize(const Enveloping& ring, const SymPoly& p) {
  if (!(p.variables() == ring.algebra().variables()))
    throw Error(ErrorCode::kParentMismatch, "polynomial does not live over this algebra");
  PbwElement out(ring);
  TermMap acc;
  for (const auto& [e, c] : p.terms()) add_scaled(acc, ring.symmetrized_monomial(e), c);
  for (const auto& [e, c] : acc) out.add(e, c);
  return out;
}

SymPoly lambda_coords(const PbwElement& u) {
  const Enveloping& ring = u.ring();
  SymPoly out(ring.algebra().variables());
  TermMap rest = u.terms();
  while (!rest.empty()) {
    const int d = max_degree(rest);
    std::vector<std::pair<Exponents, Rational>> top;
    for (const auto& [e, c] : rest) {
      if (total_degree(e) != d) break;
      top.emplace_back(e, c);
    }
    for (const auto& [e, c] : top) {
      out.add(e, c);
      add_scaled(rest, ring.symmetrized_monomial(e), -c);
    }
  }
  return out;
}

PbwElement ad_u(const Vector& x, const PbwElement& u) {
  PbwElement xe = PbwElement::linear(u.ring(), x);
  return u_mul(xe, u) - u_mul(u, xe);
}

PbwElement ad_group_u(const Matrix& a, const PbwElement& u) {
  const Enveloping& ring = u.ring();
  const std::size_t n = ring.dim();
  if (a.rows() != n || a.cols() != n) throw Error(ErrorCode::kDimensionMismatch, "matrix has wrong shape");
  if (!inverse(a)) throw Error(ErrorCode::kSingularMatrix, "automorphism matrix is singular");
  std::vector<PbwElement> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(PbwElement::linear(ring, a.column(i)));

  PbwElement out(ring);
  for (const auto& [e, c] : u.terms()) {
    PbwElement prod = PbwElement::scalar(ring, c);
    for (std::size_t i = 0; i < n; ++i)
      for (int rep = 0; rep < e[i]; ++rep) prod = u_mul(prod, images[i]);
    out += prod;
  }
  return out;
}

}  // namespace invdiff

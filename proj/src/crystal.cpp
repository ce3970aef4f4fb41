#include "orbispec/crystal.hpp"

#include "orbispec/exact.hpp"

#include <algorithm>
#include <deque>

namespace orbispec {

AffineIsometry AffineIsometry::identity(std::size_t n) {
  return AffineIsometry{IntMatrix::identity(n), RatVector(n, Rational(0))};
}

RatVector AffineIsometry::apply(const RatVector& x) const {
  if (x.size() != dim()) throw DimensionMismatch("point/isometry dimension mismatch");
  RatVector y = transl;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (linear(i, j) != 0) y[i] += Rational(static_cast<long>(linear(i, j))) * x[j];
  return y;
}

AffineIsometry compose(const AffineIsometry& a, const AffineIsometry& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("compose: dimension mismatch");
  return AffineIsometry{a.linear * b.linear, a.apply(b.transl)};
}

AffineIsometry invert(const AffineIsometry& a) {
  IntMatrix inv = inverse_unimodular(a.linear);
  RatVector t = to_rational(inv) * a.transl;
  for (auto& x : t) x = -x;
  return AffineIsometry{inv, t};
}

AffineIsometry translation(const RatVector& t) {
  return AffineIsometry{IntMatrix::identity(t.size()), t};
}

AffineIsometry canonical(const AffineIsometry& a) { return AffineIsometry{a.linear, frac_part(a.transl)}; }

std::optional<ValidationError> validate(const CrystalGroup& g) {
  using Kind = ValidationError::Kind;
  const std::size_t n = g.dim();
  const RatMatrix& gram = g.lattice.gram();
  for (std::size_t i = 0; i < g.reps.size(); ++i) {
    const auto& r = g.reps[i];
    if (r.linear.rows() != n || r.linear.cols() != n || r.transl.size() != n)
      return ValidationError(Kind::DimensionMismatch, i, i,
                             "coset " + std::to_string(i) + ": dimension does not match the lattice");
  }
  for (std::size_t i = 0; i < g.reps.size(); ++i) {
    RatMatrix p = to_rational(g.reps[i].linear);
    if (p.transpose() * gram * p != gram)
      return ValidationError(Kind::NotOrthogonal, i, i,
                             "coset " + std::to_string(i) + ": linear part " + to_string(g.reps[i].linear) +
                                 " does not preserve the gram matrix");
  }
  for (std::size_t i = 0; i < g.reps.size(); ++i)
    for (std::size_t j = i + 1; j < g.reps.size(); ++j)
      if (g.reps[i].linear == g.reps[j].linear)
        return ValidationError(Kind::DuplicateLinearPart, i, j,
                               "cosets " + std::to_string(i) + " and " + std::to_string(j) +
                                   " have the same linear part");
  auto id = rep_index(g, IntMatrix::identity(n));
  if (!id) return ValidationError(Kind::BadIdentity, 0, 0, "no coset with identity linear part");
  if (!is_integral(g.reps[*id].transl))
    return ValidationError(Kind::BadIdentity, *id, *id,
                           "coset " + std::to_string(*id) + ": identity linear part with non-lattice translation");
  for (std::size_t i = 0; i < g.reps.size(); ++i)
    for (std::size_t j = 0; j < g.reps.size(); ++j) {
      AffineIsometry c = compose(g.reps[i], g.reps[j]);
      auto k = rep_index(g, c.linear);
      bool ok = k.has_value();
      if (ok) {
        RatVector diff = c.transl;
        for (std::size_t t = 0; t < n; ++t) diff[t] -= g.reps[*k].transl[t];
        ok = is_integral(diff);
      }
      if (!ok)
        return ValidationError(Kind::NotClosed, i, j,
                               "cosets " + std::to_string(i) + " and " + std::to_string(j) +
                                   ": product is not in the group modulo lattice translations");
    }
  return std::nullopt;
}

void require_valid(const CrystalGroup& g) {
  if (auto err = validate(g)) throw *err;
}

std::vector<IntMatrix> point_group(const CrystalGroup& g) {
  std::vector<IntMatrix> out;
  IntMatrix id = IntMatrix::identity(g.dim());
  out.push_back(id);
  for (const auto& r : g.reps)
    if (!(r.linear == id)) out.push_back(r.linear);
  return out;
}

std::optional<std::size_t> rep_index(const CrystalGroup& g, const IntMatrix& linear) {
  for (std::size_t i = 0; i < g.reps.size(); ++i)
    if (g.reps[i].linear == linear) return i;
  return std::nullopt;
}

CrystalGroup change_basis(const CrystalGroup& g, const IntMatrix& u) {
  IntMatrix uinv = inverse_unimodular(u);
  RatMatrix ur = to_rational(u);
  CrystalGroup out{g.name, Lattice(ur.transpose() * g.lattice.gram() * ur), {}};
  RatMatrix uinv_r = to_rational(uinv);
  for (const auto& r : g.reps) out.reps.push_back(AffineIsometry{uinv * r.linear * u, uinv_r * r.transl});
  return out;
}

// ---------------------------------------------------------------------------

std::size_t TorusElementHash::operator()(const TorusElement& e) const {
  std::size_t h = IntMatrixHash{}(e.linear);
  for (auto s : e.shift) h = h * 31 + static_cast<std::size_t>(s);
  return h;
}

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

FiniteAffineGroup::FiniteAffineGroup(std::size_t dim, const std::vector<AffineIsometry>& elements) : dim_(dim) {
  Integer den = 1;
  for (const auto& e : elements) {
    if (e.dim() != dim) throw DimensionMismatch("finite group element of wrong dimension");
    for (const auto& x : e.transl) den = lcm_of(den, x.get_den());
  }
  den_ = to_int64(den);
  for (const auto& e : elements) {
    TorusElement t = to_torus(e);
    if (!index_.count(t)) {
      index_.emplace(t, elements_.size());
      elements_.push_back(std::move(t));
    }
  }
}

TorusElement FiniteAffineGroup::to_torus(const AffineIsometry& a) const {
  TorusElement t{a.linear, IntVector(dim_)};
  for (std::size_t i = 0; i < dim_; ++i) {
    Rational s = frac_part(a.transl[i]) * Rational(static_cast<long>(den_));
    if (!is_integer(s)) throw Error("translation denominator does not divide the group denominator");
    t.shift[i] = to_int64(s.get_num());
  }
  return t;
}

void FiniteAffineGroup::rebuild_index() {
  index_.clear();
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

AffineIsometry FiniteAffineGroup::affine(std::size_t i) const {
  return AffineIsometry{elements_[i].linear, translation(i)};
}

RatVector FiniteAffineGroup::translation(std::size_t i) const {
  RatVector t;
  for (auto s : elements_[i].shift) t.push_back(make_rational(static_cast<long>(s), static_cast<long>(den_)));
  return t;
}

std::optional<std::size_t> FiniteAffineGroup::index_of(const TorusElement& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FiniteAffineGroup::index_of(const AffineIsometry& a) const {
  for (const auto& x : a.transl) {
    Rational s = x * Rational(static_cast<long>(den_));
    if (!is_integer(s)) return std::nullopt;
  }
  return index_of(to_torus(a));
}

TorusElement FiniteAffineGroup::multiply(const TorusElement& a, const TorusElement& b) const {
  TorusElement r{a.linear * b.linear, a.shift};
  for (std::size_t i = 0; i < dim_; ++i) {
    std::int64_t s = a.shift[i];
    for (std::size_t j = 0; j < dim_; ++j) s = detail::checked_add(s, detail::checked_mul(a.linear(i, j), b.shift[j]));
    r.shift[i] = mod_floor(s, den_);
  }
  return r;
}

TorusElement FiniteAffineGroup::inverse(const TorusElement& a) const {
  IntMatrix inv = inverse_unimodular(a.linear);
  TorusElement r{inv, IntVector(dim_, 0)};
  for (std::size_t i = 0; i < dim_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < dim_; ++j) s = detail::checked_add(s, detail::checked_mul(inv(i, j), a.shift[j]));
    r.shift[i] = mod_floor(-s, den_);
  }
  return r;
}

bool FiniteAffineGroup::contains_identity() const {
  return index_of(TorusElement{IntMatrix::identity(dim_), IntVector(dim_, 0)}).has_value();
}

bool FiniteAffineGroup::is_closed() const {
  if (!contains_identity()) return false;
  for (const auto& a : elements_) {
    if (!index_of(inverse(a))) return false;
    for (const auto& b : elements_)
      if (!index_of(multiply(a, b))) return false;
  }
  return true;
}

FiniteAffineGroup quotient_mod_sublattice(const CrystalGroup& g, const IntMatrix& sub) {
  const std::size_t n = g.dim();
  if (sub.rows() != n || sub.cols() != n) throw NotSublatticeError("sublattice matrix has wrong shape");
  RatMatrix s = to_rational(sub);
  auto sinv = inverse(s);
  if (!sinv) throw NotSublatticeError("sublattice matrix is singular");

  std::vector<IntMatrix> linear;
  for (const auto& r : g.reps) {
    RatMatrix p = *sinv * to_rational(r.linear) * s;
    if (!is_integral(p)) throw NotInvariantError("linear part " + to_string(r.linear) + " does not preserve the sublattice");
    linear.push_back(to_int(p));
  }

  // Coset representatives of Lambda / Lambda' from the triangular Hermite
  // basis of Lambda': 0 <= t_i < h_ii.
  auto herm = column_hermite(to_integer(sub));
  IntVector diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = to_int64(herm.hermite(i, i));
  std::vector<IntVector> cosets;
  IntVector t(n, 0);
  for (;;) {
    cosets.push_back(t);
    std::size_t i = 0;
    while (i < n && ++t[i] == diag[i]) t[i++] = 0;
    if (i == n) break;
  }

  std::vector<AffineIsometry> elems;
  for (std::size_t r = 0; r < g.reps.size(); ++r)
    for (const auto& c : cosets) {
      RatVector shifted = g.reps[r].transl;
      for (std::size_t i = 0; i < n; ++i) shifted[i] += Rational(static_cast<long>(c[i]));
      elems.push_back(AffineIsometry{linear[r], *sinv * shifted});
    }
  FiniteAffineGroup out(n, elems);
  if (out.order() != elems.size()) throw Error("quotient group has coinciding elements; invalid crystal group");
  return out;
}

FiniteAffineGroup closure(const std::vector<AffineIsometry>& generators, std::size_t bound) {
  if (generators.empty()) throw Error("closure needs at least one generator");
  const std::size_t n = generators.front().dim();
  FiniteAffineGroup gens(n, generators);
  FiniteAffineGroup out(n, {AffineIsometry::identity(n)});
  out.den_ = gens.den_;
  out.elements_.clear();
  out.index_.clear();

  TorusElement id{IntMatrix::identity(n), IntVector(n, 0)};
  out.index_.emplace(id, 0);
  out.elements_.push_back(id);
  std::deque<std::size_t> work{0};
  while (!work.empty()) {
    std::size_t x = work.front();
    work.pop_front();
    for (const auto& gen : gens.elements()) {
      TorusElement y = out.multiply(out.elements_[x], gen);
      if (out.index_.count(y)) continue;
      if (out.elements_.size() >= bound) throw BoundExceededError(bound);
      out.index_.emplace(y, out.elements_.size());
      work.push_back(out.elements_.size());
      out.elements_.push_back(std::move(y));
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteAffineGroup& g) {
  const std::size_t n = g.order();
  std::vector<TorusElement> inv;
  inv.reserve(n);
  for (const auto& e : g.elements()) inv.push_back(g.inverse(e));
  std::vector<int> seen(n, 0);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t h = 0; h < n; ++h) {
    if (seen[h]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t a = 0; a < n; ++a) {
      auto idx = g.index_of(g.multiply(g.multiply(g.element(a), g.element(h)), inv[a]));
      if (!idx) throw Error("conjugacy_classes: group is not closed");
      if (!seen[*idx]) {
        seen[*idx] = 1;
        cls.push_back(*idx);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace orbispec

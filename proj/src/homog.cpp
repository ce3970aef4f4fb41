#include "orbispec/homog.hpp"

#include "orbispec/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace orbispec {

FiniteOrthGroup::FiniteOrthGroup(std::size_t n, std::vector<RatMatrix> elements) : n_(n) {
  const RatMatrix id = RatMatrix::identity(n);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const RatMatrix& m = elements[i];
    if (m.rows() != n || m.cols() != n)
      throw DimensionMismatch("element " + std::to_string(i) + " is not " + std::to_string(n) + "x" + std::to_string(n));
    if (!(m.transpose() * m == id)) throw Error("element " + std::to_string(i) + " is not orthogonal");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto id_it = std::find(elements.begin(), elements.end(), id);
  if (id_it == elements.end()) throw Error("group does not contain the identity");
  std::rotate(elements.begin(), id_it, id_it + 1);
  elements_ = std::move(elements);

  const std::size_t k = elements_.size();
  table_.resize(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto p = index_of(elements_[a] * elements_[b]);
      if (!p) throw Error("elements " + std::to_string(a) + " and " + std::to_string(b) + " multiply outside the group");
      table_[a * k + b] = *p;
    }
}

FiniteOrthGroup FiniteOrthGroup::signed_diagonal(const std::vector<std::vector<int>>& diagonals) {
  if (diagonals.empty()) throw Error("empty group");
  const std::size_t n = diagonals.front().size();
  std::vector<RatMatrix> elements;
  for (const auto& d : diagonals) {
    if (d.size() != n) throw DimensionMismatch("diagonal length mismatch");
    RatVector v;
    for (int x : d) v.emplace_back(x);
    elements.push_back(RatMatrix::diagonal(v));
  }
  return FiniteOrthGroup(n, std::move(elements));
}

std::optional<std::size_t> FiniteOrthGroup::index_of(const RatMatrix& m) const {
  // Identity sits in front; the rest is sorted.
  if (!elements_.empty() && elements_.front() == m) return 0;
  for (std::size_t i = 1; i < elements_.size(); ++i)
    if (elements_[i] == m) return i;
  return std::nullopt;
}

bool FiniteOrthGroup::is_signed_diagonal() const {
  for (const auto& m : elements_)
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && m(i, j) != 0) return false;
  return true;
}

std::vector<Subgroup> subgroups(const FiniteOrthGroup& g) {
  const std::size_t k = g.order();
  if (k - 1 > 16) throw BoundExceededError(std::size_t{1} << 16);
  std::vector<Subgroup> out;
  const std::uint64_t masks = std::uint64_t{1} << (k - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::vector<bool> in(k, false);
    in[0] = true;
    Subgroup s{0};
    for (std::size_t i = 1; i < k; ++i)
      if (mask >> (i - 1) & 1) {
        in[i] = true;
        s.push_back(i);
      }
    bool closed = true;
    for (std::size_t a = 0; a < s.size() && closed; ++a)
      for (std::size_t b = 0; b < s.size() && closed; ++b) closed = in[g.product(s[a], s[b])];
    if (closed) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return out;
}

std::size_t fixed_dim(const std::vector<RatMatrix>& s, std::size_t n) {
  if (s.empty()) return n;
  RatMatrix stacked(s.size() * n, n);
  const RatMatrix id = RatMatrix::identity(n);
  for (std::size_t k = 0; k < s.size(); ++k) {
    RatMatrix d = s[k] - id;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(k * n + i, j) = d(i, j);
  }
  return n - rank(stacked);
}

std::size_t fixed_dim(const FiniteOrthGroup& g, const Subgroup& s) {
  std::vector<RatMatrix> mats;
  for (std::size_t i : s) mats.push_back(g.element(i));
  return fixed_dim(mats, g.dim());
}

RatMatrix SignedPermutation::matrix() const {
  RatMatrix q(perm.size(), perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) q(perm[j], j) = signs[j];
  return q;
}

int SignedPermutation::determinant() const {
  int det = 1;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    det *= signs[i];
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) det = -det;
  }
  return det;
}

namespace {

// Q M Q^T without a matrix product: entry (perm i, perm j) is s_i s_j M(i, j).
RatMatrix conjugate_by(const SignedPermutation& q, const RatMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = m(i, j);
      if (v == 0) continue;
      out(q.perm[i], q.perm[j]) = q.signs[i] * q.signs[j] == 1 ? v : Rational(-v);
    }
  return out;
}

// Calls visit on every signed permutation of determinant +1 until it
// returns true. Returns whether some call did.
template <class Visit>
bool for_each_rotation_permutation(std::size_t n, Visit&& visit) {
  SignedPermutation q;
  q.perm.resize(n);
  std::iota(q.perm.begin(), q.perm.end(), std::size_t{0});
  q.signs.assign(n, 1);
  do {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      for (std::size_t i = 0; i < n; ++i) q.signs[i] = (mask >> i & 1) ? -1 : 1;
      if (q.determinant() != 1) continue;
      if (visit(q)) return true;
    }
  } while (std::next_permutation(q.perm.begin(), q.perm.end()));
  return false;
}

constexpr std::size_t kMaxSearchDim = 7;

std::optional<SignedPermutation> rotation_conjugator(const RatMatrix& x, const RatMatrix& y) {
  if (x.rows() > kMaxSearchDim) return std::nullopt;
  std::optional<SignedPermutation> found;
  for_each_rotation_permutation(x.rows(), [&](const SignedPermutation& q) {
    if (!(conjugate_by(q, x) == y)) return false;
    found = q;
    return true;
  });
  return found;
}

// Pairs up elements with equal labels; nullopt if the label counts differ.
template <class Label>
std::optional<std::vector<std::size_t>> match_labels(const std::vector<Label>& a, const std::vector<Label>& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::map<Label, std::vector<std::size_t>> pool;
  for (std::size_t j = 0; j < b.size(); ++j) pool[b[j]].push_back(j);
  std::map<Label, std::size_t> used;
  std::vector<std::size_t> bijection(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto it = pool.find(a[i]);
    std::size_t& k = used[a[i]];
    if (it == pool.end() || k >= it->second.size()) return std::nullopt;
    bijection[i] = it->second[k++];
  }
  return bijection;
}

std::size_t class_label(const FiniteOrthGroup& ambient, const RatMatrix& x) {
  auto ix = ambient.index_of(x);
  if (!ix) throw AmbientMismatch("element " + to_string(x) + " is not in the ambient group");
  std::size_t label = *ix;
  for (const auto& g : ambient.elements()) {
    // g^-1 = g^T for orthogonal g.
    auto c = ambient.index_of(g * x * g.transpose());
    label = std::min(label, *c);
  }
  return label;
}

}  // namespace

std::optional<AlmostConjugacy> almost_conjugate(const FiniteOrthGroup& a, const FiniteOrthGroup& b,
                                                const Ambient& ambient) {
  if (a.dim() != b.dim()) throw DimensionMismatch("groups act on different dimensions");
  if (a.order() != b.order()) return std::nullopt;
  if (std::holds_alternative<FiniteAffineGroup>(ambient))
    throw AmbientMismatch("orthogonal groups cannot be compared inside an affine torus group");

  if (const auto* finite = std::get_if<FiniteOrthGroup>(&ambient)) {
    std::vector<std::size_t> la, lb;
    for (const auto& x : a.elements()) la.push_back(class_label(*finite, x));
    for (const auto& y : b.elements()) lb.push_back(class_label(*finite, y));
    auto bij = match_labels(la, lb);
    if (!bij) return std::nullopt;
    return AlmostConjugacy{*bij, false};
  }

  std::vector<std::vector<Rational>> la, lb;
  for (const auto& x : a.elements()) la.push_back(charpoly_coefficients(x));
  for (const auto& y : b.elements()) lb.push_back(charpoly_coefficients(y));
  auto bij = match_labels(la, lb);
  if (!bij) return std::nullopt;
  bool certified = true;
  for (std::size_t i = 0; i < a.order() && certified; ++i)
    certified = rotation_conjugator(a.element(i), b.element((*bij)[i])).has_value();
  return AlmostConjugacy{*bij, certified};
}

std::optional<AlmostConjugacy> almost_conjugate(const FiniteAffineGroup& a, const FiniteAffineGroup& b,
                                                const FiniteAffineGroup& ambient) {
  if (a.dim() != ambient.dim() || b.dim() != ambient.dim())
    throw DimensionMismatch("groups and ambient act on tori of different dimensions");
  if (a.order() != b.order()) return std::nullopt;
  std::vector<TorusElement> inverses;
  for (const auto& g : ambient.elements()) inverses.push_back(ambient.inverse(g));
  auto labels = [&](const FiniteAffineGroup& h) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < h.order(); ++i) {
      auto ix = ambient.index_of(h.affine(i));
      if (!ix) throw AmbientMismatch("element " + std::to_string(i) + " is not in the ambient group");
      std::size_t label = *ix;
      const TorusElement& x = ambient.element(*ix);
      for (std::size_t k = 0; k < ambient.order(); ++k) {
        auto c = ambient.index_of(ambient.multiply(ambient.multiply(ambient.element(k), x), inverses[k]));
        if (!c) throw AmbientMismatch("ambient group is not closed under conjugation");
        label = std::min(label, *c);
      }
      out.push_back(label);
    }
    return out;
  };
  auto bij = match_labels(labels(a), labels(b));
  if (!bij) return std::nullopt;
  return AlmostConjugacy{*bij, false};
}

// ---------------------------------------------------------------------------

std::string ConjugacyVerdict::describe() const {
  switch (kind) {
    case Kind::Conjugate:
      return "conjugate";
    case Kind::ProvablyNot:
      return "not conjugate: subgroups of order " + std::to_string(witness_order) + " with fixed dimension " +
             std::to_string(witness_fixed_dim) + " occur " + std::to_string(count_a) + " vs " +
             std::to_string(count_b) + " times";
    case Kind::Inconclusive:
      return "inconclusive: invariants agree but no signed-permutation conjugator exists";
  }
  return "";
}

ConjugacyVerdict conjugate_in_orthogonal(const FiniteOrthGroup& a, const FiniteOrthGroup& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("groups act on different dimensions");
  ConjugacyVerdict v;
  if (a.order() != b.order()) {
    v.kind = ConjugacyVerdict::Kind::ProvablyNot;
    v.witness_order = std::max(a.order(), b.order());
    v.witness_fixed_dim = fixed_dim(a.order() > b.order() ? a : b,
                                    subgroups(a.order() > b.order() ? a : b).front());
    v.count_a = a.order() > b.order() ? 1 : 0;
    v.count_b = 1 - v.count_a;
    return v;
  }
  auto signature = [](const FiniteOrthGroup& g) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> counts;
    for (const auto& s : subgroups(g)) ++counts[{s.size(), fixed_dim(g, s)}];
    return counts;
  };
  auto sa = signature(a), sb = signature(b);
  std::set<std::pair<std::size_t, std::size_t>> keys;
  for (const auto& [k, c] : sa) keys.insert(k);
  for (const auto& [k, c] : sb) keys.insert(k);
  for (auto it = keys.rbegin(); it != keys.rend(); ++it) {
    std::size_t ca = sa.count(*it) ? sa.at(*it) : 0, cb = sb.count(*it) ? sb.at(*it) : 0;
    if (ca != cb) {
      v.kind = ConjugacyVerdict::Kind::ProvablyNot;
      v.witness_order = it->first;
      v.witness_fixed_dim = it->second;
      v.count_a = ca;
      v.count_b = cb;
      return v;
    }
  }
  if (a.dim() <= kMaxSearchDim) {
    for_each_rotation_permutation(a.dim(), [&](const SignedPermutation& q) {
      for (const auto& x : a.elements())
        if (!b.index_of(conjugate_by(q, x))) return false;
      v.conjugator = q;
      return true;
    });
  }
  v.kind = v.conjugator ? ConjugacyVerdict::Kind::Conjugate : ConjugacyVerdict::Kind::Inconclusive;
  return v;
}

// ---------------------------------------------------------------------------

OrderWitness max_order_with_fixed_dim(const FiniteOrthGroup& g, std::size_t d) {
  if (d > g.dim()) throw Error("fixed dimension " + std::to_string(d) + " exceeds n = " + std::to_string(g.dim()));
  OrderWitness out{0, {}};
  for (const auto& s : subgroups(g)) {
    if (s.size() < out.order) break;
    if (fixed_dim(g, s) < d) continue;
    out.order = s.size();
    out.witnesses.push_back(s);
  }
  return out;
}

namespace {

void require_signed_diagonal(const FiniteOrthGroup& g, const char* what) {
  if (!g.is_signed_diagonal())
    throw UnsupportedGroupClass(std::string(what) + " is only implemented for signed-diagonal groups");
}

}  // namespace

std::size_t m_number_finite_H(const FiniteOrthGroup& g, const FiniteOrthGroup& h) {
  require_signed_diagonal(g, "m_number_finite_H");
  require_signed_diagonal(h, "m_number_finite_H");
  if (g.dim() != h.dim()) throw DimensionMismatch("groups act on different dimensions");
  const std::size_t n = g.dim();
  // Diagonal groups are SO(n)-conjugate into h exactly when some coordinate
  // permutation maps them into h (signs can always fix the determinant).
  for (const auto& s : subgroups(g)) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      bool inside = true;
      for (std::size_t idx : s) {
        const RatMatrix& m = g.element(idx);
        RatMatrix c(n, n);
        for (std::size_t i = 0; i < n; ++i) c(perm[i], perm[i]) = m(i, i);
        if (!h.index_of(c)) {
          inside = false;
          break;
        }
      }
      if (inside) return s.size();
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return 1;
}

FiniteOrthGroup ambient_core(const FiniteOrthGroup& g) {
  const RatMatrix id = RatMatrix::identity(g.dim());
  RatMatrix minus = RatMatrix::zero(g.dim(), g.dim()) - id;
  std::vector<RatMatrix> core{id};
  if (g.index_of(minus)) core.push_back(minus);
  return FiniteOrthGroup(g.dim(), core);
}

std::string SphereStratum::describe() const {
  if (fixed_dim == 1) return point_count == 1 ? "point" : std::to_string(point_count) + " points";
  if (fixed_dim == 2) return "circle";
  return (kind == Kind::ProjectiveSpace ? "RP^" : "S^") + std::to_string(fixed_dim - 1);
}

std::vector<SphereStratum> sphere_strata(const FiniteOrthGroup& g) {
  require_signed_diagonal(g, "sphere_strata");
  const std::size_t n = g.dim();
  OrderWitness top = max_order_with_fixed_dim(g, 1);
  std::vector<SphereStratum> out;
  if (top.order <= 1) return out;

  std::set<Subgroup> seen;
  for (const auto& s : top.witnesses) {
    if (seen.count(s)) continue;
    // Subgroups conjugate to s give the same stratum in the quotient.
    for (std::size_t x = 0; x < g.order(); ++x) {
      Subgroup c;
      for (std::size_t i : s) c.push_back(*g.index_of(g.element(x) * g.element(i) * g.element(x).transpose()));
      std::sort(c.begin(), c.end());
      seen.insert(c);
    }
    std::vector<RatMatrix> mats;
    for (std::size_t i : s) mats.push_back(g.element(i));
    RatMatrix stacked(s.size() * n, n);
    for (std::size_t k = 0; k < mats.size(); ++k) {
      RatMatrix d = mats[k] - RatMatrix::identity(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) stacked(k * n + i, j) = d(i, j);
    }
    std::vector<RatVector> basis;
    for (const auto& v : kernel_saturated(stacked)) {
      RatVector r;
      for (const auto& x : v) r.emplace_back(x);
      basis.push_back(std::move(r));
    }
    bool antipodal = std::any_of(g.elements().begin(), g.elements().end(), [&](const RatMatrix& m) {
      return std::all_of(basis.begin(), basis.end(), [&](const RatVector& v) {
        RatVector w = m * v;
        for (std::size_t i = 0; i < n; ++i)
          if (w[i] != -v[i]) return false;
        return true;
      });
    });
    SphereStratum st;
    st.fixed_dim = basis.size();
    st.kind = antipodal ? SphereStratum::Kind::ProjectiveSpace : SphereStratum::Kind::Sphere;
    st.components = 1;
    if (st.fixed_dim == 1) {
      st.point_count = antipodal ? 1 : 2;
      st.components = st.point_count;
    }
    st.stabilizer = s;
    st.type = classify_matrix_group(mats);
    out.push_back(std::move(st));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SphereStratum& a, const SphereStratum& b) { return a.fixed_dim > b.fixed_dim; });
  return out;
}

}  // namespace orbispec

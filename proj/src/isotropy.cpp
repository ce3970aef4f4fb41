#include "orbispec/isotropy.hpp"

#include "orbispec/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace orbispec {

// ---------------------------------------------------------------------------
// Affine subspaces

std::optional<AffineSubspace> AffineSubspace::solve(const RatMatrix& equations, const RatVector& rhs) {
  const std::size_t n = equations.cols();
  if (equations.rows() != rhs.size()) throw DimensionMismatch("affine system: rhs length mismatch");
  RatMatrix aug(equations.rows(), n + 1);
  for (std::size_t i = 0; i < equations.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = equations(i, j);
    aug(i, n) = rhs[i];
  }
  std::vector<std::size_t> pivots;
  RatMatrix reduced = equations.rows() ? rref(aug, &pivots) : aug;
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;

  AffineSubspace s;
  s.n_ = n;
  const std::size_t codim = pivots.size();
  s.equations_ = RatMatrix(codim, n);
  s.rhs_.assign(codim, Rational(0));
  s.base_.assign(n, Rational(0));
  for (std::size_t i = 0; i < codim; ++i) {
    for (std::size_t j = 0; j < n; ++j) s.equations_(i, j) = reduced(i, j);
    s.rhs_[i] = reduced(i, n);
    s.base_[pivots[i]] = reduced(i, n);
  }
  if (codim == 0) {
    for (std::size_t j = 0; j < n; ++j) {
      IntVector e(n, 0);
      e[j] = 1;
      s.directions_.push_back(std::move(e));
    }
  } else {
    for (const auto& v : kernel_saturated(s.equations_)) {
      IntVector d;
      for (const auto& x : v) d.push_back(to_int64(x));
      s.directions_.push_back(std::move(d));
    }
  }
  return s;
}

AffineSubspace AffineSubspace::whole_space(std::size_t n) { return *solve(RatMatrix(0, n), {}); }

bool AffineSubspace::contains(const RatVector& x) const {
  if (x.size() != n_) throw DimensionMismatch("point dimension mismatch");
  return equations_ * x == rhs_;
}

std::optional<AffineSubspace> intersect(const AffineSubspace& a, const AffineSubspace& b) {
  const std::size_t n = a.ambient_dim();
  if (b.ambient_dim() != n) throw DimensionMismatch("subspace dimension mismatch");
  const std::size_t ra = a.equations().rows(), rb = b.equations().rows();
  RatMatrix e(ra + rb, n);
  RatVector f;
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < n; ++j) e(i, j) = a.equations()(i, j);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < n; ++j) e(ra + i, j) = b.equations()(i, j);
  f = a.rhs();
  f.insert(f.end(), b.rhs().begin(), b.rhs().end());
  return AffineSubspace::solve(e, f);
}

AffineSubspace image(const AffineIsometry& gamma, const AffineSubspace& s) {
  // x = P^-1 (y - c), so E x = f becomes (E P^-1) y = f + E P^-1 c.
  RatMatrix e = s.equations() * to_rational(inverse_unimodular(gamma.linear));
  RatVector f = s.rhs();
  RatVector shift = e * gamma.transl;
  for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
  return *AffineSubspace::solve(e, f);
}

std::optional<AffineSubspace> fixed_set(const AffineIsometry& element) {
  const std::size_t n = element.dim();
  return AffineSubspace::solve(to_rational(IntMatrix::identity(n) - element.linear), element.transl);
}

IntVector translation_window(const AffineIsometry& rep) {
  const std::size_t n = rep.dim();
  Rational cmax = 0;
  for (const auto& c : rep.transl) cmax = std::max(cmax, Rational(abs(c)));
  IntVector radius(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t rowsum = 0;
    for (std::size_t j = 0; j < n; ++j) rowsum += std::abs((i == j ? 1 : 0) - rep.linear(i, j));
    radius[i] = to_int64(ceil_of(Rational(rowsum) + cmax));
  }
  return radius;
}

// ---------------------------------------------------------------------------
// Stabilizers

namespace {

IsotropyType type_of(const std::vector<AffineIsometry>& elements) {
  std::vector<IntMatrix> linear;
  for (const auto& e : elements) linear.push_back(e.linear);
  return classify_matrix_group(linear);
}

}  // namespace

Stabilizer stabilizer(const CrystalGroup& g, const RatVector& x) {
  if (x.size() != g.dim()) throw DimensionMismatch("point dimension mismatch");
  Stabilizer out;
  for (const auto& rep : g.reps) {
    // lambda = x - P x - c must be a lattice vector.
    RatVector px = to_rational(rep.linear) * x;
    RatVector lambda(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) lambda[i] = x[i] - px[i] - rep.transl[i];
    if (!is_integral(lambda)) continue;
    RatVector c = rep.transl;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += lambda[i];
    out.elements.push_back(AffineIsometry{rep.linear, std::move(c)});
  }
  out.type = type_of(out.elements);
  return out;
}

// ---------------------------------------------------------------------------
// Singular flats

namespace {

bool meets_unit_cube(const AffineSubspace& s) {
  const std::size_t n = s.ambient_dim();
  const RatVector& b = s.base();
  if (s.dim() == 0) {
    return std::all_of(b.begin(), b.end(), [](const Rational& v) { return v >= 0 && v <= 1; });
  }
  if (s.dim() == 1) {
    const IntVector& d = s.directions()[0];
    std::optional<Rational> lo, hi;
    for (std::size_t j = 0; j < n; ++j) {
      if (d[j] == 0) {
        if (b[j] < 0 || b[j] > 1) return false;
        continue;
      }
      Rational t0 = (0 - b[j]) / d[j], t1 = (1 - b[j]) / d[j];
      if (t0 > t1) std::swap(t0, t1);
      if (!lo || t0 > *lo) lo = t0;
      if (!hi || t1 < *hi) hi = t1;
    }
    return !lo || *lo <= *hi;
  }
  if (s.equations().rows() == 1) {
    // A hyperplane e.x = f meets the cube iff f lies between the extreme
    // values of e.x over the vertices.
    Rational lo = 0, hi = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& e = s.equations()(0, j);
      if (e < 0) lo += e;
      else hi += e;
    }
    return lo <= s.rhs()[0] && s.rhs()[0] <= hi;
  }
  return true;
}

// Fixed sets of all elements rep + lambda, lambda in the window, meeting the
// unit cube. Consistency of (I - P) x = c + lambda is tested through a
// precomputed row reduction T (I - P) = R before building the subspace.
std::vector<AffineSubspace> fixed_sets_in_window(const AffineIsometry& rep) {
  const std::size_t n = rep.dim();
  std::vector<AffineSubspace> out;
  if (rep.linear == IntMatrix::identity(n)) return out;
  RatMatrix a = to_rational(IntMatrix::identity(n) - rep.linear);
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<std::size_t> pivots;
  RatMatrix reduced = rref(aug, &pivots);
  std::size_t r = 0;
  while (r < pivots.size() && pivots[r] < n) ++r;
  RatMatrix left_kernel(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) left_kernel(i - r, j) = reduced(i, n + j);

  IntVector radius = translation_window(rep);
  IntVector lambda(n);
  for (std::size_t i = 0; i < n; ++i) lambda[i] = -radius[i];
  RatVector rhs(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) rhs[i] = rep.transl[i] + lambda[i];
    bool consistent = true;
    for (std::size_t i = 0; i < left_kernel.rows() && consistent; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += left_kernel(i, j) * rhs[j];
      consistent = s == 0;
    }
    if (consistent) {
      auto flat = AffineSubspace::solve(a, rhs);
      if (flat && meets_unit_cube(*flat)) out.push_back(std::move(*flat));
    }
    std::size_t k = 0;
    while (k < n && lambda[k] == radius[k]) {
      lambda[k] = -radius[k];
      ++k;
    }
    if (k == n) break;
    ++lambda[k];
  }
  return out;
}

// Canonical key of the class of a flat modulo lattice translations: the
// equations E together with f reduced modulo E Z^n.
struct FlatKey {
  RatMatrix equations;
  RatVector rhs;
  friend bool operator<(const FlatKey& a, const FlatKey& b) {
    if (!(a.equations == b.equations)) return a.equations < b.equations;
    return a.rhs < b.rhs;
  }
  friend bool operator==(const FlatKey& a, const FlatKey& b) {
    return a.equations == b.equations && a.rhs == b.rhs;
  }
};

FlatKey key_of(const AffineSubspace& s) {
  const RatMatrix& e = s.equations();
  const std::size_t codim = e.rows(), n = e.cols();
  Integer den = 1;
  for (const auto& x : e.data()) den = lcm_of(den, x.get_den());
  IntegerMatrix scaled(codim, n);
  for (std::size_t i = 0; i < codim; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = e(i, j) * den;
      scaled(i, j) = v.get_num();
    }
  RatVector y = s.rhs();
  for (auto& v : y) v *= den;
  if (codim > 0) {
    IntegerMatrix h = column_hermite(scaled).hermite;
    for (std::size_t i = 0; i < codim; ++i) {
      Integer q = floor_of(y[i] / Rational(h(i, i)));
      for (std::size_t r = i; r < codim; ++r) y[r] -= Rational(q * h(r, i));
    }
  }
  return FlatKey{e, std::move(y)};
}

std::vector<SingularFlat> find_singular_flats(const CrystalGroup& g, bool parallel) {
  const std::size_t n = g.dim();
  const std::int64_t reps = static_cast<std::int64_t>(g.reps.size());
  std::vector<std::vector<AffineSubspace>> per_rep(g.reps.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::int64_t i = 0; i < reps; ++i) {
    try {
      per_rep[static_cast<std::size_t>(i)] = fixed_sets_in_window(g.reps[static_cast<std::size_t>(i)]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::set<AffineSubspace> flats;
  for (auto& list : per_rep)
    for (auto& f : list) flats.insert(std::move(f));

  // Close under intersection; anything that eventually contains a singular
  // flat meeting the cube meets the cube itself, so filtering is safe.
  std::vector<AffineSubspace> frontier(flats.begin(), flats.end());
  while (!frontier.empty()) {
    std::vector<AffineSubspace> next;
    std::vector<AffineSubspace> current(flats.begin(), flats.end());
    for (const auto& a : frontier)
      for (const auto& b : current) {
        if (a == b) continue;
        auto c = intersect(a, b);
        if (!c || !meets_unit_cube(*c) || flats.count(*c)) continue;
        flats.insert(*c);
        next.push_back(std::move(*c));
      }
    frontier = std::move(next);
  }

  // Keep the flats that are exactly the fixed set of their pointwise
  // stabilizer; index them by class modulo the lattice.
  std::map<FlatKey, SingularFlat> classes;
  for (const auto& flat : flats) {
    FlatKey key = key_of(flat);
    if (classes.count(key)) continue;
    Stabilizer at_base = stabilizer(g, flat.base());
    Stabilizer pointwise;
    for (auto& e : at_base.elements) {
      bool fixes_directions = std::all_of(flat.directions().begin(), flat.directions().end(),
                                          [&](const IntVector& d) { return e.linear * d == d; });
      if (fixes_directions) pointwise.elements.push_back(std::move(e));
    }
    AffineSubspace fix = AffineSubspace::whole_space(n);
    for (const auto& e : pointwise.elements) fix = *intersect(fix, *fixed_set(e));
    if (!(fix == flat)) continue;
    pointwise.type = type_of(pointwise.elements);
    classes.emplace(std::move(key), SingularFlat{flat, std::move(pointwise)});
  }

  // Gamma-orbits: the reps permute the classes.
  std::vector<FlatKey> keys;
  for (const auto& [key, unused] : classes) keys.push_back(key);
  std::map<FlatKey, std::size_t> index;
  for (std::size_t i = 0; i < keys.size(); ++i) index.emplace(keys[i], i);
  std::vector<std::size_t> parent(keys.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < keys.size(); ++i)
    for (const auto& rep : g.reps) {
      auto it = index.find(key_of(image(rep, classes.at(keys[i]).flat)));
      if (it == index.end()) throw Error("singular flat image missing from the search for " + g.name);
      std::size_t a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  std::vector<SingularFlat> out;
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (find(i) == i) out.push_back(classes.at(keys[i]));
  std::stable_sort(out.begin(), out.end(),
                   [](const SingularFlat& a, const SingularFlat& b) { return a.flat.dim() < b.flat.dim(); });
  return out;
}

}  // namespace

std::vector<SingularFlat> singular_flats(const CrystalGroup& g) { return find_singular_flats(g, true); }
std::vector<SingularFlat> singular_flats_serial(const CrystalGroup& g) { return find_singular_flats(g, false); }

MaxIsotropy max_isotropy(const CrystalGroup& g) {
  MaxIsotropy out;
  std::set<std::string> seen;
  for (const auto& f : singular_flats(g)) {
    const IsotropyType& t = f.pointwise.type;
    if (t.order > out.order) {
      out.order = t.order;
      out.types.clear();
      seen.clear();
    }
    if (t.order == out.order && seen.insert(t.name()).second) out.types.push_back(t);
  }
  if (out.types.empty()) out.types.push_back(classify_group(true, {1}));
  std::sort(out.types.begin(), out.types.end());
  return out;
}

// ---------------------------------------------------------------------------
// Strata

std::string to_string(Topology t) {
  switch (t) {
    case Topology::Point: return "Point";
    case Topology::Circle: return "Circle";
    case Topology::OpenSegment: return "OpenSegment";
    case Topology::Surface: return "Surface";
  }
  return "?";
}

namespace {

// gcd of nonnegative rationals: the generator of a Z + b Z.
Rational rational_gcd(const Rational& a, const Rational& b) {
  Integer den = a.get_den() * b.get_den();
  Integer num;
  Integer x = a.get_num() * b.get_den(), y = b.get_num() * a.get_den();
  mpz_gcd(num.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return make_rational(num, den);
}

Rational mod(const Rational& t, const Rational& period) {
  return t - period * Rational(floor_of(t / period));
}

// Smallest s in [0, 1) with s d - w integral, if any; d primitive.
std::optional<Rational> line_shift(const IntVector& d, const RatVector& w) {
  std::size_t j0 = 0;
  while (d[j0] == 0) ++j0;
  std::int64_t dj = d[j0];
  for (std::int64_t k = 0; k < std::abs(dj); ++k) {
    Rational s = (w[j0] + k) / dj;
    bool ok = true;
    for (std::size_t j = 0; j < d.size() && ok; ++j) ok = is_integer(s * d[j] - w[j]);
    if (ok) return frac_part(s);
  }
  return std::nullopt;
}

// Components of the quotient of a singular line p + t d by its setwise
// stabilizer, cut at the points with larger isotropy.
std::vector<Stratum> line_strata(const CrystalGroup& g, const SingularFlat& f) {
  const std::size_t n = g.dim();
  const RatVector& p = f.flat.base();
  const IntVector& d = f.flat.directions()[0];
  IntVector neg_d(d);
  for (auto& x : neg_d) x = -x;

  Rational period = 1;
  std::optional<Rational> reflection;
  std::vector<std::pair<Rational, Rational>> special;  // t0 + tau Z
  for (const auto& rep : g.reps) {
    IntVector pd = rep.linear * d;
    RatVector pp = to_rational(rep.linear) * p;
    if (pd == d || pd == neg_d) {
      RatVector w(n);
      for (std::size_t j = 0; j < n; ++j) w[j] = pp[j] + rep.transl[j] - p[j];
      auto s = line_shift(d, w);
      if (s) {
        if (pd == d) period = rational_gcd(period, *s);
        else if (!reflection) reflection = *s / 2;
      }
    }
    if (pd == d) continue;
    // Points p + t d fixed by rep + lambda: t u - r integral.
    IntVector u(n);
    RatVector r(n);
    for (std::size_t j = 0; j < n; ++j) {
      u[j] = d[j] - pd[j];
      r[j] = rep.transl[j] - (p[j] - pp[j]);
    }
    bool solvable = true;
    std::int64_t gu = 0;
    std::size_t j0 = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (u[j] == 0) solvable = solvable && is_integer(r[j]);
      else {
        gu = std::gcd(gu, std::abs(u[j]));
        if (j0 == n) j0 = j;
      }
    }
    if (!solvable) continue;
    for (std::int64_t k = 0; k < std::abs(u[j0]); ++k) {
      Rational t = (r[j0] + k) / u[j0];
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) ok = is_integer(t * u[j] - r[j]);
      if (ok) {
        special.emplace_back(t, make_rational(1, gu));
        break;
      }
    }
  }

  // Special points folded into the fundamental domain [0, period) of the
  // circle, or [0, period / 2] measured from a reflection centre.
  const Rational half = period / 2;
  const Rational origin = reflection ? mod(*reflection, half) : Rational(0);
  std::set<Rational> cuts;
  for (const auto& [t0, tau] : special) {
    Rational start = mod(t0 - origin, tau);
    for (Rational t = start; t < period; t += tau) {
      Rational u = mod(t, period);
      if (reflection && u > half) u = period - u;
      cuts.insert(u);
    }
  }
  if (reflection) {
    cuts.insert(Rational(0));
    cuts.insert(half);
  }

  const Rational metric = g.lattice.norm(d);
  std::vector<Stratum> out;
  auto piece = [&](Topology topo, const Rational& len) {
    out.push_back(Stratum{f.pointwise.type, 1, topo, len * len * metric, 1});
  };
  std::vector<Rational> pts(cuts.begin(), cuts.end());
  if (reflection) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) piece(Topology::OpenSegment, pts[i + 1] - pts[i]);
  } else if (pts.empty()) {
    piece(Topology::Circle, period);
  } else {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) piece(Topology::OpenSegment, pts[i + 1] - pts[i]);
    piece(Topology::OpenSegment, pts.front() + period - pts.back());
  }
  return out;
}

}  // namespace

std::vector<Stratum> singular_strata(const CrystalGroup& g) {
  if (g.dim() > 3) throw UnsupportedDimension("singular strata are only computed for n <= 3, got " + std::to_string(g.dim()));
  std::vector<Stratum> pieces;
  for (const auto& f : singular_flats(g)) {
    switch (f.flat.dim()) {
      case 0:
        pieces.push_back(Stratum{f.pointwise.type, 0, Topology::Point, Rational(0), 1});
        break;
      case 1:
        for (auto& s : line_strata(g, f)) pieces.push_back(std::move(s));
        break;
      default:
        pieces.push_back(Stratum{f.pointwise.type, f.flat.dim(), Topology::Surface, Rational(0), 1});
    }
  }
  auto less = [](const Stratum& a, const Stratum& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.isotropy.order != b.isotropy.order) return a.isotropy.order > b.isotropy.order;
    if (a.isotropy.name() != b.isotropy.name()) return a.isotropy.name() < b.isotropy.name();
    if (a.topology != b.topology) return a.topology < b.topology;
    return a.sq_length > b.sq_length;
  };
  std::sort(pieces.begin(), pieces.end(), less);
  std::vector<Stratum> out;
  for (auto& s : pieces) {
    if (!out.empty() && !less(out.back(), s) && !less(s, out.back())) ++out.back().count;
    else out.push_back(std::move(s));
  }
  return out;
}

}  // namespace orbispec

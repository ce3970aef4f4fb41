#include "orbispec/catalog.hpp"

#include "orbispec/spectrum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace orbispec::catalog {

bool operator<(const ExpectedStratum& a, const ExpectedStratum& b) {
  return std::tie(a.dim, a.isotropy, a.topology, a.sq_length, a.count) <
         std::tie(b.dim, b.isotropy, b.topology, b.sq_length, b.count);
}

std::vector<ExpectedStratum> summarize(const std::vector<Stratum>& strata) {
  std::vector<ExpectedStratum> out;
  for (const auto& s : strata) out.push_back({s.isotropy.name(), s.dim, s.topology, s.sq_length, s.count});
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(const std::vector<ExpectedStratum>& strata) {
  std::ostringstream os;
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const auto& s = strata[i];
    os << (i ? "; " : "") << s.count << "x " << orbispec::to_string(s.topology) << ' ' << s.isotropy;
    if (s.dim == 1) os << " sqLen " << orbispec::to_string(s.sq_length);
  }
  return strata.empty() ? "none" : os.str();
}

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

RatMatrix diag(std::initializer_list<Rational> d) { return RatMatrix::diagonal(std::vector<Rational>(d)); }

AffineIsometry iso(IntMatrix linear, RatVector transl = {}) {
  if (transl.empty()) transl.assign(linear.rows(), Rational(0));
  return AffineIsometry{std::move(linear), std::move(transl)};
}

// {g^0, ..., g^(order-1)}
std::vector<AffineIsometry> powers(const AffineIsometry& g, std::size_t order) {
  std::vector<AffineIsometry> out{AffineIsometry::identity(g.dim())};
  for (std::size_t i = 1; i < order; ++i) out.push_back(canonical(compose(g, out.back())));
  return out;
}

CrystalGroup make_group(std::string name, RatMatrix gram, std::vector<AffineIsometry> reps) {
  CrystalGroup g{std::move(name), Lattice(std::move(gram)), std::move(reps)};
  require_valid(g);
  return g;
}

ExpectedStratum circle(const char* iso_name, Rational sq, std::size_t count = 1) {
  return {iso_name, 1, Topology::Circle, std::move(sq), count};
}
ExpectedStratum segment(const char* iso_name, Rational sq, std::size_t count = 1) {
  return {iso_name, 1, Topology::OpenSegment, std::move(sq), count};
}
ExpectedStratum points(const char* iso_name, std::size_t count) {
  return {iso_name, 0, Topology::Point, Rational(0), count};
}

std::vector<ExpectedStratum> sorted(std::vector<ExpectedStratum> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Torus isometries that translate by e_i / 4.
std::vector<AffineIsometry> quarter_translations(std::size_t n) {
  std::vector<AffineIsometry> out;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector t(n, Rational(0));
    t[i] = q(1, 4);
    out.push_back(translation(t));
  }
  return out;
}

void append_group(std::vector<AffineIsometry>& gens, const FiniteAffineGroup& g) {
  for (std::size_t i = 0; i < g.order(); ++i) gens.push_back(g.affine(i));
}

const IntMatrix kTau{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}};
const IntMatrix kChi1{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
const IntMatrix kChi2{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}};
const IntMatrix kChi3{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}};

CatalogEntry make_flat1() {
  FlatPair p{
      make_group("flat1.g1", diag({4, 4, 1}), powers(iso(kTau), 4)),
      make_group("flat1.g2", diag({4, 4, 1}),
                 {AffineIsometry::identity(3), iso(kChi1, {q(1, 2), 0, 0}), iso(kChi2), iso(kChi3, {q(-1, 2), 0, 0})}),
      std::nullopt, std::nullopt, {}, {}};
  auto& e = p.expected;
  e.equal_k = {0};
  e.different_k = {1};
  e.max_isotropy = {{4, {"Z_4"}}, {2, {"Z_2"}}};
  e.strata = {sorted({circle("Z_4", 1, 2), circle("Z_2", 1)}), sorted({circle("Z_2", 4, 2), circle("Z_2", 1, 2)})};
  e.claims = {{"compare k=0", "isospectral on functions"},
              {"compare k=1", "not isospectral on 1-forms"},
              {"max isotropy", "maximal isotropy orders 4 and 2"},
              {"strata", "three unit circles (two Z_4, one Z_2) vs four Z_2 circles of lengths 2, 2, 1, 1"}};
  return {"flat1", "cube quotients by a quarter turn vs three half-turn screws; lattice 2Z x 2Z x Z", std::move(p)};
}

CatalogEntry make_flat2() {
  FlatPair p{make_group("flat2.g1", diag({4, 4, 4}), powers(iso(kTau), 4)),
             make_group("flat2.g2", diag({4, 4, 4}),
                        {AffineIsometry::identity(3), iso(kChi1), iso(kChi2), iso(kChi3)}),
             std::nullopt, std::nullopt, {}, {}};
  auto& e = p.expected;
  e.equal_k = {0};
  e.different_k = {1};
  e.max_isotropy = {{4, {"Z_4"}}, {4, {"Z2xZ2"}}};
  e.max_stratum_dim = {1, 0};
  e.strata = {sorted({circle("Z_4", 4, 2), circle("Z_2", 4)}), sorted({points("Z2xZ2", 8), segment("Z_2", 1, 12)})};
  e.claims = {{"compare k=0", "isospectral on functions"},
              {"compare k=1", "not isospectral on 1-forms"},
              {"max isotropy", "maximal isotropy groups Z_4 and Z2xZ2 of the same order"},
              {"max stratum dim", "maximal-isotropy set is a curve vs finitely many points"},
              {"strata", "eight Z2xZ2 points and twelve Z_2 open segments of length one in the second quotient"}};
  return {"flat2", "quarter turn vs the three coordinate half turns; lattice 2Z^3", std::move(p)};
}

}  // namespace

IntMatrix flat3_sublattice() { return IntMatrix{{1, 1, 0}, {1, -1, 0}, {0, 0, 2}}; }
IntMatrix flat3_conjugator() { return IntMatrix{{0, 0, 1}, {-1, 0, 0}, {0, 1, 0}}; }

namespace {

CatalogEntry make_flat3() {
  // Lattice Z x Z x (1/sqrt 2) Z, so the Gram matrix is diag(1, 1, 1/2) and
  // both linear parts keep their ambient matrices.
  const IntMatrix tau{{0, -1, 0}, {-1, 0, 0}, {0, 0, -1}};
  const IntMatrix rho{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
  const RatMatrix gram = diag({1, 1, q(1, 2)});
  FlatPair p{make_group("flat3.g1", gram, {AffineIsometry::identity(3), iso(tau)}),
             make_group("flat3.g2", gram, {AffineIsometry::identity(3), iso(rho)}), flat3_sublattice(),
             std::nullopt, {}, {}};
  FiniteAffineGroup q1 = quotient_mod_sublattice(p.g1, *p.sublattice);
  FiniteAffineGroup q2 = quotient_mod_sublattice(p.g2, *p.sublattice);
  std::vector<AffineIsometry> gens = quarter_translations(3);
  append_group(gens, q1);
  append_group(gens, q2);
  gens.push_back(iso(flat3_conjugator()));
  p.ambient = closure(gens);
  p.ambient_generators = gens;
  auto& e = p.expected;
  e.equal_k = {0, 1, 2, 3};
  e.quotient_order = 8;
  e.almost_conjugate = true;
  e.strata = {sorted({circle("Z_2", 2, 2)}), sorted({circle("Z_2", q(1, 2), 4)})};
  e.claims = {{"compare", "isospectral on k-forms for every k"},
              {"quotient order", "both groups have order eight modulo the index-four sublattice"},
              {"almost conjugate", "quotients almost conjugate in a finite group of torus isometries"},
              {"strata", "two Z_2 circles of length sqrt 2 vs four of length 1/sqrt 2"}};
  return {"flat3", "a half turn about a diagonal axis vs about the vertical axis; lattice Z x Z x Z/sqrt2",
          std::move(p)};
}

CatalogEntry make_flat4() {
  const IntMatrix chi1{{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const IntMatrix chi2{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
  const IntMatrix chi3{{1, 0, 0}, {0, -1, 0}, {0, 0, 1}};
  const RatMatrix gram = diag({4, 4, 4});
  FlatPair p{make_group("flat4.g1", gram,
                        {AffineIsometry::identity(3), iso(chi1, {q(-1, 2), q(1, 2), 0}), iso(chi2),
                         iso(chi3, {q(1, 2), q(-1, 2), 0})}),
             make_group("flat4.g2", gram,
                        {AffineIsometry::identity(3), iso(chi1, {0, 0, q(1, 2)}), iso(chi2),
                         iso(chi3, {0, 0, q(1, 2)})}),
             IntMatrix::identity(3), std::nullopt, {}, {}};
  std::vector<AffineIsometry> gens = quarter_translations(3);
  append_group(gens, quotient_mod_sublattice(p.g1, *p.sublattice));
  append_group(gens, quotient_mod_sublattice(p.g2, *p.sublattice));
  std::vector<std::size_t> perm{0, 1, 2};
  do {
    IntMatrix m(3, 3);
    for (std::size_t j = 0; j < 3; ++j) m(perm[j], j) = 1;
    gens.push_back(iso(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  p.ambient = closure(gens);
  p.ambient_generators = gens;
  auto& e = p.expected;
  e.equal_k = {0, 1, 2, 3};
  e.quotient_order = 4;
  e.almost_conjugate = true;
  e.orientable = false;
  e.strata = {sorted({circle("Z_2", 4, 2)}), sorted({circle("Z_2", 1, 4)})};
  e.claims = {{"compare", "isospectral on k-forms for every k"},
              {"almost conjugate", "almost conjugate among permutations and quarter-lattice translations"},
              {"strata", "two Z_2 circles of length two vs four of length one"}};
  return {"flat4", "glide-reflection pairs differing in their translation parts; lattice 2Z^3", std::move(p)};
}

CatalogEntry make_flat5() {
  // Basis (2,0,0), (1,sqrt3,0), (0,0,1); the sixth-turn H and the half turn R
  // about the first axis in these coordinates.
  const IntMatrix h{{0, -1, 0}, {1, 1, 0}, {0, 0, 1}};
  const IntMatrix r{{1, 1, 0}, {0, -1, 0}, {0, 0, -1}};
  const RatMatrix gram{{4, 2, 0}, {2, 4, 0}, {0, 0, 1}};
  std::vector<AffineIsometry> g2_reps;
  for (const auto& rot : powers(iso(h * h), 3)) {
    g2_reps.push_back(rot);
    g2_reps.push_back(compose(rot, iso(r)));
  }
  FlatPair p{make_group("flat5.g1", gram, powers(iso(h), 6)), make_group("flat5.g2", gram, g2_reps),
             std::nullopt, std::nullopt, {}, {}};
  auto& e = p.expected;
  e.equal_k = {0};
  e.different_k = {1};
  e.max_isotropy = {{6, {"Z_6"}}, {6, {"D_3"}}};
  e.max_stratum_dim = {1, 0};
  e.strata = {sorted({circle("Z_6", 1), circle("Z_3", 1), circle("Z_2", 1)}),
              sorted({points("D_3", 2), segment("Z_3", q(1, 4)), circle("Z_3", 1), segment("Z_2", 4, 2)})};
  e.claims = {{"compare k=0", "isospectral on functions"},
              {"compare k=1", "not isospectral on 1-forms"},
              {"max isotropy", "maximal isotropy Z_6 vs the dihedral group with six elements"},
              {"max stratum dim", "a circle of length one vs two points"},
              {"strata", "circles of length one with isotropy Z_6, Z_3, Z_2 vs two D_3 points, Z_3 segment of "
                         "length 1/2 and circle of length one, two Z_2 segments of length two"}};
  return {"flat5", "hexagonal sixth turn vs the dihedral group of order six", std::move(p)};
}

std::pair<FiniteOrthGroup, FiniteOrthGroup> so6_groups() {
  return {FiniteOrthGroup::signed_diagonal({{1, 1, 1, 1, 1, 1},
                                            {-1, -1, -1, -1, -1, -1},
                                            {-1, -1, 1, 1, 1, 1},
                                            {-1, 1, -1, 1, 1, 1},
                                            {1, -1, -1, 1, 1, 1},
                                            {-1, 1, 1, -1, -1, -1},
                                            {1, -1, 1, -1, -1, -1},
                                            {1, 1, -1, -1, -1, -1}}),
          FiniteOrthGroup::signed_diagonal({{1, 1, 1, 1, 1, 1},
                                            {-1, -1, -1, -1, -1, -1},
                                            {-1, -1, 1, 1, 1, 1},
                                            {1, 1, -1, -1, 1, 1},
                                            {1, 1, 1, 1, -1, -1},
                                            {-1, -1, -1, -1, 1, 1},
                                            {-1, -1, 1, 1, -1, -1},
                                            {1, 1, -1, -1, -1, -1}})};
}

CatalogEntry make_so6_stiefel() {
  auto [a, b] = so6_groups();
  OrthPair p{a, b, {}};
  auto& e = p.expected;
  e.almost_conjugate = true;
  e.not_conjugate_witness = {4, 3};
  e.fixed_dim_orders = {{3, 4, 2, std::nullopt}, {2, 4, 4, std::nullopt}, {0, 8, 8, std::nullopt}};
  e.claims = {{"almost conjugate", "elementwise conjugate in SO(6)"},
              {"not conjugate", "only the first group has a four-element subgroup fixing a 3-space"},
              {"fixed dim orders", "isotropy orders 4 and 2 on the Stiefel manifold of 3-frames"}};
  return {"so6_stiefel", "two signed-diagonal subgroups of SO(6) acting on 3-frames in R^6", std::move(p)};
}

CatalogEntry make_so6_group() {
  auto [a, b] = so6_groups();
  OrthPair p{a, b, {}};
  auto& e = p.expected;
  e.almost_conjugate = true;
  e.m_self = 8;
  e.m_cross = 4;
  e.core_order = 2;
  e.claims = {{"m numbers", "m(G1,G1) = 8 and m(G2,G1) = 4"},
              {"core", "the intersection of all conjugates is {+I, -I}"},
              {"max isotropy", "maximal isotropy orders 8/2 = 4 vs 4/2 = 2 on SO(6)/G1"}};
  return {"so6_group", "the same pair acting on the quotient of SO(6) by the first group", std::move(p)};
}

CatalogEntry make_so6_sphere() {
  auto [a, b] = so6_groups();
  OrthPair p{a, b, {}};
  auto& e = p.expected;
  e.almost_conjugate = true;
  e.fixed_dim_orders = {{1, 4, 4, std::string("Z2xZ2")}};
  e.sphere_strata = {{"RP^2", "point", "point", "point"}, {"circle", "circle", "circle"}};
  e.claims = {{"fixed dim orders", "maximal isotropy Z2xZ2 on the 5-sphere for both groups"},
              {"sphere strata", "RP^2 plus three points vs three circles"}};
  return {"so6_sphere", "the same pair acting on the unit sphere S^5", std::move(p)};
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = [] {
    std::vector<CatalogEntry> v;
    v.push_back(make_flat1());
    v.push_back(make_flat2());
    v.push_back(make_flat3());
    v.push_back(make_flat4());
    v.push_back(make_flat5());
    v.push_back(make_so6_stiefel());
    v.push_back(make_so6_group());
    v.push_back(make_so6_sphere());
    return v;
  }();
  return all;
}

}  // namespace

std::vector<std::string> list() {
  return {"flat1", "flat2", "flat3", "flat4", "flat5", "so6_stiefel", "so6_group", "so6_sphere"};
}

const CatalogEntry& get(const std::string& name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  throw UnknownEntry("unknown catalog entry '" + name + "'");
}

// ---------------------------------------------------------------------------
// Golden runner

namespace {

std::string claim_for(const std::vector<std::pair<std::string, std::string>>& claims, const std::string& check) {
  for (const auto& [id, text] : claims)
    if (check.rfind(id, 0) == 0) return text;
  static const std::vector<std::pair<std::string, std::string>> generic{
      {"groups valid", "both groups are closed modulo their lattice and act by isometries"},
      {"poincare duality", "d_k = d_(n-k) for every k when all linear parts preserve orientation"},
      {"almost conjugate", "a bijection preserving conjugacy classes exists"},
      {"quotient order", "both groups have the stated order modulo the sublattice"}};
  for (const auto& [id, text] : generic)
    if (check.rfind(id, 0) == 0) return text;
  return "";
}

std::string describe(const Comparison& c) {
  if (c.equal) return "Equal";
  return "difference at mu = " + orbispec::to_string(c.mu) + " (" + std::to_string(c.a) + " vs " + std::to_string(c.b) + ")";
}

std::string describe(const MaxIsotropy& m) {
  std::string s = std::to_string(m.order) + ":";
  for (std::size_t i = 0; i < m.types.size(); ++i) s += (i ? "," : "") + m.types[i].name();
  return s;
}

std::string describe(const ExpectedMaxIsotropy& m) {
  std::string s = std::to_string(m.order) + ":";
  for (std::size_t i = 0; i < m.types.size(); ++i) s += (i ? "," : "") + m.types[i];
  return s;
}

std::size_t max_stratum_dim(const std::vector<Stratum>& strata, std::size_t order) {
  std::size_t d = 0;
  for (const auto& s : strata)
    if (s.isotropy.order == order) d = std::max(d, s.dim);
  return d;
}

class Recorder {
public:
  Recorder(std::string entry, const std::vector<std::pair<std::string, std::string>>& claims)
      : entry_(std::move(entry)), claims_(claims) {}

  void check(const std::string& id, const std::string& expected, const std::string& actual) {
    results_.push_back({entry_, id, claim_for(claims_, id), expected, actual, expected == actual});
  }
  // Evaluates `actual` lazily so that a throwing computation fails just this check.
  template <class F>
  void check_with(const std::string& id, const std::string& expected, F&& actual) {
    try {
      check(id, expected, actual());
    } catch (const std::exception& ex) {
      check(id, expected, std::string("error: ") + ex.what());
    }
  }
  std::vector<CheckResult> take() { return std::move(results_); }

private:
  std::string entry_;
  const std::vector<std::pair<std::string, std::string>>& claims_;
  std::vector<CheckResult> results_;
};

std::vector<CheckResult> run_flat(const std::string& name, const FlatPair& p) {
  const auto& e = p.expected;
  Recorder r(name, e.claims);
  r.check_with("groups valid", "valid", [&] {
    require_valid(p.g1);
    require_valid(p.g2);
    return std::string("valid");
  });
  for (std::size_t k : e.equal_k)
    r.check_with("compare k=" + std::to_string(k), "Equal", [&] { return describe(compare(p.g1, p.g2, k, e.cutoff)); });
  for (std::size_t k : e.different_k)
    r.check_with("compare k=" + std::to_string(k), "difference found",
                 [&] { return compare(p.g1, p.g2, k, e.cutoff).equal ? std::string("Equal") : "difference found"; });
  if (e.max_isotropy) {
    r.check_with("max isotropy g1", describe(e.max_isotropy->first), [&] { return describe(max_isotropy(p.g1)); });
    r.check_with("max isotropy g2", describe(e.max_isotropy->second), [&] { return describe(max_isotropy(p.g2)); });
  }
  if (e.max_stratum_dim) {
    auto dim_of = [](const CrystalGroup& g) {
      return std::to_string(max_stratum_dim(singular_strata(g), max_isotropy(g).order));
    };
    r.check_with("max stratum dim g1", std::to_string(e.max_stratum_dim->first), [&] { return dim_of(p.g1); });
    r.check_with("max stratum dim g2", std::to_string(e.max_stratum_dim->second), [&] { return dim_of(p.g2); });
  }
  if (e.strata) {
    r.check_with("strata g1", to_string(e.strata->first), [&] { return to_string(summarize(singular_strata(p.g1))); });
    r.check_with("strata g2", to_string(e.strata->second), [&] { return to_string(summarize(singular_strata(p.g2))); });
  }
  if (e.quotient_order && p.sublattice) {
    r.check_with("quotient order", std::to_string(*e.quotient_order) + "," + std::to_string(*e.quotient_order), [&] {
      return std::to_string(quotient_mod_sublattice(p.g1, *p.sublattice).order()) + "," +
             std::to_string(quotient_mod_sublattice(p.g2, *p.sublattice).order());
    });
  }
  if (e.almost_conjugate && p.sublattice && p.ambient) {
    r.check_with("almost conjugate", *e.almost_conjugate ? "found" : "none", [&] {
      auto bij = almost_conjugate(quotient_mod_sublattice(p.g1, *p.sublattice),
                                  quotient_mod_sublattice(p.g2, *p.sublattice), *p.ambient);
      return std::string(bij ? "found" : "none");
    });
  }
  const std::size_t n = p.g1.dim();
  if (e.orientable) {
    r.check_with("poincare duality", "holds", [&] {
      for (const auto* g : {&p.g1, &p.g2})
        for (std::size_t k = 0; k <= n; ++k)
          if (!compare_tables(spectrum_table(*g, k, e.cutoff), spectrum_table(*g, n - k, e.cutoff)).equal)
            return std::string("fails for ") + g->name + " at k=" + std::to_string(k);
      return std::string("holds");
    });
  } else {
    r.check_with("poincare duality", "skipped (non-orientable)", [&] {
      bool reversing = false;
      for (const auto* g : {&p.g1, &p.g2})
        for (const auto& rep : g->reps) reversing = reversing || determinant(rep.linear) < 0;
      return std::string(reversing ? "skipped (non-orientable)" : "orientable");
    });
  }
  return r.take();
}

std::string describe(const std::vector<SphereStratum>& strata) {
  std::string s;
  for (std::size_t i = 0; i < strata.size(); ++i) s += (i ? "," : "") + strata[i].describe();
  return s;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

std::vector<CheckResult> run_orth(const std::string& name, const OrthPair& p) {
  const auto& e = p.expected;
  Recorder r(name, e.claims);
  if (e.almost_conjugate)
    r.check_with("almost conjugate", *e.almost_conjugate ? "found" : "none",
                 [&] { return std::string(almost_conjugate(p.g1, p.g2) ? "found" : "none"); });
  if (e.not_conjugate_witness) {
    std::string expected = "ProvablyNot order " + std::to_string(e.not_conjugate_witness->first) + " fixedDim " +
                           std::to_string(e.not_conjugate_witness->second);
    r.check_with("not conjugate", expected, [&] {
      auto v = conjugate_in_orthogonal(p.g1, p.g2);
      if (v.kind != ConjugacyVerdict::Kind::ProvablyNot) return v.describe();
      return "ProvablyNot order " + std::to_string(v.witness_order) + " fixedDim " + std::to_string(v.witness_fixed_dim);
    });
  }
  for (const auto& f : e.fixed_dim_orders) {
    std::string expected = std::to_string(f.order_a) + "," + std::to_string(f.order_b);
    if (f.witness_type) expected += " " + *f.witness_type;
    r.check_with("fixed dim orders d=" + std::to_string(f.d), expected, [&] {
      auto a = max_order_with_fixed_dim(p.g1, f.d), b = max_order_with_fixed_dim(p.g2, f.d);
      std::string s = std::to_string(a.order) + "," + std::to_string(b.order);
      if (f.witness_type) {
        std::set<std::string> names;
        for (const auto* w : {&a, &b})
          for (const auto& sub : w->witnesses) {
            const FiniteOrthGroup& g = w == &a ? p.g1 : p.g2;
            std::vector<RatMatrix> mats;
            for (std::size_t i : sub) mats.push_back(g.element(i));
            names.insert(classify_matrix_group(mats).name());
          }
        s += " " + join(std::vector<std::string>(names.begin(), names.end()));
      }
      return s;
    });
  }
  if (e.m_self) r.check_with("m numbers self", std::to_string(*e.m_self), [&] { return std::to_string(m_number_finite_H(p.g1, p.g1)); });
  if (e.m_cross)
    r.check_with("m numbers cross", std::to_string(*e.m_cross), [&] { return std::to_string(m_number_finite_H(p.g2, p.g1)); });
  if (e.core_order) {
    r.check_with("core", std::to_string(*e.core_order), [&] { return std::to_string(ambient_core(p.g1).order()); });
    if (e.m_self && e.m_cross)
      r.check_with("max isotropy", std::to_string(*e.m_self / *e.core_order) + "," + std::to_string(*e.m_cross / *e.core_order), [&] {
        std::size_t core = ambient_core(p.g1).order();
        return std::to_string(m_number_finite_H(p.g1, p.g1) / core) + "," +
               std::to_string(m_number_finite_H(p.g2, p.g1) / core);
      });
  }
  if (e.sphere_strata) {
    r.check_with("sphere strata g1", join(e.sphere_strata->first), [&] { return describe(sphere_strata(p.g1)); });
    r.check_with("sphere strata g2", join(e.sphere_strata->second), [&] { return describe(sphere_strata(p.g2)); });
  }
  return r.take();
}

}  // namespace

std::vector<CheckResult> run(const CatalogEntry& entry) {
  if (entry.is_flat()) return run_flat(entry.name, entry.flat());
  return run_orth(entry.name, entry.orth());
}

}  // namespace orbispec::catalog

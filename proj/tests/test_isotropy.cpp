#include "orbispec/isotropy.hpp"
#include "orbispec/spectrum.hpp"
#include "support.hpp"

#include <random>
#include <set>

using namespace orbispec;
using orbispec::test::iso;
using orbispec::test::q;

namespace {

const IntMatrix kTau{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}};
const IntMatrix kChi1{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}};

const catalog::FlatPair& flat(const char* name) { return catalog::get(name).flat(); }

std::string key(const AffineIsometry& a) {
  std::string s = to_string(a.linear);
  for (const auto& c : a.transl) s += " " + to_string(c);
  return s;
}

std::set<std::string> keys(const std::vector<AffineIsometry>& v) {
  std::set<std::string> out;
  for (const auto& a : v) out.insert(key(a));
  return out;
}

std::vector<std::string> type_names(const MaxIsotropy& m) {
  std::vector<std::string> out;
  for (const auto& t : m.types) out.push_back(t.name());
  return out;
}

// A point of the flat away from the special points of the catalog groups.
RatVector generic_point(const AffineSubspace& s) {
  RatVector x = s.base();
  for (std::size_t i = 0; i < s.directions().size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += q(1, 13 + 4 * static_cast<long>(i)) * s.directions()[i][j];
  return x;
}

}  // namespace

TEST_CASE("fixed_set") {
  auto axis = fixed_set(iso(kTau));
  REQUIRE(axis);
  CHECK(axis->dim() == 1);
  CHECK(axis->contains({0, 0, q(3, 7)}));
  CHECK_FALSE(axis->contains({q(1, 2), 0, 0}));
  CHECK(axis->directions() == std::vector<IntVector>{{0, 0, 1}});

  CHECK_FALSE(fixed_set(iso(kChi1, {q(1, 2), 0, 0})));

  auto all = fixed_set(AffineIsometry::identity(3));
  REQUIRE(all);
  CHECK(all->dim() == 3);
  CHECK(*all == AffineSubspace::whole_space(3));

  CHECK_FALSE(fixed_set(iso(IntMatrix::identity(3), {1, 0, 0})));
}

TEST_CASE("affine subspaces: canonical form, intersection and images") {
  auto a = AffineSubspace::solve(RatMatrix{{2, 0, 0}}, {1});
  auto b = AffineSubspace::solve(RatMatrix{{1, 0, 0}}, {q(1, 2)});
  REQUIRE(a);
  REQUIRE(b);
  CHECK(*a == *b);
  auto c = AffineSubspace::solve(RatMatrix{{0, 1, 0}}, {0});
  auto line = intersect(*a, *c);
  REQUIRE(line);
  CHECK(line->dim() == 1);
  CHECK(line->contains({q(1, 2), 0, 5}));
  CHECK_FALSE(intersect(*a, *AffineSubspace::solve(RatMatrix{{1, 0, 0}}, {0})));

  AffineIsometry g = iso(kTau, {0, 0, q(1, 4)});
  AffineSubspace moved = image(g, *line);
  CHECK(moved.contains(g.apply({q(1, 2), 0, 5})));
  CHECK(moved.dim() == 1);
}

TEST_CASE("translation_window") {
  CHECK(translation_window(iso(kTau)) == IntVector{2, 2, 0});
  CHECK(translation_window(iso(kChi1, {q(1, 2), 0, 0})) == IntVector{1, 3, 3});
}

TEST_CASE("stabilizer") {
  auto s = stabilizer(flat("flat1").g1, {0, 0, q(2, 5)});
  CHECK(s.elements.size() == 4);
  CHECK(s.type.name() == "Z_4");

  auto o = stabilizer(flat("flat2").g2, {0, 0, 0});
  CHECK(o.elements.size() == 4);
  CHECK(o.type.name() == "Z2xZ2");

  for (const auto* g : orbispec::test::catalog_groups()) {
    auto t = stabilizer(*g, {q(1, 5), q(1, 7), q(1, 11)});
    CHECK(t.elements.size() == 1);
    CHECK(t.type.name() == "trivial");
  }
}

TEST_CASE("max_isotropy") {
  CHECK(max_isotropy(flat("flat1").g1).order == 4);
  CHECK(type_names(max_isotropy(flat("flat1").g1)) == std::vector<std::string>{"Z_4"});
  CHECK(max_isotropy(flat("flat1").g2).order == 2);
  CHECK(type_names(max_isotropy(flat("flat1").g2)) == std::vector<std::string>{"Z_2"});
  CHECK(type_names(max_isotropy(flat("flat2").g1)) == std::vector<std::string>{"Z_4"});
  CHECK(type_names(max_isotropy(flat("flat2").g2)) == std::vector<std::string>{"Z2xZ2"});
  CHECK(max_isotropy(flat("flat2").g2).order == 4);
  CHECK(type_names(max_isotropy(flat("flat5").g1)) == std::vector<std::string>{"Z_6"});
  CHECK(type_names(max_isotropy(flat("flat5").g2)) == std::vector<std::string>{"D_3"});
  CHECK(max_isotropy(flat("flat5").g2).order == 6);
}

TEST_CASE("singular_strata") {
  using catalog::summarize;
  using E = catalog::ExpectedStratum;
  CHECK(summarize(singular_strata(flat("flat1").g1)) ==
        std::vector<E>{{"Z_2", 1, Topology::Circle, 1, 1}, {"Z_4", 1, Topology::Circle, 1, 2}});
  CHECK(summarize(singular_strata(flat("flat1").g2)) ==
        std::vector<E>{{"Z_2", 1, Topology::Circle, 1, 2}, {"Z_2", 1, Topology::Circle, 4, 2}});
  CHECK(summarize(singular_strata(flat("flat2").g2)) ==
        std::vector<E>{{"Z2xZ2", 0, Topology::Point, 0, 8}, {"Z_2", 1, Topology::OpenSegment, 1, 12}});
  CHECK(summarize(singular_strata(flat("flat3").g1)) == std::vector<E>{{"Z_2", 1, Topology::Circle, 2, 2}});
  CHECK(summarize(singular_strata(flat("flat3").g2)) ==
        std::vector<E>{{"Z_2", 1, Topology::Circle, q(1, 2), 4}});

  CrystalGroup four{"four", Lattice(RatMatrix::identity(4)), {AffineIsometry::identity(4)}};
  CHECK_THROWS_AS(singular_strata(four), UnsupportedDimension);
}

TEST_CASE("stabilizers embed in the point group") {
  for (const auto* g : orbispec::test::catalog_groups())
    for (const auto& f : singular_flats(*g)) {
      auto s = stabilizer(*g, f.flat.base());
      std::set<IntMatrix> linear;
      for (const auto& a : s.elements) linear.insert(a.linear);
      CHECK(linear.size() == s.elements.size());
      CHECK(g->order() % s.elements.size() == 0);
    }
}

TEST_CASE("stabilizers are equivariant") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> shift(-2, 2), small(0, 9);
  for (const auto* g : orbispec::test::catalog_groups()) {
    std::vector<RatVector> points;
    for (const auto& f : singular_flats(*g)) points.push_back(f.flat.base());
    points.push_back({q(small(rng), 10), q(small(rng), 10), q(small(rng), 10)});
    std::uniform_int_distribution<std::size_t> pick(0, g->order() - 1);
    for (const auto& x : points) {
      AffineIsometry gamma = g->reps[pick(rng)];
      for (auto& c : gamma.transl) c += shift(rng);
      std::vector<AffineIsometry> conj;
      for (const auto& s : stabilizer(*g, x).elements) conj.push_back(compose(gamma, compose(s, invert(gamma))));
      CHECK(keys(stabilizer(*g, gamma.apply(x)).elements) == keys(conj));
    }
  }
}

TEST_CASE("max_isotropy is the largest stabilizer at sampled points") {
  for (const auto* g : orbispec::test::catalog_groups()) {
    std::size_t best = 1;
    for (const auto& f : singular_flats(*g)) {
      best = std::max(best, stabilizer(*g, f.flat.base()).elements.size());
      CHECK(f.pointwise.elements.size() == stabilizer(*g, generic_point(f.flat)).elements.size());
    }
    CHECK(best == max_isotropy(*g).order);
  }
}

TEST_CASE("serial and parallel singular flats agree") {
  for (const auto* g : orbispec::test::catalog_groups()) {
    auto a = singular_flats(*g), b = singular_flats_serial(*g);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].flat == b[i].flat);
  }
}

TEST_CASE("strata do not depend on the lattice basis") {
  std::mt19937 rng(31);
  for (const auto* g : orbispec::test::catalog_groups()) {
    auto base = catalog::summarize(singular_strata(*g));
    auto m = max_isotropy(*g);
    for (int t = 0; t < 20; ++t) {
      CrystalGroup h = change_basis(*g, orbispec::test::random_unimodular(3, rng));
      CAPTURE(g->name);
      CHECK(catalog::summarize(singular_strata(h)) == base);
      CHECK(max_isotropy(h).order == m.order);
    }
  }
}

TEST_CASE("isospectral on functions with different maximal isotropy") {
  for (const char* name : {"flat1", "flat2", "flat5"}) {
    const auto& p = flat(name);
    CHECK(compare(p.g1, p.g2, 0, 25).equal);
    auto a = max_isotropy(p.g1), b = max_isotropy(p.g2);
    CHECK((a.order != b.order || type_names(a) != type_names(b)));
  }
}

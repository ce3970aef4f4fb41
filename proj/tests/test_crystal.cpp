#include "orbispec/crystal.hpp"
#include "support.hpp"

#include <random>
#include <set>

using namespace orbispec;
using orbispec::test::iso;
using orbispec::test::q;

namespace {

const IntMatrix kTau{{0, -1, 0}, {1, 0, 0}, {0, 0, 1}};
const IntMatrix kChi1{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}};

const CrystalGroup& flat1(int i) {
  const auto& p = catalog::get("flat1").flat();
  return i == 1 ? p.g1 : p.g2;
}

AffineIsometry random_element(const CrystalGroup& g, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  std::uniform_int_distribution<int> shift(-2, 2);
  AffineIsometry a = g.reps[pick(rng)];
  for (auto& c : a.transl) c += shift(rng);
  return a;
}

}  // namespace

TEST_CASE("compose and invert") {
  AffineIsometry id = AffineIsometry::identity(3);
  AffineIsometry g = iso(kTau, {q(1, 2), q(1, 3), 0});
  CHECK(compose(id, g) == g);
  CHECK(compose(g, id) == g);

  AffineIsometry tau = iso(kTau);
  CHECK(invert(tau) == compose(tau, compose(tau, tau)));

  AffineIsometry rho1 = iso(kChi1, {q(1, 2), 0, 0});
  AffineIsometry sq = compose(rho1, rho1);
  CHECK(sq.linear == IntMatrix::identity(3));
  CHECK(sq.transl == RatVector{1, 0, 0});
  CHECK(canonical(sq) == id);

  CHECK_THROWS_AS(compose(tau, AffineIsometry::identity(2)), DimensionMismatch);
}

TEST_CASE("group axioms on random elements of catalog groups") {
  std::mt19937 rng(11);
  for (const auto* g : orbispec::test::catalog_groups()) {
    for (int t = 0; t < 30; ++t) {
      AffineIsometry a = random_element(*g, rng), b = random_element(*g, rng), c = random_element(*g, rng);
      CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
      CHECK(compose(a, invert(a)) == AffineIsometry::identity(3));
      CHECK(compose(invert(a), a) == AffineIsometry::identity(3));
    }
  }
}

TEST_CASE("validate") {
  CHECK_FALSE(validate(flat1(1)));
  CHECK_FALSE(validate(flat1(2)));

  CrystalGroup broken = flat1(1);
  for (auto& r : broken.reps)
    if (r.linear == kTau) r.transl = {q(1, 3), 0, 0};
  auto err = validate(broken);
  REQUIRE(err);
  CHECK(err->kind() == ValidationError::Kind::NotClosed);

  CrystalGroup trivial{"trivial", Lattice(RatMatrix::identity(3)), {AffineIsometry::identity(3)}};
  CHECK_FALSE(validate(trivial));

  CrystalGroup skew{"skew", Lattice(RatMatrix::diagonal({1, 2, 1})), {AffineIsometry::identity(3), iso(kTau)}};
  auto e2 = validate(skew);
  REQUIRE(e2);
  CHECK(e2->kind() == ValidationError::Kind::NotOrthogonal);

  CrystalGroup bad_id{"bad", Lattice(RatMatrix::identity(3)), {iso(IntMatrix::identity(3), {q(1, 2), 0, 0})}};
  auto e3 = validate(bad_id);
  REQUIRE(e3);
  CHECK(e3->kind() == ValidationError::Kind::BadIdentity);
}

TEST_CASE("point_group") {
  auto f = point_group(flat1(1));
  REQUIRE(f.size() == 4);
  CHECK(f[0] == IntMatrix::identity(3));
  std::set<IntMatrix> expected{IntMatrix::identity(3), kTau, kTau * kTau, kTau * kTau * kTau};
  CHECK(std::set<IntMatrix>(f.begin(), f.end()) == expected);

  CHECK(point_group(catalog::get("flat5").flat().g2).size() == 6);

  CrystalGroup trivial{"trivial", Lattice(RatMatrix::identity(3)), {AffineIsometry::identity(3)}};
  CHECK(point_group(trivial) == std::vector<IntMatrix>{IntMatrix::identity(3)});
}

TEST_CASE("valid groups have point groups closed under products and inverses") {
  for (const auto* g : orbispec::test::catalog_groups()) {
    auto f = point_group(*g);
    std::set<IntMatrix> set(f.begin(), f.end());
    CHECK(set.size() == f.size());
    for (const auto& a : f) {
      CHECK(set.count(inverse_unimodular(a)) == 1);
      for (const auto& b : f) CHECK(set.count(a * b) == 1);
    }
  }
}

TEST_CASE("quotient_mod_sublattice") {
  const auto& p3 = catalog::get("flat3").flat();
  CHECK(quotient_mod_sublattice(p3.g1, catalog::flat3_sublattice()).order() == 8);
  CHECK(quotient_mod_sublattice(p3.g2, catalog::flat3_sublattice()).order() == 8);

  for (const auto* g : orbispec::test::catalog_groups())
    CHECK(quotient_mod_sublattice(*g, IntMatrix::identity(3)).order() == g->order());

  IntMatrix twice = IntMatrix::diagonal({2, 2, 2});
  for (const auto* g : orbispec::test::catalog_groups())
    CHECK(quotient_mod_sublattice(*g, twice).order() == 8 * g->order());

  const auto& p4 = catalog::get("flat4").flat();
  auto q4 = quotient_mod_sublattice(p4.g1, IntMatrix::identity(3));
  CHECK(q4.order() == 4);
  for (const auto& r : p4.g1.reps) CHECK(q4.index_of(r));

  CHECK_THROWS_AS(quotient_mod_sublattice(flat1(1), IntMatrix{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), NotInvariantError);
  CHECK_THROWS_AS(quotient_mod_sublattice(flat1(1), IntMatrix{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}), NotSublatticeError);
}

TEST_CASE("closure") {
  auto one = closure({AffineIsometry::identity(3)});
  CHECK(one.order() == 1);

  const auto& p3 = catalog::get("flat3").flat();
  REQUIRE(p3.ambient);
  const FiniteAffineGroup& g = *p3.ambient;
  CHECK(g.is_closed());
  CHECK(g.contains_identity());
  for (const auto* q : {&p3.g1, &p3.g2}) {
    auto quo = quotient_mod_sublattice(*q, catalog::flat3_sublattice());
    for (std::size_t i = 0; i < quo.order(); ++i) CHECK(g.index_of(quo.affine(i)));
  }

  const auto& p4 = catalog::get("flat4").flat();
  REQUIRE(p4.ambient);
  for (const auto& r : p4.g1.reps) CHECK(p4.ambient->index_of(r));
  for (const auto& r : p4.g2.reps) CHECK(p4.ambient->index_of(r));

  CHECK_THROWS_AS(closure({translation({q(1, 7), 0, 0})}, 5), BoundExceededError);
}

TEST_CASE("closure is idempotent") {
  for (const char* name : {"flat3", "flat4"}) {
    const auto& amb = *catalog::get(name).flat().ambient;
    std::vector<AffineIsometry> all;
    for (std::size_t i = 0; i < amb.order(); ++i) all.push_back(amb.affine(i));
    auto again = closure(all);
    CHECK(again.order() == amb.order());
    for (const auto& a : all) CHECK(again.index_of(a));
  }
}

TEST_CASE("change_basis describes the same group") {
  std::mt19937 rng(5);
  IntMatrix u = orbispec::test::random_unimodular(3, rng);
  CrystalGroup h = change_basis(flat1(2), u);
  CHECK_FALSE(validate(h));
  CHECK(h.order() == flat1(2).order());
  CHECK(change_basis(h, inverse_unimodular(u)).lattice == flat1(2).lattice);
}

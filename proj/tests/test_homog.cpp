#include "orbispec/homog.hpp"
#include "support.hpp"

#include <random>

using namespace orbispec;

namespace {

const FiniteOrthGroup& g1() { return catalog::get("so6_group").orth().g1; }
const FiniteOrthGroup& g2() { return catalog::get("so6_group").orth().g2; }

FiniteOrthGroup trivial(std::size_t n) { return FiniteOrthGroup(n, {RatMatrix::identity(n)}); }

FiniteOrthGroup plus_minus(std::size_t n) {
  RatMatrix minus = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) minus(i, i) = -1;
  return FiniteOrthGroup(n, {RatMatrix::identity(n), minus});
}

FiniteOrthGroup conjugated(const FiniteOrthGroup& g, const RatMatrix& q) {
  RatMatrix qt = q.transpose();
  std::vector<RatMatrix> out;
  for (const auto& m : g.elements()) out.push_back(q * m * qt);
  return FiniteOrthGroup(g.dim(), out);
}

SignedPermutation random_signed_permutation(std::size_t n, std::mt19937& rng) {
  SignedPermutation p{std::vector<std::size_t>(n), std::vector<int>(n, 1)};
  for (std::size_t i = 0; i < n; ++i) p.perm[i] = i;
  std::shuffle(p.perm.begin(), p.perm.end(), rng);
  std::bernoulli_distribution coin;
  for (auto& s : p.signs) s = coin(rng) ? 1 : -1;
  return p;
}

std::vector<RatMatrix> subgroup_matrices(const FiniteOrthGroup& g, const Subgroup& s) {
  std::vector<RatMatrix> out;
  for (std::size_t i : s) out.push_back(g.element(i));
  return out;
}

}  // namespace

TEST_CASE("FiniteOrthGroup validates its input") {
  CHECK(g1().order() == 8);
  CHECK(g1().element(0) == RatMatrix::identity(6));
  CHECK(g1().is_signed_diagonal());
  RatMatrix flip = RatMatrix::identity(2);
  flip(0, 0) = -1;
  CHECK_THROWS(FiniteOrthGroup(2, {flip}));
  CHECK_THROWS(FiniteOrthGroup(2, {RatMatrix::identity(2), RatMatrix{{2, 0}, {0, 1}}}));
  CHECK_THROWS(FiniteOrthGroup(2, {RatMatrix::identity(2), RatMatrix{{0, -1}, {1, 0}}}));
}

TEST_CASE("fixed_dim") {
  RatMatrix a = RatMatrix::diagonal({-1, -1, 1, 1, 1, 1});
  RatMatrix b = RatMatrix::diagonal({-1, 1, -1, 1, 1, 1});
  CHECK(fixed_dim({RatMatrix::identity(6), a, b, a * b}, 6) == 3);
  CHECK(fixed_dim({RatMatrix::identity(6)}, 6) == 6);
  CHECK(fixed_dim(plus_minus(6).elements(), 6) == 0);
}

TEST_CASE("fixed_dim is antitone on subgroups") {
  for (const auto* g : {&g1(), &g2()}) {
    auto subs = subgroups(*g);
    for (const auto& s : subs)
      for (const auto& t : subs)
        if (std::includes(t.begin(), t.end(), s.begin(), s.end())) CHECK(fixed_dim(*g, s) >= fixed_dim(*g, t));
  }
}

TEST_CASE("subgroups of an elementary abelian group of order 8") {
  auto subs = subgroups(g1());
  CHECK(subs.size() == 16);
  CHECK(subs.front().size() == 8);
  CHECK(subs.back().size() == 1);
}

TEST_CASE("almost_conjugate") {
  auto ac = almost_conjugate(g1(), g2());
  REQUIRE(ac);
  CHECK(ac->special_orthogonal_certified);
  for (std::size_t i = 0; i < g1().order(); ++i)
    CHECK(charpoly_coefficients(g1().element(i)) == charpoly_coefficients(g2().element(ac->bijection[i])));

  auto self = almost_conjugate(g1(), g1());
  REQUIRE(self);
  for (std::size_t i = 0; i < g1().order(); ++i) CHECK(self->bijection[i] == i);

  CHECK(almost_conjugate(g2(), g1()));
  CHECK_FALSE(almost_conjugate(g1(), plus_minus(6)));

  const auto& p3 = catalog::get("flat3").flat();
  auto a = quotient_mod_sublattice(p3.g1, *p3.sublattice);
  auto b = quotient_mod_sublattice(p3.g2, *p3.sublattice);
  CHECK(almost_conjugate(a, b, *p3.ambient));
  CHECK_THROWS_AS(almost_conjugate(a, b, closure({AffineIsometry::identity(3)})), AmbientMismatch);
}

TEST_CASE("almost_conjugate inside a finite orthogonal ambient group") {
  std::vector<RatMatrix> all;
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<Rational> d;
    int parity = 0;
    for (int i = 0; i < 6; ++i) {
      bool neg = mask >> i & 1;
      parity ^= neg;
      d.push_back(neg ? -1 : 1);
    }
    if (!parity) all.push_back(RatMatrix::diagonal(d));
  }
  FiniteOrthGroup diag(6, all);
  // An abelian ambient group has singleton classes, so the two different
  // groups cannot be matched.
  CHECK_FALSE(almost_conjugate(g1(), g2(), Ambient{diag}));
  CHECK(almost_conjugate(g1(), g1(), Ambient{diag}));
}

TEST_CASE("conjugate_in_orthogonal") {
  auto v = conjugate_in_orthogonal(g1(), g2());
  CHECK(v.kind == ConjugacyVerdict::Kind::ProvablyNot);
  CHECK(v.witness_order == 4);
  CHECK(v.witness_fixed_dim == 3);
  CHECK(v.count_a > 0);
  CHECK(v.count_b == 0);

  auto t = conjugate_in_orthogonal(trivial(6), trivial(6));
  REQUIRE(t.kind == ConjugacyVerdict::Kind::Conjugate);
  CHECK(t.conjugator->matrix() == RatMatrix::identity(6));

  std::mt19937 rng(3);
  for (int i = 0; i < 10; ++i) {
    SignedPermutation p = random_signed_permutation(6, rng);
    FiniteOrthGroup h = conjugated(g2(), p.matrix());
    auto c = conjugate_in_orthogonal(g2(), h);
    REQUIRE(c.kind == ConjugacyVerdict::Kind::Conjugate);
    REQUIRE(c.conjugator);
    CHECK(c.conjugator->determinant() == 1);
    CHECK(conjugated(g2(), c.conjugator->matrix()).elements() == h.elements());
    CHECK(almost_conjugate(g2(), h));
  }
}

TEST_CASE("max_order_with_fixed_dim") {
  CHECK(max_order_with_fixed_dim(g1(), 3).order == 4);
  CHECK(max_order_with_fixed_dim(g2(), 3).order == 2);
  for (const auto* g : {&g1(), &g2()}) {
    auto w = max_order_with_fixed_dim(*g, 1);
    CHECK(w.order == 4);
    REQUIRE_FALSE(w.witnesses.empty());
    for (const auto& s : w.witnesses) CHECK(classify_matrix_group(subgroup_matrices(*g, s)).name() == "Z2xZ2");
    CHECK(max_order_with_fixed_dim(*g, 0).order == 8);
    CHECK(max_order_with_fixed_dim(*g, 2).order == 4);
    std::size_t prev = 8;
    for (std::size_t d = 0; d <= 6; ++d) {
      std::size_t o = max_order_with_fixed_dim(*g, d).order;
      CHECK(o <= prev);
      prev = o;
    }
  }
}

TEST_CASE("m_number_finite_H") {
  CHECK(m_number_finite_H(g2(), g1()) == 4);
  CHECK(m_number_finite_H(g1(), g1()) == 8);
  CHECK(m_number_finite_H(g1(), trivial(6)) == 1);
  RatMatrix rot{{0, -1, 0, 0, 0, 0}, {1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0},
                {0, 0, 0, 1, 0, 0},  {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}};
  FiniteOrthGroup c4(6, {RatMatrix::identity(6), rot, rot * rot, rot * rot * rot});
  CHECK_THROWS_AS(m_number_finite_H(c4, g1()), UnsupportedGroupClass);
}

TEST_CASE("ambient_core") {
  CHECK(ambient_core(g1()).order() == 2);
  FiniteOrthGroup no_minus = FiniteOrthGroup::signed_diagonal({{1, 1, 1}, {-1, -1, 1}});
  CHECK(ambient_core(no_minus).order() == 1);
  CHECK(ambient_core(plus_minus(4)).order() == 2);
  CHECK(m_number_finite_H(g1(), g1()) / ambient_core(g1()).order() == 4);
  CHECK(m_number_finite_H(g2(), g1()) / ambient_core(g1()).order() == 2);
}

TEST_CASE("sphere_strata") {
  auto describe = [](const FiniteOrthGroup& g) {
    std::vector<std::string> out;
    for (const auto& s : sphere_strata(g)) out.push_back(s.describe());
    return out;
  };
  CHECK(describe(g1()) == std::vector<std::string>{"RP^2", "point", "point", "point"});
  CHECK(describe(g2()) == std::vector<std::string>{"circle", "circle", "circle"});
  CHECK(sphere_strata(trivial(6)).empty());

  auto s1 = sphere_strata(g1());
  CHECK(s1[0].kind == SphereStratum::Kind::ProjectiveSpace);
  CHECK(s1[0].dim() == 2);
}

#include "orbispec/catalog.hpp"
#include "orbispec/group_file.hpp"
#include "support.hpp"

#include <set>

using namespace orbispec;
using orbispec::test::q;

TEST_CASE("list and get") {
  CHECK(catalog::list().size() == 8);
  CHECK_THROWS_AS(catalog::get("flat6"), UnknownEntry);

  const auto& f1 = catalog::get("flat1").flat();
  CHECK(f1.g1.lattice.gram() == RatMatrix::diagonal({4, 4, 1}));
  CHECK(f1.g1.order() == 4);
  std::set<RatVector> transl;
  for (const auto& r : f1.g2.reps) transl.insert(r.transl);
  CHECK(transl.count({q(1, 2), 0, 0}) == 1);
  CHECK(transl.count({q(-1, 2), 0, 0}) == 1);

  CHECK(catalog::get("flat5").flat().g1.lattice.gram() == RatMatrix{{4, 2, 0}, {2, 4, 0}, {0, 0, 1}});
  CHECK(std::abs(determinant(catalog::flat3_sublattice())) == 4);
}

TEST_CASE("every catalog group is valid") {
  for (const auto& name : catalog::list()) {
    const auto& e = catalog::get(name);
    if (e.is_flat()) {
      CHECK_FALSE(validate(e.flat().g1));
      CHECK_FALSE(validate(e.flat().g2));
      if (e.flat().ambient) CHECK(e.flat().ambient->is_closed());
    } else {
      CHECK(e.orth().g1.order() == 8);
      CHECK(e.orth().g2.order() == 8);
    }
  }
}

TEST_CASE("flat3 conjugator preserves the sublattice") {
  IntMatrix a = catalog::flat3_conjugator();
  CHECK(std::abs(determinant(a)) == 1);
}

TEST_CASE("golden checks") {
  for (const auto& name : catalog::list()) {
    auto results = catalog::run(catalog::get(name));
    CHECK_FALSE(results.empty());
    for (const auto& r : results) {
      CAPTURE(r.entry);
      CAPTURE(r.check);
      CAPTURE(r.expected);
      CAPTURE(r.actual);
      CHECK(r.passed);
      CHECK_FALSE(r.claim.empty());
    }
  }
}

TEST_CASE("Poincare duality is checked for orientable entries and skipped for flat4") {
  for (const auto& name : catalog::list()) {
    const auto& e = catalog::get(name);
    if (!e.is_flat()) continue;
    bool found = false;
    for (const auto& r : catalog::run(e))
      if (r.check.rfind("poincare", 0) == 0) {
        found = true;
        if (e.flat().expected.orientable)
          CHECK(r.actual != "skipped (non-orientable)");
        else
          CHECK(r.actual == "skipped (non-orientable)");
      }
    CHECK(found);
  }
}

TEST_CASE("entries round-trip through the group-file schema") {
  for (const auto& name : catalog::list()) {
    const auto& e = catalog::get(name);
    if (e.is_flat()) {
      const auto& p = e.flat();
      for (const auto* g : {&p.g1, &p.g2}) {
        auto j = io::crystal_to_json(*g, p.sublattice);
        auto back = io::parse_group_file(io::json::parse(j.dump()), name);
        REQUIRE(back.is_crystal());
        const auto& h = std::get<CrystalGroup>(back.group);
        CHECK(h.name == g->name);
        CHECK(h.lattice == g->lattice);
        CHECK(h.reps == g->reps);
        CHECK(back.sublattice == p.sublattice);
        CHECK(io::crystal_to_json(h, back.sublattice) == j);
      }
      if (!p.ambient_generators.empty()) {
        auto j = io::affine_generators_to_json(p.ambient_generators, 3, name);
        auto back = io::parse_group_file(j, name);
        REQUIRE(back.is_affine());
        CHECK(std::get<FiniteAffineGroup>(back.group).order() == p.ambient->order());
      }
    } else {
      for (const auto* g : {&e.orth().g1, &e.orth().g2}) {
        auto j = io::orthogonal_to_json(*g, name);
        auto back = io::parse_group_file(io::json::parse(j.dump()), name);
        REQUIRE(back.is_orthogonal());
        CHECK(std::get<FiniteOrthGroup>(back.group).elements() == g->elements());
      }
    }
  }
}

#include "orbispec/lattice.hpp"
#include "support.hpp"

#include <algorithm>
#include <set>

using namespace orbispec;
using orbispec::test::q;

namespace {

Lattice diag_lattice(std::vector<Rational> d) { return Lattice(RatMatrix::diagonal(d)); }

std::set<IntVector> as_set(const std::vector<ShellVector>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("Lattice rejects non-positive-definite Gram matrices") {
  CHECK_THROWS(Lattice(RatMatrix{{1, 2}, {2, 1}}));
  CHECK_THROWS(Lattice(RatMatrix{{1, 0}, {1, 1}}));
  CHECK_NOTHROW(Lattice(RatMatrix{{4, 2, 0}, {2, 4, 0}, {0, 0, 1}}));
}

TEST_CASE("dual") {
  CHECK(dual(diag_lattice({4, 4, 1})).gram() == RatMatrix::diagonal({q(1, 4), q(1, 4), 1}));
  CHECK(dual(diag_lattice({1, 1, 1})).gram() == RatMatrix::identity(3));
  CHECK(dual(diag_lattice({1, 1, q(1, 2)})).gram() == RatMatrix::diagonal({1, 1, 2}));
  for (const auto* g : orbispec::test::catalog_groups()) CHECK(dual(dual(g->lattice)) == g->lattice);
}

TEST_CASE("enumerate_shell") {
  Lattice z3 = diag_lattice({1, 1, 1});
  CHECK(enumerate_shell(z3, 1).size() == 6);
  CHECK(enumerate_shell(z3, 7).empty());
  CHECK(enumerate_shell(z3, 0) == std::vector<ShellVector>{{0, 0, 0}});

  auto s = enumerate_shell(diag_lattice({q(1, 4), q(1, 4), 1}), 1);
  CHECK(as_set(s) == std::set<IntVector>{{2, 0, 0}, {-2, 0, 0}, {0, 2, 0}, {0, -2, 0}, {0, 0, 1}, {0, 0, -1}});
  CHECK(std::is_sorted(s.begin(), s.end()));
}

TEST_CASE("norm_values") {
  CHECK(norm_values(diag_lattice({1, 1, 1}), 3) == std::vector<Rational>{0, 1, 2, 3});
  CHECK(norm_values(diag_lattice({q(1, 4), q(1, 4), 1}), 1) ==
        std::vector<Rational>{0, q(1, 4), q(1, 2), 1});
  CHECK(norm_values(Lattice(RatMatrix{{4, 2, 0}, {2, 4, 0}, {0, 0, 1}}), 0) == std::vector<Rational>{0});
}

TEST_CASE("shells are symmetric, sorted and agree with the naive box search") {
  for (const auto* g : orbispec::test::catalog_groups()) {
    Lattice d = dual(g->lattice);
    auto fast = enumerate_ball(d, 10);
    auto naive = enumerate_ball_naive(d, 10);
    REQUIRE(fast.size() == naive.size());
    for (std::size_t i = 0; i < fast.size(); ++i) {
      CHECK(fast[i].coords == naive[i].coords);
      CHECK(fast[i].norm == naive[i].norm);
    }
    std::size_t total = 0;
    for (const auto& mu : norm_values(d, 10)) {
      auto shell = enumerate_shell(d, mu);
      total += shell.size();
      CHECK(std::is_sorted(shell.begin(), shell.end()));
      CHECK(std::adjacent_find(shell.begin(), shell.end()) == shell.end());
      if (mu > 0) CHECK(shell.size() % 2 == 0);
      auto set = as_set(shell);
      for (auto v : shell) {
        CHECK(d.norm(v) == mu);
        for (auto& x : v) x = -x;
        CHECK(set.count(v) == 1);
      }
    }
    CHECK(total == fast.size());
  }
}

TEST_CASE("parallel and serial ball enumeration agree") {
  for (const auto* g : orbispec::test::catalog_groups()) {
    Lattice d = dual(g->lattice);
    auto a = enumerate_ball(d, 40);
    auto b = enumerate_ball_serial(d, 40);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].coords == b[i].coords);
  }
}

TEST_CASE("exact square-root bounds") {
  CHECK(floor_plus_sqrt(q(1, 2), q(9, 4)) == 2);
  CHECK(ceil_minus_sqrt(q(1, 2), q(9, 4)) == -1);
  CHECK(floor_plus_sqrt(0, 2) == 1);
  CHECK(ceil_minus_sqrt(0, 2) == -1);
}

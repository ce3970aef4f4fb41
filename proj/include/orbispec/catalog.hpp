#pragma once

// The worked example pairs, in lattice coordinates, with the values they
// are known to produce attached for golden testing.

#include "orbispec/crystal.hpp"
#include "orbispec/homog.hpp"
#include "orbispec/isotropy.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace orbispec::catalog {

struct ExpectedStratum {
  std::string isotropy;  // GroupType::name()
  std::size_t dim = 0;
  Topology topology = Topology::Point;
  Rational sq_length;
  std::size_t count = 1;

  friend bool operator==(const ExpectedStratum&, const ExpectedStratum&) = default;
  friend bool operator<(const ExpectedStratum& a, const ExpectedStratum& b);
};
std::vector<ExpectedStratum> summarize(const std::vector<Stratum>& strata);  // sorted
std::string to_string(const std::vector<ExpectedStratum>& strata);

struct ExpectedMaxIsotropy {
  std::size_t order = 1;
  std::vector<std::string> types;  // sorted names
};

// Each optional field is checked when present; `claim` says in words what a
// check establishes and is printed next to its verdict.
struct FlatExpectations {
  Rational cutoff{25};
  std::vector<std::size_t> equal_k;      // spectra on k-forms agree up to cutoff
  std::vector<std::size_t> different_k;  // a difference is found below cutoff
  std::optional<std::pair<ExpectedMaxIsotropy, ExpectedMaxIsotropy>> max_isotropy;
  std::optional<std::pair<std::size_t, std::size_t>> max_stratum_dim;
  std::optional<std::pair<std::vector<ExpectedStratum>, std::vector<ExpectedStratum>>> strata;
  std::optional<std::size_t> quotient_order;  // order of both groups modulo the sublattice
  std::optional<bool> almost_conjugate;       // inside the finite ambient group
  bool orientable = true;                     // Poincare duality d_k = d_{n-k}
  std::vector<std::pair<std::string, std::string>> claims;  // check id -> claim
};

struct FixedDimExpectation {
  std::size_t d = 0;
  std::size_t order_a = 0;
  std::size_t order_b = 0;
  std::optional<std::string> witness_type;  // name of every witness subgroup
};

struct HomogExpectations {
  std::optional<bool> almost_conjugate;
  std::optional<std::pair<std::size_t, std::size_t>> not_conjugate_witness;  // (order, fixedDim)
  std::vector<FixedDimExpectation> fixed_dim_orders;
  std::optional<std::size_t> m_self;   // m(G1, G1)
  std::optional<std::size_t> m_cross;  // m(G2, G1)
  std::optional<std::size_t> core_order;
  std::optional<std::pair<std::vector<std::string>, std::vector<std::string>>> sphere_strata;
  std::vector<std::pair<std::string, std::string>> claims;
};

struct FlatPair {
  CrystalGroup g1;
  CrystalGroup g2;
  // Sublattice (columns, in lattice coordinates) and the finite group of
  // torus isometries in which the quotients are almost conjugate.
  std::optional<IntMatrix> sublattice;
  std::optional<FiniteAffineGroup> ambient;
  FlatExpectations expected;
  std::vector<AffineIsometry> ambient_generators;
};

struct OrthPair {
  FiniteOrthGroup g1;
  FiniteOrthGroup g2;
  HomogExpectations expected;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::variant<FlatPair, OrthPair> data;

  bool is_flat() const { return std::holds_alternative<FlatPair>(data); }
  const FlatPair& flat() const { return std::get<FlatPair>(data); }
  const OrthPair& orth() const { return std::get<OrthPair>(data); }
};

std::vector<std::string> list();
// Throws UnknownEntry.
const CatalogEntry& get(const std::string& name);

// Conversion data for the third pair: the sublattice basis (columns, in
// lattice coordinates) and the conjugator A in sublattice coordinates.
IntMatrix flat3_sublattice();
IntMatrix flat3_conjugator();

struct CheckResult {
  std::string entry;
  std::string check;
  std::string claim;
  std::string expected;
  std::string actual;
  bool passed = false;
};
std::vector<CheckResult> run(const CatalogEntry& entry);

}  // namespace orbispec::catalog

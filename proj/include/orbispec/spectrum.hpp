#pragma once

// Laplace multiplicities on k-forms of flat orbifolds R^n / Gamma.
//
// The eigenvalue 4 pi^2 mu has multiplicity
//   d_{k,mu} = (#F)^-1 sum_{B in F} tr_k(B) e_{mu,B},
//   e_{mu,B} = sum over dual vectors v with |v|^2 = mu and B v = v of exp(2 pi i <v, b>),
// where b is the translation of the coset with linear part B. Everything is
// computed in lattice coordinates; mu is kept as an exact rational and the
// factor 4 pi^2 only appears in human-readable output.

#include "orbispec/crystal.hpp"
#include "orbispec/exact.hpp"

#include <map>
#include <optional>

namespace orbispec {

// Trace of the induced action on alternating k-forms (sum of the principal
// k x k minors). tr_0 = 1, tr_n = det.
std::int64_t trace_k(const IntMatrix& p, std::size_t k);

// The lattice of dual vectors fixed by a linear part: dual coordinates m
// with P^T m = m, as integer combinations of `basis` (rows), with the
// restricted Gram matrix.
struct FixedDualLattice {
  std::vector<IntVector> basis;
  std::optional<Lattice> lattice;  // empty when only 0 is fixed

  IntVector embed(const IntVector& z) const;
};
FixedDualLattice fixed_dual_lattice(const Lattice& dual_lattice, const IntMatrix& linear);

CyclotomicSum e_term(const CrystalGroup& g, std::size_t rep, const Rational& mu);

std::int64_t multiplicity(const CrystalGroup& g, std::size_t k, const Rational& mu);

struct SpectrumTable {
  std::size_t k = 0;
  Rational cutoff;
  std::map<Rational, std::int64_t> entries;  // zero multiplicities kept

  std::int64_t at(const Rational& mu) const;  // 0 when mu is absent
};

// OpenMP-parallel over mu.
SpectrumTable spectrum_table(const CrystalGroup& g, std::size_t k, const Rational& cutoff);
// Single-threaded reference; identical results.
SpectrumTable spectrum_table_serial(const CrystalGroup& g, std::size_t k, const Rational& cutoff);

struct Comparison {
  bool equal = true;
  Rational mu;  // first differing mu when !equal
  std::int64_t a = 0;
  std::int64_t b = 0;
};
// Compares over the union of both dual norm sets <= cutoff.
Comparison compare(const CrystalGroup& a, const CrystalGroup& b, std::size_t k, const Rational& cutoff);
Comparison compare_tables(const SpectrumTable& a, const SpectrumTable& b);

// Independent check: builds the matrices of every coset acting by pullback
// on the Fourier basis exp(2 pi i <v, x>) dx_I of the mu-eigenspace of the
// covering torus (shell found by box search, k-form action by explicit
// minors), and returns the trace of their average in cyclotomic arithmetic.
// With check_projection, also verifies that the average is idempotent.
std::int64_t oracle_multiplicity(const CrystalGroup& g, std::size_t k, const Rational& mu,
                                 bool check_projection = false);

}  // namespace orbispec

#pragma once

// Integer lattice kernels, affine solving and cyclotomic sums.

#include "orbispec/matrix.hpp"
#include "orbispec/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace orbispec {

// Column-style Hermite normal form: returns (H, U) with A * U = H, U
// unimodular, H lower "echelon" with positive pivots and the zero columns
// last. Entries of A must be integers.
struct HermiteResult {
  IntegerMatrix hermite;
  IntegerMatrix transform;
  std::size_t rank = 0;
};
HermiteResult column_hermite(const IntegerMatrix& a);

// Row-style Hermite normal form of the lattice spanned by the rows of a;
// zero rows dropped. Canonical for the row lattice.
IntegerMatrix row_hermite_basis(const IntegerMatrix& a);

// Basis of {m in Z^cols : M m = 0}, the full (saturated) kernel lattice,
// returned in row-Hermite canonical form. Empty iff the kernel is trivial.
std::vector<IntegerVector> kernel_saturated(const RatMatrix& m);

struct AffineSolution {
  RatVector particular;
  std::vector<IntegerVector> kernel;  // saturated integer basis of ker M
};
// Solves M x = c over Q. std::nullopt iff the system is inconsistent.
std::optional<AffineSolution> solve_affine(const RatMatrix& m, const RatVector& c);

// Finite formal sum  sum_q coeff(q) * exp(2 pi i q)  with q reduced into
// [0, 1). Zero coefficients are never stored.
class CyclotomicSum {
public:
  CyclotomicSum() = default;
  static CyclotomicSum root(const Rational& q, const Integer& coeff = 1);
  static CyclotomicSum constant(const Integer& c) { return root(Rational(0), c); }

  void add(const Rational& q, const Integer& coeff);
  CyclotomicSum& operator+=(const CyclotomicSum& other);
  friend CyclotomicSum operator+(CyclotomicSum a, const CyclotomicSum& b) { return a += b; }
  friend CyclotomicSum operator*(const CyclotomicSum& a, const CyclotomicSum& b);
  CyclotomicSum scaled(const Integer& c) const;

  const std::map<Rational, Integer>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  // lcm of the key denominators (1 for the empty sum).
  Integer conductor() const;

  friend bool operator==(const CyclotomicSum& a, const CyclotomicSum& b) { return a.terms_ == b.terms_; }

private:
  std::map<Rational, Integer> terms_;
};

// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(std::size_t n);

// Power-basis coordinates of the sum in Q(zeta_N), N = conductor, reduced
// modulo Phi_N; length phi(N).
std::vector<Integer> reduce_cyclotomic(const CyclotomicSum& s, std::size_t* modulus = nullptr);

// Exact value of a rational cyclotomic sum; throws NotRationalError otherwise.
Rational cyclo_eval(const CyclotomicSum& s);

// True iff the represented complex number is zero.
bool is_zero(const CyclotomicSum& s);

}  // namespace orbispec

#pragma once

// Lattices given by rational Gram matrices, and exact enumeration of lattice
// vectors by norm. Coordinates are always with respect to the lattice's own
// basis.

#include "orbispec/matrix.hpp"
#include "orbispec/rational.hpp"

#include <map>
#include <vector>

namespace orbispec {

using ShellVector = IntVector;

class Lattice {
public:
  // Throws Error unless gram is square, symmetric and positive definite
  // (checked by exact leading principal minors).
  explicit Lattice(RatMatrix gram);

  std::size_t dim() const { return gram_.rows(); }
  const RatMatrix& gram() const { return gram_; }

  Rational norm(const IntVector& m) const;
  Rational norm(const RatVector& x) const;
  Rational inner(const RatVector& x, const RatVector& y) const;

  // LDL^T factors: gram = L diag(d) L^T with L unit lower triangular.
  const std::vector<Rational>& ldl_diagonal() const { return ldl_d_; }
  const RatMatrix& ldl_lower() const { return ldl_l_; }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

private:
  RatMatrix gram_;
  RatMatrix ldl_l_;
  std::vector<Rational> ldl_d_;
};

// The dual lattice, with Gram matrix G^-1 in the dual basis.
Lattice dual(const Lattice& lattice);

struct BallPoint {
  IntVector coords;
  Rational norm;
};

// All m with m^T G m <= cutoff, sorted by (norm, lexicographic coords).
// OpenMP-parallel over the outermost coordinate; the result order does not
// depend on the thread count.
std::vector<BallPoint> enumerate_ball(const Lattice& lattice, const Rational& cutoff);
// Single-threaded Fincke-Pohst; same output as enumerate_ball.
std::vector<BallPoint> enumerate_ball_serial(const Lattice& lattice, const Rational& cutoff);
// Brute force over the box |m_i| <= sqrt(cutoff * (G^-1)_ii). Test oracle.
std::vector<BallPoint> enumerate_ball_naive(const Lattice& lattice, const Rational& cutoff);

// All m with m^T G m = mu, in strictly increasing lexicographic order.
std::vector<ShellVector> enumerate_shell(const Lattice& lattice, const Rational& mu);

// Ball points grouped by norm (ascending), each shell in lexicographic order.
std::map<Rational, std::vector<ShellVector>> shells_up_to(const Lattice& lattice, const Rational& cutoff);

// Distinct norms <= cutoff, ascending, starting with 0.
std::vector<Rational> norm_values(const Lattice& lattice, const Rational& cutoff);

// Exact integer bounds: largest k with k <= x + sqrt(t), smallest k with
// k >= x - sqrt(t); t >= 0.
Integer floor_plus_sqrt(const Rational& x, const Rational& t);
Integer ceil_minus_sqrt(const Rational& x, const Rational& t);

}  // namespace orbispec

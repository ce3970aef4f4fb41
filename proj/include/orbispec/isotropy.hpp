#pragma once

// Fixed-point sets, point stabilizers, maximal isotropy and the singular
// strata of R^n / Gamma for n <= 3. All points are in lattice coordinates.

#include "orbispec/crystal.hpp"
#include "orbispec/group_type.hpp"

#include <optional>
#include <vector>

namespace orbispec {

using IsotropyType = GroupType;

// {x : E x = f}, stored in canonical form (E in reduced row echelon form,
// so two equal subspaces compare equal), together with a parametrisation
// base + span(directions) with primitive integer directions.
class AffineSubspace {
public:
  // Solution set of E x = f; std::nullopt if it is empty.
  static std::optional<AffineSubspace> solve(const RatMatrix& equations, const RatVector& rhs);
  static AffineSubspace whole_space(std::size_t n);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return directions_.size(); }
  const RatVector& base() const { return base_; }
  const std::vector<IntVector>& directions() const { return directions_; }
  const RatMatrix& equations() const { return equations_; }
  const RatVector& rhs() const { return rhs_; }

  bool contains(const RatVector& x) const;

  friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
    return a.equations_ == b.equations_ && a.rhs_ == b.rhs_;
  }
  friend bool operator<(const AffineSubspace& a, const AffineSubspace& b) {
    if (!(a.equations_ == b.equations_)) return a.equations_ < b.equations_;
    return a.rhs_ < b.rhs_;
  }

private:
  std::size_t n_ = 0;
  RatMatrix equations_;
  RatVector rhs_;
  RatVector base_;
  std::vector<IntVector> directions_;
};

std::optional<AffineSubspace> intersect(const AffineSubspace& a, const AffineSubspace& b);
// Image of the subspace under an affine isometry.
AffineSubspace image(const AffineIsometry& gamma, const AffineSubspace& s);

// Solutions of P x + c = x.
std::optional<AffineSubspace> fixed_set(const AffineIsometry& element);

// Per-coordinate radius of the lattice translations that can give a rep a
// fixed point in [0,1]^n: ceil(rowsum |I - P| + max |c_i|).
IntVector translation_window(const AffineIsometry& rep);

struct Stabilizer {
  std::vector<AffineIsometry> elements;  // exact elements of Gamma fixing x
  IsotropyType type;
};
Stabilizer stabilizer(const CrystalGroup& g, const RatVector& x);

struct MaxIsotropy {
  std::size_t order = 1;
  std::vector<IsotropyType> types;  // distinct, sorted
};
MaxIsotropy max_isotropy(const CrystalGroup& g);

enum class Topology { Point, Circle, OpenSegment, Surface };
std::string to_string(Topology t);

struct Stratum {
  IsotropyType isotropy;
  std::size_t dim = 0;
  Topology topology = Topology::Point;
  Rational sq_length;  // 0 unless dim == 1
  std::size_t count = 1;

  friend bool operator==(const Stratum& a, const Stratum& b) {
    return a.isotropy == b.isotropy && a.dim == b.dim && a.topology == b.topology &&
           a.sq_length == b.sq_length && a.count == b.count;
  }
};

// Singular set of R^n / Gamma, grouped into classes of components with the
// same isotropy, topology and length. Sorted by dimension, then decreasing
// isotropy order, then name, then length. Throws UnsupportedDimension for n > 3.
std::vector<Stratum> singular_strata(const CrystalGroup& g);

// A singular flat of the covering space: a subspace equal to the fixed set
// of its own pointwise stabilizer. One representative per Gamma-orbit.
struct SingularFlat {
  AffineSubspace flat;
  Stabilizer pointwise;
};
// Orbit representatives of all singular flats meeting [0,1]^n. The
// per-coset fixed-set searches run in parallel; the serial variant is the
// reference implementation.
std::vector<SingularFlat> singular_flats(const CrystalGroup& g);
std::vector<SingularFlat> singular_flats_serial(const CrystalGroup& g);

}  // namespace orbispec

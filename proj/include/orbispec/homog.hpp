#pragma once

// Finite subgroups of O(n): almost-conjugacy, conjugacy certificates,
// fixed-space dimensions, and the isotropy numbers of quotients of
// homogeneous spaces.

#include "orbispec/crystal.hpp"
#include "orbispec/group_type.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace orbispec {

class FiniteOrthGroup {
public:
  FiniteOrthGroup() = default;
  // Throws Error unless the matrices are orthogonal, of equal size, and form
  // a group (identity present, closed under products). Duplicates merged.
  FiniteOrthGroup(std::size_t n, std::vector<RatMatrix> elements);
  static FiniteOrthGroup signed_diagonal(const std::vector<std::vector<int>>& diagonals);

  std::size_t dim() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<RatMatrix>& elements() const { return elements_; }
  const RatMatrix& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const RatMatrix& m) const;
  std::size_t product(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  bool is_signed_diagonal() const;

private:
  std::size_t n_ = 0;
  std::vector<RatMatrix> elements_;  // sorted; identity first
  std::vector<std::size_t> table_;
};

// A subgroup as sorted indices into its parent's element list.
using Subgroup = std::vector<std::size_t>;

// All subgroups, by order descending then lexicographically. Subsets are
// scanned exhaustively; throws BoundExceededError beyond 2^16 subsets.
std::vector<Subgroup> subgroups(const FiniteOrthGroup& g);

// dim of the common 1-eigenspace of the matrices (n for the empty list).
std::size_t fixed_dim(const std::vector<RatMatrix>& s, std::size_t n);
std::size_t fixed_dim(const FiniteOrthGroup& g, const Subgroup& s);

// Q = signed permutation matrix: Q e_j = signs[j] e_{perm[j]}.
struct SignedPermutation {
  std::vector<std::size_t> perm;
  std::vector<int> signs;
  RatMatrix matrix() const;
  int determinant() const;
};

// ---------------------------------------------------------------------------
// Almost conjugacy

struct OrthogonalAmbient {};
using Ambient = std::variant<OrthogonalAmbient, FiniteOrthGroup, FiniteAffineGroup>;

// bijection[i] = index in the second group of the image of element i of
// the first group; conjugacy classes of the ambient are preserved.
struct AlmostConjugacy {
  std::vector<std::size_t> bijection;
  // Orthogonal mode: every matched pair was also certified conjugate by a
  // signed permutation of determinant +1.
  bool special_orthogonal_certified = false;
};

// Orthogonal mode (ambient O(n)): elements matched by characteristic polynomial.
std::optional<AlmostConjugacy> almost_conjugate(const FiniteOrthGroup& a, const FiniteOrthGroup& b,
                                                const Ambient& ambient = OrthogonalAmbient{});
// Finite affine mode: the groups live on the same torus as the ambient.
std::optional<AlmostConjugacy> almost_conjugate(const FiniteAffineGroup& a, const FiniteAffineGroup& b,
                                                const FiniteAffineGroup& ambient);

// ---------------------------------------------------------------------------
// Conjugacy in O(n)

struct ConjugacyVerdict {
  enum class Kind { Conjugate, ProvablyNot, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::optional<SignedPermutation> conjugator;  // Q a Q^-1 = b, det Q = +1
  // Witness for ProvablyNot: subgroups of this order and fixed dimension
  // occur count_a times in a and count_b times in b.
  std::size_t witness_order = 0;
  std::size_t witness_fixed_dim = 0;
  std::size_t count_a = 0;
  std::size_t count_b = 0;
  std::string describe() const;
};
ConjugacyVerdict conjugate_in_orthogonal(const FiniteOrthGroup& a, const FiniteOrthGroup& b);

// ---------------------------------------------------------------------------
// Isotropy numbers

struct OrderWitness {
  std::size_t order = 1;
  std::vector<Subgroup> witnesses;
};
// Largest subgroup order with fixed_dim >= d, and all subgroups achieving it.
OrderWitness max_order_with_fixed_dim(const FiniteOrthGroup& g, std::size_t d);

// max #S over subgroups S of g that are SO(n)-conjugate into h. Both must be
// signed-diagonal; throws UnsupportedGroupClass otherwise.
std::size_t m_number_finite_H(const FiniteOrthGroup& g, const FiniteOrthGroup& h);

// Intersection of all SO(n)-conjugates of g: g n {+I, -I}.
FiniteOrthGroup ambient_core(const FiniteOrthGroup& g);

struct SphereStratum {
  enum class Kind { ProjectiveSpace, Sphere };
  std::size_t fixed_dim = 1;  // stratum dimension is fixed_dim - 1
  Kind kind = Kind::Sphere;
  std::size_t components = 1;
  std::size_t point_count = 0;  // for fixed_dim == 1
  Subgroup stabilizer;
  GroupType type;

  std::size_t dim() const { return fixed_dim - 1; }
  // "RP^2", "S^3", "circle" (fixed_dim 2, either kind), "point" / "2 points".
  std::string describe() const;
};
// Strata of maximal isotropy order of g acting on the unit sphere. g must
// be signed-diagonal; throws UnsupportedGroupClass otherwise.
std::vector<SphereStratum> sphere_strata(const FiniteOrthGroup& g);

}  // namespace orbispec

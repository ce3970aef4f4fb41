#pragma once

// Crystallographic groups in lattice coordinates. An element x -> P x + c
// has an integer linear part P (P^T G P = G) and a rational translation c,
// both expressed in the basis of the translation lattice.

#include "orbispec/error.hpp"
#include "orbispec/lattice.hpp"
#include "orbispec/matrix.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace orbispec {

struct AffineIsometry {
  IntMatrix linear;
  RatVector transl;

  static AffineIsometry identity(std::size_t n);
  std::size_t dim() const { return linear.rows(); }
  RatVector apply(const RatVector& x) const;

  friend bool operator==(const AffineIsometry& a, const AffineIsometry& b) {
    return a.linear == b.linear && a.transl == b.transl;
  }
};

// (P_a P_b, P_a c_b + c_a): apply b first, then a.
AffineIsometry compose(const AffineIsometry& a, const AffineIsometry& b);
AffineIsometry invert(const AffineIsometry& a);
AffineIsometry translation(const RatVector& t);
// Translation reduced into [0,1)^n; the canonical coset representative.
AffineIsometry canonical(const AffineIsometry& a);

struct CrystalGroup {
  std::string name;
  Lattice lattice;
  std::vector<AffineIsometry> reps;  // one per coset of the translation lattice

  std::size_t dim() const { return lattice.dim(); }
  std::size_t order() const { return reps.size(); }  // #F
};

class ValidationError : public Error {
public:
  enum class Kind { NotOrthogonal, NotClosed, BadIdentity, DuplicateLinearPart, DimensionMismatch };
  ValidationError(Kind kind, std::size_t i, std::size_t j, const std::string& message)
      : Error(message), kind_(kind), i_(i), j_(j) {}
  Kind kind() const { return kind_; }
  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }

private:
  Kind kind_;
  std::size_t i_;
  std::size_t j_;
};

std::optional<ValidationError> validate(const CrystalGroup& g);
// Throws the ValidationError if there is one.
void require_valid(const CrystalGroup& g);

// Linear parts, identity first, then in representative order.
std::vector<IntMatrix> point_group(const CrystalGroup& g);
// Index of the representative with the given linear part, if any.
std::optional<std::size_t> rep_index(const CrystalGroup& g, const IntMatrix& linear);

// Change of lattice basis x = U x' with U unimodular: G -> U^T G U,
// P -> U^-1 P U, c -> U^-1 c. Describes the same group.
CrystalGroup change_basis(const CrystalGroup& g, const IntMatrix& u);

// ---------------------------------------------------------------------------
// Finite groups of torus isometries

// x -> P x + shift/den on R^n / Z^n; shift entries in [0, den).
struct TorusElement {
  IntMatrix linear;
  IntVector shift;

  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.shift == b.shift && a.linear == b.linear;
  }
  friend bool operator<(const TorusElement& a, const TorusElement& b) {
    if (a.linear == b.linear) return a.shift < b.shift;
    return a.linear < b.linear;
  }
};

struct TorusElementHash {
  std::size_t operator()(const TorusElement& e) const;
};

class FiniteAffineGroup {
public:
  FiniteAffineGroup() = default;
  // Elements given as affine maps in torus coordinates; translations are
  // reduced modulo Z^n. Duplicates are merged. Closure is not assumed; see
  // is_closed().
  FiniteAffineGroup(std::size_t dim, const std::vector<AffineIsometry>& elements);

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  std::int64_t denominator() const { return den_; }
  const std::vector<TorusElement>& elements() const { return elements_; }
  const TorusElement& element(std::size_t i) const { return elements_[i]; }

  AffineIsometry affine(std::size_t i) const;
  RatVector translation(std::size_t i) const;
  std::optional<std::size_t> index_of(const AffineIsometry& a) const;
  std::optional<std::size_t> index_of(const TorusElement& e) const;

  // Product and inverse of listed elements, as torus elements over this
  // group's denominator (which need not be listed if the group isn't closed).
  TorusElement multiply(const TorusElement& a, const TorusElement& b) const;
  TorusElement inverse(const TorusElement& a) const;

  bool contains_identity() const;
  bool is_closed() const;

private:
  std::size_t dim_ = 0;
  std::int64_t den_ = 1;
  std::vector<TorusElement> elements_;
  std::unordered_map<TorusElement, std::size_t, TorusElementHash> index_;

  TorusElement to_torus(const AffineIsometry& a) const;
  void rebuild_index();
  friend FiniteAffineGroup closure(const std::vector<AffineIsometry>&, std::size_t);
};

// The group {(P, c mod Lambda')} acting on the torus R^n / Lambda', in
// Lambda'-coordinates; sub has the Lambda'-basis as columns, expressed in
// Lambda-coordinates. Order = #F * |det sub|.
FiniteAffineGroup quotient_mod_sublattice(const CrystalGroup& g, const IntMatrix& sub);

// Multiplicative closure of torus isometries (translations taken mod Z^n).
// Throws BoundExceededError when more than `bound` elements appear.
FiniteAffineGroup closure(const std::vector<AffineIsometry>& generators, std::size_t bound = 1000000);

// Conjugacy classes by brute force: each class as a sorted list of indices;
// classes ordered by smallest member.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteAffineGroup& g);

}  // namespace orbispec

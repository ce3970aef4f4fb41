#pragma once

#include "orbispec/matrix.hpp"

#include <string>
#include <vector>

namespace orbispec {

// Isomorphism type of a small finite group, decided from its order, whether
// it is abelian, and the multiset of element orders. Enough to separate
// every group of order < 16 that the catalog produces; anything not
// recognised is reported as Other rather than guessed.
struct GroupType {
  enum class Family { Cyclic, ElementaryAbelian2, Dihedral, Other };

  std::size_t order = 1;
  Family family = Family::Cyclic;
  std::vector<std::size_t> element_orders;  // sorted ascending

  // "Z_4", "Z2xZ2", "Z_2^3", "D_3" (dihedral of order 6), or
  // "Other(8:1,2,2,2,2,4,4,4)".
  std::string name() const;

  friend bool operator==(const GroupType& a, const GroupType& b) {
    return a.order == b.order && a.family == b.family && a.element_orders == b.element_orders;
  }
  friend bool operator<(const GroupType& a, const GroupType& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.name() < b.name();
  }
};

GroupType classify_group(bool abelian, std::vector<std::size_t> element_orders);

// Multiplicative order of an invertible matrix of finite order; throws
// if it exceeds `limit`.
std::size_t matrix_order(const IntMatrix& m, std::size_t limit = 120);
std::size_t matrix_order(const RatMatrix& m, std::size_t limit = 120);

// Classifies the group formed by the given (closed) list of matrices.
GroupType classify_matrix_group(const std::vector<IntMatrix>& elements);
GroupType classify_matrix_group(const std::vector<RatMatrix>& elements);

}  // namespace orbispec

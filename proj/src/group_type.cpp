#include "orbispec/group_type.hpp"

#include <algorithm>
#include <sstream>

namespace orbispec {

std::string GroupType::name() const {
  switch (family) {
    case Family::Cyclic:
      return order == 1 ? "trivial" : "Z_" + std::to_string(order);
    case Family::ElementaryAbelian2: {
      std::size_t rank = 0;
      for (std::size_t o = order; o > 1; o /= 2) ++rank;
      if (rank == 2) return "Z2xZ2";
      return "Z_2^" + std::to_string(rank);
    }
    case Family::Dihedral:
      return "D_" + std::to_string(order / 2);
    case Family::Other:
      break;
  }
  std::ostringstream os;
  os << "Other(" << order << ':';
  for (std::size_t i = 0; i < element_orders.size(); ++i) os << (i ? "," : "") << element_orders[i];
  os << ')';
  return os.str();
}

GroupType classify_group(bool abelian, std::vector<std::size_t> element_orders) {
  std::sort(element_orders.begin(), element_orders.end());
  GroupType t;
  t.order = element_orders.size();
  t.element_orders = element_orders;
  const std::size_t n = t.order;
  const std::size_t max_order = element_orders.empty() ? 1 : element_orders.back();
  if (max_order == n) {
    t.family = GroupType::Family::Cyclic;
  } else if (abelian && max_order == 2) {
    t.family = GroupType::Family::ElementaryAbelian2;
  } else if (!abelian && n % 2 == 0 && max_order == n / 2 && n >= 6) {
    // Dihedral iff, besides the rotation subgroup (phi(d) elements of each
    // order d | n/2), all remaining n/2 elements are involutions.
    std::size_t involutions = std::count(element_orders.begin(), element_orders.end(), std::size_t{2});
    std::size_t rotation_involutions = (n / 2) % 2 == 0 ? 1 : 0;
    t.family = involutions == n / 2 + rotation_involutions ? GroupType::Family::Dihedral : GroupType::Family::Other;
  } else {
    t.family = GroupType::Family::Other;
  }
  return t;
}

std::size_t matrix_order(const IntMatrix& m, std::size_t limit) {
  IntMatrix id = IntMatrix::identity(m.rows());
  IntMatrix p = m;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  throw Error("matrix " + to_string(m) + " has no finite order up to " + std::to_string(limit));
}

std::size_t matrix_order(const RatMatrix& m, std::size_t limit) {
  RatMatrix id = RatMatrix::identity(m.rows());
  RatMatrix p = m;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  throw Error("matrix " + to_string(m) + " has no finite order up to " + std::to_string(limit));
}

namespace {

template <class M>
GroupType classify_impl(const std::vector<M>& elements) {
  bool abelian = true;
  for (std::size_t i = 0; i < elements.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (!(elements[i] * elements[j] == elements[j] * elements[i])) {
        abelian = false;
        break;
      }
  std::vector<std::size_t> orders;
  for (const auto& e : elements) orders.push_back(matrix_order(e));
  return classify_group(abelian, orders);
}

}  // namespace

GroupType classify_matrix_group(const std::vector<IntMatrix>& elements) { return classify_impl(elements); }
GroupType classify_matrix_group(const std::vector<RatMatrix>& elements) { return classify_impl(elements); }

}  // namespace orbispec

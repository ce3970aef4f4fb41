#pragma once

// JSON group files. Rationals are strings ("3/4", "-1/2", "2"); all data
// is in lattice coordinates.
//
//   crystal:       {kind, name, dim, gram, cosets: [{linear, transl}], sublattice?}
//   orthogonal:    {kind, name, dim, elements: [matrix of rational strings]}
//   finite-affine: {kind, name, dim, generators: [{linear, transl}]}
//                  (torus isometries; the file denotes the group they generate)

#include "orbispec/crystal.hpp"
#include "orbispec/homog.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

namespace orbispec::io {

using json = nlohmann::json;

struct GroupFile {
  std::string name;
  std::variant<CrystalGroup, FiniteOrthGroup, FiniteAffineGroup> group;
  std::optional<IntMatrix> sublattice;  // crystal kind only

  bool is_crystal() const { return std::holds_alternative<CrystalGroup>(group); }
  bool is_orthogonal() const { return std::holds_alternative<FiniteOrthGroup>(group); }
  bool is_affine() const { return std::holds_alternative<FiniteAffineGroup>(group); }
};

// Throws ParseError (naming `source` and the offending field) or the
// validation error of the parsed group.
GroupFile parse_group_file(const json& j, const std::string& source);
GroupFile load_group_file(const std::string& path);

json crystal_to_json(const CrystalGroup& g, const std::optional<IntMatrix>& sublattice = std::nullopt);
json orthogonal_to_json(const FiniteOrthGroup& g, const std::string& name);
json affine_generators_to_json(const std::vector<AffineIsometry>& generators, std::size_t dim,
                               const std::string& name);

json to_json(const Rational& q);
json to_json(const RatMatrix& m);
json to_json(const IntMatrix& m);

}  // namespace orbispec::io

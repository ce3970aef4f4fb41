#include "orbispec/group_file.hpp"

#include <fstream>

namespace orbispec::io {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& what) {
  throw ParseError(source + ": field '" + field + "': " + what);
}

const json& member(const json& j, const char* key, const std::string& source, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) fail(source, path + key, "missing");
  return j.at(key);
}

Rational read_rational(const json& j, const std::string& source, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      fail(source, field, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  fail(source, field, "expected a rational string such as \"3/4\"");
}

std::int64_t read_int(const json& j, const std::string& source, const std::string& field) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    Rational q = read_rational(j, source, field);
    if (is_integer(q)) return to_int64(q.get_num());
  }
  fail(source, field, "expected an integer");
}

std::size_t read_dim(const json& j, const std::string& source) {
  const json& d = member(j, "dim", source, "");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) fail(source, "dim", "expected a positive integer");
  return d.get<std::size_t>();
}

template <class T, class Read>
Matrix<T> read_matrix(const json& j, std::size_t n, const std::string& source, const std::string& field, Read read) {
  if (!j.is_array() || j.size() != n) fail(source, field, "expected " + std::to_string(n) + " rows");
  Matrix<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = j[i];
    std::string rf = field + "[" + std::to_string(i) + "]";
    if (!row.is_array() || row.size() != n) fail(source, rf, "expected " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = read(row[k], source, rf + "[" + std::to_string(k) + "]");
  }
  return m;
}

RatVector read_vector(const json& j, std::size_t n, const std::string& source, const std::string& field) {
  if (!j.is_array() || j.size() != n) fail(source, field, "expected " + std::to_string(n) + " entries");
  RatVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(read_rational(j[i], source, field + "[" + std::to_string(i) + "]"));
  return v;
}

std::vector<AffineIsometry> read_isometries(const json& j, std::size_t n, const std::string& source,
                                            const std::string& field) {
  if (!j.is_array() || j.empty()) fail(source, field, "expected a nonempty array");
  std::vector<AffineIsometry> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string f = field + "[" + std::to_string(i) + "].";
    IntMatrix p = read_matrix<std::int64_t>(member(j[i], "linear", source, f), n, source, f + "linear", read_int);
    RatVector c = read_vector(member(j[i], "transl", source, f), n, source, f + "transl");
    out.push_back(AffineIsometry{std::move(p), std::move(c)});
  }
  return out;
}

}  // namespace

GroupFile parse_group_file(const json& j, const std::string& source) {
  if (!j.is_object()) throw ParseError(source + ": top level must be an object");
  std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : source;
  std::optional<IntMatrix> sublattice;
  std::string kind = "crystal";
  if (j.contains("kind")) {
    if (!j.at("kind").is_string()) fail(source, "kind", "expected a string");
    kind = j.at("kind").get<std::string>();
  }
  const std::size_t n = read_dim(j, source);

  if (kind == "crystal") {
    RatMatrix gram = read_matrix<Rational>(member(j, "gram", source, ""), n, source, "gram", read_rational);
    std::optional<Lattice> lattice;
    try {
      lattice.emplace(gram);
    } catch (const Error& e) {
      fail(source, "gram", e.what());
    }
    CrystalGroup g{name, *lattice, read_isometries(member(j, "cosets", source, ""), n, source, "cosets")};
    if (auto err = validate(g)) throw ValidationError(err->kind(), err->first(), err->second(), source + ": " + err->what());
    if (j.contains("sublattice"))
      sublattice = read_matrix<std::int64_t>(j.at("sublattice"), n, source, "sublattice", read_int);
    return GroupFile{name, std::move(g), std::move(sublattice)};
  } else if (kind == "orthogonal") {
    const json& elems = member(j, "elements", source, "");
    if (!elems.is_array() || elems.empty()) fail(source, "elements", "expected a nonempty array");
    std::vector<RatMatrix> mats;
    for (std::size_t i = 0; i < elems.size(); ++i)
      mats.push_back(read_matrix<Rational>(elems[i], n, source, "elements[" + std::to_string(i) + "]", read_rational));
    try {
      return GroupFile{name, FiniteOrthGroup(n, std::move(mats)), std::nullopt};
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(source, "elements", e.what());
    }
  } else if (kind == "finite-affine") {
    auto gens = read_isometries(member(j, "generators", source, ""), n, source, "generators");
    return GroupFile{name, closure(gens), std::nullopt};
  }
  fail(source, "kind", "unknown kind '" + kind + "' (expected crystal, orthogonal or finite-affine)");
}

GroupFile load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": invalid JSON: " + e.what());
  }
  return parse_group_file(j, path);
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

namespace {

json isometries_to_json(const std::vector<AffineIsometry>& isos) {
  json arr = json::array();
  for (const auto& a : isos) {
    json t = json::array();
    for (const auto& c : a.transl) t.push_back(to_json(c));
    arr.push_back({{"linear", to_json(a.linear)}, {"transl", t}});
  }
  return arr;
}

}  // namespace

json crystal_to_json(const CrystalGroup& g, const std::optional<IntMatrix>& sublattice) {
  json j{{"kind", "crystal"},
         {"name", g.name},
         {"dim", g.dim()},
         {"gram", to_json(g.lattice.gram())},
         {"cosets", isometries_to_json(g.reps)}};
  if (sublattice) j["sublattice"] = to_json(*sublattice);
  return j;
}

json orthogonal_to_json(const FiniteOrthGroup& g, const std::string& name) {
  json elems = json::array();
  for (const auto& m : g.elements()) elems.push_back(to_json(m));
  return {{"kind", "orthogonal"}, {"name", name}, {"dim", g.dim()}, {"elements", elems}};
}

json affine_generators_to_json(const std::vector<AffineIsometry>& generators, std::size_t dim,
                               const std::string& name) {
  return {{"kind", "finite-affine"}, {"name", name}, {"dim", dim}, {"generators", isometries_to_json(generators)}};
}

}  // namespace orbispec::io

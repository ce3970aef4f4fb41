#include "orbispec/cli.hpp"

#include "orbispec/catalog.hpp"
#include "orbispec/group_file.hpp"
#include "orbispec/isotropy.hpp"
#include "orbispec/spectrum.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>

namespace orbispec::cli {

namespace {

using io::json;

class UsageError : public Error {
public:
  using Error::Error;
};

struct Options {
  std::string format = "table";
  std::string group, a, b, ambient, cutoff = "25", entry, out_dir;
  std::size_t k = 0;
};

bool as_json(const Options& o) { return o.format == "json"; }

json report(const std::string& command, json inputs, json results) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)}, {"version", kVersion}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

Rational read_cutoff(const std::string& text) {
  Rational q;
  try {
    q = parse_rational(text);
  } catch (const ParseError& e) {
    throw UsageError("--cutoff: " + std::string(e.what()));
  }
  if (q < 0) throw UsageError("--cutoff: must be nonnegative");
  return q;
}

const CrystalGroup& require_crystal(const io::GroupFile& f, const std::string& path) {
  if (!f.is_crystal()) throw ParseError(path + ": field 'kind': this command needs a crystal group");
  return std::get<CrystalGroup>(f.group);
}

void require_form_degree(std::size_t k, const CrystalGroup& g, const std::string& path) {
  if (k > g.dim())
    throw ParseError(path + ": --k " + std::to_string(k) + " exceeds the dimension " + std::to_string(g.dim()));
}

std::string eigenvalue(const Rational& mu) {
  if (mu == 0) return "0";
  return "4π²·" + to_string(mu);
}

std::string sqrt_string(const Integer& z) {
  if (mpz_perfect_square_p(z.get_mpz_t())) return to_string(Integer(sqrt(z)));
  return "√" + to_string(z);
}

// Length from its square, with radicals where needed: 1, √2, 1/√2, √3/2.
std::string length_string(const Rational& sq) {
  std::string num = sqrt_string(sq.get_num());
  if (sq.get_den() == 1) return num;
  return num + "/" + sqrt_string(sq.get_den());
}

json stratum_json(const Stratum& s) {
  json j{{"isotropy", s.isotropy.name()},
         {"order", s.isotropy.order},
         {"dim", s.dim},
         {"topology", to_string(s.topology)},
         {"count", s.count}};
  if (s.dim == 1) j["sq_length"] = to_string(s.sq_length);
  return j;
}

json table_json(const SpectrumTable& t) {
  json rows = json::array();
  for (const auto& [mu, d] : t.entries) rows.push_back({{"mu", to_string(mu)}, {"multiplicity", d}});
  return rows;
}

// ---------------------------------------------------------------------------

int cmd_spectrum(const Options& o, std::ostream& out) {
  Rational cutoff = read_cutoff(o.cutoff);
  io::GroupFile f = io::load_group_file(o.group);
  const CrystalGroup& g = require_crystal(f, o.group);
  require_form_degree(o.k, g, o.group);
  SpectrumTable t = spectrum_table(g, o.k, cutoff);
  if (as_json(o)) {
    emit(out, report("spectrum", {{"group", o.group}, {"k", o.k}, {"cutoff", to_string(cutoff)}},
                     {{"name", g.name}, {"entries", table_json(t)}}));
    return kSuccess;
  }
  out << g.name << ": multiplicities on " << o.k << "-forms, mu <= " << to_string(cutoff) << '\n';
  out << std::left << std::setw(12) << "mu" << std::setw(20) << "eigenvalue" << "multiplicity\n";
  for (const auto& [mu, d] : t.entries)
    out << std::setw(12) << to_string(mu) << std::setw(20 + (mu == 0 ? 0 : 3)) << eigenvalue(mu) << d << '\n';
  return kSuccess;
}

int cmd_compare(const Options& o, std::ostream& out) {
  Rational cutoff = read_cutoff(o.cutoff);
  io::GroupFile fa = io::load_group_file(o.a);
  io::GroupFile fb = io::load_group_file(o.b);
  const CrystalGroup& ga = require_crystal(fa, o.a);
  const CrystalGroup& gb = require_crystal(fb, o.b);
  if (ga.dim() != gb.dim())
    throw ParseError(o.b + ": field 'dim': " + std::to_string(gb.dim()) + " differs from " + o.a);
  require_form_degree(o.k, ga, o.a);
  SpectrumTable ta = spectrum_table(ga, o.k, cutoff);
  SpectrumTable tb = spectrum_table(gb, o.k, cutoff);
  Comparison c = compare_tables(ta, tb);

  std::vector<std::tuple<Rational, std::int64_t, std::int64_t>> diffs;
  std::set<Rational> mus;
  for (const auto& [mu, d] : ta.entries) mus.insert(mu);
  for (const auto& [mu, d] : tb.entries) mus.insert(mu);
  for (const auto& mu : mus)
    if (ta.at(mu) != tb.at(mu)) diffs.emplace_back(mu, ta.at(mu), tb.at(mu));

  if (as_json(o)) {
    json results{{"equal", c.equal}, {"first_difference", nullptr}, {"differences", json::array()}};
    if (!c.equal) results["first_difference"] = {{"mu", to_string(c.mu)}, {"a", c.a}, {"b", c.b}};
    for (const auto& [mu, a, b] : diffs) results["differences"].push_back({{"mu", to_string(mu)}, {"a", a}, {"b", b}});
    emit(out, report("compare", {{"a", o.a}, {"b", o.b}, {"k", o.k}, {"cutoff", to_string(cutoff)}}, results));
  } else if (c.equal) {
    out << "Equal: " << ga.name << " and " << gb.name << " agree on " << o.k << "-forms for mu <= "
        << to_string(cutoff) << '\n';
  } else {
    out << "FirstDifference: mu = " << to_string(c.mu) << " (eigenvalue " << eigenvalue(c.mu) << "): " << c.a
        << " vs " << c.b << '\n';
    out << "differences up to " << to_string(cutoff) << ":\n";
    for (const auto& [mu, a, b] : diffs) out << "  mu = " << to_string(mu) << ": " << a << " vs " << b << '\n';
  }
  return c.equal ? kSuccess : kNegativeResult;
}

int cmd_isotropy(const Options& o, std::ostream& out) {
  io::GroupFile f = io::load_group_file(o.group);
  if (const auto* g = std::get_if<FiniteOrthGroup>(&f.group)) {
    json rows = json::array();
    for (std::size_t d = 1; d <= g->dim(); ++d) {
      OrderWitness w = max_order_with_fixed_dim(*g, d);
      std::set<std::string> types;
      for (const auto& s : w.witnesses) {
        std::vector<RatMatrix> mats;
        for (std::size_t i : s) mats.push_back(g->element(i));
        types.insert(classify_matrix_group(mats).name());
      }
      rows.push_back({{"fixed_dim", d}, {"order", w.order}, {"witnesses", w.witnesses.size()}, {"types", types}});
    }
    if (as_json(o)) {
      emit(out, report("isotropy", {{"group", o.group}},
                       {{"name", f.name}, {"order", g->order()}, {"max_order_with_fixed_dim", rows},
                        {"core_order", ambient_core(*g).order()}}));
      return kSuccess;
    }
    out << f.name << ": order " << g->order() << ", core order " << ambient_core(*g).order() << '\n';
    for (const auto& r : rows) {
      out << "  fixed dim >= " << r["fixed_dim"].get<std::size_t>() << ": max order " << r["order"].get<std::size_t>()
          << " (" << r["witnesses"].get<std::size_t>() << " subgroups:";
      for (const auto& t : r["types"]) out << ' ' << t.get<std::string>();
      out << ")\n";
    }
    return kSuccess;
  }
  const CrystalGroup& g = require_crystal(f, o.group);
  MaxIsotropy m = max_isotropy(g);
  std::vector<std::string> names;
  for (const auto& t : m.types) names.push_back(t.name());
  std::size_t max_dim = 0;
  bool any = false;
  for (const auto& s : singular_strata(g))
    if (s.isotropy.order == m.order) max_dim = any ? std::max(max_dim, s.dim) : s.dim, any = true;
  if (as_json(o)) {
    json results{{"name", g.name}, {"max_order", m.order}, {"types", names}};
    results["max_stratum_dim"] = any ? json(max_dim) : json(nullptr);
    emit(out, report("isotropy", {{"group", o.group}}, results));
    return kSuccess;
  }
  out << g.name << ": maximal isotropy order " << m.order << ", type";
  for (const auto& n : names) out << ' ' << n;
  out << '\n';
  if (any) out << "  largest stratum with maximal isotropy has dimension " << max_dim << '\n';
  return kSuccess;
}

int cmd_strata(const Options& o, std::ostream& out) {
  io::GroupFile f = io::load_group_file(o.group);
  if (const auto* g = std::get_if<FiniteOrthGroup>(&f.group)) {
    auto strata = sphere_strata(*g);
    if (as_json(o)) {
      json rows = json::array();
      for (const auto& s : strata)
        rows.push_back({{"dim", s.dim()},
                        {"kind", s.kind == SphereStratum::Kind::ProjectiveSpace ? "projective" : "sphere"},
                        {"components", s.components},
                        {"points", s.point_count},
                        {"isotropy", s.type.name()},
                        {"describe", s.describe()}});
      emit(out, report("strata", {{"group", o.group}}, {{"name", f.name}, {"sphere_strata", rows}}));
      return kSuccess;
    }
    out << f.name << ": maximal-isotropy strata on the unit sphere\n";
    for (const auto& s : strata) out << "  " << s.describe() << "  isotropy " << s.type.name() << '\n';
    return kSuccess;
  }
  const CrystalGroup& g = require_crystal(f, o.group);
  auto strata = singular_strata(g);
  if (as_json(o)) {
    json rows = json::array();
    for (const auto& s : strata) rows.push_back(stratum_json(s));
    emit(out, report("strata", {{"group", o.group}}, {{"name", g.name}, {"strata", rows}}));
    return kSuccess;
  }
  out << g.name << ": singular strata\n";
  if (strata.empty()) out << "  none (the action is free)\n";
  for (const auto& s : strata) {
    out << "  " << s.count << " x " << to_string(s.topology) << "  isotropy " << s.isotropy.name();
    if (s.dim == 1) out << "  length " << length_string(s.sq_length) << " (squared " << to_string(s.sq_length) << ")";
    out << '\n';
  }
  return kSuccess;
}

FiniteAffineGroup torus_quotient(const io::GroupFile& f) {
  if (const auto* a = std::get_if<FiniteAffineGroup>(&f.group)) return *a;
  const auto& g = std::get<CrystalGroup>(f.group);
  return quotient_mod_sublattice(g, f.sublattice.value_or(IntMatrix::identity(g.dim())));
}

int cmd_almost_conjugate(const Options& o, std::ostream& out) {
  io::GroupFile fa = io::load_group_file(o.a);
  io::GroupFile fb = io::load_group_file(o.b);
  json inputs{{"a", o.a}, {"b", o.b}, {"ambient", o.ambient.empty() ? "orthogonal" : o.ambient}};
  json results;
  std::optional<AlmostConjugacy> found;
  std::size_t order = 0;

  if (fa.is_orthogonal() != fb.is_orthogonal())
    throw ParseError(o.b + ": field 'kind': both groups must be orthogonal or both torus groups");

  if (fa.is_orthogonal()) {
    const auto& a = std::get<FiniteOrthGroup>(fa.group);
    const auto& b = std::get<FiniteOrthGroup>(fb.group);
    if (a.dim() != b.dim()) throw ParseError(o.b + ": field 'dim': differs from " + o.a);
    Ambient ambient = OrthogonalAmbient{};
    if (!o.ambient.empty() && o.ambient != "orthogonal") {
      io::GroupFile fc = io::load_group_file(o.ambient);
      if (!fc.is_orthogonal()) throw ParseError(o.ambient + ": field 'kind': ambient must be orthogonal here");
      ambient = std::get<FiniteOrthGroup>(fc.group);
    }
    found = almost_conjugate(a, b, ambient);
    order = a.order();
    ConjugacyVerdict v = conjugate_in_orthogonal(a, b);
    results["conjugate_in_orthogonal"] = v.describe();
    if (found && std::holds_alternative<OrthogonalAmbient>(ambient))
      results["special_orthogonal_certified"] = found->special_orthogonal_certified;
  } else {
    if (o.ambient.empty() || o.ambient == "orthogonal")
      throw UsageError("--ambient FILE (a finite group of torus isometries) is required for crystal groups");
    io::GroupFile fc = io::load_group_file(o.ambient);
    if (fc.is_orthogonal()) throw ParseError(o.ambient + ": field 'kind': ambient must be a torus group");
    FiniteAffineGroup a = torus_quotient(fa);
    FiniteAffineGroup b = torus_quotient(fb);
    FiniteAffineGroup c = torus_quotient(fc);
    try {
      found = almost_conjugate(a, b, c);
    } catch (const AmbientMismatch& e) {
      throw ParseError(o.ambient + ": " + e.what());
    }
    order = a.order();
    results["quotient_orders"] = {a.order(), b.order()};
    results["ambient_order"] = c.order();
  }

  results["almost_conjugate"] = found.has_value();
  results["bijection"] = found ? json(found->bijection) : json(nullptr);
  if (as_json(o)) {
    emit(out, report("almost-conjugate", inputs, results));
  } else if (found) {
    out << "almost conjugate: bijection found (order " << order << ")\n";
    for (std::size_t i = 0; i < found->bijection.size(); ++i) out << "  " << i << " -> " << found->bijection[i] << '\n';
    if (results.contains("special_orthogonal_certified") && results["special_orthogonal_certified"].get<bool>())
      out << "each pair certified conjugate in SO(" << std::get<FiniteOrthGroup>(fa.group).dim() << ")\n";
  } else {
    out << "not almost conjugate: no class-preserving bijection exists\n";
  }
  if (!as_json(o) && results.contains("conjugate_in_orthogonal"))
    out << "conjugacy in O(n): " << results["conjugate_in_orthogonal"].get<std::string>() << '\n';
  return found ? kSuccess : kNegativeResult;
}

// ---------------------------------------------------------------------------
// Catalog

int run_entries(const std::vector<std::string>& names, const Options& o, const std::string& command,
                std::ostream& out) {
  json rows = json::array();
  std::size_t failed = 0, total = 0;
  for (const auto& name : names) {
    for (const auto& r : catalog::run(catalog::get(name))) {
      ++total;
      if (!r.passed) ++failed;
      if (as_json(o)) {
        rows.push_back({{"entry", r.entry},
                        {"check", r.check},
                        {"claim", r.claim},
                        {"expected", r.expected},
                        {"actual", r.actual},
                        {"passed", r.passed}});
      } else {
        out << (r.passed ? "PASS " : "FAIL ") << r.entry << ' ' << r.check << ": " << r.claim;
        out << "  [expected " << r.expected;
        if (!r.passed) out << ", got " << r.actual;
        out << "]\n";
      }
    }
  }
  if (as_json(o))
    emit(out, report(command, {{"entries", names}}, {{"checks", rows}, {"failed", failed}, {"total", total}}));
  else
    out << (total - failed) << '/' << total << " checks passed\n";
  return failed == 0 ? kSuccess : kNegativeResult;
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw Error(path.string() + ": cannot write");
  f << j.dump(2) << '\n';
}

int cmd_export(const Options& o, std::ostream& out) {
  const catalog::CatalogEntry& e = catalog::get(o.entry);
  std::filesystem::path dir(o.out_dir);
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  auto put = [&](const std::string& suffix, const json& j) {
    auto path = dir / (e.name + "_" + suffix + ".json");
    write_json(path, j);
    written.push_back(path.string());
  };
  if (e.is_flat()) {
    const auto& p = e.flat();
    put("g1", io::crystal_to_json(p.g1, p.sublattice));
    put("g2", io::crystal_to_json(p.g2, p.sublattice));
    if (!p.ambient_generators.empty())
      put("ambient", io::affine_generators_to_json(p.ambient_generators, p.g1.dim(), e.name + ".ambient"));
  } else {
    const auto& p = e.orth();
    put("g1", io::orthogonal_to_json(p.g1, e.name + ".g1"));
    put("g2", io::orthogonal_to_json(p.g2, e.name + ".g2"));
  }
  if (as_json(o))
    emit(out, report("catalog export", {{"entry", o.entry}, {"out", o.out_dir}}, {{"files", written}}));
  else
    for (const auto& w : written) out << w << '\n';
  return kSuccess;
}

int cmd_list(const Options& o, std::ostream& out) {
  if (as_json(o)) {
    json rows = json::array();
    for (const auto& n : catalog::list()) rows.push_back({{"name", n}, {"description", catalog::get(n).description}});
    emit(out, report("catalog list", json::object(), {{"entries", rows}}));
    return kSuccess;
  }
  for (const auto& n : catalog::list()) out << std::left << std::setw(14) << n << catalog::get(n).description << '\n';
  return kSuccess;
}

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laplace spectra, isotropy and almost conjugacy of flat orbifolds, in exact arithmetic", "orbispec"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto* spectrum = app.add_subcommand("spectrum", "Multiplicities d_{k,mu} for mu <= cutoff");
  spectrum->add_option("--group", o.group, "Crystal group file")->required();
  spectrum->add_option("--k", o.k, "Form degree")->required();
  spectrum->add_option("--cutoff", o.cutoff, "Largest mu (rational)")->required();
  add_format(spectrum, o);

  auto* compare = app.add_subcommand("compare", "Compare k-form spectra up to a cutoff");
  compare->add_option("--a", o.a, "First crystal group file")->required();
  compare->add_option("--b", o.b, "Second crystal group file")->required();
  compare->add_option("--k", o.k, "Form degree")->required();
  compare->add_option("--cutoff", o.cutoff, "Largest mu (rational)")->required();
  add_format(compare, o);

  auto* isotropy = app.add_subcommand("isotropy", "Maximal isotropy");
  isotropy->add_option("--group", o.group, "Group file")->required();
  add_format(isotropy, o);

  auto* strata = app.add_subcommand("strata", "Singular strata");
  strata->add_option("--group", o.group, "Group file")->required();
  add_format(strata, o);

  auto* almost = app.add_subcommand("almost-conjugate", "Search for a class-preserving bijection");
  almost->add_option("--a", o.a, "First group file")->required();
  almost->add_option("--b", o.b, "Second group file")->required();
  almost->add_option("--ambient", o.ambient, "Ambient group file, or 'orthogonal'");
  add_format(almost, o);

  auto* cat = app.add_subcommand("catalog", "Built-in example pairs and their golden checks");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "List entries");
  add_format(list, o);
  auto* run_one = cat->add_subcommand("run", "Run the golden checks of one entry");
  run_one->add_option("name", o.entry, "Entry name")->required();
  add_format(run_one, o);
  auto* run_all = cat->add_subcommand("run-all", "Run every golden check");
  add_format(run_all, o);
  auto* exp = cat->add_subcommand("export", "Write an entry's groups as group files");
  exp->add_option("name", o.entry, "Entry name")->required();
  exp->add_option("--out", o.out_dir, "Output directory")->required();
  add_format(exp, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*spectrum) return cmd_spectrum(o, out);
    if (*compare) return cmd_compare(o, out);
    if (*isotropy) return cmd_isotropy(o, out);
    if (*strata) return cmd_strata(o, out);
    if (*almost) return cmd_almost_conjugate(o, out);
    if (*list) return cmd_list(o, out);
    if (*run_one) return run_entries({o.entry}, o, "catalog run", out);
    if (*run_all) return run_entries(catalog::list(), o, "catalog run-all", out);
    if (*exp) return cmd_export(o, out);
  } catch (const UsageError& e) {
    err << "orbispec: " << e.what() << '\n';
    return kUsage;
  } catch (const UnknownEntry& e) {
    err << "orbispec: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "orbispec: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "orbispec: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kUsage;
}

}  // namespace orbispec::cli

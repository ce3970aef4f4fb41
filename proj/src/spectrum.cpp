#include "orbispec/spectrum.hpp"

#include <omp.h>

namespace orbispec {

std::int64_t trace_k(const IntMatrix& p, std::size_t k) {
  const std::size_t n = p.rows();
  if (k > n) throw Error("form degree exceeds dimension");
  auto c = charpoly_coefficients(p);
  std::int64_t e = c[n - k];
  return (k % 2) ? -e : e;
}

IntVector FixedDualLattice::embed(const IntVector& z) const {
  IntVector m(basis.empty() ? 0 : basis.front().size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      m[j] = detail::checked_add(m[j], detail::checked_mul(z[i], basis[i][j]));
  return m;
}

FixedDualLattice fixed_dual_lattice(const Lattice& dual_lattice, const IntMatrix& linear) {
  const std::size_t n = dual_lattice.dim();
  // Dual coordinates transform by (P^T)^-1, so fixed vectors solve (P^T - I) m = 0.
  RatMatrix eq = to_rational(linear.transpose() - IntMatrix::identity(n));
  FixedDualLattice out;
  for (const auto& v : kernel_saturated(eq)) {
    IntVector row;
    for (const auto& x : v) row.push_back(to_int64(x));
    out.basis.push_back(std::move(row));
  }
  if (out.basis.empty()) return out;
  const std::size_t r = out.basis.size();
  RatMatrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      gram(i, j) = dual_lattice.inner(to_rational(out.basis[i]), to_rational(out.basis[j]));
  out.lattice.emplace(gram);
  return out;
}

namespace {

// e_{mu,B} for every mu <= cutoff, from one enumeration of the fixed lattice.
std::map<Rational, CyclotomicSum> e_terms_up_to(const Lattice& dual_lattice, const AffineIsometry& rep,
                                                const Rational& cutoff, bool parallel) {
  std::map<Rational, CyclotomicSum> out;
  FixedDualLattice fixed = fixed_dual_lattice(dual_lattice, rep.linear);
  out[Rational(0)].add(Rational(0), 1);
  if (!fixed.lattice) return out;
  auto ball = parallel ? enumerate_ball(*fixed.lattice, cutoff) : enumerate_ball_serial(*fixed.lattice, cutoff);
  for (const auto& p : ball) {
    if (p.norm == 0) continue;
    out[p.norm].add(dot(fixed.embed(p.coords), rep.transl), 1);
  }
  return out;
}

std::int64_t combine(const CrystalGroup& g, const std::vector<std::int64_t>& traces,
                     const std::vector<const CyclotomicSum*>& terms, const Rational& mu, std::size_t k) {
  CyclotomicSum total;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i] && traces[i] != 0) total += terms[i]->scaled(Integer(static_cast<long>(traces[i])));
  Rational value = cyclo_eval(total) / Rational(static_cast<long>(g.order()));
  if (!is_integer(value) || value < 0)
    throw IntegralityFailure("multiplicity d_{" + std::to_string(k) + "," + to_string(mu) + "} of " + g.name +
                             " evaluates to " + to_string(value));
  return to_int64(value.get_num());
}

SpectrumTable build_table(const CrystalGroup& g, std::size_t k, const Rational& cutoff, bool parallel) {
  if (cutoff < 0) throw Error("cutoff must be nonnegative");
  if (k > g.dim()) throw Error("form degree exceeds dimension");
  Lattice dual_lattice = dual(g.lattice);
  const std::size_t reps = g.reps.size();
  std::vector<std::map<Rational, CyclotomicSum>> per_rep(reps);
  std::vector<std::int64_t> traces(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    traces[r] = trace_k(g.reps[r].linear, k);
    per_rep[r] = e_terms_up_to(dual_lattice, g.reps[r], cutoff, parallel);
  }
  auto id = rep_index(g, IntMatrix::identity(g.dim()));
  if (!id) throw Error("group " + g.name + " has no identity coset");
  std::vector<Rational> mus;
  for (const auto& [mu, s] : per_rep[*id]) mus.push_back(mu);

  std::vector<std::int64_t> values(mus.size());
  const std::int64_t count = static_cast<std::int64_t>(mus.size());
  auto evaluate = [&](std::int64_t i) {
    const Rational& mu = mus[static_cast<std::size_t>(i)];
    std::vector<const CyclotomicSum*> terms(reps, nullptr);
    for (std::size_t r = 0; r < reps; ++r) {
      auto it = per_rep[r].find(mu);
      if (it != per_rep[r].end()) terms[r] = &it->second;
    }
    values[static_cast<std::size_t>(i)] = combine(g, traces, terms, mu, k);
  };
  if (parallel) {
    // Exceptions must not escape an OpenMP region; collect the first one.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        evaluate(i);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::int64_t i = 0; i < count; ++i) evaluate(i);
  }

  SpectrumTable table{k, cutoff, {}};
  for (std::size_t i = 0; i < mus.size(); ++i) table.entries.emplace(mus[i], values[i]);
  return table;
}

}  // namespace

CyclotomicSum e_term(const CrystalGroup& g, std::size_t rep, const Rational& mu) {
  if (mu < 0) throw Error("mu must be nonnegative");
  if (rep >= g.reps.size()) throw Error("coset index out of range");
  Lattice dual_lattice = dual(g.lattice);
  FixedDualLattice fixed = fixed_dual_lattice(dual_lattice, g.reps[rep].linear);
  CyclotomicSum s;
  if (!fixed.lattice) {
    if (mu == 0) s.add(Rational(0), 1);
    return s;
  }
  for (const auto& z : enumerate_shell(*fixed.lattice, mu)) s.add(dot(fixed.embed(z), g.reps[rep].transl), 1);
  return s;
}

std::int64_t multiplicity(const CrystalGroup& g, std::size_t k, const Rational& mu) {
  if (k > g.dim()) throw Error("form degree exceeds dimension");
  std::vector<CyclotomicSum> terms;
  std::vector<std::int64_t> traces;
  for (std::size_t r = 0; r < g.reps.size(); ++r) {
    terms.push_back(e_term(g, r, mu));
    traces.push_back(trace_k(g.reps[r].linear, k));
  }
  std::vector<const CyclotomicSum*> ptrs;
  for (const auto& t : terms) ptrs.push_back(&t);
  return combine(g, traces, ptrs, mu, k);
}

std::int64_t SpectrumTable::at(const Rational& mu) const {
  auto it = entries.find(mu);
  return it == entries.end() ? 0 : it->second;
}

SpectrumTable spectrum_table(const CrystalGroup& g, std::size_t k, const Rational& cutoff) {
  return build_table(g, k, cutoff, true);
}

SpectrumTable spectrum_table_serial(const CrystalGroup& g, std::size_t k, const Rational& cutoff) {
  return build_table(g, k, cutoff, false);
}

Comparison compare_tables(const SpectrumTable& a, const SpectrumTable& b) {
  std::map<Rational, int> keys;
  for (const auto& [mu, d] : a.entries) keys[mu];
  for (const auto& [mu, d] : b.entries) keys[mu];
  for (const auto& [mu, unused] : keys) {
    std::int64_t da = a.at(mu), db = b.at(mu);
    if (da != db) return Comparison{false, mu, da, db};
  }
  return Comparison{};
}

Comparison compare(const CrystalGroup& a, const CrystalGroup& b, std::size_t k, const Rational& cutoff) {
  return compare_tables(spectrum_table(a, k, cutoff), spectrum_table(b, k, cutoff));
}

}  // namespace orbispec

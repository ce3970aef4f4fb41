// Brute-force multiplicities via the invariant projection on the covering
// torus. Deliberately shares nothing with the dimension formula beyond the
// group data: the shell comes from box search, the k-form action from
// explicit minors, and the phases from the raw translation.

#include "orbispec/spectrum.hpp"

#include <map>

namespace orbispec {

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::int64_t minor(const IntMatrix& p, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.empty()) return 1;
  IntMatrix sub(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = p(rows[i], cols[j]);
  return determinant(sub);
}

using SparseMatrix = std::map<std::pair<std::size_t, std::size_t>, CyclotomicSum>;

}  // namespace

std::int64_t oracle_multiplicity(const CrystalGroup& g, std::size_t k, const Rational& mu, bool check_projection) {
  const std::size_t n = g.dim();
  if (k > n) throw Error("form degree exceeds dimension");
  if (mu < 0) throw Error("mu must be nonnegative");
  Lattice dual_lattice = dual(g.lattice);

  std::vector<IntVector> shell;
  for (auto& p : enumerate_ball_naive(dual_lattice, mu))
    if (p.norm == mu) shell.push_back(std::move(p.coords));
  std::map<IntVector, std::size_t> shell_index;
  for (std::size_t i = 0; i < shell.size(); ++i) shell_index.emplace(shell[i], i);

  const auto forms = subsets(n, k);
  const std::size_t nf = forms.size();
  auto basis_index = [nf](std::size_t v, std::size_t f) { return v * nf + f; };

  // Sum over cosets of the pullback matrices:
  //   gamma^*(e_m dy_I) = exp(2 pi i m.c) e_{P^T m} sum_J det P[I,J] dy_J.
  SparseMatrix sum;
  for (const auto& rep : g.reps) {
    IntMatrix pt = rep.linear.transpose();
    for (std::size_t v = 0; v < shell.size(); ++v) {
      auto image = shell_index.find(pt * shell[v]);
      if (image == shell_index.end()) throw Error("oracle: linear part does not preserve the dual shell");
      Rational phase = dot(shell[v], rep.transl);
      for (std::size_t f = 0; f < nf; ++f)
        for (std::size_t h = 0; h < nf; ++h) {
          std::int64_t c = minor(rep.linear, forms[f], forms[h]);
          if (c == 0) continue;
          sum[{basis_index(image->second, h), basis_index(v, f)}].add(phase, Integer(static_cast<long>(c)));
        }
    }
  }

  CyclotomicSum trace;
  for (const auto& [pos, entry] : sum)
    if (pos.first == pos.second) trace += entry;
  Rational value = cyclo_eval(trace) / Rational(static_cast<long>(g.order()));

  if (check_projection) {
    // (S / #F)^2 = S / #F  <=>  S * S = #F * S.
    SparseMatrix square;
    std::map<std::size_t, std::vector<std::pair<std::size_t, const CyclotomicSum*>>> by_row;
    for (const auto& [pos, entry] : sum) by_row[pos.first].push_back({pos.second, &entry});
    for (const auto& [pos, left] : sum) {
      auto it = by_row.find(pos.second);
      if (it == by_row.end()) continue;
      for (const auto& [col, right] : it->second) square[{pos.first, col}] += left * *right;
    }
    for (const auto& [pos, entry] : sum) square[pos] += entry.scaled(-Integer(static_cast<long>(g.order())));
    for (const auto& [pos, entry] : square)
      if (!is_zero(entry)) throw IntegralityFailure("oracle: averaged coset action is not a projection");
  }

  if (!is_integer(value) || value < 0)
    throw IntegralityFailure("oracle trace for " + g.name + " at mu = " + to_string(mu) + " is " + to_string(value));
  return to_int64(value.get_num());
}

}  // namespace orbispec

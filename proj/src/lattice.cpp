#include "orbispec/lattice.hpp"

#include "orbispec/error.hpp"

#include <algorithm>
#include <omp.h>

namespace orbispec {

Lattice::Lattice(RatMatrix gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.rows();
  if (!gram_.is_square() || n == 0) throw Error("gram matrix must be square and nonempty");
  if (!is_symmetric(gram_)) throw Error("gram matrix is not symmetric");
  ldl_l_ = RatMatrix::identity(n);
  ldl_d_.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational d = gram_(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= ldl_l_(j, k) * ldl_l_(j, k) * ldl_d_[k];
    // d_j is the ratio of consecutive leading principal minors.
    if (d <= 0)
      throw Error("gram matrix is not positive definite (leading minor " + std::to_string(j + 1) +
                  " is not positive)");
    ldl_d_[j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = gram_(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= ldl_l_(i, k) * ldl_l_(j, k) * ldl_d_[k];
      ldl_l_(i, j) = s / d;
    }
  }
}

Rational Lattice::norm(const IntVector& m) const { return norm(to_rational(m)); }

Rational Lattice::norm(const RatVector& x) const { return inner(x, x); }

Rational Lattice::inner(const RatVector& x, const RatVector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("vector/lattice dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < dim(); ++j)
      if (y[j] != 0) row += gram_(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

Lattice dual(const Lattice& lattice) {
  auto inv = inverse(lattice.gram());
  return Lattice(*inv);
}

Integer floor_plus_sqrt(const Rational& x, const Rational& t) {
  if (t < 0) throw Error("floor_plus_sqrt: negative radicand");
  Integer k = floor_of(x) + isqrt(floor_of(t)) + 1;
  for (;;) {
    Rational diff = Rational(k) - x;
    if (diff <= 0 || diff * diff <= t) return k;
    --k;
  }
}

Integer ceil_minus_sqrt(const Rational& x, const Rational& t) { return -floor_plus_sqrt(-x, t); }

namespace {

bool ball_less(const BallPoint& a, const BallPoint& b) {
  if (a.norm != b.norm) return a.norm < b.norm;
  return a.coords < b.coords;
}

// Depth-first Fincke-Pohst below a fixed assignment of coordinates
// level+1..n-1. `budget` is cutoff minus the contribution of those levels.
class FinckePohst {
public:
  FinckePohst(const Lattice& lattice, const Rational& cutoff)
      : l_(lattice.ldl_lower()), d_(lattice.ldl_diagonal()), cutoff_(cutoff), n_(lattice.dim()) {}

  std::pair<std::int64_t, std::int64_t> range(std::size_t level, const IntVector& m, const Rational& budget) const {
    Rational center = 0;
    for (std::size_t i = level + 1; i < n_; ++i)
      if (m[i] != 0) center += l_(i, level) * Rational(static_cast<long>(m[i]));
    Rational t = budget / d_[level];
    return {to_int64(ceil_minus_sqrt(-center, t)), to_int64(floor_plus_sqrt(-center, t))};
  }

  Rational contribution(std::size_t level, const IntVector& m) const {
    Rational y = Rational(static_cast<long>(m[level]));
    for (std::size_t i = level + 1; i < n_; ++i)
      if (m[i] != 0) y += l_(i, level) * Rational(static_cast<long>(m[i]));
    return d_[level] * y * y;
  }

  void descend(std::size_t level, IntVector& m, const Rational& budget, std::vector<BallPoint>& out) const {
    auto [lo, hi] = range(level, m, budget);
    for (std::int64_t v = lo; v <= hi; ++v) {
      m[level] = v;
      Rational rest = budget - contribution(level, m);
      if (rest < 0) continue;
      if (level == 0)
        out.push_back(BallPoint{m, cutoff_ - rest});
      else
        descend(level - 1, m, rest, out);
    }
    m[level] = 0;
  }

  std::size_t dim() const { return n_; }
  const Rational& cutoff() const { return cutoff_; }

private:
  const RatMatrix& l_;
  const std::vector<Rational>& d_;
  Rational cutoff_;
  std::size_t n_;
};

}  // namespace

std::vector<BallPoint> enumerate_ball_serial(const Lattice& lattice, const Rational& cutoff) {
  if (cutoff < 0) throw Error("enumeration cutoff must be nonnegative");
  FinckePohst fp(lattice, cutoff);
  std::vector<BallPoint> out;
  IntVector m(lattice.dim(), 0);
  fp.descend(lattice.dim() - 1, m, cutoff, out);
  std::sort(out.begin(), out.end(), ball_less);
  return out;
}

std::vector<BallPoint> enumerate_ball(const Lattice& lattice, const Rational& cutoff) {
  if (cutoff < 0) throw Error("enumeration cutoff must be nonnegative");
  const std::size_t n = lattice.dim();
  FinckePohst fp(lattice, cutoff);
  IntVector zero(n, 0);
  auto [lo, hi] = fp.range(n - 1, zero, cutoff);
  const std::int64_t count = hi - lo + 1;
  std::vector<std::vector<BallPoint>> parts(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t idx = 0; idx < count; ++idx) {
    IntVector m(n, 0);
    m[n - 1] = lo + idx;
    Rational rest = cutoff - fp.contribution(n - 1, m);
    if (rest < 0) continue;
    auto& part = parts[static_cast<std::size_t>(idx)];
    if (n == 1)
      part.push_back(BallPoint{m, cutoff - rest});
    else
      fp.descend(n - 2, m, rest, part);
  }

  std::vector<BallPoint> out;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  out.reserve(total);
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(), ball_less);
  return out;
}

std::vector<BallPoint> enumerate_ball_naive(const Lattice& lattice, const Rational& cutoff) {
  if (cutoff < 0) throw Error("enumeration cutoff must be nonnegative");
  const std::size_t n = lattice.dim();
  auto inv = *inverse(lattice.gram());
  IntVector bound(n);
  for (std::size_t i = 0; i < n; ++i) bound[i] = to_int64(isqrt(floor_of(cutoff * inv(i, i))));
  std::vector<BallPoint> out;
  IntVector m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = -bound[i];
  for (;;) {
    Rational q = lattice.norm(m);
    if (q <= cutoff) out.push_back(BallPoint{m, q});
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (m[i] < bound[i]) {
        ++m[i];
        break;
      }
      m[i] = -bound[i];
      if (i == 0) {
        std::sort(out.begin(), out.end(), ball_less);
        return out;
      }
    }
  }
}

std::vector<ShellVector> enumerate_shell(const Lattice& lattice, const Rational& mu) {
  if (mu < 0) throw Error("shell norm must be nonnegative");
  std::vector<ShellVector> out;
  for (auto& p : enumerate_ball(lattice, mu))
    if (p.norm == mu) out.push_back(std::move(p.coords));
  return out;
}

std::map<Rational, std::vector<ShellVector>> shells_up_to(const Lattice& lattice, const Rational& cutoff) {
  std::map<Rational, std::vector<ShellVector>> shells;
  for (auto& p : enumerate_ball(lattice, cutoff)) shells[p.norm].push_back(std::move(p.coords));
  return shells;
}

std::vector<Rational> norm_values(const Lattice& lattice, const Rational& cutoff) {
  std::vector<Rational> out;
  for (const auto& p : enumerate_ball(lattice, cutoff))
    if (out.empty() || out.back() != p.norm) out.push_back(p.norm);
  return out;
}

}  // namespace orbispec

#include "orbispec/exact.hpp"

#include "orbispec/error.hpp"

#include <map>
#include <mutex>

namespace orbispec {

namespace {

void swap_rows(IntegerMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

// row_i <- x*row_i + y*row_k ; row_k <- u*row_i + v*row_k  (xv - yu = 1)
void combine_rows(IntegerMatrix& a, std::size_t i, std::size_t k, const Integer& x, const Integer& y,
                  const Integer& u, const Integer& v) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Integer ri = a(i, c), rk = a(k, c);
    a(i, c) = x * ri + y * rk;
    a(k, c) = u * ri + v * rk;
  }
}

void add_row_multiple(IntegerMatrix& a, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) -= f * a(src, c);
}

// In-place row Hermite normal form. When transform is non-null it must
// start as the identity of size a.rows() and receives the same row
// operations, so that transform * A_original = A_final. Returns the rank.
std::size_t row_hermite_inplace(IntegerMatrix& a, IntegerMatrix* transform) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    for (std::size_t k = r + 1; k < a.rows(); ++k) {
      if (a(k, c) == 0) continue;
      if (a(r, c) == 0) {
        swap_rows(a, r, k);
        if (transform) swap_rows(*transform, r, k);
        continue;
      }
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a(r, c).get_mpz_t(), a(k, c).get_mpz_t());
      Integer u = -a(k, c) / g, v = a(r, c) / g;
      combine_rows(a, r, k, x, y, u, v);
      if (transform) combine_rows(*transform, r, k, x, y, u, v);
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = -a(r, j);
      if (transform)
        for (std::size_t j = 0; j < transform->cols(); ++j) (*transform)(r, j) = -(*transform)(r, j);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      add_row_multiple(a, i, r, f);
      if (transform) add_row_multiple(*transform, i, r, f);
    }
    ++r;
  }
  return r;
}

IntegerMatrix clear_row_denominators(const RatMatrix& m) {
  IntegerMatrix a(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm_of(l, m(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return a;
}

}  // namespace

HermiteResult column_hermite(const IntegerMatrix& a) {
  IntegerMatrix t = a.transpose();
  IntegerMatrix v = IntegerMatrix::identity(t.rows());
  std::size_t r = row_hermite_inplace(t, &v);
  return HermiteResult{t.transpose(), v.transpose(), r};
}

IntegerMatrix row_hermite_basis(const IntegerMatrix& a) {
  IntegerMatrix h = a;
  std::size_t r = row_hermite_inplace(h, nullptr);
  IntegerMatrix out(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = h(i, j);
  return out;
}

std::vector<IntegerVector> kernel_saturated(const RatMatrix& m) {
  const std::size_t n = m.cols();
  IntegerMatrix a = clear_row_denominators(m);
  // Row operations on A^T: V * A^T = H. Rows of V past the rank span the
  // integer kernel of A, and V unimodular makes that span saturated.
  IntegerMatrix t = a.transpose();
  IntegerMatrix v = IntegerMatrix::identity(n);
  std::size_t r = row_hermite_inplace(t, &v);
  if (r == n) return {};
  IntegerMatrix k(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i - r, j) = v(i, j);
  IntegerMatrix h = row_hermite_basis(k);
  std::vector<IntegerVector> out;
  for (std::size_t i = 0; i < h.rows(); ++i) out.push_back(h.row(i));
  return out;
}

std::optional<AffineSolution> solve_affine(const RatMatrix& m, const RatVector& c) {
  if (c.size() != m.rows()) throw DimensionMismatch("solve_affine: right-hand side length mismatch");
  const std::size_t n = m.cols();
  RatMatrix aug(m.rows(), n + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = c[i];
  }
  std::vector<std::size_t> piv;
  RatMatrix r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(n, Rational(0));
  for (std::size_t i = 0; i < piv.size(); ++i) sol.particular[piv[i]] = r(i, n);
  sol.kernel = kernel_saturated(m);
  return sol;
}

// ---------------------------------------------------------------------------
// Cyclotomic sums

CyclotomicSum CyclotomicSum::root(const Rational& q, const Integer& coeff) {
  CyclotomicSum s;
  s.add(q, coeff);
  return s;
}

void CyclotomicSum::add(const Rational& q, const Integer& coeff) {
  if (coeff == 0) return;
  Rational key = frac_part(q);
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

CyclotomicSum& CyclotomicSum::operator+=(const CyclotomicSum& other) {
  for (const auto& [q, c] : other.terms_) add(q, c);
  return *this;
}

CyclotomicSum operator*(const CyclotomicSum& a, const CyclotomicSum& b) {
  CyclotomicSum r;
  for (const auto& [qa, ca] : a.terms_)
    for (const auto& [qb, cb] : b.terms_) r.add(qa + qb, ca * cb);
  return r;
}

CyclotomicSum CyclotomicSum::scaled(const Integer& c) const {
  CyclotomicSum r;
  if (c == 0) return r;
  for (const auto& [q, x] : terms_) r.terms_.emplace(q, x * c);
  return r;
}

Integer CyclotomicSum::conductor() const {
  Integer n = 1;
  for (const auto& [q, c] : terms_) n = lcm_of(n, q.get_den());
  return n;
}

const std::vector<Integer>& cyclotomic_polynomial(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Integer>> cache;
  if (n == 0) throw Error("cyclotomic polynomial of order 0");
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
  std::vector<std::size_t> divisors;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  for (std::size_t d : divisors) {
    if (cache.count(d)) continue;
    std::vector<Integer> num(d + 1, Integer(0));
    num[0] = -1;
    num[d] = 1;
    for (std::size_t e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      const auto& den = cache.at(e);  // divisors processed in increasing order
      const std::size_t dd = den.size() - 1;
      std::vector<Integer> quot(num.size() - dd, Integer(0));
      for (std::size_t i = num.size(); i-- > dd;) {
        Integer t = num[i];  // den is monic
        quot[i - dd] = t;
        if (t != 0)
          for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= t * den[j];
      }
      num = std::move(quot);
    }
    cache.emplace(d, std::move(num));
  }
  return cache.at(n);
}

std::vector<Integer> reduce_cyclotomic(const CyclotomicSum& s, std::size_t* modulus) {
  Integer big_n = s.conductor();
  if (!big_n.fits_ulong_p() || big_n > 1000000) throw Error("cyclotomic conductor too large");
  const std::size_t n = big_n.get_ui();
  if (modulus) *modulus = n;
  std::vector<Integer> coef(n, Integer(0));
  for (const auto& [q, c] : s.terms()) {
    Integer e = q.get_num() * (big_n / q.get_den());
    coef[e.get_ui()] += c;
  }
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = n; i-- > deg;) {
    if (coef[i] == 0) continue;
    Integer t = coef[i];
    for (std::size_t j = 0; j <= deg; ++j) coef[i - deg + j] -= t * phi[j];
  }
  coef.resize(deg);
  return coef;
}

Rational cyclo_eval(const CyclotomicSum& s) {
  std::size_t n = 1;
  auto coef = reduce_cyclotomic(s, &n);
  for (std::size_t i = 1; i < coef.size(); ++i)
    if (coef[i] != 0)
      throw NotRationalError("cyclotomic sum is not rational (nonzero zeta_" + std::to_string(n) + "^" +
                             std::to_string(i) + " coefficient)");
  return Rational(coef.empty() ? Integer(0) : coef[0]);
}

bool is_zero(const CyclotomicSum& s) {
  for (const auto& c : reduce_cyclotomic(s))
    if (c != 0) return false;
  return true;
}

}  // namespace orbispec

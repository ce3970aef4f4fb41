#include "orbispec/rational.hpp"

#include "orbispec/error.hpp"

#include <limits>

namespace orbispec {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool parse_digits(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  out.set_str(std::string(s), 10);
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  bool negative = false;
  constexpr std::string_view unicode_minus = "\xE2\x88\x92";
  if (s.substr(0, unicode_minus.size()) == unicode_minus) {
    negative = true;
    s.remove_prefix(unicode_minus.size());
  } else if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Integer num, den(1);
  auto slash = s.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_digits(s, num)
                : parse_digits(s.substr(0, slash), num) && parse_digits(s.substr(slash + 1), den);
  if (!ok) throw ParseError("invalid rational \"" + std::string(text) + "\"");
  if (den == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  if (negative) num = -num;
  return make_rational(num, den);
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational frac_part(const Rational& q) { return q - Rational(floor_of(q)); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer isqrt(const Integer& z) {
  if (z < 0) throw Error("isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw OverflowError("integer " + z.get_str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(z.get_si());
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

std::size_t RationalHash::operator()(const Rational& q) const {
  std::size_t h = mpz_fdiv_ui(q.get_num_mpz_t(), 1000000007UL);
  std::size_t d = mpz_fdiv_ui(q.get_den_mpz_t(), 1000000007UL);
  return h * 1315423911u ^ (d + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (auto x : v) r.emplace_back(static_cast<long>(x));
  return r;
}

RatVector frac_part(const RatVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(frac_part(x));
  return r;
}

bool is_integral(const RatVector& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

Rational dot(const IntVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot product dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += Rational(static_cast<long>(a[i])) * b[i];
  return s;
}

}  // namespace orbispec

#pragma once

// Arbitrary-precision scalars. Rationals are GMP mpq values kept in
// canonical form (gcd(num, den) = 1, den > 0) at all times.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace orbispec {

using Integer = mpz_class;
using Rational = mpq_class;

using IntegerVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntVector = std::vector<std::int64_t>;

Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(long num, long den) {
  return make_rational(Integer(num), Integer(den));
}

// "p/q", or "p" when q = 1; leading '-' for negatives.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "p/q", with an optional leading '-' or '+' (U+2212 is also
// accepted as a minus sign). Throws ParseError.
Rational parse_rational(std::string_view text);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
// q - floor(q), always in [0, 1).
Rational frac_part(const Rational& q);
bool is_integer(const Rational& q);

// floor(sqrt(z)) for z >= 0.
Integer isqrt(const Integer& z);

std::int64_t to_int64(const Integer& z);  // throws OverflowError
Integer lcm_of(const Integer& a, const Integer& b);

struct RationalHash {
  std::size_t operator()(const Rational& q) const;
};

// Componentwise helpers.
RatVector to_rational(const IntVector& v);
RatVector frac_part(const RatVector& v);
bool is_integral(const RatVector& v);
Rational dot(const IntVector& a, const RatVector& b);

}  // namespace orbispec

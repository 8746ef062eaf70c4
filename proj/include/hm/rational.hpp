#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hm {

// Arbitrary-precision rational; every quantity in the library is exact.
using Rational = mpq_class;

// Raised for malformed or invalid inputs (CLI exit status 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses "p/q" or "p" (q > 0) and returns the reduced value.
Rational parse_rational(std::string_view text);

// Always "p/q" with q > 0 and gcd(p, q) = 1, integers included ("3/1").
std::string format_rational(const Rational& value);

// p/q in lowest terms.
inline Rational ratio(long p, long q) {
  Rational r{mpz_class(p), mpz_class(q)};
  r.canonicalize();
  return r;
}

// 2^-k.
Rational dyadic(unsigned k);

// floor(value * 2^shift) as a signed 64-bit integer.
std::int64_t floor_scaled(const Rational& value, unsigned shift);

inline Rational abs_value(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace hm

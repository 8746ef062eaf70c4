#include "hm/rational.hpp"

#include <cctype>

namespace hm {

namespace {

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  std::string_view digits = num;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!all_digits(digits) || !all_digits(den))
    throw InputError("malformed rational: \"" + std::string(text) + "\"");
  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw InputError("zero denominator: \"" + std::string(text) + "\"");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational dyadic(unsigned k) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  return Rational(mpz_class(1), den);
}

std::int64_t floor_scaled(const Rational& value, unsigned shift) {
  mpz_class scaled = value.get_num();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), shift);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), value.get_den_mpz_t());
  if (!q.fits_slong_p()) throw InputError("coordinate scale out of range");
  return q.get_si();
}

}  // namespace hm

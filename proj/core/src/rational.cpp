#include "conesing/rational.hpp"

#include "conesing/error.hpp"

#include <cctype>
#include <limits>

namespace conesing {

Integer floor(const Rational& q) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return result;
}

Integer ceil(const Rational& q) {
  Integer result;
  mpz_cdiv_q(result.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return result;
}

Rational fractional_part(const Rational& q) { return q - Rational(floor(q)); }

Integer lcm(const Integer& a, const Integer& b) {
  Integer result;
  mpz_lcm(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer result;
  mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+') {
    fail_parse("malformed rational '" + std::string(text) + "'");
  }
  Integer p(std::string(num[0] == '+' ? num.substr(1) : num));
  Integer q{std::string(den)};
  if (q == 0) fail_parse("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) fail_internal("Overflow", "integer " + z.get_str() + " exceeds 64 bits");
  return static_cast<std::int64_t>(z.get_si());
}

}  // namespace conesing

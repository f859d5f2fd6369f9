#include "eqknot/rational.hpp"

#include <cctype>

#include "eqknot/errors.hpp"

namespace eqknot {

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t& p) {
    const std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == start) throw ParseError("expected digits in rational '" + std::string(text) + "'", 0, p + 1);
    return std::string(text.substr(start, p - start));
  };
  Integer num(digits(pos));
  Integer den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = Integer(digits(pos));
    if (den == 0) throw ParseError("zero denominator", 0, pos);
  }
  if (pos != text.size()) throw ParseError("trailing characters in rational", 0, pos + 1);
  Rational q(negative ? Integer(-num) : num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_rational_square(const Rational& q) {
  return q >= 0 && is_perfect_square(q.get_num()) && is_perfect_square(q.get_den());
}

Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace eqknot

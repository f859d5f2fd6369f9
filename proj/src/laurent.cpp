#include "eqknot/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <utility>

#include "eqknot/errors.hpp"

namespace eqknot {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exp;
    p.c_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<Rational> ascending) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(ascending);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

Rational LaurentPoly::coeff(int exp) const {
  if (c_.empty() || exp < low_ || exp > high()) return 0;
  return c_[static_cast<std::size_t>(exp - low_)];
}

LaurentPoly LaurentPoly::conj() const {
  if (c_.empty()) return {};
  LaurentPoly out;
  out.low_ = -high();
  out.c_.assign(c_.rbegin(), c_.rend());
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.c_.empty()) out.low_ += k;
  return out;
}

LaurentPoly LaurentPoly::monic() const {
  if (c_.empty()) return {};
  return ordinary().scaled(1 / Rational(c_.back()));
}

LaurentPoly LaurentPoly::scaled(const Rational& s) const {
  if (s == 0) return {};
  LaurentPoly out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

Rational LaurentPoly::eval(const Rational& x) const {
  if (c_.empty()) return 0;
  // Horner on the ordinary part, then multiply by x^low.
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  Rational xp = 1;
  const int e = std::abs(low_);
  for (int i = 0; i < e; ++i) xp *= x;
  if (low_ < 0) {
    if (x == 0) throw DomainError("evaluating a Laurent polynomial with negative exponents at 0");
    return acc / xp;
  }
  return acc * xp;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Rational(0));
    low_ = lo;
  }
  c_.resize(static_cast<std::size_t>(hi - lo + 1), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[static_cast<std::size_t>(o.low_ - low_) + i] += o.c_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  LaurentPoly out;
  out.low_ = a.low_ + b.low_;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

// ---------------------------------------------------------------------------
// Text form

std::string LaurentPoly::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (int e = high(); e >= low_; --e) {
    const Rational& c = c_[static_cast<std::size_t>(e - low_)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  LaurentPoly run() {
    LaurentPoly acc;
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      skip_ws();
      acc += term().scaled(sign);
      first = false;
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  LaurentPoly term() {
    Rational coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = digits();
      Integer den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        den = digits();
        if (den == 0) fail("zero denominator");
      }
      coef = Rational(num, den);
      coef.canonicalize();
      have_coef = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 't') fail("expected 't' after '*'");
      } else if (peek() == 't') {
        fail("expected '*' between coefficient and 't'");
      }
    }
    if (peek() != 't') {
      if (!have_coef) fail("expected a coefficient or 't'");
      return LaurentPoly(coef);
    }
    ++pos_;
    skip_ws();
    int exp = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      int sign = 1;
      if (peek() == '-' || peek() == '+') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      }
      const Integer e = digits();
      if (!e.fits_sint_p()) fail("exponent out of range");
      exp = sign * static_cast<int>(e.get_si());
    }
    return LaurentPoly::monomial(coef, exp);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).run(); }

// ---------------------------------------------------------------------------
// Euclidean structure

DivMod poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) return {};
  if (a.low() < 0 || b.low() < 0) throw DomainError("poly_divmod expects ordinary polynomials");
  const int db = b.high();
  std::vector<Rational> rem(static_cast<std::size_t>(a.high() + 1), Rational(0));
  for (int e = a.low(); e <= a.high(); ++e) rem[static_cast<std::size_t>(e)] = a.coeff(e);
  std::vector<Rational> bc(static_cast<std::size_t>(db + 1), Rational(0));
  for (int e = b.low(); e <= db; ++e) bc[static_cast<std::size_t>(e)] = b.coeff(e);
  const Rational inv_lead = 1 / Rational(bc.back());
  const int da = a.high();
  if (da < db) return {LaurentPoly(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1), Rational(0));
  for (int e = da; e >= db; --e) {
    const Rational q = rem[static_cast<std::size_t>(e)] * inv_lead;
    if (q == 0) continue;
    quo[static_cast<std::size_t>(e - db)] = q;
    for (int k = 0; k <= db; ++k) rem[static_cast<std::size_t>(e - db + k)] -= q * bc[static_cast<std::size_t>(k)];
  }
  return {LaurentPoly::from_coeffs(0, std::move(quo)), LaurentPoly::from_coeffs(0, std::move(rem))};
}

DivMod divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) return {};
  auto [q, r] = poly_divmod(a.ordinary(), b.ordinary());
  return {q.shifted(a.low() - b.low()), r.shifted(a.low())};
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

bool divides(const LaurentPoly& d, const LaurentPoly& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).remainder.is_zero();
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = a.ordinary();
  LaurentPoly y = b.ordinary();
  while (!y.is_zero()) {
    LaurentPoly r = poly_divmod(x, y).remainder;
    x = std::move(y);
    y = r.ordinary();
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r0 = a.ordinary(), r1 = b.ordinary();
  LaurentPoly s0 = 1, s1 = 0, u0 = 0, u1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    u0 = std::exchange(u1, u0 - q * u1);
  }
  if (r0.is_zero()) return {};
  const Rational inv = 1 / Rational(r0.leading());
  return {r0.scaled(inv), s0.scaled(inv), u0.scaled(inv)};
}

bool associates(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return p.monic() == q.monic();
}

}  // namespace eqknot

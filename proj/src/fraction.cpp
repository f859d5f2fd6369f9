#include "eqknot/fraction.hpp"

#include "eqknot/errors.hpp"

namespace eqknot {

RationalFn::RationalFn(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = 1;
    return;
  }
  const LaurentPoly g = gcd(num, den);
  LaurentPoly n = *exact_divide(num, g);
  LaurentPoly d = *exact_divide(den, g);
  // Move the t-power and the leading coefficient of d into n.
  const int shift = d.low();
  const Rational lead = d.leading();
  d = d.ordinary().scaled(1 / lead);
  n = n.shifted(-shift).scaled(1 / lead);
  num_ = std::move(n);
  den_ = std::move(d);
}

RationalFn RationalFn::inverse() const {
  if (num_.is_zero()) throw DomainError("inverse of zero rational function");
  return {den_, num_};
}

RationalFn RationalFn::operator-() const { return RationalFn(Raw{}, -num_, den_); }

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_constant() && b.den_.is_constant()) return RationalFn(a.num_ * b.num_);
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

std::string RationalFn::to_string() const {
  if (den_ == LaurentPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ---------------------------------------------------------------------------

namespace {

LaurentPoly mulmod(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& d) {
  return poly_divmod(a * b, d).remainder;
}

LaurentPoly powmod(LaurentPoly base, unsigned e, const LaurentPoly& d) {
  LaurentPoly acc = poly_divmod(LaurentPoly(1), d).remainder;
  while (e > 0) {
    if (e & 1U) acc = mulmod(acc, base, d);
    base = mulmod(base, base, d);
    e >>= 1U;
  }
  return acc;
}

}  // namespace

LaurentPoly mod_lambda(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero() || d.low() != 0) throw DomainError("mod_lambda expects an ordinary modulus with nonzero constant term");
  if (d.high() == 0 || p.is_zero()) return {};
  const LaurentPoly base = poly_divmod(p.ordinary(), d).remainder;
  const int k = p.low();
  if (k == 0) return base;
  if (k > 0) return mulmod(base, powmod(LaurentPoly::t(1), static_cast<unsigned>(k), d), d);
  // d = d0 + t*e(t) gives t * (-e/d0) = 1 mod d.
  const Rational d0 = d.coeff(0);
  const LaurentPoly e = (d - LaurentPoly(d0)).shifted(-1);
  const LaurentPoly t_inv = poly_divmod(e.scaled(-1 / d0), d).remainder;
  return mulmod(base, powmod(t_inv, static_cast<unsigned>(-k), d), d);
}

LaurentPoly inverse_mod(const LaurentPoly& a, const LaurentPoly& d) {
  const LaurentPoly dd = d.ordinary();
  const LaurentPoly r = mod_lambda(a, dd);
  if (r.is_zero()) throw DomainError("element is not invertible modulo " + d.to_string());
  const ExtendedGcd eg = extended_gcd(r, dd);
  if (eg.g != LaurentPoly(1)) throw DomainError("element is not invertible modulo " + d.to_string());
  // extended_gcd works with r.ordinary() = t^{-low} r.
  return mod_lambda(eg.s.shifted(-r.low()), dd);
}

TorsionClass::TorsionClass(const RationalFn& f) {
  const LaurentPoly& d = f.den();
  if (d.high() == 0) return;  // constant denominator: class is zero
  rep_ = RationalFn(mod_lambda(f.num(), d), d);
}

std::string TorsionClass::to_string() const { return rep_.to_string(); }

bool in_lambda(const RationalFn& f) { return f.den().high() == 0; }

std::vector<TorsionClass> coprime_split(const TorsionClass& x, std::span<const LaurentPoly> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].is_zero()) throw DomainError("coprime_split: zero factor");
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (gcd(factors[i], factors[j]) != LaurentPoly(1))
        throw DomainError("coprime_split: factors " + factors[i].to_string() + " and " + factors[j].to_string() +
                          " are not coprime");
  }
  LaurentPoly product = 1;
  for (const auto& f : factors) product *= f.ordinary();
  std::vector<TorsionClass> parts(factors.size());
  if (x.is_zero()) return parts;
  const auto cofactor = exact_divide(product, x.denominator());
  if (!cofactor) throw DomainError("coprime_split: factor product does not annihilate " + x.to_string());
  // x = N / product with N = r * (product / d).
  const LaurentPoly numer = x.numerator() * *cofactor;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const LaurentPoly fi = factors[i].ordinary();
    if (fi.span() == 0) continue;
    const LaurentPoly rest = *exact_divide(product, fi);
    // N / product = (N * rest^{-1} mod f_i) / f_i  +  (terms over the other factors)
    const LaurentPoly s = inverse_mod(rest, fi);
    parts[i] = TorsionClass(mod_lambda(numer * s, fi), fi);
  }
  return parts;
}

}  // namespace eqknot

#pragma once

// Exact Laurent polynomials over Q: the ring Q[t, t^-1].
//
// Storage is dense: a lowest exponent plus ascending coefficients, trimmed so
// that the first and last stored coefficients are nonzero. The zero
// polynomial has no coefficients.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eqknot/rational.hpp"

namespace eqknot {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT

  /// c * t^exp
  static LaurentPoly monomial(const Rational& c, int exp);
  /// t^exp
  static LaurentPoly t(int exp = 1) { return monomial(1, exp); }
  /// Coefficients of t^low, t^(low+1), ...
  static LaurentPoly from_coeffs(int low, std::vector<Rational> ascending);

  /// Parses the textual grammar `c`, `c*t`, `c*t^k`, `t^k` joined by `+`/`-`.
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const noexcept { return c_.empty(); }
  /// Lowest / highest exponent with nonzero coefficient. Zero polynomial: 0.
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(c_.size()) - 1; }
  /// high - low; the Euclidean norm of Q[t^{+-1}]. Zero polynomial: -1.
  int span() const noexcept { return static_cast<int>(c_.size()) - 1; }

  Rational coeff(int exp) const;
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  const Rational& leading() const { return c_.back(); }
  const Rational& trailing() const { return c_.front(); }

  bool is_constant() const noexcept { return c_.empty() || (c_.size() == 1 && low_ == 0); }
  /// Units of Q[t^{+-1}] are exactly the nonzero monomials.
  bool is_unit() const noexcept { return c_.size() == 1; }

  /// p(t^-1)
  LaurentPoly conj() const;
  /// p * t^k
  LaurentPoly shifted(int k) const;
  /// The associate with lowest exponent 0 (an ordinary polynomial with
  /// nonzero constant term).
  LaurentPoly ordinary() const { return shifted(-low_); }
  /// Ordinary associate scaled to leading coefficient 1.
  LaurentPoly monic() const;

  Rational eval(const Rational& x) const;

  std::string to_string() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  /// Multiplication by a rational scalar.
  LaurentPoly scaled(const Rational& s) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.c_.empty() ? b.c_.empty() : (a.low_ == b.low_ && a.c_ == b.c_);
  }

 private:
  void trim();

  int low_ = 0;
  std::vector<Rational> c_;
};

inline LaurentPoly conj(const LaurentPoly& p) { return p.conj(); }

struct DivMod {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

/// Euclidean division in Q[t^{+-1}]: a = q*b + r with span(r) < span(b).
/// The remainder is t^{low(a)} times the ordinary-polynomial remainder.
DivMod divmod(const LaurentPoly& a, const LaurentPoly& b);

/// Ordinary polynomial division; both inputs must have low() >= 0.
DivMod poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

/// a / b when b divides a in Q[t^{+-1}].
std::optional<LaurentPoly> exact_divide(const LaurentPoly& a, const LaurentPoly& b);

bool divides(const LaurentPoly& d, const LaurentPoly& a);

/// Monic ordinary gcd; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

struct ExtendedGcd {
  LaurentPoly g;  // monic ordinary gcd
  LaurentPoly s;  // s*a + u*b = g
  LaurentPoly u;
};
/// Extended Euclid over ordinary polynomials; inputs are first made ordinary,
/// so the Bezout relation holds for a.ordinary(), b.ordinary().
ExtendedGcd extended_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// p and q differ by a unit c*t^k.
bool associates(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace eqknot

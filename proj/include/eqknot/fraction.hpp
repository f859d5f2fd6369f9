#pragma once

// The fraction field Q(t) and the quotient Q(t)/Q[t^{+-1}], the value group of
// Blanchfield pairings.

#include <span>
#include <string>
#include <vector>

#include "eqknot/laurent.hpp"

namespace eqknot {

/// Element of Q(t) in canonical form: the denominator is a monic ordinary
/// polynomial with nonzero constant term and is coprime to the numerator.
/// Canonical form makes equality syntactic.
class RationalFn {
 public:
  RationalFn() : den_(1) {}
  RationalFn(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT
  RationalFn(const LaurentPoly& num, const LaurentPoly& den);

  const LaurentPoly& num() const noexcept { return num_; }
  const LaurentPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalFn conj() const { return {num_.conj(), den_.conj()}; }
  RationalFn inverse() const;

  std::string to_string() const;

  RationalFn operator-() const;
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
  RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
  RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }

  friend bool operator==(const RationalFn& a, const RationalFn& b) = default;

 private:
  struct Raw {};
  RationalFn(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}

  LaurentPoly num_;
  LaurentPoly den_;
};

/// Remainder of p modulo an ordinary polynomial d with nonzero constant term,
/// computed in Q[t^{+-1}] (t is invertible mod d). Result is ordinary with
/// degree < deg d.
LaurentPoly mod_lambda(const LaurentPoly& p, const LaurentPoly& d);

/// Inverse of a modulo d in Q[t^{+-1}]/(d); throws DomainError when not a unit.
LaurentPoly inverse_mod(const LaurentPoly& a, const LaurentPoly& d);

/// Element of Q(t)/Q[t^{+-1}]. Canonical representative r/d with d monic
/// ordinary, d(0) != 0, deg r < deg d, gcd(r, d) = 1; zero is 0/1.
class TorsionClass {
 public:
  TorsionClass() = default;
  explicit TorsionClass(const RationalFn& f);
  TorsionClass(const LaurentPoly& num, const LaurentPoly& den) : TorsionClass(RationalFn(num, den)) {}

  const RationalFn& representative() const noexcept { return rep_; }
  const LaurentPoly& numerator() const noexcept { return rep_.num(); }
  const LaurentPoly& denominator() const noexcept { return rep_.den(); }
  bool is_zero() const noexcept { return rep_.is_zero(); }

  TorsionClass conj() const { return TorsionClass(rep_.conj()); }
  std::string to_string() const;

  TorsionClass operator-() const { return TorsionClass(-rep_); }
  friend TorsionClass operator+(const TorsionClass& a, const TorsionClass& b) { return TorsionClass(a.rep_ + b.rep_); }
  friend TorsionClass operator-(const TorsionClass& a, const TorsionClass& b) { return TorsionClass(a.rep_ - b.rep_); }
  TorsionClass& operator+=(const TorsionClass& o) { return *this = *this + o; }
  /// Q[t^{+-1}] acts on the quotient.
  friend TorsionClass operator*(const LaurentPoly& p, const TorsionClass& x) { return TorsionClass(RationalFn(p) * x.rep_); }
  friend TorsionClass operator*(const TorsionClass& x, const LaurentPoly& p) { return p * x; }

  friend bool operator==(const TorsionClass& a, const TorsionClass& b) = default;

 private:
  RationalFn rep_;
};

/// f lies in Q[t^{+-1}] inside Q(t), i.e. its class in Q(t)/Q[t^{+-1}] is zero.
bool in_lambda(const RationalFn& f);

/// Partial-fraction splitting of x over pairwise-coprime factors whose product
/// annihilates x. Part i has denominator dividing factors[i]; parts re-sum to x.
std::vector<TorsionClass> coprime_split(const TorsionClass& x, std::span<const LaurentPoly> factors);

}  // namespace eqknot

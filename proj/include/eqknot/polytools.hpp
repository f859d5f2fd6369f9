#pragma once

// Polynomial utilities built on the Euclidean structure: coprime bases,
// Alexander-polynomial normalization, and the degree-two tests used by the
// amphichiral obstruction.

#include <span>
#include <vector>

#include "eqknot/rational.hpp"

#include "eqknot/laurent.hpp"

namespace eqknot {

/// Pairwise-coprime monic polynomials such that every input is, up to a unit,
/// a product of powers of outputs. Computed by repeated gcd refinement; output
/// sorted by (degree, coefficients).
std::vector<LaurentPoly> gcd_free_basis(std::span<const LaurentPoly> polys);

/// Distinct rational roots, ascending. Found by the rational root test on the
/// integer-cleared polynomial; returns none when the extreme coefficients are
/// too large to factor (above 10^12).
std::vector<Rational> rational_roots(const LaurentPoly& p);

/// gcd_free_basis with every linear factor over Q split off. No other
/// factorization is attempted.
std::vector<LaurentPoly> coprime_factors(std::span<const LaurentPoly> polys);

/// Largest e with f^e dividing p (f non-unit, p nonzero).
int multiplicity(const LaurentPoly& f, const LaurentPoly& p);

/// p(t^-1) == p
bool is_symmetric(const LaurentPoly& p);

/// Canonical associate of an Alexander-type polynomial. If some unit multiple
/// is symmetric, returns it scaled to primitive integer coefficients with
/// positive leading coefficient; otherwise the monic ordinary associate.
/// Units normalize to 1.
LaurentPoly normalize_alexander(const LaurentPoly& p);

struct QuadraticTestResult {
  bool irreducible = false;
  bool fox_milnor_possible = false;
  Integer witness;         // |p(-1)|
  Rational discriminant;   // of the ordinary associate c2 t^2 + c1 t + c0
};

/// Tests for a symmetric degree-two polynomial with |p(1)| = 1 (accepted up to
/// a power of t): irreducibility over Q via the discriminant, and the
/// Fox-Milnor necessary condition |p(-1)| = square. Throws DomainError when
/// the precondition fails.
QuadraticTestResult symmetric_quadratic_tests(const LaurentPoly& p);

}  // namespace eqknot

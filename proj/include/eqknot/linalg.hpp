#pragma once

// Determinants, inverses over Q(t), and the Smith normal form over the PID
// Q[t^{+-1}].

#include <cstddef>
#include <optional>

#include "eqknot/matrix.hpp"

namespace eqknot {

/// Fraction-free (Bareiss) determinant over Q[t^{+-1}].
LaurentPoly det(const LambdaMatrix& m);

/// Adjugate via cofactors. The n^2 minors are independent and are evaluated
/// in parallel; adjugate_serial is the single-threaded reference.
LambdaMatrix adjugate(const LambdaMatrix& m);
LambdaMatrix adjugate_serial(const LambdaMatrix& m);

/// adj(M) / det(M). Throws DomainError when det(M) = 0.
FracMatrix inverse_qt(const LambdaMatrix& m);

/// Solves M z = b over Q(t) by Gaussian elimination. Independent of the
/// adjugate route; throws DomainError when M is singular.
std::vector<RationalFn> solve_qt(const LambdaMatrix& m, const std::vector<RationalFn>& b);

/// Entries of every intermediate matrix in snf() must keep span <= this cap.
inline constexpr int kDefaultDegreeCap = 512;

struct SnfResult {
  LambdaMatrix U;     // rows x rows, unimodular
  LambdaMatrix Uinv;  // U^{-1}
  LambdaMatrix V;     // cols x cols, unimodular
  LambdaMatrix D;     // U * M * V
  std::size_t rank = 0;
  /// Non-unit nonzero diagonal entries, monic ordinary, d1 | d2 | ...
  std::vector<LaurentPoly> invariant_factors;

  const LaurentPoly& diagonal(std::size_t i) const { return D(i, i); }
};

/// Smith normal form over Q[t^{+-1}]. Pivot: minimal span, ties broken by
/// lowest row then column. Nonzero diagonal entries are made monic ordinary.
SnfResult snf(const LambdaMatrix& m, int degree_cap = kDefaultDegreeCap);

/// Columns generate {v : M v = 0}.
LambdaMatrix kernel(const LambdaMatrix& m);
LambdaMatrix kernel(const LambdaMatrix& m, const SnfResult& s);

/// w with M w = v when v is in the column span, otherwise nullopt.
std::optional<LambdaVector> in_span(const LambdaVector& v, const LambdaMatrix& m);
std::optional<LambdaVector> in_span(const LambdaVector& v, const SnfResult& s);

}  // namespace eqknot

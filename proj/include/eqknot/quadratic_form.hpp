#pragma once

// Rational quadratic forms c -> c^T S c with S symmetric, and exact
// definiteness by completing squares.

#include <span>
#include <vector>

#include "eqknot/matrix.hpp"

namespace eqknot {

enum class Definiteness { positive, negative, indefinite, degenerate };

struct SquareDecomposition {
  Definiteness kind = Definiteness::positive;
  std::vector<std::size_t> pivots;  // variable eliminated at each step
  std::vector<Rational> weights;    // S = sum weight_k * (row_k . c)^2
};

/// Symmetric Gaussian reduction with diagonal pivots. A form that is
/// semidefinite with a kernel reports `degenerate`. The empty form is
/// positive definite.
SquareDecomposition classify(const QMatrix& s);

inline bool is_definite(const SquareDecomposition& d) {
  return d.kind == Definiteness::positive || d.kind == Definiteness::negative;
}

Rational evaluate(const QMatrix& s, std::span<const Rational> c);

/// Indices whose row of S is not identically zero.
std::vector<std::size_t> support(const QMatrix& s);

QMatrix restrict_to(const QMatrix& s, std::span<const std::size_t> idx);

const char* to_string(Definiteness d);

}  // namespace eqknot

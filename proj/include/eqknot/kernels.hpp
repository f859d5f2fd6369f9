#pragma once

// Random-vector searches over a rational basis. Candidate i depends only on
// (seed, i), so the OpenMP kernels and their serial references agree exactly:
// the parallel search reports the smallest hit index, not the first thread
// to finish.

#include <cstdint>
#include <optional>
#include <vector>

#include "eqknot/quadratic_form.hpp"
#include "eqknot/witt.hpp"

namespace eqknot {

inline constexpr long kFalsifierHeight = 32;

/// Candidates 0..dim-1 are the coordinate vectors, then e_i + e_j and
/// e_i - e_j for i < j, then random vectors with numerators in [-32, 32]
/// and denominators in [1, 32].
std::vector<Rational> falsifier_candidate(std::size_t dim, std::uint64_t seed, std::size_t index);

/// Random nonzero vector for audits; independent of the structured prefix.
std::vector<Rational> audit_vector(std::size_t dim, std::uint64_t seed, std::size_t index);

/// Smallest index < trials whose candidate is a common zero of all forms.
std::optional<std::size_t> find_common_zero(const std::vector<QMatrix>& forms, std::size_t dim, std::uint64_t seed,
                                            std::size_t trials);
std::optional<std::size_t> find_common_zero_serial(const std::vector<QMatrix>& forms, std::size_t dim,
                                                   std::uint64_t seed, std::size_t trials);

/// Indices of audit vectors x with pair(x, tau x) = 0, evaluated directly on
/// module elements (no quadratic forms involved).
std::vector<std::size_t> audit_isotropic(const EquivariantTriple& t, const QBasis& basis, std::uint64_t seed,
                                         std::size_t samples);
std::vector<std::size_t> audit_isotropic_serial(const EquivariantTriple& t, const QBasis& basis, std::uint64_t seed,
                                                std::size_t samples);

}  // namespace eqknot

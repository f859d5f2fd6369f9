#pragma once

// Deciding whether Bl(x, tau x) = 0 forces x = 0, and what follows from it:
// non-sliceness verdicts and the equivariant 4-genus lower bound
// (grk - 2k) / 4.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eqknot/polytools.hpp"
#include "eqknot/quadratic_form.hpp"
#include "eqknot/witt.hpp"

namespace eqknot {

/// One coprime factor F of the module exponent. Over the Q-basis,
///   part_F(Bl(x, tau x)) = (sum_d (c^T forms[d] c) t^d) / F.
struct QuadraticPart {
  LaurentPoly denominator;
  std::vector<QMatrix> forms;  // forms[d] is the coefficient of t^d
};

enum class Verdict { undecided, certified_k0, counterexample };

const char* to_string(Verdict v);

/// Evidence behind a CERTIFIED_K0 verdict. For `support_partition`, each
/// term is one form that is definite on its support; for `combination`,
/// terms carry the combination coefficients and the combined form is
/// definite on the whole basis.
struct CertificateTerm {
  std::size_t part = 0;
  std::size_t degree = 0;
  Rational coefficient = 1;
  std::vector<std::size_t> support;
  SquareDecomposition decomposition;
};

struct QuadraticCertificate {
  QBasis basis;
  std::vector<QuadraticPart> parts;
  Verdict verdict = Verdict::undecided;
  std::string method;  // support_partition, combination, falsifier, or empty
  std::vector<CertificateTerm> terms;
  SquareDecomposition combined;               // combination method only
  std::vector<Rational> counterexample;       // coordinates over `basis`
  ModuleElement counterexample_element;
  std::optional<std::size_t> counterexample_index;
  std::uint64_t seed = 0;
  std::string fingerprint;  // of the triple the forms were built from

  /// All forms, in (part, degree) order.
  std::vector<QMatrix> all_forms() const;
  /// Reasoning from the certificate to the conclusion, as plain text.
  std::string explanation() const;
};

/// Stable digest of a triple's module, pairing and involution.
std::string fingerprint(const EquivariantTriple& t);

/// Forms only; verdict undecided. Checks itself against direct evaluation on
/// 20 random vectors and throws std::logic_error on mismatch.
QuadraticCertificate tau_quadratic(const EquivariantTriple& t, std::uint64_t seed = 0);

inline constexpr std::size_t kFalsifierTrials = 4096;

QuadraticCertificate certify_k0(const EquivariantTriple& t, std::uint64_t seed = 0);

struct GenusBound {
  std::size_t grk = 0;
  std::size_t k_upper = 0;
  Rational bound_rational;
  Integer bound_integer;
};

/// k_upper is 0 for CERTIFIED_K0, otherwise `k_upper` if given, else grk.
/// Throws DomainError when the certificate was built for another triple or
/// when a supplied k_upper exceeds grk.
GenusBound genus_lower_bound(const EquivariantTriple& t, const QuadraticCertificate& cert,
                             std::optional<std::size_t> k_upper = std::nullopt);

enum class SliceVerdict { not_equivariantly_algebraically_slice, not_equivariantly_slice, inconclusive };

const char* to_string(SliceVerdict v);

struct SliceReport {
  SliceVerdict verdict = SliceVerdict::inconclusive;
  QuadraticCertificate certificate;
  std::string reason;
};

SliceReport equivariant_slice_verdict(const EquivariantTriple& t, std::uint64_t seed = 0);

struct HypothesisCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AmphichiralReport {
  long a = 0;
  long n = 0;
  SliceVerdict verdict = SliceVerdict::inconclusive;
  std::string branch;       // odd or even
  LaurentPoly polynomial;   // normalized order of the cyclic presentation
  QuadraticTestResult tests;
  std::vector<HypothesisCheck> checks;
};

/// Decision procedure for the n-fold sum of the twist knot K_a with its
/// strong inversion, run on the cyclic presentation.
AmphichiralReport amphichiral_obstruction(long a, long n);

}  // namespace eqknot

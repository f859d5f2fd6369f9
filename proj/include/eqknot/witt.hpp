#pragma once

// Equivariant Blanchfield triples (H, Bl, tau) and the operations behind
// their Witt group: validation, sums, inverses and metabolizer checks.

#include <string>
#include <vector>

#include "eqknot/involution.hpp"

namespace eqknot {

struct EquivariantTriple {
  ModulePtr module;
  GramPairing pairing;
  SemilinearMap involution;

  const PresentedModule& h() const { return *module; }
};

/// Triple with module, pairing and involution built over one shared module.
EquivariantTriple make_triple(ModulePtr module, TorsionMatrix gram, LambdaMatrix tau,
                              SemilinearMap::Kind kind = SemilinearMap::Kind::semilinear);

EquivariantTriple trivial_triple();

struct AxiomCheck {
  std::string axiom;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;

  bool ok() const;
  /// First failing check, or nullptr.
  const AxiomCheck* first_failure() const;
};

/// Axiom names, in order: torsion, one_minus_t_invertible, relation_vanishing,
/// hermitian, nonsingular, tau_well_defined, semilinear, involutive,
/// anti_isometry. Checks that depend on a failed torsion check are skipped
/// and reported as failed.
ValidationReport validate(const EquivariantTriple& t);

/// Throws ValidationError naming the first failing axiom.
void require_valid(const EquivariantTriple& t);

EquivariantTriple sum(const EquivariantTriple& a, const EquivariantTriple& b);
EquivariantTriple negate(const EquivariantTriple& t);

struct SubmoduleWitness {
  std::vector<ModuleElement> generators;
};

struct MetabolizerReport {
  bool isotropic = false;        // (a) pairing vanishes on P
  bool order_condition = false;  // (b) |P| conj|P| = |H| up to units
  bool tau_invariant = false;    // (c) tau(P) = P
  LaurentPoly submodule_order;
  LaurentPoly ambient_order;

  bool ok() const { return isotropic && order_condition && tau_invariant; }
};

MetabolizerReport is_metabolizer(const EquivariantTriple& t, const SubmoduleWitness& p);

/// Generators (e_i, e_i) of the diagonal inside sum(t, negate(t)).
SubmoduleWitness diagonal_metabolizer(const EquivariantTriple& t);

}  // namespace eqknot

#pragma once

// Blanchfield pairings given by a Gram matrix of torsion classes over the
// generators of a presented module:
//
//   pair(x, y) = x^T * G * conj(y)   in Q(t)/Q[t^{+-1}].
//
// From a Seifert matrix A the Gram matrix is (t - 1) * (A - t*A^T)^{-1}.

#include <vector>

#include "eqknot/module.hpp"

namespace eqknot {

using TorsionMatrix = Matrix<TorsionClass>;

class GramPairing {
 public:
  GramPairing() : GramPairing(make_module(PresentedModule()), TorsionMatrix(0, 0)) {}
  GramPairing(ModulePtr module, TorsionMatrix gram);

  const PresentedModule& module() const noexcept { return *module_; }
  const ModulePtr& module_ptr() const noexcept { return module_; }
  const TorsionMatrix& gram() const noexcept { return gram_; }

  TorsionClass pair(const ModuleElement& x, const ModuleElement& y) const;

  /// Same module, every entry negated.
  GramPairing negated() const;

 private:
  ModulePtr module_;
  TorsionMatrix gram_;
};

/// Pairing of the Seifert module (module built by from_seifert).
GramPairing gram_from_seifert(const IntMatrix& seifert);
GramPairing gram_from_seifert(const IntMatrix& seifert, ModulePtr module);

inline TorsionClass pair(const GramPairing& b, const ModuleElement& x, const ModuleElement& y) {
  return b.pair(x, y);
}

/// Evaluates (t-1) x^T (A - tA^T)^{-1} conj(y) by solving (A - tA^T) z = conj(y)
/// afresh. Shares no code with the Gram route beyond the field arithmetic.
TorsionClass pair_direct(const IntMatrix& seifert, const ModuleElement& x, const ModuleElement& y);

bool check_hermitian(const GramPairing& b);
/// pair(r, e_i) = 0 = pair(e_i, r) for every relation column r.
bool check_relation_vanishing(const GramPairing& b);
/// The adjoint x -> pair(x, -) is injective on the module.
bool check_nonsingular(const GramPairing& b);

/// Block sum over `module`, which must be direct_sum(a.module(), b.module()).
GramPairing direct_sum(const GramPairing& a, const GramPairing& b, ModulePtr module);

}  // namespace eqknot

#pragma once

// The map induced by a strong inversion, as a matrix acting on coefficient
// vectors: apply(x) = M * conj(x). Column j of M is the image of generator j.

#include "eqknot/pairing.hpp"

namespace eqknot {

class SemilinearMap {
 public:
  enum class Kind { semilinear, linear };

  SemilinearMap() : SemilinearMap(make_module(PresentedModule()), LambdaMatrix(0, 0)) {}
  /// `linear` skips the coefficient conjugation; it exists so that checks can
  /// be exercised against a map that is not an anti-automorphism.
  SemilinearMap(ModulePtr module, LambdaMatrix matrix, Kind kind = Kind::semilinear);

  const PresentedModule& module() const noexcept { return *module_; }
  const ModulePtr& module_ptr() const noexcept { return module_; }
  const LambdaMatrix& matrix() const noexcept { return matrix_; }
  Kind kind() const noexcept { return kind_; }

  ModuleElement apply(const ModuleElement& x) const;

 private:
  ModulePtr module_;
  LambdaMatrix matrix_;
  Kind kind_;
};

/// Relations map into the relation span.
bool verify_well_defined(const SemilinearMap& tau);
/// apply(t * e_j) = t^-1 * apply(e_j) for every generator.
bool verify_semilinear(const SemilinearMap& tau);
/// apply(apply(e_j)) = e_j for every generator.
bool verify_involutive(const SemilinearMap& tau);
/// Well-defined and involutive.
bool verify_involution(const SemilinearMap& tau);
/// pair(e_i, e_j) = conj(pair(tau e_i, tau e_j)) on all generator pairs.
bool verify_anti_isometry(const SemilinearMap& tau, const GramPairing& b);

/// (x, y) -> (conj y, conj x), swapping the first and second half of the
/// generators. Whether that respects the relations is for
/// verify_well_defined to decide.
SemilinearMap swap_involution(ModulePtr module);

/// Block sum over `module`, which must be direct_sum(a.module(), b.module()).
SemilinearMap direct_sum_involution(const SemilinearMap& a, const SemilinearMap& b, ModulePtr module);

/// The semilinear map on a module generated by g that sends g to `image`.
/// Each generator e_j is written as f_j * g and sent to conj(f_j) * image.
/// Throws DomainError if g does not generate.
LambdaMatrix cyclic_involution_matrix(const PresentedModule& module, const ModuleElement& g,
                                      const ModuleElement& image);

}  // namespace eqknot

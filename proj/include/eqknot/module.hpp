#pragma once

// Finitely presented modules over Q[t^{+-1}].
//
// A module is Q[t^{+-1}]^n modulo the column span of a relation matrix
// (n rows, one column per relator). The Smith form is computed once at
// construction; module comparisons go through invariant factors, never
// through presentations.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "eqknot/linalg.hpp"

namespace eqknot {

/// Coefficients over the generators of a presented module.
using ModuleElement = LambdaVector;

class PresentedModule {
 public:
  /// The zero module.
  PresentedModule() : PresentedModule(LambdaMatrix(0, 0)) {}
  explicit PresentedModule(LambdaMatrix relations, int degree_cap = kDefaultDegreeCap);

  /// Generators b_1..b_2g, relations t*A - A^T. Rejects A unless
  /// det(A - A^T) = +-1.
  static PresentedModule from_seifert(const IntMatrix& seifert);

  std::size_t generators() const noexcept { return relations_.rows(); }
  const LambdaMatrix& relations() const noexcept { return relations_; }
  const SnfResult& smith() const noexcept { return snf_; }
  const std::vector<LaurentPoly>& invariant_factors() const noexcept { return snf_.invariant_factors; }

  std::size_t free_rank() const noexcept { return generators() - snf_.rank; }
  bool is_torsion() const noexcept { return free_rank() == 0; }
  /// Product of invariant factors, normalized; 0 for non-torsion modules.
  const LaurentPoly& order() const noexcept { return order_; }
  /// Minimal number of generators.
  std::size_t grk() const noexcept { return invariant_factors().size() + free_rank(); }

  ModuleElement zero() const { return ModuleElement(generators()); }
  ModuleElement generator(std::size_t i) const;

  /// x = 0 in the module.
  bool is_zero(const ModuleElement& x) const;
  bool element_equal(const ModuleElement& x, const ModuleElement& y) const;

 private:
  LambdaMatrix relations_;
  SnfResult snf_;
  LaurentPoly order_;
};

using ModulePtr = std::shared_ptr<const PresentedModule>;

inline ModulePtr make_module(PresentedModule m) { return std::make_shared<const PresentedModule>(std::move(m)); }

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);

inline std::size_t generating_rank(const PresentedModule& m) { return m.grk(); }

/// Presentation of the submodule generated by `gens`: generators are the
/// given elements, relations are the first k rows of kernel([G | -R]).
PresentedModule submodule_presentation(const PresentedModule& m, std::span<const ModuleElement> gens);

/// x lies in the submodule generated by `gens`.
bool in_submodule(const PresentedModule& m, std::span<const ModuleElement> gens, const ModuleElement& x);

ModuleElement scale(const LaurentPoly& p, const ModuleElement& x);
ModuleElement add(const ModuleElement& x, const ModuleElement& y);
ModuleElement subtract(const ModuleElement& x, const ModuleElement& y);

// ---------------------------------------------------------------------------
// Rational structure

/// Q-basis of a torsion module adapted to a primary splitting: for each
/// invariant factor d (cyclic generator g) and each coprime factor f with
/// f^e || d, a block with generator (d / f^e) * g and basis t^0..t^{deg-1}
/// times that generator.
struct QBasis {
  struct Block {
    std::size_t cyclic_index = 0;  // position in the Smith form
    std::size_t factor_index = 0;  // into `factors`
    int exponent = 0;
    LaurentPoly modulus;           // f^e, monic ordinary
    LaurentPoly cofactor_inverse;  // inverse of d / f^e modulo f^e
    ModuleElement generator;
    std::size_t offset = 0;        // first basis index of the block
  };

  std::vector<LaurentPoly> factors;   // pairwise coprime, from coprime_factors
  std::vector<int> max_exponent;      // exponent of each factor in the last invariant factor
  std::vector<Block> blocks;
  std::vector<ModuleElement> basis;
  QMatrix t_action;                   // multiplication by t in this basis

  std::size_t dimension() const noexcept { return basis.size(); }
};

/// Throws DomainError for non-torsion modules.
QBasis q_basis(const PresentedModule& m);

std::vector<Rational> coordinates(const PresentedModule& m, const QBasis& b, const ModuleElement& x);
ModuleElement element_from_coordinates(const PresentedModule& m, const QBasis& b, std::span<const Rational> c);

// ---------------------------------------------------------------------------
// Module maps, given by a matrix F sending generators of the source to
// elements of the target.

/// F maps every source relation into the target relation span.
bool is_module_map(const PresentedModule& source, const PresentedModule& target, const LambdaMatrix& f);
PresentedModule image_presentation(const PresentedModule& target, const LambdaMatrix& f);
PresentedModule kernel_presentation(const PresentedModule& source, const PresentedModule& target,
                                    const LambdaMatrix& f);

}  // namespace eqknot

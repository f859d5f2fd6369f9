#include "eqknot/involution.hpp"

namespace eqknot {

SemilinearMap::SemilinearMap(ModulePtr module, LambdaMatrix matrix, Kind kind)
    : module_(std::move(module)), matrix_(std::move(matrix)), kind_(kind) {
  const std::size_t n = module_->generators();
  if (matrix_.rows() != n || matrix_.cols() != n) throw DomainError("involution matrix does not match generator count");
}

ModuleElement SemilinearMap::apply(const ModuleElement& x) const {
  if (x.size() != matrix_.cols()) throw DomainError("apply: element length mismatch");
  return mat_vec(matrix_, kind_ == Kind::semilinear ? conj(x) : x);
}

bool verify_well_defined(const SemilinearMap& tau) {
  const auto& r = tau.module().relations();
  for (std::size_t c = 0; c < r.cols(); ++c)
    if (!tau.module().is_zero(tau.apply(r.column(c)))) return false;
  return true;
}

bool verify_semilinear(const SemilinearMap& tau) {
  const auto& m = tau.module();
  const LaurentPoly t = LaurentPoly::t(1);
  for (std::size_t j = 0; j < m.generators(); ++j) {
    const ModuleElement e = m.generator(j);
    if (!m.element_equal(tau.apply(scale(t, e)), scale(t.conj(), tau.apply(e)))) return false;
  }
  return true;
}

bool verify_involutive(const SemilinearMap& tau) {
  const auto& m = tau.module();
  for (std::size_t j = 0; j < m.generators(); ++j) {
    const ModuleElement e = m.generator(j);
    if (!m.element_equal(tau.apply(tau.apply(e)), e)) return false;
  }
  return true;
}

bool verify_involution(const SemilinearMap& tau) { return verify_well_defined(tau) && verify_involutive(tau); }

bool verify_anti_isometry(const SemilinearMap& tau, const GramPairing& b) {
  const auto& m = tau.module();
  if (m.generators() != b.module().generators()) throw DomainError("anti-isometry: modules differ");
  const std::size_t n = m.generators();
  std::vector<ModuleElement> images;
  for (std::size_t j = 0; j < n; ++j) images.push_back(tau.apply(m.generator(j)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (b.gram()(i, j) != b.pair(images[i], images[j]).conj()) return false;
  return true;
}

SemilinearMap swap_involution(ModulePtr module) {
  const std::size_t n = module->generators();
  if (n % 2 != 0) throw DomainError("swap_involution: odd number of generators");
  const std::size_t h = n / 2;
  LambdaMatrix m(n, n);
  for (std::size_t i = 0; i < h; ++i) {
    m(i, h + i) = 1;
    m(h + i, i) = 1;
  }
  return {std::move(module), std::move(m)};
}

SemilinearMap direct_sum_involution(const SemilinearMap& a, const SemilinearMap& b, ModulePtr module) {
  if (a.kind() != b.kind()) throw DomainError("direct_sum_involution: mixed map kinds");
  return {std::move(module), block_diagonal(a.matrix(), b.matrix()), a.kind()};
}

LambdaMatrix cyclic_involution_matrix(const PresentedModule& module, const ModuleElement& g,
                                      const ModuleElement& image) {
  const std::size_t n = module.generators();
  LambdaMatrix gm(n, 1);
  for (std::size_t i = 0; i < n; ++i) gm(i, 0) = g.at(i);
  const SnfResult s = snf(hstack(gm, module.relations()));
  LambdaMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto w = in_span(module.generator(j), s);
    if (!w) throw DomainError("cyclic_involution_matrix: element does not generate the module");
    const ModuleElement col = scale((*w)[0].conj(), image);
    for (std::size_t i = 0; i < n; ++i) out(i, j) = col[i];
  }
  return out;
}

}  // namespace eqknot

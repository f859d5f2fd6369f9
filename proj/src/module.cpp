#include "eqknot/module.hpp"

#include "eqknot/polytools.hpp"

namespace eqknot {

PresentedModule::PresentedModule(LambdaMatrix relations, int degree_cap)
    : relations_(std::move(relations)), snf_(snf(relations_, degree_cap)) {
  if (!is_torsion()) {
    order_ = 0;
    return;
  }
  LaurentPoly product = 1;
  for (const auto& d : snf_.invariant_factors) product *= d;
  order_ = normalize_alexander(product);
}

PresentedModule PresentedModule::from_seifert(const IntMatrix& seifert) {
  const LambdaMatrix a = to_lambda(seifert);
  if (!a.is_square()) throw DomainError("Seifert matrix must be square");
  if (a.rows() % 2 != 0) throw DomainError("Seifert matrix must have even size");
  const LaurentPoly d = det(a - a.transpose());
  if (d != LaurentPoly(1) && d != LaurentPoly(-1))
    throw DomainError("not a Seifert matrix: det(A - A^T) = " + d.to_string() + ", expected +-1");
  const LaurentPoly t = LaurentPoly::t(1);
  return PresentedModule(a.map([&](const LaurentPoly& p) { return t * p; }) - a.transpose());
}

ModuleElement PresentedModule::generator(std::size_t i) const {
  ModuleElement e = zero();
  e.at(i) = 1;
  return e;
}

bool PresentedModule::is_zero(const ModuleElement& x) const {
  if (x.size() != generators()) throw DomainError("element length does not match generator count");
  if (is_zero_vector(x)) return true;
  return in_span(x, snf_).has_value();
}

bool PresentedModule::element_equal(const ModuleElement& x, const ModuleElement& y) const {
  return is_zero(subtract(x, y));
}

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b) {
  return PresentedModule(block_diagonal(a.relations(), b.relations()));
}

ModuleElement scale(const LaurentPoly& p, const ModuleElement& x) {
  ModuleElement out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = p * x[i];
  return out;
}

ModuleElement add(const ModuleElement& x, const ModuleElement& y) {
  if (x.size() != y.size()) throw DomainError("element length mismatch");
  ModuleElement out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += y[i];
  return out;
}

ModuleElement subtract(const ModuleElement& x, const ModuleElement& y) {
  if (x.size() != y.size()) throw DomainError("element length mismatch");
  ModuleElement out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] -= y[i];
  return out;
}

PresentedModule submodule_presentation(const PresentedModule& m, std::span<const ModuleElement> gens) {
  const std::size_t n = m.generators();
  const std::size_t k = gens.size();
  for (const auto& g : gens)
    if (g.size() != n) throw DomainError("submodule generator does not live in the module");
  if (k == 0) return PresentedModule();
  const LambdaMatrix g = LambdaMatrix::from_columns(n, {gens.begin(), gens.end()});
  const LambdaMatrix r = m.relations();
  const LambdaMatrix neg_r = r.map([](const LaurentPoly& p) { return -p; });
  const LambdaMatrix ker = kernel(hstack(g, neg_r));
  LambdaMatrix rel(k, ker.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) rel(i, j) = ker(i, j);
  return PresentedModule(std::move(rel));
}

bool in_submodule(const PresentedModule& m, std::span<const ModuleElement> gens, const ModuleElement& x) {
  const std::size_t n = m.generators();
  const LambdaMatrix g = LambdaMatrix::from_columns(n, {gens.begin(), gens.end()});
  return in_span(x, hstack(g, m.relations())).has_value();
}

// ---------------------------------------------------------------------------

QBasis q_basis(const PresentedModule& m) {
  if (!m.is_torsion()) throw DomainError("q_basis: module is not torsion");
  QBasis b;
  const auto& inv = m.invariant_factors();
  b.factors = coprime_factors(inv);
  b.max_exponent.assign(b.factors.size(), 0);
  if (!inv.empty())
    for (std::size_t j = 0; j < b.factors.size(); ++j) b.max_exponent[j] = multiplicity(b.factors[j], inv.back());

  const SnfResult& s = m.smith();
  for (std::size_t i = 0; i < s.rank; ++i) {
    const LaurentPoly& d = s.D(i, i);
    if (d.span() == 0) continue;
    const ModuleElement g = s.Uinv.column(i);
    for (std::size_t j = 0; j < b.factors.size(); ++j) {
      const int e = multiplicity(b.factors[j], d);
      if (e == 0) continue;
      LaurentPoly power = 1;
      for (int k = 0; k < e; ++k) power *= b.factors[j];
      QBasis::Block blk;
      blk.cyclic_index = i;
      blk.factor_index = j;
      blk.exponent = e;
      blk.modulus = power;
      const LaurentPoly cof = *exact_divide(d, power);
      blk.cofactor_inverse = inverse_mod(cof, power);
      blk.generator = scale(cof, g);
      blk.offset = b.basis.size();
      for (int k = 0; k < power.high(); ++k) b.basis.push_back(scale(LaurentPoly::t(k), blk.generator));
      b.blocks.push_back(std::move(blk));
    }
  }

  const std::size_t dim = b.basis.size();
  b.t_action = QMatrix(dim, dim);
  for (const auto& blk : b.blocks) {
    const int deg = blk.modulus.high();
    for (int k = 0; k + 1 < deg; ++k) b.t_action(blk.offset + k + 1, blk.offset + k) = 1;
    for (int k = 0; k < deg; ++k) b.t_action(blk.offset + k, blk.offset + deg - 1) = -blk.modulus.coeff(k);
  }
  return b;
}

std::vector<Rational> coordinates(const PresentedModule& m, const QBasis& b, const ModuleElement& x) {
  if (x.size() != m.generators()) throw DomainError("coordinates: element length mismatch");
  const LambdaVector u = mat_vec(m.smith().U, x);
  std::vector<Rational> c(b.dimension(), Rational(0));
  for (const auto& blk : b.blocks) {
    // u_i = sum_j s_j * (d / f_j^e) mod d, so s_j = u_i * cofactor^{-1} mod f_j^e
    const LaurentPoly s = mod_lambda(u[blk.cyclic_index] * blk.cofactor_inverse, blk.modulus);
    for (int k = 0; k < blk.modulus.high(); ++k) c[blk.offset + static_cast<std::size_t>(k)] = s.coeff(k);
  }
  return c;
}

ModuleElement element_from_coordinates(const PresentedModule& m, const QBasis& b, std::span<const Rational> c) {
  if (c.size() != b.dimension()) throw DomainError("element_from_coordinates: dimension mismatch");
  ModuleElement x = m.zero();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    x = add(x, scale(LaurentPoly(c[k]), b.basis[k]));
  }
  return x;
}

// ---------------------------------------------------------------------------

bool is_module_map(const PresentedModule& source, const PresentedModule& target, const LambdaMatrix& f) {
  if (f.rows() != target.generators() || f.cols() != source.generators())
    throw DomainError("module map: dimension mismatch");
  const LambdaMatrix image = f * source.relations();
  for (std::size_t j = 0; j < image.cols(); ++j)
    if (!target.is_zero(image.column(j))) return false;
  return true;
}

PresentedModule image_presentation(const PresentedModule& target, const LambdaMatrix& f) {
  std::vector<ModuleElement> cols;
  for (std::size_t j = 0; j < f.cols(); ++j) cols.push_back(f.column(j));
  return submodule_presentation(target, cols);
}

PresentedModule kernel_presentation(const PresentedModule& source, const PresentedModule& target,
                                    const LambdaMatrix& f) {
  const std::size_t n = source.generators();
  const LambdaMatrix neg_r = target.relations().map([](const LaurentPoly& p) { return -p; });
  const LambdaMatrix ker = kernel(hstack(f, neg_r));
  std::vector<ModuleElement> gens;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    ModuleElement v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = ker(i, j);
    gens.push_back(std::move(v));
  }
  return submodule_presentation(source, gens);
}

}  // namespace eqknot

#include "eqknot/pairing.hpp"

namespace eqknot {

GramPairing::GramPairing(ModulePtr module, TorsionMatrix gram) : module_(std::move(module)), gram_(std::move(gram)) {
  const std::size_t n = module_->generators();
  if (gram_.rows() != n || gram_.cols() != n) throw DomainError("Gram matrix does not match generator count");
}

TorsionClass GramPairing::pair(const ModuleElement& x, const ModuleElement& y) const {
  const std::size_t n = gram_.rows();
  if (x.size() != n || y.size() != n) throw DomainError("pair: element length mismatch");
  RationalFn acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (y[j].is_zero()) continue;
    const LaurentPoly cy = y[j].conj();
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero() || gram_(i, j).is_zero()) continue;
      acc += RationalFn(x[i] * cy) * gram_(i, j).representative();
    }
  }
  return TorsionClass(acc);
}

GramPairing GramPairing::negated() const {
  return {module_, gram_.map([](const TorsionClass& c) { return -c; })};
}

namespace {

LambdaMatrix a_minus_t_at(const IntMatrix& seifert) {
  const LambdaMatrix a = to_lambda(seifert);
  return a - a.transpose().map([](const LaurentPoly& p) { return LaurentPoly::t(1) * p; });
}

}  // namespace

GramPairing gram_from_seifert(const IntMatrix& seifert) {
  return gram_from_seifert(seifert, make_module(PresentedModule::from_seifert(seifert)));
}

GramPairing gram_from_seifert(const IntMatrix& seifert, ModulePtr module) {
  const LambdaMatrix b = a_minus_t_at(seifert);
  if (b.rows() != module->generators()) throw DomainError("Seifert matrix does not match module");
  if (b.rows() == 0) return {std::move(module), TorsionMatrix(0, 0)};
  const FracMatrix inv = inverse_qt(b);
  const RationalFn t_minus_1(LaurentPoly::t(1) - 1);
  return {std::move(module), inv.map([&](const RationalFn& f) { return TorsionClass(t_minus_1 * f); })};
}

TorsionClass pair_direct(const IntMatrix& seifert, const ModuleElement& x, const ModuleElement& y) {
  const LambdaMatrix b = a_minus_t_at(seifert);
  if (x.size() != b.rows() || y.size() != b.rows()) throw DomainError("pair_direct: element length mismatch");
  if (b.rows() == 0) return {};
  std::vector<RationalFn> rhs;
  for (const auto& p : y) rhs.emplace_back(p.conj());
  const auto z = solve_qt(b, rhs);
  RationalFn acc;
  for (std::size_t i = 0; i < x.size(); ++i) acc += RationalFn(x[i]) * z[i];
  return TorsionClass(RationalFn(LaurentPoly::t(1) - 1) * acc);
}

bool check_hermitian(const GramPairing& b) {
  const auto& g = b.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i; j < g.cols(); ++j)
      if (g(j, i) != g(i, j).conj()) return false;
  return true;
}

bool check_relation_vanishing(const GramPairing& b) {
  const auto& m = b.module();
  const auto& r = m.relations();
  for (std::size_t c = 0; c < r.cols(); ++c) {
    const ModuleElement rel = r.column(c);
    for (std::size_t i = 0; i < m.generators(); ++i) {
      const ModuleElement e = m.generator(i);
      if (!b.pair(rel, e).is_zero() || !b.pair(e, rel).is_zero()) return false;
    }
  }
  return true;
}

bool check_nonsingular(const GramPairing& b) {
  const auto& m = b.module();
  const std::size_t n = m.generators();
  if (n == 0) return true;
  const auto& g = b.gram();
  // common denominator D; x^T G = 0 mod Lambda  <=>  x^T N = D*w for some w
  LaurentPoly d = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const LaurentPoly& e = g(i, j).denominator();
      d = *exact_divide(d * e, gcd(d, e));
    }
  LambdaMatrix sys(n, 2 * n);  // rows indexed by j: sum_i N_ij x_i - D w_j = 0
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const TorsionClass& e = g(i, j);
      if (!e.is_zero()) sys(j, i) = e.numerator() * *exact_divide(d, e.denominator());
    }
    sys(j, n + j) = -d;
  }
  const LambdaMatrix ker = kernel(sys);
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    ModuleElement x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = ker(i, c);
    if (!m.is_zero(x)) return false;
  }
  return true;
}

GramPairing direct_sum(const GramPairing& a, const GramPairing& b, ModulePtr module) {
  const std::size_t n1 = a.gram().rows(), n2 = b.gram().rows();
  TorsionMatrix g(n1 + n2, n1 + n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) g(i, j) = a.gram()(i, j);
  for (std::size_t i = 0; i < n2; ++i)
    for (std::size_t j = 0; j < n2; ++j) g(n1 + i, n1 + j) = b.gram()(i, j);
  return {std::move(module), std::move(g)};
}

}  // namespace eqknot

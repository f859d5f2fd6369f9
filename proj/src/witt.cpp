#include "eqknot/witt.hpp"

#include "eqknot/polytools.hpp"

namespace eqknot {

EquivariantTriple make_triple(ModulePtr module, TorsionMatrix gram, LambdaMatrix tau, SemilinearMap::Kind kind) {
  GramPairing b(module, std::move(gram));
  SemilinearMap s(module, std::move(tau), kind);
  return {std::move(module), std::move(b), std::move(s)};
}

EquivariantTriple trivial_triple() {
  return make_triple(make_module(PresentedModule()), TorsionMatrix(0, 0), LambdaMatrix(0, 0));
}

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const AxiomCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

ValidationReport validate(const EquivariantTriple& t) {
  ValidationReport r;
  const PresentedModule& h = t.h();
  auto add = [&](std::string axiom, bool ok, std::string detail = {}) {
    r.checks.push_back({std::move(axiom), ok, std::move(detail)});
  };
  if (&t.pairing.module() != &h || &t.involution.module() != &h)
    throw DomainError("validate: pairing and involution must share the triple's module");

  add("torsion", h.is_torsion(), h.is_torsion() ? "" : "free rank " + std::to_string(h.free_rank()));
  if (!h.is_torsion()) {
    for (const char* name : {"one_minus_t_invertible", "relation_vanishing", "hermitian", "nonsingular",
                             "tau_well_defined", "semilinear", "involutive", "anti_isometry"})
      add(name, false, "skipped: module is not torsion");
    return r;
  }
  const LaurentPoly g = gcd(h.order(), LaurentPoly::t(1) - 1);
  add("one_minus_t_invertible", g == LaurentPoly(1), "order " + h.order().to_string());
  add("relation_vanishing", check_relation_vanishing(t.pairing));
  add("hermitian", check_hermitian(t.pairing));
  add("nonsingular", check_nonsingular(t.pairing));
  add("tau_well_defined", verify_well_defined(t.involution));
  add("semilinear", verify_semilinear(t.involution));
  add("involutive", verify_involutive(t.involution));
  add("anti_isometry", verify_anti_isometry(t.involution, t.pairing));
  return r;
}

void require_valid(const EquivariantTriple& t) {
  const ValidationReport r = validate(t);
  if (const AxiomCheck* f = r.first_failure()) throw ValidationError(f->axiom, f->detail.empty() ? "check failed" : f->detail);
}

EquivariantTriple sum(const EquivariantTriple& a, const EquivariantTriple& b) {
  ModulePtr m = make_module(direct_sum(a.h(), b.h()));
  GramPairing p = direct_sum(a.pairing, b.pairing, m);
  SemilinearMap s = direct_sum_involution(a.involution, b.involution, m);
  return {std::move(m), std::move(p), std::move(s)};
}

EquivariantTriple negate(const EquivariantTriple& t) {
  return {t.module, t.pairing.negated(), t.involution};
}

MetabolizerReport is_metabolizer(const EquivariantTriple& t, const SubmoduleWitness& p) {
  const PresentedModule& h = t.h();
  for (const auto& g : p.generators)
    if (g.size() != h.generators()) throw DomainError("is_metabolizer: generator does not live in the module");
  MetabolizerReport r;

  r.isotropic = true;
  for (std::size_t i = 0; i < p.generators.size() && r.isotropic; ++i)
    for (std::size_t j = 0; j < p.generators.size() && r.isotropic; ++j)
      if (!t.pairing.pair(p.generators[i], p.generators[j]).is_zero()) r.isotropic = false;

  const PresentedModule sub = submodule_presentation(h, p.generators);
  r.submodule_order = sub.order();
  r.ambient_order = h.order();
  r.order_condition = sub.is_torsion() && associates(r.submodule_order * r.submodule_order.conj(), r.ambient_order);

  std::vector<ModuleElement> images;
  for (const auto& g : p.generators) images.push_back(t.involution.apply(g));
  r.tau_invariant = true;
  for (std::size_t i = 0; i < images.size() && r.tau_invariant; ++i)
    r.tau_invariant = in_submodule(h, p.generators, images[i]) && in_submodule(h, images, p.generators[i]);
  return r;
}

SubmoduleWitness diagonal_metabolizer(const EquivariantTriple& t) {
  const std::size_t n = t.h().generators();
  SubmoduleWitness w;
  for (std::size_t i = 0; i < n; ++i) {
    ModuleElement e(2 * n);
    e[i] = 1;
    e[n + i] = 1;
    w.generators.push_back(std::move(e));
  }
  return w;
}

}  // namespace eqknot

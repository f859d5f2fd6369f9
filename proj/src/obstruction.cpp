#include "eqknot/obstruction.hpp"

#include <stdexcept>

#include "eqknot/catalog.hpp"
#include "eqknot/kernels.hpp"

namespace eqknot {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::undecided: return "UNDECIDED";
    case Verdict::certified_k0: return "CERTIFIED_K0";
    case Verdict::counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

const char* to_string(SliceVerdict v) {
  switch (v) {
    case SliceVerdict::not_equivariantly_algebraically_slice: return "NOT_EQUIVARIANTLY_ALGEBRAICALLY_SLICE";
    case SliceVerdict::not_equivariantly_slice: return "NOT_EQUIVARIANTLY_SLICE";
    case SliceVerdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string fingerprint(const EquivariantTriple& t) {
  std::string s = to_string(t.h().relations());
  s += '|';
  const auto& g = t.pairing.gram();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) s += g(i, j).to_string() + ';';
  s += '|' + to_string(t.involution.matrix());
  s += t.involution.kind() == SemilinearMap::Kind::semilinear ? "|s" : "|l";
  // FNV-1a
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 15];
  return out;
}

std::vector<QMatrix> QuadraticCertificate::all_forms() const {
  std::vector<QMatrix> out;
  for (const auto& p : parts)
    for (const auto& f : p.forms) out.push_back(f);
  return out;
}

namespace {

TorsionClass value_from_forms(const std::vector<QuadraticPart>& parts, std::span<const Rational> c) {
  TorsionClass acc;
  for (const auto& p : parts) {
    std::vector<Rational> coeffs;
    for (const auto& f : p.forms) coeffs.push_back(evaluate(f, c));
    acc += TorsionClass(LaurentPoly::from_coeffs(0, std::move(coeffs)), p.denominator);
  }
  return acc;
}

}  // namespace

QuadraticCertificate tau_quadratic(const EquivariantTriple& t, std::uint64_t seed) {
  QuadraticCertificate cert;
  cert.seed = seed;
  cert.fingerprint = fingerprint(t);
  cert.basis = q_basis(t.h());
  const QBasis& b = cert.basis;
  const std::size_t n = b.dimension();
  if (n == 0) return cert;

  std::vector<LaurentPoly> moduli;
  for (std::size_t j = 0; j < b.factors.size(); ++j) {
    LaurentPoly f = 1;
    for (int e = 0; e < b.max_exponent[j]; ++e) f *= b.factors[j];
    moduli.push_back(f);
    QuadraticPart part;
    part.denominator = f;
    part.forms.assign(static_cast<std::size_t>(f.high()), QMatrix(n, n));
    cert.parts.push_back(std::move(part));
  }

  std::vector<ModuleElement> images;
  for (const auto& v : b.basis) images.push_back(t.involution.apply(v));
  const Rational half(1, 2);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const TorsionClass w = t.pairing.pair(b.basis[k], images[l]);
      if (w.is_zero()) continue;
      const auto split = coprime_split(w, moduli);
      for (std::size_t j = 0; j < moduli.size(); ++j) {
        if (split[j].is_zero()) continue;
        const LaurentPoly num =
            mod_lambda(split[j].numerator() * *exact_divide(moduli[j], split[j].denominator()), moduli[j]);
        auto& forms = cert.parts[j].forms;
        for (int d = 0; d < moduli[j].high(); ++d) {
          const Rational a = num.coeff(d) * half;
          if (a == 0) continue;
          forms[static_cast<std::size_t>(d)](k, l) += a;
          forms[static_cast<std::size_t>(d)](l, k) += a;
        }
      }
    }

  for (std::size_t i = 0; i < 20; ++i) {
    const auto c = audit_vector(n, seed ^ 0x7a11ULL, i);
    const ModuleElement x = element_from_coordinates(t.h(), b, c);
    if (value_from_forms(cert.parts, c) != t.pairing.pair(x, t.involution.apply(x)))
      throw std::logic_error("tau_quadratic: forms disagree with direct evaluation");
  }
  return cert;
}

namespace {

struct IndexedForm {
  std::size_t part, degree;
  const QMatrix* form;
};

bool try_support_partition(QuadraticCertificate& cert, const std::vector<IndexedForm>& forms) {
  const std::size_t n = cert.basis.dimension();
  std::vector<bool> covered(n, false);
  std::vector<CertificateTerm> terms;
  for (const auto& f : forms) {
    const auto sup = support(*f.form);
    if (sup.empty()) continue;
    bool adds = false;
    for (auto i : sup) adds = adds || !covered[i];
    if (!adds) continue;
    SquareDecomposition dec = classify(restrict_to(*f.form, sup));
    if (!is_definite(dec)) continue;
    for (auto i : sup) covered[i] = true;
    terms.push_back({f.part, f.degree, 1, sup, std::move(dec)});
  }
  for (bool c : covered)
    if (!c) return false;
  cert.method = "support_partition";
  cert.terms = std::move(terms);
  return true;
}

bool try_combination(QuadraticCertificate& cert, const std::vector<IndexedForm>& forms) {
  const std::size_t n = cert.basis.dimension();
  const std::size_t count = forms.size();
  auto attempt = [&](const std::vector<int>& w) {
    QMatrix s(n, n);
    for (std::size_t i = 0; i < count; ++i) {
      if (w[i] == 0) continue;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) s(r, c) += Rational(w[i]) * (*forms[i].form)(r, c);
    }
    SquareDecomposition dec = classify(s);
    if (dec.kind != Definiteness::positive) return false;
    cert.method = "combination";
    cert.terms.clear();
    for (std::size_t i = 0; i < count; ++i)
      if (w[i] != 0) cert.terms.push_back({forms[i].part, forms[i].degree, Rational(w[i]), {}, {}});
    cert.combined = std::move(dec);
    return true;
  };

  std::vector<int> w(count, 0);
  if (count <= 6) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < count; ++i) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
      std::size_t x = code;
      for (std::size_t i = 0; i < count; ++i, x /= 3) w[i] = static_cast<int>(x % 3) - 1;
      if (attempt(w)) return true;
    }
    return false;
  }
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i; j < count; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          std::fill(w.begin(), w.end(), 0);
          w[i] += si;
          if (j != i) w[j] += sj;
          if (attempt(w)) return true;
        }
  return false;
}

}  // namespace

QuadraticCertificate certify_k0(const EquivariantTriple& t, std::uint64_t seed) {
  QuadraticCertificate cert = tau_quadratic(t, seed);
  const std::size_t n = cert.basis.dimension();
  if (n == 0) {
    cert.verdict = Verdict::certified_k0;
    cert.method = "support_partition";
    return cert;
  }
  std::vector<IndexedForm> forms;
  for (std::size_t j = 0; j < cert.parts.size(); ++j)
    for (std::size_t d = 0; d < cert.parts[j].forms.size(); ++d)
      if (!support(cert.parts[j].forms[d]).empty()) forms.push_back({j, d, &cert.parts[j].forms[d]});

  if (try_support_partition(cert, forms) || try_combination(cert, forms)) {
    cert.verdict = Verdict::certified_k0;
    return cert;
  }

  const auto all = cert.all_forms();
  if (const auto hit = find_common_zero(all, n, seed, kFalsifierTrials)) {
    const auto c = falsifier_candidate(n, seed, *hit);
    const ModuleElement x = element_from_coordinates(t.h(), cert.basis, c);
    if (!t.pairing.pair(x, t.involution.apply(x)).is_zero() || t.h().is_zero(x))
      throw std::logic_error("certify_k0: falsifier hit failed direct verification");
    cert.verdict = Verdict::counterexample;
    cert.method = "falsifier";
    cert.counterexample = c;
    cert.counterexample_element = x;
    cert.counterexample_index = *hit;
    return cert;
  }
  cert.method.clear();
  cert.terms.clear();
  cert.verdict = Verdict::undecided;
  return cert;
}

std::string QuadraticCertificate::explanation() const {
  switch (verdict) {
    case Verdict::certified_k0:
      return "Bl(x, tau x) = 0 makes every form vanish at the coordinates of x. The recorded forms are definite "
             "(exact completion of squares) on supports covering the rational basis, or combine to a positive "
             "definite form, so x = 0. A submodule P with Bl(x, tau y) = 0 for all x, y in P specializes to "
             "y = x and is therefore zero, so k = 0.";
    case Verdict::counterexample:
      return "The recorded nonzero x satisfies Bl(x, tau x) = 0, checked by direct evaluation. The diagonal test "
             "cannot certify k = 0.";
    case Verdict::undecided:
      return "No definite form or combination was found and the falsifier found no isotropic vector.";
  }
  return {};
}

GenusBound genus_lower_bound(const EquivariantTriple& t, const QuadraticCertificate& cert,
                             std::optional<std::size_t> k_upper) {
  if (cert.fingerprint != fingerprint(t)) throw DomainError("genus_lower_bound: certificate belongs to another triple");
  GenusBound g;
  g.grk = t.h().grk();
  if (k_upper && *k_upper > g.grk) throw DomainError("genus_lower_bound: k_upper exceeds grk");
  g.k_upper = cert.verdict == Verdict::certified_k0 ? 0 : k_upper.value_or(g.grk);
  const long num = static_cast<long>(g.grk) - 2 * static_cast<long>(g.k_upper);
  g.bound_rational = num > 0 ? Rational(num, 4) : Rational(0);
  g.bound_rational.canonicalize();
  g.bound_integer = ceil(g.bound_rational);
  return g;
}

SliceReport equivariant_slice_verdict(const EquivariantTriple& t, std::uint64_t seed) {
  SliceReport r;
  r.certificate = certify_k0(t, seed);
  const bool unit_order = t.h().order() == LaurentPoly(1);
  if (r.certificate.verdict == Verdict::certified_k0 && !unit_order) {
    r.verdict = SliceVerdict::not_equivariantly_algebraically_slice;
    r.reason = "A tau-invariant metabolizer P would satisfy Bl(x, tau x) = 0 for x in P, so P = 0 by the certificate; "
               "then |P| conj|P| = 1 differs from the order " + t.h().order().to_string() + ".";
  } else if (unit_order) {
    r.reason = "The module is trivial; the zero submodule is a metabolizer.";
  } else {
    r.reason = std::string("k = 0 is not certified (") + to_string(r.certificate.verdict) + ").";
  }
  return r;
}

AmphichiralReport amphichiral_obstruction(long a, long n) {
  if (a < 1 || n < 1) throw DomainError("amphichiral_obstruction: need a >= 1 and n >= 1");
  AmphichiralReport r;
  r.a = a;
  r.n = n;
  r.branch = n % 2 == 1 ? "odd" : "even";
  const EquivariantTriple t = twist_ka_cyclic(a);
  r.polynomial = t.h().order();
  r.tests = symmetric_quadratic_tests(r.polynomial);
  auto check = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  check("fox_milnor_fails", !r.tests.fox_milnor_possible,
        "|p(-1)| = " + r.tests.witness.get_str() + (r.tests.fox_milnor_possible ? " is" : " is not") + " a square");
  if (n % 2 == 0) {
    check("irreducible", r.tests.irreducible, "discriminant " + eqknot::to_string(r.tests.discriminant));
    const bool fixes = t.involution.kind() == SemilinearMap::Kind::semilinear &&
                       t.involution.matrix() == LambdaMatrix::identity(1);
    check("tau_fixes_generator", fixes, "tau(q) = q(t^-1) on the cyclic generator");
    const TorsionClass b11 = t.pairing.pair(t.h().generator(0), t.h().generator(0));
    check("pairing_nonzero", !b11.is_zero(), "Bl(1, 1) = " + b11.to_string());
    check("triple_valid", validate(t).ok(), "axioms of the cyclic presentation");
  }
  bool all = true;
  for (const auto& c : r.checks) all = all && c.passed;
  r.verdict = all ? SliceVerdict::not_equivariantly_slice : SliceVerdict::inconclusive;
  return r;
}

}  // namespace eqknot

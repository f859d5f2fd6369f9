#include "eqknot/report.hpp"

#include <sstream>

namespace eqknot {

namespace {

Json qmatrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

Json element_json(const ModuleElement& x) {
  Json out = Json::array();
  for (const auto& p : x) out.push_back(p.to_string());
  return out;
}

Json decomposition_json(const SquareDecomposition& d) {
  Json out;
  out["kind"] = to_string(d.kind);
  out["pivots"] = d.pivots;
  out["weights"] = rationals_json(d.weights);
  return out;
}

std::string join(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out;
}

}  // namespace

Json to_json(const QuadraticCertificate& c) {
  Json out;
  out["verdict"] = to_string(c.verdict);
  out["method"] = c.method;
  out["seed"] = c.seed;
  out["fingerprint"] = c.fingerprint;
  out["dimension"] = c.basis.dimension();
  Json parts = Json::array();
  for (const auto& p : c.parts) {
    Json part;
    part["denominator"] = p.denominator.to_string();
    Json forms = Json::array();
    for (const auto& f : p.forms) forms.push_back(qmatrix_json(f));
    part["forms"] = std::move(forms);
    parts.push_back(std::move(part));
  }
  out["parts"] = std::move(parts);
  Json terms = Json::array();
  for (const auto& t : c.terms) {
    Json term;
    term["part"] = t.part;
    term["degree"] = t.degree;
    term["coefficient"] = to_string(t.coefficient);
    term["support"] = t.support;
    term["decomposition"] = decomposition_json(t.decomposition);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  if (c.method == "combination") out["combined"] = decomposition_json(c.combined);
  if (c.verdict == Verdict::counterexample) {
    out["counterexample"] = rationals_json(c.counterexample);
    out["counterexample_element"] = element_json(c.counterexample_element);
  } else {
    out["counterexample"] = nullptr;
  }
  out["explanation"] = c.explanation();
  return out;
}

Json to_json(const GenusBound& g, const QuadraticCertificate& c) {
  Json out;
  out["verdict"] = to_string(c.verdict);
  out["grk"] = g.grk;
  out["k_upper"] = g.k_upper;
  out["bound_rational"] = to_string(g.bound_rational);
  out["bound_integer"] = g.bound_integer.get_str();
  out["certificate"] = to_json(c);
  out["seed"] = c.seed;
  return out;
}

Json to_json(const SliceReport& r) {
  Json out;
  out["verdict"] = to_string(r.verdict);
  out["reason"] = r.reason;
  out["certificate"] = to_json(r.certificate);
  out["seed"] = r.certificate.seed;
  return out;
}

Json to_json(const AmphichiralReport& r) {
  Json out;
  out["verdict"] = to_string(r.verdict);
  out["a"] = r.a;
  out["n"] = r.n;
  out["branch"] = r.branch;
  out["polynomial"] = r.polynomial.to_string();
  out["irreducible"] = r.tests.irreducible;
  out["fox_milnor_possible"] = r.tests.fox_milnor_possible;
  out["witness"] = r.tests.witness.get_str();
  out["discriminant"] = to_string(r.tests.discriminant);
  Json checks = Json::array();
  for (const auto& h : r.checks) checks.push_back(Json{{"name", h.name}, {"passed", h.passed}, {"detail", h.detail}});
  out["checks"] = std::move(checks);
  return out;
}

Json to_json(const ValidationReport& r) {
  Json out;
  out["ok"] = r.ok();
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"axiom", c.axiom}, {"passed", c.passed}, {"detail", c.detail}});
  out["checks"] = std::move(checks);
  return out;
}

Json to_json(const TorsionMatrix& gram) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < gram.cols(); ++j) row.push_back(gram(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_text(const QuadraticCertificate& c) {
  std::ostringstream os;
  os << "certificate: " << to_string(c.verdict);
  if (!c.method.empty()) os << " (" << c.method << ")";
  os << "\n  rational dimension " << c.basis.dimension() << ", " << c.parts.size() << " part(s)\n";
  for (std::size_t i = 0; i < c.parts.size(); ++i)
    os << "  part " << i << ": denominator " << c.parts[i].denominator.to_string() << ", " << c.parts[i].forms.size()
       << " form(s)\n";
  for (const auto& t : c.terms) {
    os << "  form (" << t.part << ", t^" << t.degree << ")";
    if (t.coefficient != 1) os << " x " << to_string(t.coefficient);
    os << " is " << to_string(t.decomposition.kind) << " on {";
    for (std::size_t k = 0; k < t.support.size(); ++k) os << (k ? ", " : "") << t.support[k];
    os << "}\n";
  }
  if (c.verdict == Verdict::counterexample) os << "  isotropic vector: [" << join(c.counterexample) << "]\n";
  os << "  " << c.explanation() << "\n";
  return os.str();
}

std::string to_text(const GenusBound& g, const QuadraticCertificate& c) {
  std::ostringstream os;
  os << "verdict: " << to_string(c.verdict) << "\n"
     << "grk: " << g.grk << "\n"
     << "k_upper: " << g.k_upper << "\n"
     << "bound_rational: " << to_string(g.bound_rational) << "\n"
     << "bound_integer: " << g.bound_integer.get_str() << "\n"
     << "seed: " << c.seed << "\n"
     << to_text(c);
  return os.str();
}

std::string to_text(const SliceReport& r) {
  std::ostringstream os;
  os << "verdict: " << to_string(r.verdict) << "\n"
     << "reason: " << r.reason << "\n"
     << "seed: " << r.certificate.seed << "\n"
     << to_text(r.certificate);
  return os.str();
}

std::string to_text(const AmphichiralReport& r) {
  std::ostringstream os;
  os << "verdict: " << to_string(r.verdict) << "\n"
     << "a: " << r.a << ", n: " << r.n << " (" << r.branch << " branch)\n"
     << "polynomial: " << r.polynomial.to_string() << "\n"
     << "irreducible: " << (r.tests.irreducible ? "yes" : "no") << "\n"
     << "fox_milnor_possible: " << (r.tests.fox_milnor_possible ? "yes" : "no") << " (|p(-1)| = "
     << r.tests.witness.get_str() << ")\n";
  for (const auto& h : r.checks)
    os << "  [" << (h.passed ? "ok" : "FAILED") << "] " << h.name << (h.detail.empty() ? "" : ": " + h.detail) << "\n";
  return os.str();
}

std::string to_text(const ValidationReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks)
    os << "[" << (c.passed ? "ok" : "FAILED") << "] " << c.axiom << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
  os << (r.ok() ? "valid" : "invalid") << "\n";
  return os.str();
}

}  // namespace eqknot

#include "eqknot/polytools.hpp"

#include <algorithm>
#include <optional>

#include "eqknot/errors.hpp"

namespace eqknot {

namespace {

bool poly_less(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.span() != b.span()) return a.span() < b.span();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

void sort_unique(std::vector<LaurentPoly>& v) {
  std::sort(v.begin(), v.end(), poly_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<LaurentPoly> gcd_free_basis(std::span<const LaurentPoly> polys) {
  std::vector<LaurentPoly> work;
  for (const auto& p : polys) {
    if (p.is_zero()) throw DomainError("gcd_free_basis: zero input");
    if (p.span() > 0) work.push_back(p.monic());
  }
  sort_unique(work);
  // Replace any non-coprime pair {a, b} by {g, a/g, b/g}; total degree drops
  // strictly, so this terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < work.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < work.size() && !changed; ++j) {
        const LaurentPoly g = gcd(work[i], work[j]);
        if (g.span() == 0) continue;
        const LaurentPoly a = *exact_divide(work[i], g);
        const LaurentPoly b = *exact_divide(work[j], g);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
        work.push_back(g);
        if (a.span() > 0) work.push_back(a.monic());
        if (b.span() > 0) work.push_back(b.monic());
        sort_unique(work);
        changed = true;
      }
    }
  }
  return work;
}

namespace {

// Positive divisors of n, or nullopt when n is too large to enumerate.
std::optional<std::vector<Integer>> divisors(Integer n) {
  n = abs(n);
  if (n > Integer("1000000000000")) return std::nullopt;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational evaluate_at(const LaurentPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;  // times x^low, which is nonzero for x != 0
}

}  // namespace

std::vector<Rational> rational_roots(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  if (p.span() == 0) return roots;
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, Integer(c.get_den()));
  const Integer a0 = Integer(p.coeffs().front() * den);
  const Integer an = Integer(p.leading() * den);
  const auto num = divisors(a0);
  const auto lead = divisors(an);
  if (!num || !lead) return roots;
  for (const auto& u : *num)
    for (const auto& v : *lead)
      for (int sign : {1, -1}) {
        Rational r(sign * u, v);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        if (evaluate_at(p, r) == 0) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<LaurentPoly> coprime_factors(std::span<const LaurentPoly> polys) {
  std::vector<LaurentPoly> split;
  for (const auto& f : gcd_free_basis(polys)) {
    if (f.span() == 1) {
      split.push_back(f);
      continue;
    }
    LaurentPoly rest = f;
    for (const auto& r : rational_roots(f)) {
      const LaurentPoly linear = LaurentPoly::t(1) - LaurentPoly(r);
      while (auto q = exact_divide(rest, linear)) rest = std::move(*q);
      split.push_back(linear);
    }
    if (rest.span() > 0) split.push_back(rest.monic());
  }
  return gcd_free_basis(split);
}

int multiplicity(const LaurentPoly& f, const LaurentPoly& p) {
  if (f.span() <= 0) throw DomainError("multiplicity of a unit");
  int e = 0;
  LaurentPoly rest = p;
  while (true) {
    auto q = exact_divide(rest, f);
    if (!q) return e;
    rest = std::move(*q);
    ++e;
  }
}

bool is_symmetric(const LaurentPoly& p) { return p.conj() == p; }

LaurentPoly normalize_alexander(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("normalize_alexander: zero polynomial");
  const LaurentPoly o = p.ordinary();
  const int d = o.high();
  const auto& c = o.coeffs();
  bool palindromic = d % 2 == 0;
  for (int i = 0; palindromic && i <= d; ++i)
    palindromic = c[static_cast<std::size_t>(i)] == c[static_cast<std::size_t>(d - i)];
  if (!palindromic) return o.monic();
  // primitive integer coefficients, positive leading coefficient
  Integer den_lcm = 1;
  for (const auto& q : c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  Integer content = 0;
  for (const auto& q : c) {
    const Integer n = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale(den_lcm, content);
  scale.canonicalize();
  if (o.leading() < 0) scale = -scale;
  return o.shifted(-d / 2).scaled(scale);
}

QuadraticTestResult symmetric_quadratic_tests(const LaurentPoly& p) {
  const LaurentPoly o = p.ordinary();
  if (o.high() != 2 || o.coeff(0) != o.coeff(2))
    throw DomainError("symmetric_quadratic_tests: " + p.to_string() + " is not symmetric of degree span 2");
  const Rational at_one = o.eval(1);
  if (abs(at_one) != 1) throw DomainError("symmetric_quadratic_tests: |p(1)| != 1 for " + p.to_string());
  const Rational at_minus_one = abs(Rational(o.eval(-1)));
  if (!is_integer(at_minus_one)) throw DomainError("symmetric_quadratic_tests: p(-1) is not an integer");
  QuadraticTestResult r;
  r.witness = at_minus_one.get_num();
  r.discriminant = o.coeff(1) * o.coeff(1) - 4 * o.coeff(2) * o.coeff(0);
  r.irreducible = !is_rational_square(r.discriminant);
  r.fox_milnor_possible = is_perfect_square(r.witness);
  return r;
}

}  // namespace eqknot

#include "doctest.h"
#include "support.hpp"

#include "eqknot/catalog.hpp"
#include "eqknot/kernels.hpp"
#include "eqknot/obstruction.hpp"

using namespace testing_support;

namespace {

EquivariantTriple power(const EquivariantTriple& t, int n) {
  EquivariantTriple out = trivial_triple();
  for (int i = 0; i < n; ++i) out = sum(out, t);
  return out;
}

}  // namespace

TEST_CASE("definiteness by completing squares") {
  CHECK(classify(QMatrix::from_rows({{Q(2), Q(1)}, {Q(1), Q(2)}})).kind == Definiteness::positive);
  CHECK(classify(QMatrix::from_rows({{Q(-2), Q(1)}, {Q(1), Q(-2)}})).kind == Definiteness::negative);
  CHECK(classify(QMatrix::from_rows({{Q(1), Q(2)}, {Q(2), Q(1)}})).kind == Definiteness::indefinite);
  CHECK(classify(QMatrix::from_rows({{Q(0), Q(1)}, {Q(1), Q(0)}})).kind == Definiteness::indefinite);
  CHECK(classify(QMatrix::from_rows({{Q(1), Q(1)}, {Q(1), Q(1)}})).kind == Definiteness::degenerate);
  CHECK(classify(QMatrix(0, 0)).kind == Definiteness::positive);
  const auto d = classify(QMatrix::from_rows({{Q(0), Q(0), Q(0)}, {Q(0), Q(3), Q(0)}, {Q(0), Q(0), Q(1, 2)}}));
  CHECK(d.kind == Definiteness::degenerate);
}

TEST_CASE("9_46 forms and certificate") {
  const auto t = assemble(builtin("nine46"));
  const auto q = tau_quadratic(t);
  CHECK(q.verdict == Verdict::undecided);
  REQUIRE(q.parts.size() == 2);
  for (const auto& p : q.parts) {
    REQUIRE(p.forms.size() == 1);
    CHECK(support(p.forms[0]).size() == 1);
  }
  const auto cert = certify_k0(t);
  CHECK(cert.verdict == Verdict::certified_k0);
  CHECK(cert.method == "support_partition");
  const auto v = equivariant_slice_verdict(t);
  CHECK(v.verdict == SliceVerdict::not_equivariantly_algebraically_slice);
  CHECK(audit_isotropic(t, cert.basis, 0, 200).empty());
}

TEST_CASE("trivial triple") {
  const auto t = trivial_triple();
  CHECK(tau_quadratic(t).parts.empty());
  const auto cert = certify_k0(t);
  CHECK(equivariant_slice_verdict(t).verdict == SliceVerdict::inconclusive);
  const auto g = genus_lower_bound(t, cert);
  CHECK(g.bound_rational == 0);
  CHECK(g.bound_integer == 0);
}

TEST_CASE("genus-one sums certify for every c") {
  for (const char* c : {"1", "2", "1/2", "-3"}) {
    const auto t = assemble(builtin_ref(std::string("genus_one_slice:m=1,l=1,c=") + c));
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(c);
      CAPTURE(n);
      const auto cert = certify_k0(power(t, n));
      CHECK(cert.verdict == Verdict::certified_k0);
    }
  }
}

TEST_CASE("swap double of the trefoil has an isotropic vector") {
  const auto t = assemble(builtin_ref("swap_double:trefoil"));
  const auto cert = certify_k0(t, 0);
  REQUIRE(cert.verdict == Verdict::counterexample);
  CHECK(t.pairing.pair(cert.counterexample_element, t.involution.apply(cert.counterexample_element)).is_zero());
  CHECK_FALSE(t.h().is_zero(cert.counterexample_element));
  CHECK(equivariant_slice_verdict(t).verdict == SliceVerdict::inconclusive);
  const auto g = genus_lower_bound(t, cert);
  CHECK(g.k_upper == g.grk);
  CHECK(g.bound_rational == 0);
}

TEST_CASE("genus bound") {
  const auto t = assemble(builtin("nine46"));
  for (int n = 1; n <= 4; ++n) {
    const auto tn = power(t, n);
    const auto g = genus_lower_bound(tn, certify_k0(tn));
    CHECK(g.grk == static_cast<std::size_t>(n));
    CHECK(g.k_upper == 0);
    CHECK(g.bound_rational == Q(n, 4));
    CHECK(g.bound_integer == 1);
  }
  const auto cert = certify_k0(t);
  CHECK_THROWS_AS(genus_lower_bound(power(t, 2), cert), DomainError);
  const auto sw = assemble(builtin_ref("swap_double:trefoil"));
  const auto cs = certify_k0(sw);
  CHECK(genus_lower_bound(sw, cs, 0).bound_rational == Q(1, 2));
  CHECK_THROWS_AS(genus_lower_bound(sw, cs, 9), DomainError);
}

TEST_CASE("parallel kernels match serial references") {
  const auto t = power(assemble(builtin_ref("genus_one_slice:m=2,l=1,c=1/2")), 2);
  const auto q = tau_quadratic(t);
  const auto forms = q.all_forms();
  const std::size_t n = q.basis.dimension();
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    CHECK(find_common_zero(forms, n, seed, 500) == find_common_zero_serial(forms, n, seed, 500));
    CHECK(audit_isotropic(t, q.basis, seed, 40) == audit_isotropic_serial(t, q.basis, seed, 40));
  }
  const auto sw = assemble(builtin_ref("swap_double:trefoil"));
  const auto qs = tau_quadratic(sw);
  const auto fs = qs.all_forms();
  CHECK(find_common_zero(fs, qs.basis.dimension(), 3, 500) == find_common_zero_serial(fs, qs.basis.dimension(), 3, 500));
  CHECK(audit_isotropic(sw, qs.basis, 3, 40) == audit_isotropic_serial(sw, qs.basis, 3, 40));
  // candidates are a pure function of (seed, index)
  CHECK(falsifier_candidate(4, 7, 100) == falsifier_candidate(4, 7, 100));
  CHECK(falsifier_candidate(3, 0, 3) == std::vector<Rational>{1, 1, 0});
  CHECK(falsifier_candidate(3, 0, 6) == std::vector<Rational>{1, -1, 0});
}

TEST_CASE("amphichiral obstruction") {
  const auto r = amphichiral_obstruction(3, 2);
  CHECK(r.verdict == SliceVerdict::not_equivariantly_slice);
  CHECK(r.tests.witness == 37);
  const auto r1 = amphichiral_obstruction(1, 1);
  CHECK(r1.verdict == SliceVerdict::not_equivariantly_slice);
  CHECK(r1.branch == "odd");
  CHECK(r1.tests.witness == 5);
  CHECK_THROWS_AS(amphichiral_obstruction(0, 1), DomainError);
}

TEST_CASE("certificates survive a 1000-vector audit") {
  for (const char* ref : {"nine46", "genus_one_slice:m=-2,l=3,c=2", "stevedore"}) {
    CAPTURE(ref);
    const auto t = power(assemble(builtin_ref(ref)), 2);
    const auto cert = certify_k0(t);
    REQUIRE(cert.verdict == Verdict::certified_k0);
    CHECK(audit_isotropic(t, cert.basis, 17, 1000).empty());
  }
}

TEST_CASE("adding a certified summand never lowers the bound") {
  const auto certified = assemble(builtin_ref("genus_one_slice:m=3,l=2,c=-3"));
  for (const char* ref : {"nine46", "swap_double:trefoil", "unknot", "figure_eight"}) {
    CAPTURE(ref);
    const auto t = assemble(builtin_ref(ref));
    const auto before = genus_lower_bound(t, certify_k0(t));
    const auto s = sum(t, certified);
    const auto after = genus_lower_bound(s, certify_k0(s));
    CHECK(after.bound_rational >= before.bound_rational);
  }
}

TEST_CASE("genus-one verdict does not depend on c") {
  for (long m : {-3L, 2L})
    for (long l : {1L, 4L}) {
      std::vector<Verdict> verdicts;
      for (const char* c : {"1", "2", "1/2", "-3", "7"}) {
        const auto t = assemble(builtin_ref("genus_one_slice:m=" + std::to_string(m) + ",l=" + std::to_string(l) +
                                            ",c=" + c));
        verdicts.push_back(certify_k0(power(t, 2)).verdict);
      }
      for (const auto v : verdicts) CHECK(v == verdicts.front());
    }
}

TEST_CASE("summands merged into one invariant factor still certify") {
  const auto t = sum(assemble(builtin("nine46")), assemble(builtin_ref("genus_one_slice:m=3,l=2,c=-3")));
  REQUIRE(t.h().invariant_factors().size() == 1);
  const auto cert = certify_k0(t);
  CHECK(cert.verdict == Verdict::certified_k0);
  CHECK(cert.parts.size() == 4);
}

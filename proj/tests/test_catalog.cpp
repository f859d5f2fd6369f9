#include "doctest.h"
#include "support.hpp"

#include <filesystem>

#include "eqknot/catalog.hpp"
#include "eqknot/polytools.hpp"

using namespace testing_support;

TEST_CASE("builtins assemble and validate") {
  for (const char* ref : {"unknot", "trefoil", "nine46", "figure_eight", "stevedore", "genus_one_slice",
                          "genus_one_slice:m=2,l=3,c=-1/3", "double_twist:b=4", "pretzel:a=5,c=2", "twist_Ka:a=3",
                          "swap_double:trefoil", "swap_double:nine46"}) {
    CAPTURE(ref);
    const KnotSpec s = builtin_ref(ref);
    const EquivariantTriple t = assemble_unchecked(s);
    const auto r = validate(t);
    for (const auto& c : r.checks) {
      CAPTURE(c.axiom);
      CHECK(c.passed);
    }
    const LambdaMatrix a = to_lambda(s.seifert);
    CHECK(t.h().order() == normalize_alexander(det(a.map([](const LaurentPoly& p) { return P("t") * p; }) - a.transpose())));
  }
}

TEST_CASE("builtin data") {
  const KnotSpec n = builtin("nine46");
  CHECK(n.seifert == IntMatrix{{0, 2}, {1, 0}});
  CHECK(std::get<std::string>(n.involution) == "swap_halves");
  CHECK(assemble(builtin("genus_one_slice")).h().order() == P("2*t - 5 + 2*t^-1"));
  const auto f8 = assemble(builtin("figure_eight"));
  CHECK(f8.h().order() == P("t - 3 + t^-1"));
  CHECK(f8.h().grk() == 1);
  CHECK(twist_ka_polynomial(2) == P("4*t - 9 + 4*t^-1"));
  CHECK_THROWS_AS(builtin("genus_one_slice", {{"m", Q(-1)}}), DomainError);
  CHECK_THROWS_AS(builtin("genus_one_slice", {{"l", Q(0)}}), DomainError);
  CHECK_THROWS_AS(builtin("genus_one_slice", {{"c", Q(0)}}), DomainError);
  CHECK_THROWS_AS(builtin("twist_Ka", {{"a", Q(0)}}), DomainError);
  CHECK_THROWS_AS(builtin("twist_Ka", {{"a", Q(1, 2)}}), DomainError);
  CHECK_THROWS_AS(builtin("nine46", {{"x", Q(1)}}), DomainError);
  CHECK_THROWS_AS(builtin("no_such_knot"), DomainError);
  CHECK_THROWS_AS(builtin_ref("genus_one_slice:m=1,,"), ParseError);
}

TEST_CASE("stevedore involution is negated conjugation on b1") {
  const auto t = assemble(builtin("stevedore"));
  const ModuleElement b1 = t.h().generator(0);
  CHECK(t.h().element_equal(t.involution.apply(scale(P("t"), b1)), scale(-P("t^-1"), b1)));
}

TEST_CASE("cyclic twist presentation") {
  for (long a : {1L, 2L, 7L}) {
    const auto t = twist_ka_cyclic(a);
    CHECK(validate(t).ok());
    CHECK(t.h().order() == twist_ka_polynomial(a));
    CHECK_FALSE(t.pairing.gram()(0, 0).is_zero());
  }
}

TEST_CASE("sums of specs match sums of triples") {
  const std::vector<KnotSpec> specs{builtin("nine46"), builtin("nine46")};
  const auto st = assemble(sum_specs(specs));
  const auto t1 = assemble(specs[0]);
  const auto tt = sum(t1, t1);
  CHECK(st.h().invariant_factors() == tt.h().invariant_factors());
  CHECK(st.pairing.gram() == tt.pairing.gram());
  CHECK(st.involution.matrix() == tt.involution.matrix());
}

TEST_CASE("file round trip") {
  const auto dir = std::filesystem::temp_directory_path();
  for (const char* ref : {"nine46", "genus_one_slice:m=2,l=3,c=-1/3", "unknot", "swap_double:trefoil"}) {
    const KnotSpec s = builtin_ref(ref);
    const auto path = dir / "eqknot_roundtrip.knot";
    save(s, path);
    CHECK(load(path) == s);
    CHECK(parse_spec(format_spec(s)) == s);
  }
  const std::vector<KnotSpec> specs{builtin("stevedore"), builtin("figure_eight")};
  const KnotSpec sum = sum_specs(specs);
  CHECK(parse_spec(format_spec(sum)) == sum);
}

TEST_CASE("file errors") {
  const std::string good = "schema=1\nname=k\nparams=\nseifert=0,2;1,0\ninvolution=swap_halves\nnotes=\n";
  CHECK_NOTHROW(parse_spec(good));
  try {
    parse_spec("schema=1\nname=k\nseifert=0,2;1,0\ninvolution=0, 1; 1, 2*t +* 3\n");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 26);
  }
  try {
    parse_spec("schema=1\nname=k\nseifert=0,2;1,x\ninvolution=swap_halves\n");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 15);
  }
  CHECK_THROWS_AS(parse_spec("schema=2\nname=k\nseifert=\ninvolution=identity_conj\n"), ParseError);
  CHECK_THROWS_AS(parse_spec("name=k\nseifert=\ninvolution=identity_conj\n"), ParseError);
  CHECK_THROWS_AS(parse_spec(good + "color=red\n"), ParseError);

  // a matrix that is not a Seifert matrix
  const KnotSpec bad = parse_spec("schema=1\nname=k\nseifert=1,2;2,1\ninvolution=swap_halves\n");
  try {
    (void)assemble(bad);
    FAIL("expected validation error");
  } catch (const ValidationError& e) {
    CHECK(e.axiom() == "seifert");
  }
  // a corrupted involution
  const KnotSpec corrupt = parse_spec("schema=1\nname=k\nseifert=0,2;1,0\ninvolution=1, 0; 0, 1\n");
  try {
    (void)assemble(corrupt);
    FAIL("expected validation error");
  } catch (const ValidationError& e) {
    CHECK(e.axiom() == "tau_well_defined");
  }
}

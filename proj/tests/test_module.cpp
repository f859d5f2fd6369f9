#include "doctest.h"
#include "support.hpp"

#include "eqknot/module.hpp"

using namespace testing_support;

namespace {

PresentedModule cyclic(const LaurentPoly& p) {
  LambdaMatrix r(1, 1);
  r(0, 0) = p;
  return PresentedModule(r);
}

}  // namespace

TEST_CASE("module from Seifert matrix") {
  const auto m = PresentedModule::from_seifert({{0, 2}, {1, 0}});
  CHECK(m.invariant_factors() == std::vector<LaurentPoly>{P("t - 2") * P("t - 1/2")});
  CHECK(m.grk() == 1);
  CHECK(m.order() == P("2*t - 5 + 2*t^-1"));
  CHECK(m.is_torsion());

  const auto u = PresentedModule::from_seifert({});
  CHECK(u.grk() == 0);
  CHECK(u.order() == LaurentPoly(1));

  const auto g = PresentedModule::from_seifert({{0, 2}, {1, 2}});
  CHECK(g.grk() == 1);
  CHECK(associates(g.order(), P("2*t - 1") * P("t - 2")));

  CHECK_THROWS_AS(PresentedModule::from_seifert({{1, 2}, {2, 1}}), DomainError);
  CHECK_THROWS_AS(PresentedModule::from_seifert({{1}}), DomainError);
}

TEST_CASE("direct sums and generating rank") {
  const auto m = PresentedModule::from_seifert({{0, 2}, {1, 0}});
  CHECK(direct_sum(m, PresentedModule()).invariant_factors() == m.invariant_factors());
  const auto m3 = direct_sum(direct_sum(m, m), m);
  CHECK(m3.grk() == 3);
  CHECK(associates(m3.order(), m.order() * m.order() * m.order()));
  const auto merged = direct_sum(cyclic(P("t - 2")), cyclic(P("2*t - 1")));
  CHECK(merged.grk() == 1);
  const auto p = P("t - 3 + t^-1");
  CHECK(direct_sum(cyclic(p), cyclic(p)).grk() == 2);
  CHECK(PresentedModule().grk() == 0);
  // coprime families: grk is the largest multiplicity
  const auto q = P("2*t - 5 + 2*t^-1");
  auto mix = cyclic(q);
  for (int i = 0; i < 2; ++i) mix = direct_sum(mix, cyclic(p));
  CHECK(mix.grk() == 2);
}

TEST_CASE("element equality") {
  const auto c = cyclic(P("t - 2"));
  CHECK(c.element_equal({P("t")}, {LaurentPoly(2)}));
  const auto m = PresentedModule::from_seifert({{0, 2}, {1, 0}});
  const ModuleElement b1 = m.generator(0);
  CHECK(m.is_zero(scale(P("2*t - 1"), b1)));
  CHECK_FALSE(m.is_zero(b1));
  CHECK(m.element_equal(b1, b1));
}

TEST_CASE("submodule presentations") {
  const auto m = PresentedModule::from_seifert({{0, 2}, {1, 0}});
  const std::vector<ModuleElement> all{m.generator(0), m.generator(1)};
  CHECK(submodule_presentation(m, all).invariant_factors() == m.invariant_factors());
  const auto zero = submodule_presentation(m, std::vector<ModuleElement>{});
  CHECK(zero.order() == LaurentPoly(1));

  const auto c = cyclic(P("t - 2") * P("2*t - 1"));
  const std::vector<ModuleElement> g{{P("2*t - 1")}};
  CHECK(associates(submodule_presentation(c, g).order(), P("t - 2")));
}

TEST_CASE("rational basis") {
  const auto f8 = cyclic(P("t - 3 + t^-1"));
  const QBasis b = q_basis(f8);
  CHECK(b.dimension() == 2);
  CHECK(b.t_action == QMatrix::from_rows({{Q(0), Q(-1)}, {Q(1), Q(3)}}));
  CHECK(q_basis(PresentedModule()).dimension() == 0);

  const auto m = PresentedModule::from_seifert({{0, 2}, {1, 0}});
  const QBasis b2 = q_basis(m);
  CHECK(b2.dimension() == 2);
  CHECK(b2.t_action(0, 1) == 0);
  CHECK(b2.t_action(1, 0) == 0);
  CHECK(b2.t_action(0, 0) * b2.t_action(1, 1) == 1);
  CHECK((b2.t_action(0, 0) == 2 || b2.t_action(0, 0) == Q(1, 2)));

  std::mt19937_64 rng(20);
  for (const auto* mod : {&f8, &m}) {
    const QBasis qb = q_basis(*mod);
    for (int i = 0; i < 30; ++i) {
      ModuleElement x(mod->generators());
      for (auto& e : x) e = random_poly(rng, 3, 2);
      const auto cx = coordinates(*mod, qb, x);
      CHECK(mod->element_equal(element_from_coordinates(*mod, qb, cx), x));
      // t acts by t_action
      const auto ctx = coordinates(*mod, qb, scale(P("t"), x));
      for (std::size_t r = 0; r < qb.dimension(); ++r) {
        Rational acc = 0;
        for (std::size_t k = 0; k < qb.dimension(); ++k) acc += qb.t_action(r, k) * cx[k];
        CHECK(acc == ctx[r]);
      }
    }
  }

  LambdaMatrix free(2, 1);
  free(0, 0) = P("t - 2");
  CHECK_THROWS_AS(q_basis(PresentedModule(free)), DomainError);
}

TEST_CASE("q_basis on repeated factors") {
  // Lambda/(t-2)^2 + Lambda/(t-2)(t-3)
  LambdaMatrix r(2, 2);
  r(0, 0) = P("t - 2") * P("t - 2");
  r(1, 1) = P("t - 2") * P("t - 3");
  const PresentedModule m(r);
  const QBasis b = q_basis(m);
  CHECK(b.dimension() == 4);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 20; ++i) {
    const ModuleElement x{random_poly(rng, 3, 2), random_poly(rng, 3, 2)};
    CHECK(m.element_equal(element_from_coordinates(m, b, coordinates(m, b, x)), x));
  }
}

TEST_CASE("module maps and generating rank inequalities") {
  std::mt19937_64 rng(22);
  int checked = 0;
  for (int i = 0; i < 30; ++i) {
    const std::size_t n1 = 1 + i % 3, n2 = 1 + (i / 3) % 3;
    const LambdaMatrix r1 = random_matrix(rng, n1, n1, 1, 0.4);
    const LambdaMatrix f = random_matrix(rng, n2, n1, 1, 0.4);
    const LambdaMatrix r2 = hstack(f * r1, random_matrix(rng, n2, 1, 1, 0.2));
    const PresentedModule src(r1), dst(r2);
    REQUIRE(is_module_map(src, dst, f));
    const auto im = image_presentation(dst, f);
    const auto ker = kernel_presentation(src, dst, f);
    CHECK(im.grk() <= src.grk());
    CHECK(src.grk() <= im.grk() + ker.grk());
    CHECK(im.grk() <= dst.grk());
    ++checked;
  }
  CHECK(checked == 30);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fermat/polynomial.hpp"

using namespace fermat;

namespace {

TriPoly X(const FieldPtr& F, int i) { return TriPoly::variable(F, i); }
TriPoly c(const FieldPtr& F, std::int64_t v) { return TriPoly::constant(F, F->from_int(v)); }

CurveConfig config(const FieldPtr& F, std::uint32_t a, std::uint32_t b, std::uint32_t d) {
  return {F, {Element{a}, Element{b}, Element{d}}};
}

TriPoly random_form(const FieldPtr& F, unsigned degree, std::mt19937& rng) {
  std::vector<TriPoly::Term> terms;
  for (unsigned a = 0; a <= degree; ++a)
    for (unsigned b = 0; a + b <= degree; ++b)
      terms.push_back({Monomial{{a, b, degree - a - b}}, Element{static_cast<std::uint32_t>(rng() % F->size())}});
  return TriPoly::from_terms(F, terms);
}

}  // namespace

TEST_CASE("construction and canonical form") {
  const auto F = Field::build(7, 1);
  const auto f = TriPoly::from_terms(F, {{Monomial{{1, 1, 0}}, Element{3}},
                                         {Monomial{{1, 1, 0}}, Element{4}},
                                         {Monomial{{0, 2, 0}}, Element{2}}});
  CHECK(f.size() == 1);
  CHECK(f.to_string() == "2*X1^2");
  CHECK_THROWS_AS(TriPoly::from_terms(F, {{Monomial{{1, 0, 0}}, Element{1}}, {Monomial{{0, 2, 0}}, Element{1}}}),
                  std::invalid_argument);
  CHECK(TriPoly(F).to_string() == "0");
  CHECK(TriPoly(F).evaluate(Coords{Element{1}, Element{2}, Element{3}}) == F->zero());
}

TEST_CASE("curve polynomial") {
  const auto F = Field::build(7, 1);
  const auto fermat_cubic = build_curve_poly(config(F, 0, 0, 0));
  CHECK(fermat_cubic == X(F, 0).pow(3) + X(F, 1).pow(3) + X(F, 2).pow(3));
  CHECK(fermat_cubic.size() == 3);
  CHECK(fermat_cubic.evaluate(Coords{Element{1}, Element{2}, Element{4}}) == Element{3});

  const auto split = build_curve_poly(config(F, 3, 0, 0));
  CHECK(split == X(F, 1).pow(3) + X(F, 2).pow(3));

  for (std::uint32_t a = 0; a < 7; ++a)
    for (std::uint32_t b = 0; b < 7; ++b) {
      const auto cfg = config(F, a, b, (a + 2 * b) % 7);
      const TriPoly C = build_curve_poly(cfg);
      CHECK(C.evaluate(Coords{F->one(), F->zero(), F->zero()}) == F->add(F->one(), F->pow(Element{a}, 3)));
      // Homogeneity: f(tx) = t^deg f(x).
      const Coords x{Element{2}, Element{5}, Element{1}};
      const Element t{3};
      const Coords tx{F->mul(t, x[0]), F->mul(t, x[1]), F->mul(t, x[2])};
      CHECK(C.evaluate(tx) == F->mul(F->pow(t, 3), C.evaluate(x)));
    }
}

TEST_CASE("derivatives") {
  const auto F = Field::build(7, 1);
  CHECK(partial_derivative(X(F, 0).pow(3), 0) == X(F, 0).pow(2).scaled(Element{3}));
  CHECK(partial_derivative(X(F, 0).pow(7), 0).is_zero());
  std::mt19937 rng(5);
  for (unsigned deg : {2u, 3u, 5u}) {
    const auto f = random_form(F, deg, rng);
    TriPoly euler(F);
    for (int i = 0; i < 3; ++i) euler = euler + X(F, i) * partial_derivative(f, i);
    CHECK(euler == f.scaled(F->from_int(deg)));
  }
}

TEST_CASE("Frobenius form") {
  const auto F = Field::build(7, 1);
  CHECK(frobenius_form(X(F, 0)) == X(F, 0).pow(7));
  const TriPoly line = X(F, 0) + X(F, 1).scaled(Element{3}) + X(F, 2).scaled(Element{5});
  const auto phi = frobenius_form(line);
  for (const auto& pt : points_on_line(*F, make_line(*F, {Element{1}, Element{3}, Element{5}})))
    CHECK(phi.evaluate(pt) == F->zero());
}

TEST_CASE("exact division") {
  const auto F = Field::build(7, 1);
  const auto q = exact_divide(X(F, 0).pow(2) - X(F, 1).pow(2), X(F, 0) - X(F, 1));
  REQUIRE(q);
  CHECK(*q == X(F, 0) + X(F, 1));

  const TriPoly sum = X(F, 1).pow(3) + X(F, 2).pow(3);
  // X1 + c X2 divides X1^3 + X2^3 exactly when (-c)^3 = -1, i.e. c^3 = 1.
  CHECK(exact_divide(sum, X(F, 1) + X(F, 2)));
  CHECK(exact_divide(sum, X(F, 1) + X(F, 2).scaled(Element{2})));
  CHECK_FALSE(exact_divide(sum, X(F, 1) + X(F, 2).scaled(Element{3})));
  CHECK_FALSE(exact_divide(build_curve_poly(config(F, 0, 0, 0)), X(F, 0) + X(F, 1) + X(F, 2)));
  CHECK_THROWS_AS(exact_divide(sum, TriPoly(F)), std::invalid_argument);
}

TEST_CASE("division does not depend on the variable order") {
  std::mt19937 rng(11);
  const std::array<VariableOrder, 6> orders{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (auto [p, h] : {std::pair{7u, 1u}, std::pair{5u, 2u}}) {
    const auto F = Field::build(p, h);
    for (int trial = 0; trial < 20; ++trial) {
      const auto g = random_form(F, 1 + trial % 3, rng);
      const auto h2 = random_form(F, 2 + trial % 2, rng);
      if (g.is_zero()) continue;
      const auto f = g * h2;
      const auto perturbed = f + random_form(F, f.degree(), rng);
      for (const auto& order : orders) {
        const auto q = exact_divide(f, g, order);
        REQUIRE(q);
        CHECK(*q == h2);
        CHECK(*q * g == f);
        const auto r = exact_divide(perturbed, g, kDefaultOrder);
        CHECK(r.has_value() == exact_divide(perturbed, g, order).has_value());
        if (r) CHECK(*r * g == perturbed);
      }
    }
  }
}

TEST_CASE("linear factor extraction") {
  const auto F = Field::build(7, 1);
  const auto split = extract_linear_factors(build_curve_poly(config(F, 3, 0, 0)));
  REQUIRE(split.factors.size() == 3);
  std::set<std::uint32_t> cs;
  for (const auto& [line, mult] : split.factors) {
    CHECK(mult == 1);
    CHECK(line.c[0] == F->zero());
    CHECK(line.c[1] == F->one());
    cs.insert(line.c[2].index);
  }
  CHECK(cs == std::set<std::uint32_t>{1, 2, 4});
  CHECK(split.cofactor.degree() == 0);

  const auto fermat_cubic = build_curve_poly(config(F, 0, 0, 0));
  const auto none = extract_linear_factors(fermat_cubic);
  CHECK(none.factors.empty());
  CHECK(none.cofactor == fermat_cubic);

  const auto f = (X(F, 0) + X(F, 1)).pow(2) * X(F, 2);
  const auto fac = extract_linear_factors(f);
  REQUIRE(fac.factors.size() == 2);
  std::map<LinearForm, unsigned> mults(fac.factors.begin(), fac.factors.end());
  CHECK(mults[make_line(*F, {F->one(), F->one(), F->zero()})] == 2);
  CHECK(mults[make_line(*F, {F->zero(), F->zero(), F->one()})] == 1);
  CHECK(fac.cofactor == c(F, 1));
}

TEST_CASE("linear power matches repeated multiplication") {
  const auto F = Field::build(5, 2);
  const Coords e{Element{7}, Element{13}, Element{2}};
  const TriPoly ell = TriPoly::linear(F, e);
  for (unsigned k : {0u, 1u, 4u, 5u, 12u}) CHECK(linear_power(F, e, k) == ell.pow(k));
}

TEST_CASE("symbolic identities") {
  SUBCASE("sample configurations") {
    const auto F7 = Field::build(7, 1);
    CHECK(verify_cube_identity(config(F7, 1, 2, 3)));
    const auto F11 = Field::build(11, 1);
    CHECK(verify_cube_identity(config(F11, 0, 0, 0)));
    CHECK(verify_frobenius_formula(config(F11, 4, 0, 9)));
  }
  SUBCASE("every configuration for q <= 13") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
      const auto F = Field::build(p, 1);
      std::uint64_t bad = 0;
      for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
          for (std::uint32_t d = 0; d < p; ++d) {
            const auto cfg = config(F, a, b, d);
            if (!verify_cube_identity(cfg) || !verify_frobenius_formula(cfg)) ++bad;
          }
      CHECK(bad == 0);
    }
  }
}

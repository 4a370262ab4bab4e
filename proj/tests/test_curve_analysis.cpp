#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fermat/curve_analysis.hpp"

using namespace fermat;

namespace {

CurveConfig config(const FieldPtr& F, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return {F, {Element{a}, Element{b}, Element{c}}};
}

TriPoly mono(const FieldPtr& F, std::uint32_t a, std::uint32_t b, std::uint32_t c, std::int64_t coeff = 1) {
  return TriPoly::monomial(F, Monomial{{a, b, c}}, F->from_int(coeff));
}

std::set<Coords> inflection_points(const std::vector<InflectionDatum>& data) {
  std::set<Coords> out;
  for (const auto& d : data) out.insert(d.point.x);
  return out;
}

}  // namespace

TEST_CASE("signatures") {
  const auto F7 = Field::build(7, 1);
  const auto s = eta_signature(config(F7, 1, 2, 4));
  CHECK(s.ordered == EtaTriple{1, 1, 1});
  CHECK(s.d_odd);
  CHECK(eta_signature(config(F7, 0, 0, 0)).multiset == EtaTriple{0, 0, 0});
  const auto F13 = Field::build(13, 1);
  const auto t = eta_signature(config(F13, 2, 5, 6));
  CHECK(t.multiset == EtaTriple{-1, -1, -1});
  CHECK_FALSE(t.d_odd);
  CHECK(t.multiset_string() == "{-1,-1,-1}");
}

TEST_CASE("zero-coordinate points") {
  const auto F11 = Field::build(11, 1);
  const auto all_non = zero_coord_points(config(F11, 2, 6, 7));
  CHECK(all_non.two_zero == 3);
  CHECK(all_non.one_zero == 3);
  CHECK(all_non.total == 6);
  CHECK(zero_coord_points(config(F11, 0, 0, 0)).total == 15);
  const auto F13 = Field::build(13, 1);
  CHECK(zero_coord_points(config(F13, 1, 3, 4)).total == 0);
  for (auto [p, h] : {std::pair{5u, 1u}, std::pair{7u, 1u}, std::pair{11u, 1u}, std::pair{13u, 1u}, std::pair{5u, 2u}}) {
    const auto F = Field::build(p, h);
    const std::uint32_t q = F->size();
    for (std::uint32_t v = 0; v < q * q * q; v += (h == 1 ? 1 : 7)) {
      const auto cfg = config(F, v / (q * q), v / q % q, v % q);
      const auto pts = zero_coord_points(cfg);
      const auto want = zero_coord_closed_form(eta_signature(cfg).multiset, *F);
      CHECK(pts.two_zero == want.first);
      CHECK(pts.one_zero == want.second);
    }
  }
}

TEST_CASE("brute point counts") {
  const auto F7 = Field::build(7, 1);
  CHECK(brute_count_points(build_curve_poly(config(F7, 0, 0, 0))) == 9);
  CHECK(brute_count_points(TriPoly(F7)) == 57);
  CHECK(brute_count_points(TriPoly::variable(F7, 0)) == 8);
  CHECK(brute_count_points(TriPoly::variable(F7, 0), 2) == 50);
}

TEST_CASE("predicted lines") {
  const auto F11 = Field::build(11, 1);
  const auto three = predict_lines(config(F11, 2, 6, 7));
  CHECK(three.lines.size() == 3);
  std::set<LinearForm> want{make_line(*F11, {Element{2}, Element{6}, Element{0}}),
                            make_line(*F11, {Element{2}, Element{0}, Element{7}}),
                            make_line(*F11, {Element{0}, Element{6}, Element{7}})};
  CHECK(std::set<LinearForm>(three.lines.begin(), three.lines.end()) == want);
  CHECK(predict_lines(config(F11, 1, 3, 9)).lines.empty());
  CHECK(predict_lines(config(F11, 2, 0, 0)).d_lines);

  const auto F13 = Field::build(13, 1);  // d even; eta(1) = 1, eta(2) = eta(5) = -1
  const auto two = predict_lines(config(F13, 1, 2, 5));
  std::set<LinearForm> want2{make_line(*F13, {Element{1}, Element{2}, Element{0}}),
                             make_line(*F13, {Element{1}, Element{0}, Element{5}})};
  CHECK(std::set<LinearForm>(two.lines.begin(), two.lines.end()) == want2);
}

TEST_CASE("tangents and multiplicities") {
  const auto F11 = Field::build(11, 1);
  // Conic X0^2 + X1^2 - 2 X2^2 through (1:1:1).
  const TriPoly conic = mono(F11, 2, 0, 0) + mono(F11, 0, 2, 0) + mono(F11, 0, 0, 2, -2);
  const Coords p{F11->one(), F11->one(), F11->one()};
  const LinearForm t = tangent_line(conic, p);
  CHECK(t == make_line(*F11, {Element{2}, Element{2}, F11->from_int(-4)}));
  CHECK(intersection_multiplicity(conic, t, p) == 2);
  // A secant through (1:1:1) and (1:-1:1).
  const Coords r{F11->one(), F11->from_int(-1), F11->one()};
  const LinearForm secant = make_line(*F11, {F11->one(), F11->zero(), F11->from_int(-1)});
  CHECK(dot(*F11, secant.c, r) == F11->zero());
  CHECK(intersection_multiplicity(conic, secant, p) == 1);
  CHECK_THROWS_AS(intersection_multiplicity(conic * TriPoly::linear(F11, secant.c), secant, p), GeometryError);

  const auto F7 = Field::build(7, 1);
  const TriPoly nodal = mono(F7, 0, 2, 1) - mono(F7, 3, 0, 0) - mono(F7, 2, 0, 1);
  CHECK_THROWS_AS(tangent_line(nodal, Coords{F7->zero(), F7->zero(), F7->one()}), GeometryError);
}

TEST_CASE("all squares over F_11") {
  const auto F11 = Field::build(11, 1);
  const auto r = decompose(config(F11, 1, 3, 9), AnalysisOptions{2});
  CHECK(r.issues.empty());
  CHECK(r.zero_points.total == 3);
  CHECK(r.affine.total == 30);
  CHECK(r.count_c == 33);
  CHECK(r.line_count == 0);
  CHECK(r.n == 5);
  CHECK(r.count_g == 33);
  CHECK(r.prediction.count_g == 33);
  REQUIRE(r.deficiency);
  CHECK(*r.deficiency == 3);
  CHECK(r.inflections.size() == 3);
  for (const auto& inf : r.inflections) {
    CHECK(inf.mult == 5);
    const auto& x = inf.point.x;
    CHECK(std::count(x.begin(), x.end(), F11->zero()) == 1);
  }
  CHECK(r.sv.bound == 33);
  CHECK(r.sv.attained);
  CHECK(r.frobenius_classical);
  CHECK(r.irreducible_evidence);
  CHECK(r.classicality_evidence);
  CHECK(r.singular_points.empty());
  CHECK(theorem_main_check(r).passed());
}

TEST_CASE("all non-squares over F_11") {
  const auto F11 = Field::build(11, 1);
  const auto r = decompose(config(F11, 2, 6, 7));
  CHECK(r.issues.empty());
  CHECK(r.line_count == 3);
  CHECK(r.n == 2);
  CHECK(r.count_c == 45);
  CHECK(r.line_union_points == 33);
  CHECK(r.count_g == 12);
  CHECK(r.prediction.deficiency == 0);
  CHECK_FALSE(r.deficiency);
  CHECK(r.inflections.empty());
  CHECK(r.sv.bound == 12);
  CHECK(r.sv.attained);
  CHECK(theorem_main_check(r).passed());
}

TEST_CASE("three lines exhaust the cubic over F_7") {
  const auto F7 = Field::build(7, 1);
  const auto r = decompose(config(F7, 3, 5, 6));
  CHECK(r.signature.ordered == EtaTriple{-1, -1, -1});
  CHECK(r.line_count == 3);
  CHECK(r.n == 0);
  CHECK(r.count_g == 0);
  CHECK(r.issues.empty());
  CHECK(theorem_main_check(r).passed());
}

TEST_CASE("two lines over F_13") {
  const auto F13 = Field::build(13, 1);
  const auto r = decompose(config(F13, 2, 5, 1));
  CHECK(r.signature.ordered == EtaTriple{-1, -1, 1});
  CHECK(r.issues.empty());
  CHECK(r.count_c == 59);
  CHECK(r.line_count == 2);
  CHECK(r.line_union_points == 27);
  CHECK(r.n == 4);
  CHECK(r.count_g == 32);
  REQUIRE(r.deficiency);
  CHECK(*r.deficiency == 0);
  CHECK(r.classicality_evidence);
  CHECK(r.irreducible_evidence);
}

TEST_CASE("d lines") {
  const auto F7 = Field::build(7, 1);
  const auto r = decompose(config(F7, 3, 0, 0));
  CHECK(r.is_d_lines);
  CHECK(r.line_count == 3);
  CHECK(r.issues.empty());
  const auto check = theorem_main_check(r);
  CHECK(check.skipped);
  CHECK(check.claims.empty());
}

TEST_CASE("Fermat curve over F_11") {
  const auto F11 = Field::build(11, 1);
  const auto r = decompose(config(F11, 0, 0, 0));
  CHECK(r.issues.empty());
  CHECK(r.n == 5);
  CHECK(r.count_g == 15);
  CHECK(r.inflections.size() == 15);
  for (const auto& inf : r.inflections) CHECK(inf.mult == 5);
  REQUIRE(r.deficiency);
  CHECK(*r.deficiency == 15);
  CHECK(r.fermat_type);
  // Tangent at (0:x1:1), eta(x1) = -1, is x1^4 X1 + X2.
  const Element x1{2};
  const LinearForm want = make_line(*F11, {F11->zero(), F11->pow(x1, 4), F11->one()});
  CHECK(tangent_line(r.g, Coords{F11->zero(), x1, F11->one()}) == want);
  CHECK(theorem_main_check(r).passed());
}

TEST_CASE("listed tangents for {-1,-1,1}, d odd") {
  // eta(2) = eta(6) = -1, eta(1) = 1 in F_11; at P_0 the tangent is e1 e0^4 X1 + e2 e0^4 X2.
  const auto F11 = Field::build(11, 1);
  const auto cfg = config(F11, 2, 6, 1);
  const auto r = decompose(cfg);
  CHECK(r.issues.empty());
  const Coords p0{F11->one(), F11->zero(), F11->zero()};
  const Element e04 = F11->pow(Element{2}, 4);
  const LinearForm want = make_line(*F11, {F11->zero(), F11->mul(Element{6}, e04), F11->mul(Element{1}, e04)});
  CHECK(tangent_line(r.g, p0) == want);
  CHECK(intersection_multiplicity(r.g, want, p0) == r.n);
  CHECK(inflection_points(r.inflections).count(p0));
}

TEST_CASE("Stohr-Voloch bound") {
  CHECK(stohr_voloch_check(5, 11, {}, 37).bound == 37);
  std::vector<InflectionDatum> three(3, InflectionDatum{{}, {}, 5});
  const auto sv = stohr_voloch_check(5, 11, three, 33);
  CHECK(sv.bound == 33);
  CHECK(sv.attained);
  CHECK(sv.integral);
  CHECK_FALSE(stohr_voloch_check(2, 11, {}, 11).attained);
}

TEST_CASE("Frobenius classicality") {
  const auto F25 = Field::build(5, 2);
  const TriPoly hermitian = mono(F25, 6, 0, 0) + mono(F25, 0, 6, 0) + mono(F25, 0, 0, 6);
  CHECK_FALSE(frobenius_classical_check(hermitian));
  const TriPoly twelve = mono(F25, 12, 0, 0) + mono(F25, 0, 12, 0) + mono(F25, 0, 0, 12);
  CHECK(frobenius_classical_check(twelve));
  CHECK_THROWS_AS(frobenius_classical_check(TriPoly::variable(F25, 0)), std::invalid_argument);
}

TEST_CASE("singularity probe") {
  const auto F7 = Field::build(7, 1);
  const TriPoly nodal = mono(F7, 0, 2, 1) - mono(F7, 3, 0, 0) - mono(F7, 2, 0, 1);
  const auto found = singularity_probe(nodal, 2);
  REQUIRE(found.size() == 2);
  CHECK(found[0].x == Coords{F7->zero(), F7->zero(), F7->one()});
  CHECK(found[0].level == 1);
  CHECK(found[1].level == 2);
  CHECK(singularity_probe(build_curve_poly(config(F7, 0, 0, 0)), 3).empty());
  CHECK_THROWS_AS(singularity_probe(TriPoly::constant(F7, F7->one()), 1), std::invalid_argument);
}

TEST_CASE("threshold evidence") {
  CHECK(irreducibility_evidence(5, 11, 33));
  CHECK_FALSE(irreducibility_evidence(5, 11, 32));
  CHECK(irreducibility_evidence(2, 11, 11));
  CHECK_FALSE(irreducibility_evidence(2, 11, 10));
  CHECK(classicality_evidence(5, 11, 11, 33));
  CHECK(classicality_evidence(4, 13, 13, 32));
  CHECK_THROWS_AS(classicality_evidence(0, 13, 13, 0), std::invalid_argument);
  // Fermat curve of degree 12 over F_25: 36 points, threshold 12 * 36 / 5.
  CHECK_FALSE(classicality_evidence(12, 25, 5, 36));
}

TEST_CASE("component predictions") {
  const auto F11 = Field::build(11, 1);
  const auto row1 = predict_components({1, 1, 1}, *F11);
  CHECK(row1.row == 1);
  CHECK(row1.n == 5);
  CHECK(row1.count_g == 33);
  const auto row3 = predict_components({-1, -1, -1}, *F11);
  CHECK(row3.lines == 3);
  CHECK(row3.n == 2);
  CHECK(row3.count_g == 12);
  const auto F13 = Field::build(13, 1);
  const auto even3 = predict_components({-1, -1, 1}, *F13);
  CHECK(even3.row == 3);
  CHECK(even3.lines == 2);
  CHECK(even3.n == 4);
  CHECK(even3.count_g == 32);
  CHECK(predict_components({-1, 0, 0}, *F13).d_lines);
}

TEST_CASE("invariance under permutation and square scaling") {
  const auto F13 = Field::build(13, 1);
  const std::array<std::array<int, 3>, 3> perms{{{1, 2, 0}, {2, 1, 0}, {0, 2, 1}}};
  for (const Coords& e : {Coords{Element{2}, Element{5}, Element{1}}, Coords{Element{3}, Element{0}, Element{7}},
                          Coords{Element{1}, Element{4}, Element{12}}}) {
    const auto base = decompose(CurveConfig{F13, e}, AnalysisOptions{0});
    for (const auto& perm : perms) {
      const auto r = decompose(CurveConfig{F13, {e[perm[0]], e[perm[1]], e[perm[2]]}}, AnalysisOptions{0});
      CHECK(r.count_c == base.count_c);
      CHECK(r.line_count == base.line_count);
      CHECK(r.n == base.n);
      CHECK(r.count_g == base.count_g);
    }
    const Element s{4};
    const auto r = decompose(CurveConfig{F13, {F13->mul(s, e[0]), F13->mul(s, e[1]), F13->mul(s, e[2])}},
                             AnalysisOptions{0});
    CHECK(r.count_c == base.count_c);
    CHECK(r.count_g == base.count_g);
    CHECK(r.line_count == base.line_count);
  }
}

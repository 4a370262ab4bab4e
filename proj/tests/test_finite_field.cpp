#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "fermat/finite_field.hpp"
#include "fermat/projective.hpp"

using namespace fermat;

namespace {

// Schoolbook product of digit vectors reduced by a monic modulus; independent of
// the log tables inside Field.
std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t h = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * h, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  for (std::size_t k = prod.size(); k-- > h;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= h; ++j) prod[k - h + j] = (prod[k - h + j] + (p - c) * modulus[j]) % p;
  }
  std::vector<std::uint32_t> out(h);
  for (std::size_t i = 0; i < h; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

}  // namespace

TEST_CASE("prime field parameters") {
  const auto F = Field::build(7, 1);
  CHECK(F->size() == 7);
  CHECK(F->half_order() == 3);
  CHECK(F->lambda() == Element{3});
  CHECK(F->mul(Element{3}, Element{5}) == Element{1});
  CHECK(F->inv(Element{3}) == Element{5});
  CHECK(F->eta(Element{0}) == 0);
  CHECK(F->eta(Element{1}) == 1);
  CHECK(F->eta(Element{3}) == -1);

  std::set<std::uint32_t> squares;
  for (std::uint32_t x = 1; x < 7; ++x) squares.insert(x * x % 7);
  CHECK(squares == std::set<std::uint32_t>{1, 2, 4});
  for (std::uint32_t x = 1; x < 7; ++x) CHECK((F->eta(Element{x}) == 1) == squares.count(x));

  std::vector<std::uint32_t> listed;
  for (auto e : F->elements()) listed.push_back(e.index);
  CHECK(listed == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_WITH_AS(Field::build(3, 1), "characteristic must exceed 3", FieldError);
  CHECK_THROWS_AS(Field::build(2, 1), FieldError);
  CHECK_THROWS_AS(Field::build(9, 1), FieldError);
  CHECK_THROWS_AS(Field::build(5, 0), FieldError);
  const auto F = Field::build(7, 1);
  CHECK_THROWS_AS(F->inv(F->zero()), FieldError);
  CHECK_THROWS_AS(F->from_index(7), FieldError);
}

TEST_CASE("prime field agrees with integer arithmetic") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    const auto F = Field::build(p, 1);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        CHECK(F->add(Element{a}, Element{b}).index == (a + b) % p);
        CHECK(F->mul(Element{a}, Element{b}).index == a * b % p);
        CHECK(F->sub(Element{a}, Element{b}).index == (a + p - b) % p);
      }
  }
}

TEST_CASE("extension field matches polynomial arithmetic") {
  for (auto [p, h] : {std::pair{5u, 2u}, std::pair{7u, 2u}, std::pair{5u, 3u}}) {
    const auto F = Field::build(p, h);
    const auto& m = F->spec().modulus;
    REQUIRE(m.size() == h + 1);
    CHECK(F->size() == static_cast<std::uint32_t>(std::pow(p, h)));
    CHECK(F->half_order() == (F->size() - 1) / 2);
    for (std::uint32_t a = 0; a < F->size(); a += 3)
      for (std::uint32_t b = 0; b < F->size(); b += 5) {
        const auto da = F->digits(Element{a});
        const auto db = F->digits(Element{b});
        CHECK(F->digits(F->mul(Element{a}, Element{b})) == poly_mulmod(da, db, m, p));
        std::vector<std::uint32_t> sum(h);
        for (std::size_t i = 0; i < h; ++i) sum[i] = (da[i] + db[i]) % p;
        CHECK(F->digits(F->add(Element{a}, Element{b})) == sum);
      }
    // t^(q-1) = 1
    std::vector<std::uint32_t> t(h, 0);
    t[1] = 1;
    CHECK(F->pow(F->from_digits(t), F->size() - 1) == F->one());
    CHECK(F->eta(F->lambda()) == -1);
  }
}

TEST_CASE("modulus is the first irreducible in lexicographic order") {
  const auto F = Field::build(5, 2);
  CHECK(F->size() == 25);
  CHECK(F->half_order() == 12);
  // x^2 + c1 x + c0 is irreducible over F_5 iff it has no root.
  auto irreducible = [](std::uint32_t c0, std::uint32_t c1) {
    for (std::uint32_t x = 0; x < 5; ++x)
      if ((x * x + c1 * x + c0) % 5 == 0) return false;
    return true;
  };
  std::vector<std::uint32_t> first;
  for (std::uint32_t c0 = 0; c0 < 5 && first.empty(); ++c0)
    for (std::uint32_t c1 = 0; c1 < 5 && first.empty(); ++c1)
      if (irreducible(c0, c1)) first = {c0, c1, 1};
  CHECK(F->spec().modulus == first);
  const auto all = irreducible_moduli(5, 2, 100);
  CHECK(all.size() == 10);  // (25 - 5) / 2 monic irreducible quadratics
  CHECK(all.front() == first);
}

TEST_CASE("field axioms on F_25") {
  const auto F = Field::build(5, 2);
  const auto els = F->elements();
  REQUIRE(els.size() == 25);
  CHECK(els[0] == F->zero());
  CHECK(els[1] == F->one());
  for (auto a : els) {
    CHECK(F->add(a, F->neg(a)) == F->zero());
    if (a != F->zero()) CHECK(F->mul(a, F->inv(a)) == F->one());
    for (auto b : els) {
      CHECK(F->eta(F->mul(a, b)) == F->eta(a) * F->eta(b));
      for (std::uint32_t c = 0; c < 25; c += 7)
        CHECK(F->mul(a, F->add(b, Element{c})) == F->add(F->mul(a, b), F->mul(a, Element{c})));
    }
  }
}

TEST_CASE("embedding is a ring homomorphism") {
  const auto base = Field::build(5, 1);
  const auto ext = make_extension(base, 2);
  CHECK(ext.field->size() == 25);
  const auto big = Field::build(5, 2);
  const auto cubic = make_extension(big, 2);
  CHECK(cubic.field->size() == 625);
  for (std::uint32_t a = 0; a < 25; ++a)
    for (std::uint32_t b = 0; b < 25; ++b) {
      const Element x{a}, y{b};
      CHECK(cubic.embed(big->add(x, y)) == cubic.field->add(cubic.embed(x), cubic.embed(y)));
      CHECK(cubic.embed(big->mul(x, y)) == cubic.field->mul(cubic.embed(x), cubic.embed(y)));
    }
  const auto same = make_extension(big, 1);
  CHECK(same.field == big);
  CHECK(same.embed(Element{17}) == Element{17});
}

TEST_CASE("alternate conventions") {
  const auto F = Field::build(7, 1);
  const auto G = F->with_lambda(Element{5});
  CHECK(G->lambda() == Element{5});
  CHECK_THROWS_AS(F->with_lambda(Element{2}), FieldError);
  const auto second = irreducible_moduli(5, 2, 2).at(1);
  const auto H = Field::with_modulus(5, second);
  CHECK(H->spec().modulus == second);
  CHECK(H->size() == 25);
}

TEST_CASE("projective plane enumeration") {
  const auto F = Field::build(5, 1);
  const std::uint64_t n = plane_size(5);
  CHECK(n == 31);
  std::set<Coords> seen;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Coords x = plane_point(*F, i);
    CHECK(normalize(*F, x) == x);
    CHECK(plane_index(*F, x) == i);
    seen.insert(x);
  }
  CHECK(seen.size() == n);
  const auto lines = all_lines(*F);
  CHECK(lines.size() == n);
  for (const auto& line : lines) {
    const auto pts = points_on_line(*F, line);
    CHECK(pts.size() == 6);
    for (const auto& pt : pts) CHECK(dot(*F, line.c, pt) == F->zero());
  }
  CHECK_THROWS_AS(normalize(*F, Coords{}), FieldError);
  CHECK(to_string(Coords{Element{1}, Element{0}, Element{3}}) == "(1:0:3)");
}

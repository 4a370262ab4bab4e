#include "fermat/quadratic_counts.hpp"

#include <stdexcept>
#include <string>

namespace fermat {

namespace {

std::int64_t ipow(std::int64_t b, unsigned e) {
  std::int64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
  if (num % den != 0)
    throw std::logic_error(std::string(what) + ": " + std::to_string(num) +
                           " is not divisible by " + std::to_string(den));
  return num / den;
}

// N(sum a_t Y_t^2 = alpha) over the listed coefficients; the empty sum has one
// solution exactly when alpha = 0.
std::int64_t n_solutions(const Field& F, std::vector<Element> a, Element alpha) {
  if (a.empty()) return alpha == F.zero() ? 1 : 0;
  return static_cast<std::int64_t>(count_diagonal(F, DiagonalEquation{std::move(a), alpha}));
}

// Inclusion-exclusion count of solutions of a1 Y1^2 + a2 Y2^2 + a3 Y3^2 = alpha
// with all Y nonzero, for nonzero a's: full count minus solutions with some zero.
std::int64_t three_term(const Field& F, const std::array<Element, 3>& a, Element alpha) {
  std::int64_t total = n_solutions(F, {a[0], a[1], a[2]}, alpha);
  for (std::size_t j = 0; j < 3; ++j) {
    std::vector<Element> rest;
    for (std::size_t k = 0; k < 3; ++k)
      if (k != j) rest.push_back(a[k]);
    total -= n_solutions(F, rest, alpha);
  }
  for (std::size_t j = 0; j < 3; ++j) total += n_solutions(F, {a[j]}, alpha);
  return total;
}

}  // namespace

std::uint64_t count_diagonal(const Field& F, const DiagonalEquation& eq) {
  const std::size_t s = eq.b.size();
  if (s < 1 || s > 3) throw std::invalid_argument("diagonal equation must have 1 to 3 terms");
  Element prod = F.one();
  for (auto b : eq.b) {
    if (b == F.zero()) throw std::invalid_argument("diagonal coefficient must be nonzero");
    prod = F.mul(prod, b);
  }
  const std::int64_t q = F.size();
  const unsigned su = static_cast<unsigned>(s);
  std::int64_t n = 0;
  if (s % 2 == 0) {
    const Element sign = (s / 2) % 2 == 0 ? F.one() : F.minus_one();
    const int chi = F.eta(F.mul(sign, prod));
    if (eq.beta == F.zero())
      n = ipow(q, su - 1) + chi * (ipow(q, su / 2) - ipow(q, (su - 2) / 2));
    else
      n = ipow(q, su - 1) - chi * ipow(q, (su - 2) / 2);
  } else {
    if (eq.beta == F.zero()) {
      n = ipow(q, su - 1);
    } else {
      const Element sign = ((s - 1) / 2) % 2 == 0 ? F.one() : F.minus_one();
      const int chi = F.eta(F.mul(F.mul(sign, prod), eq.beta));
      n = ipow(q, su - 1) + chi * ipow(q, (su - 1) / 2);
    }
  }
  return static_cast<std::uint64_t>(n);
}

std::uint64_t brute_count_diagonal(const Field& F, const DiagonalEquation& eq) {
  const std::size_t s = eq.b.size();
  if (s < 1 || s > 3) throw std::invalid_argument("diagonal equation must have 1 to 3 terms");
  const std::uint32_t q = F.size();
  std::vector<Element> squares(q);
  for (std::uint32_t y = 0; y < q; ++y) squares[y] = F.mul(Element{y}, Element{y});
  std::uint64_t total = 0;
  std::uint64_t combos = 1;
  for (std::size_t j = 0; j < s; ++j) combos *= q;
  for (std::uint64_t idx = 0; idx < combos; ++idx) {
    std::uint64_t rest = idx;
    Element acc = F.zero();
    for (std::size_t j = 0; j < s; ++j) {
      acc = F.add(acc, F.mul(eq.b[j], squares[rest % q]));
      rest /= q;
    }
    if (acc == eq.beta) ++total;
  }
  return total;
}

AffineCountBreakdown affine_nonzero_count(const CurveConfig& config) {
  const Field& F = *config.field;
  const auto& e = config.e;
  AffineCountBreakdown out;
  const bool z0 = e[0] == F.zero();
  const bool z1 = e[1] == F.zero();
  const bool z2 = e[2] == F.zero();
  if (z0 && z1 && z2) return out;  // every point of the Fermat curve has a zero coordinate

  const std::int64_t q = F.size();
  const Element lambda = F.lambda();
  const Element alpha = F.neg(e[0]);
  std::array<std::int64_t, 3> eight_n{};

  for (int i = 1; i <= 3; ++i) {
    std::array<Element, 3> a;
    a[0] = i == 1 ? e[1] : F.mul(lambda, e[1]);
    a[1] = i == 2 ? e[2] : F.mul(lambda, e[2]);
    a[2] = i == 3 ? F.minus_one() : F.neg(lambda);

    std::int64_t value = 0;
    if (!z0 && !z1 && !z2) {
      value = three_term(F, a, alpha);
    } else if (!z0 && (z1 != z2)) {
      // e0 e_j != 0, e_k = 0
      const std::size_t j = z1 ? 1 : 0;
      value = (q - 1) * (n_solutions(F, {a[j], a[2]}, alpha) - n_solutions(F, {a[j]}, alpha) -
                         n_solutions(F, {a[2]}, alpha));
    } else if (z0 && !z1 && !z2) {
      value = three_term(F, a, alpha) - 1;
    } else if (!z0) {
      // e1 = e2 = 0
      value = (q - 1) * (q - 1) * n_solutions(F, {a[2]}, alpha);
    } else {
      // e_j != 0, e0 = e_k = 0
      const std::size_t j = z1 ? 1 : 0;
      value = (q - 1) * (n_solutions(F, {a[j], a[2]}, alpha) - n_solutions(F, {a[j]}, alpha) -
                         n_solutions(F, {a[2]}, alpha) + 1);
    }
    eight_n[i - 1] = value;
  }
  std::array<std::int64_t, 3> n{};
  for (std::size_t i = 0; i < 3; ++i) {
    n[i] = exact_div(eight_n[i], 8, "case formula");
    if (n[i] < 0) throw std::logic_error("case formula produced a negative count");
  }
  out.n1 = static_cast<std::uint64_t>(n[0]);
  out.n2 = static_cast<std::uint64_t>(n[1]);
  out.n3 = static_cast<std::uint64_t>(n[2]);
  out.total = out.n1 + out.n2 + out.n3;
  return out;
}

std::uint64_t table2_closed_form(const EtaTriple& m, const Field& F) {
  const std::int64_t q = F.size();
  const bool odd = F.half_order() % 2 == 1;
  const auto is = [&](int a, int b, int c) { return m == EtaTriple{a, b, c}; };
  std::int64_t num = 0;
  std::int64_t den = 8;
  if (is(1, 1, 1)) {
    num = odd ? 3 * (q - 1) * (q - 3) : 3 * (q - 1) * (q - 1);
  } else if (is(-1, 1, 1)) {
    num = odd ? 3 * q * q - 6 * q + 7 : 3 * (q - 1) * (q - 3);
  } else if (is(-1, -1, 1)) {
    num = odd ? 3 * (q - 1) * (q - 3) : 3 * q * q - 6 * q + 11;
  } else if (is(-1, -1, -1)) {
    num = odd ? 3 * (q * q - 2 * q + 5) : 3 * (q - 1) * (q - 3);
  } else if (is(0, 1, 1)) {
    num = odd ? (q - 1) * (3 * q - 5) : 3 * (q - 1) * (q - 1);
  } else if (is(-1, 0, 1)) {
    num = odd ? (q - 1) * (3 * q - 5) : (q - 1) * (3 * q - 7);
  } else if (is(-1, -1, 0)) {
    num = odd ? 3 * (q - 1) * (q - 3) : (q - 1) * (3 * q - 7);
  } else if (is(0, 0, 1)) {
    num = (q - 1) * (q - 1);
    den = 4;
  } else if (is(-1, 0, 0)) {
    num = (q - 1) * (q - 1);
    den = 2;
  } else {
    throw std::invalid_argument("no affine count row for signature " + triple_string(m, '{', '}'));
  }
  return static_cast<std::uint64_t>(exact_div(num, den, "closed form"));
}

}  // namespace fermat

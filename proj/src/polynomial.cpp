#include "fermat/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fermat {

namespace {

bool term_greater(const TriPoly::Term& a, const TriPoly::Term& b) { return a.mono > b.mono; }

// Dense coefficient buffer for homogeneous polynomials of a fixed degree,
// addressed by (a1, a2).
class DenseForm {
 public:
  DenseForm(const Field& field, std::uint32_t degree)
      : field_(field), degree_(degree), coeff_((degree + 1) * (degree + 1), field.zero()) {}

  std::size_t slot(const Monomial& m) const { return m.exp[1] * (degree_ + 1) + m.exp[2]; }
  Element& at(const Monomial& m) { return coeff_[slot(m)]; }
  void add(const Monomial& m, Element c) { at(m) = field_.add(at(m), c); }

  template <typename Visit>
  void for_each_descending(Visit&& visit) {
    for (std::uint32_t s = 0; s <= degree_; ++s) {
      for (std::uint32_t a1 = s + 1; a1-- > 0;) {
        const Monomial m{{degree_ - s, a1, s - a1}};
        if (!visit(m, at(m))) return;
      }
    }
  }

  std::vector<TriPoly::Term> terms() {
    std::vector<TriPoly::Term> out;
    for_each_descending([&](const Monomial& m, Element c) {
      if (c != field_.zero()) out.push_back({m, c});
      return true;
    });
    return out;
  }

 private:
  const Field& field_;
  std::uint32_t degree_;
  std::vector<Element> coeff_;
};

void require_same_field(const TriPoly& a, const TriPoly& b) {
  const auto& fa = a.field()->spec();
  const auto& fb = b.field()->spec();
  if (a.field() != b.field() && (fa.p != fb.p || fa.modulus != fb.modulus))
    throw std::invalid_argument("polynomials over different fields");
}

std::optional<TriPoly> divide_default_order(const TriPoly& f, const TriPoly& g) {
  const Field& field = *f.field();
  if (f.is_zero()) return TriPoly(f.field());
  if (f.degree() < g.degree()) return std::nullopt;
  const auto& lead = g.leading_term();
  const Element lead_inv = field.inv(lead.coeff);
  DenseForm rem(field, f.degree());
  for (const auto& t : f.terms()) rem.at(t.mono) = t.coeff;

  std::vector<TriPoly::Term> quotient;
  bool divisible = true;
  rem.for_each_descending([&](const Monomial& m, Element c) {
    if (c == field.zero()) return true;
    Monomial shift;
    for (std::size_t i = 0; i < 3; ++i) {
      if (m.exp[i] < lead.mono.exp[i]) {
        divisible = false;
        return false;
      }
      shift.exp[i] = m.exp[i] - lead.mono.exp[i];
    }
    const Element factor = field.mul(c, lead_inv);
    quotient.push_back({shift, factor});
    for (const auto& gt : g.terms()) {
      Monomial target;
      for (std::size_t i = 0; i < 3; ++i) target.exp[i] = shift.exp[i] + gt.mono.exp[i];
      rem.at(target) = field.sub(rem.at(target), field.mul(factor, gt.coeff));
    }
    return true;
  });
  if (!divisible) return std::nullopt;
  return TriPoly::from_terms(f.field(), std::move(quotient));
}

}  // namespace

TriPoly TriPoly::from_terms(FieldPtr field, std::vector<Term> terms) {
  const Field& F = *field;
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    if (a.mono.degree() != b.mono.degree()) return a.mono.degree() > b.mono.degree();
    return a.mono > b.mono;
  });
  TriPoly out(std::move(field));
  for (const auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      out.terms_.back().coeff = F.add(out.terms_.back().coeff, t.coeff);
    } else {
      out.terms_.push_back(t);
    }
  }
  std::erase_if(out.terms_, [&](const Term& t) { return t.coeff == F.zero(); });
  if (!out.terms_.empty()) {
    const auto deg = out.terms_.front().mono.degree();
    for (const auto& t : out.terms_)
      if (t.mono.degree() != deg) throw std::invalid_argument("polynomial is not homogeneous");
  }
  return out;
}

TriPoly TriPoly::constant(FieldPtr field, Element c) {
  return monomial(std::move(field), Monomial{}, c);
}

TriPoly TriPoly::monomial(FieldPtr field, Monomial m, Element c) {
  TriPoly out(std::move(field));
  if (c != out.field_->zero()) out.terms_.push_back({m, c});
  return out;
}

TriPoly TriPoly::variable(FieldPtr field, int i) {
  Monomial m;
  m.exp[i] = 1;
  const Element one = field->one();
  return monomial(std::move(field), m, one);
}

TriPoly TriPoly::linear(FieldPtr field, const Coords& c) {
  std::vector<Term> terms;
  for (int i = 0; i < 3; ++i) {
    Monomial m;
    m.exp[i] = 1;
    terms.push_back({m, c[i]});
  }
  return from_terms(std::move(field), std::move(terms));
}

Element TriPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, Element{}}, term_greater);
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return field_->zero();
}

Element TriPoly::evaluate(const Coords& x) const {
  const Field& F = *field_;
  std::array<std::uint64_t, 3> logs{};
  std::array<bool, 3> is_zero{};
  for (std::size_t i = 0; i < 3; ++i) {
    is_zero[i] = x[i] == F.zero();
    if (!is_zero[i]) logs[i] = F.log(x[i]);
  }
  Element acc = F.zero();
  for (const auto& t : terms_) {
    std::uint64_t k = F.log(t.coeff);
    bool vanishes = false;
    for (std::size_t i = 0; i < 3; ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (is_zero[i]) {
        vanishes = true;
        break;
      }
      k += logs[i] * t.mono.exp[i];
    }
    if (!vanishes) acc = F.add(acc, F.exp(k));
  }
  return acc;
}

TriPoly TriPoly::operator-() const {
  TriPoly out(*this);
  for (auto& t : out.terms_) t.coeff = field_->neg(t.coeff);
  return out;
}

TriPoly TriPoly::scaled(Element c) const {
  if (c == field_->zero()) return TriPoly(field_);
  TriPoly out(*this);
  for (auto& t : out.terms_) t.coeff = field_->mul(t.coeff, c);
  return out;
}

TriPoly TriPoly::pow(unsigned e) const {
  TriPoly result = constant(field_, field_->one());
  TriPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TriPoly TriPoly::permuted(const std::array<int, 3>& perm) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < 3; ++i) m.exp[perm[i]] = t.mono.exp[i];
    terms.push_back({m, t.coeff});
  }
  return from_terms(field_, std::move(terms));
}

TriPoly TriPoly::embedded(const Embedding& embed) const {
  TriPoly out(embed.ext());
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.coeff = embed(t.coeff);
  return out;
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
  require_same_field(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() != b.degree())
    throw std::invalid_argument("sum of forms of different degrees");
  const Field& F = *a.field();
  TriPoly out(a.field());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->mono > ib->mono)) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->mono > ia->mono) {
      out.terms_.push_back(*ib++);
    } else {
      const Element c = F.add(ia->coeff, ib->coeff);
      if (c != F.zero()) out.terms_.push_back({ia->mono, c});
      ++ia;
      ++ib;
    }
  }
  return out;
}

TriPoly operator-(const TriPoly& a, const TriPoly& b) { return a + (-b); }

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return TriPoly(a.field());
  const Field& F = *a.field();
  DenseForm acc(F, a.degree() + b.degree());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < 3; ++i) m.exp[i] = ta.mono.exp[i] + tb.mono.exp[i];
      acc.add(m, F.mul(ta.coeff, tb.coeff));
    }
  }
  TriPoly out(a.field());
  out.terms_ = acc.terms();
  return out;
}

std::string TriPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << t.coeff.index;
    for (std::size_t i = 0; i < 3; ++i) {
      if (t.mono.exp[i] == 0) continue;
      os << "*X" << i;
      if (t.mono.exp[i] > 1) os << "^" << t.mono.exp[i];
    }
  }
  return os.str();
}

TriPoly linear_power(const FieldPtr& field, const Coords& c, unsigned e) {
  const Field& F = *field;
  // Pascal triangle mod p, rows 0..e.
  std::vector<std::vector<Element>> binom(e + 1);
  for (unsigned n = 0; n <= e; ++n) {
    binom[n].assign(n + 1, F.one());
    for (unsigned k = 1; k < n; ++k) binom[n][k] = F.add(binom[n - 1][k - 1], binom[n - 1][k]);
  }
  std::vector<TriPoly::Term> terms;
  for (unsigned a0 = 0; a0 <= e; ++a0) {
    for (unsigned a1 = 0; a0 + a1 <= e; ++a1) {
      const unsigned a2 = e - a0 - a1;
      Element coeff = F.mul(binom[e][a0], binom[e - a0][a1]);
      coeff = F.mul(coeff, F.pow(c[0], a0));
      coeff = F.mul(coeff, F.pow(c[1], a1));
      coeff = F.mul(coeff, F.pow(c[2], a2));
      terms.push_back({Monomial{{a0, a1, a2}}, coeff});
    }
  }
  return TriPoly::from_terms(field, std::move(terms));
}

TriPoly partial_derivative(const TriPoly& f, int var) {
  const Field& F = *f.field();
  std::vector<TriPoly::Term> terms;
  for (const auto& t : f.terms()) {
    const auto e = t.mono.exp[var];
    if (e == 0) continue;
    const Element c = F.scale(t.coeff, e);
    if (c == F.zero()) continue;
    Monomial m = t.mono;
    m.exp[var] -= 1;
    terms.push_back({m, c});
  }
  return TriPoly::from_terms(f.field(), std::move(terms));
}

TriPoly frobenius_form(const TriPoly& f) {
  const std::uint32_t q = f.field()->size();
  std::vector<TriPoly::Term> terms;
  for (int i = 0; i < 3; ++i) {
    const TriPoly partial = partial_derivative(f, i);
    for (const auto& t : partial.terms()) {
      Monomial m = t.mono;
      m.exp[i] += q;
      terms.push_back({m, t.coeff});
    }
  }
  return TriPoly::from_terms(f.field(), std::move(terms));
}

std::optional<TriPoly> exact_divide(const TriPoly& f, const TriPoly& g,
                                    const VariableOrder& order) {
  require_same_field(f, g);
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (order == kDefaultOrder) return divide_default_order(f, g);
  // Relabel so that the highest-priority variable becomes X0, divide, relabel back.
  std::array<int, 3> relabel{};
  std::array<int, 3> restore{};
  for (int r = 0; r < 3; ++r) {
    relabel[order[r]] = r;
    restore[r] = order[r];
  }
  auto q = divide_default_order(f.permuted(relabel), g.permuted(relabel));
  if (!q) return std::nullopt;
  return q->permuted(restore);
}

LinearFactorization extract_linear_factors(const TriPoly& f) {
  const Field& F = *f.field();
  LinearFactorization out{{}, f};
  if (f.degree() == 0) return out;

  const std::uint64_t npoints = plane_size(F.size());
  std::vector<char> vanishes(npoints);
  for (std::uint64_t i = 0; i < npoints; ++i)
    vanishes[i] = f.evaluate(plane_point(F, i)) == F.zero();

  for (const auto& line : all_lines(F)) {
    if (out.cofactor.degree() == 0) break;
    // A rational line factor forces f to vanish on all of its rational points.
    bool candidate = true;
    for (const auto& pt : points_on_line(F, line)) {
      if (!vanishes[plane_index(F, pt)]) {
        candidate = false;
        break;
      }
    }
    if (!candidate) continue;
    const TriPoly form = TriPoly::linear(f.field(), line.c);
    unsigned mult = 0;
    while (out.cofactor.degree() >= 1) {
      auto q = exact_divide(out.cofactor, form);
      if (!q) break;
      out.cofactor = std::move(*q);
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(line, mult);
  }
  return out;
}

TriPoly power_sum(const CurveConfig& config, unsigned m) {
  const auto& field = config.field;
  TriPoly out = linear_power(field, config.e, m);
  for (int i = 0; i < 3; ++i) {
    Monomial mono;
    mono.exp[i] = m;
    out = out + TriPoly::monomial(field, mono, field->one());
  }
  return out;
}

TriPoly build_curve_poly(const CurveConfig& config) {
  TriPoly c = power_sum(config, static_cast<unsigned>(config.field->half_order()));
  if (c.is_zero()) throw std::logic_error("curve polynomial vanished identically");
  return c;
}

bool verify_cube_identity(const CurveConfig& config) {
  const auto& field = config.field;
  const unsigned d = static_cast<unsigned>(field->half_order());
  const TriPoly c = build_curve_poly(config);
  std::array<TriPoly, 3> xd{TriPoly(field), TriPoly(field), TriPoly(field)};
  for (int i = 0; i < 3; ++i) {
    Monomial m;
    m.exp[i] = d;
    xd[i] = TriPoly::monomial(field, m, field->one());
  }
  const TriPoly x3d = linear_power(field, config.e, d);
  const TriPoly three = TriPoly::constant(field, field->from_int(3));

  const TriPoly lhs = power_sum(config, 3 * d);
  const TriPoly rhs = c.pow(3) - three * (xd[0] + xd[1] + xd[2]) * x3d * c -
                      three * (xd[0] + xd[1]) * (xd[0] + xd[2]) * (xd[1] + xd[2]);
  return lhs == rhs;
}

bool verify_frobenius_formula(const CurveConfig& config) {
  const auto& field = config.field;
  const unsigned d = static_cast<unsigned>(field->half_order());
  const TriPoly expected = power_sum(config, 3 * d).scaled(field->from_int(d));
  return frobenius_form(build_curve_poly(config)) == expected;
}

}  // namespace fermat

#include "fermat/curve_analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

namespace fermat {

namespace {

using UPoly = std::vector<Element>;  // univariate, constant term first, no trailing zeros

void trim(UPoly& a, const Field& F) {
  while (!a.empty() && a.back() == F.zero()) a.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b, const Field& F, std::size_t max_len) {
  if (a.empty() || b.empty()) return {};
  UPoly out(std::min(a.size() + b.size() - 1, max_len), F.zero());
  for (std::size_t i = 0; i < a.size() && i < out.size(); ++i) {
    if (a[i] == F.zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  trim(out, F);
  return out;
}

UPoly umod(UPoly a, const UPoly& b, const Field& F) {
  const Element lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const Element c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
    trim(a, F);
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b, const Field& F) {
  while (!b.empty()) {
    UPoly r = umod(std::move(a), b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Element eval_upoly(const UPoly& a, Element x, const Field& F) {
  Element acc = F.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a[i]);
  return acc;
}

std::array<TriPoly, 3> gradient_of(const TriPoly& f) {
  return {partial_derivative(f, 0), partial_derivative(f, 1), partial_derivative(f, 2)};
}

Coords eval_gradient(const std::array<TriPoly, 3>& grad, const Coords& x) {
  return {grad[0].evaluate(x), grad[1].evaluate(x), grad[2].evaluate(x)};
}

bool is_zero_vector(const Field& F, const Coords& v) {
  return v[0] == F.zero() && v[1] == F.zero() && v[2] == F.zero();
}

Coords another_point_on(const Field& F, const LinearForm& line, const Coords& point) {
  for (const auto& r : points_on_line(F, line))
    if (r != point) return r;
  throw std::logic_error("line has a single rational point");
}

Coords unit(const Field& F, std::size_t i) {
  Coords v{F.zero(), F.zero(), F.zero()};
  v[i] = F.one();
  return v;
}

// P_ij: zero at the third coordinate, (-e_j, e_i) at positions (i, j) for i < j.
Coords pair_point(const Field& F, const Coords& e, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  Coords v{F.zero(), F.zero(), F.zero()};
  v[i] = F.neg(e[j]);
  v[j] = e[i];
  return normalize(F, v);
}

std::string point_string(const Coords& v) { return to_string(v); }

}  // namespace

std::uint64_t enumeration_ceiling() {
  if (const char* env = std::getenv("FERMAT_SLICE_MAX_ENUM")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return std::uint64_t{1} << 24;
}

ZeroCoordinatePoints zero_coord_points(const CurveConfig& config) {
  const Field& F = *config.field;
  const TriPoly c = build_curve_poly(config);
  ZeroCoordinatePoints out;
  auto test = [&](Coords v, bool two_zero) {
    if (c.evaluate(v) != F.zero()) return;
    out.points.push_back(ProjectivePoint{v, 1});
    (two_zero ? out.two_zero : out.one_zero) += 1;
  };
  for (std::size_t i = 0; i < 3; ++i) test(unit(F, i), true);
  for (std::uint32_t t = 1; t < F.size(); ++t) {
    const Element x{t};
    test(Coords{F.zero(), F.one(), x}, false);
    test(Coords{F.one(), F.zero(), x}, false);
    test(Coords{F.one(), x, F.zero()}, false);
  }
  out.total = out.two_zero + out.one_zero;
  return out;
}

std::pair<std::uint64_t, std::uint64_t> zero_coord_closed_form(const EtaTriple& m,
                                                               const Field& F) {
  const std::uint64_t d = F.half_order();
  const bool odd = d % 2 == 1;
  const auto is = [&](int a, int b, int c) { return m == EtaTriple{a, b, c}; };
  if (is(1, 1, 1)) return {0, odd ? 3 : 0};
  if (is(-1, 1, 1)) return {1, odd ? 1 : 2};
  if (is(-1, -1, 1)) return {2, odd ? 1 : 2};
  if (is(-1, -1, -1)) return {3, odd ? 3 : 0};
  if (is(0, 1, 1)) return {0, odd ? 1 : 0};
  if (is(-1, 0, 1)) return {1, odd ? 0 : 1};
  if (is(-1, -1, 0)) return {2, odd ? 1 : 0};
  if (is(0, 0, 1)) return {0, d};
  if (is(-1, 0, 0)) return {1, d};
  if (is(0, 0, 0)) return {0, 3 * d};
  throw std::invalid_argument("unknown signature " + triple_string(m, '{', '}'));
}

std::uint64_t brute_count_points(const TriPoly& f, unsigned k) {
  const Extension ext = make_extension(f.field(), k);
  const Field& F = *ext.field;
  const std::uint64_t n = plane_size(F.size());
  if (n > enumeration_ceiling())
    throw ResourceLimit("enumerating " + std::to_string(n) +
                        " points exceeds the ceiling; raise FERMAT_SLICE_MAX_ENUM");
  if (f.is_zero()) return n;
  const TriPoly fk = k == 1 ? f : f.embedded(ext.embed);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < n; ++i)
    if (fk.evaluate(plane_point(F, i)) == F.zero()) ++count;
  return count;
}

std::vector<Coords> rational_points(const TriPoly& f) {
  const Field& F = *f.field();
  const std::uint64_t n = plane_size(F.size());
  std::vector<Coords> out;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Coords x = plane_point(F, i);
    if (f.evaluate(x) == F.zero()) out.push_back(x);
  }
  return out;
}

LinePrediction predict_lines(const CurveConfig& config) {
  const Field& F = *config.field;
  const auto sig = eta_signature(config);
  LinePrediction out;
  if (sig.multiset == EtaTriple{-1, 0, 0}) {
    out.d_lines = true;
    return out;
  }
  const auto& e = config.e;
  const std::array<std::array<std::size_t, 3>, 3> pairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& [i, j, k] : pairs) {
    if (F.eta(F.neg(F.mul(e[i], e[j]))) == -1 && sig.ordered[k] == -1) {
      Coords c{F.zero(), F.zero(), F.zero()};
      c[i] = e[i];
      c[j] = e[j];
      out.lines.push_back(make_line(F, c));
    }
  }
  return out;
}

LinearForm tangent_line(const TriPoly& f, const Coords& point) {
  const Field& F = *f.field();
  const Coords g = eval_gradient(gradient_of(f), point);
  if (is_zero_vector(F, g)) throw GeometryError("singular point " + point_string(point));
  return make_line(F, g);
}

unsigned intersection_multiplicity(const TriPoly& f, const LinearForm& line, const Coords& point) {
  const Field& F = *f.field();
  if (dot(F, line.c, point) != F.zero())
    throw std::invalid_argument("point " + point_string(point) + " is not on the line");
  if (f.is_zero()) throw GeometryError("line is a component");
  const Coords other = another_point_on(F, line, point);
  const std::size_t deg = f.degree();
  const std::size_t len = deg + 1;

  // powers[i][a] = (P_i + t R_i)^a, truncated past degree deg.
  std::array<std::vector<UPoly>, 3> powers;
  for (std::size_t i = 0; i < 3; ++i) {
    UPoly base{point[i], other[i]};
    trim(base, F);
    powers[i].reserve(len);
    powers[i].push_back(UPoly{F.one()});
    for (std::size_t a = 1; a <= deg; ++a) powers[i].push_back(umul(powers[i].back(), base, F, len));
  }
  UPoly restricted(len, F.zero());
  for (const auto& t : f.terms()) {
    UPoly prod = umul(powers[0][t.mono.exp[0]], powers[1][t.mono.exp[1]], F, len);
    prod = umul(prod, powers[2][t.mono.exp[2]], F, len);
    for (std::size_t j = 0; j < prod.size(); ++j)
      restricted[j] = F.add(restricted[j], F.mul(t.coeff, prod[j]));
  }
  for (std::size_t j = 0; j < restricted.size(); ++j)
    if (restricted[j] != F.zero()) return static_cast<unsigned>(j);
  throw GeometryError("line is a component");
}

std::vector<InflectionDatum> rational_inflections(const TriPoly& g) {
  const Field& F = *g.field();
  std::vector<InflectionDatum> out;
  if (g.degree() < 3) {
    // A conic meets no line with multiplicity 3, but singular points are still reported.
    if (g.degree() == 2) {
      const auto grad = gradient_of(g);
      for (const auto& p : rational_points(g))
        if (is_zero_vector(F, eval_gradient(grad, p)))
          throw GeometryError("singular point " + point_string(p));
    }
    return out;
  }
  const auto grad = gradient_of(g);
  std::array<std::array<TriPoly, 3>, 3> hess{grad, grad, grad};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) hess[i][j] = partial_derivative(grad[i], j);
  const Element half = F.inv(F.from_int(2));

  for (const auto& p : rational_points(g)) {
    const Coords gv = eval_gradient(grad, p);
    if (is_zero_vector(F, gv)) throw GeometryError("singular point " + point_string(p));
    const LinearForm tangent = make_line(F, gv);
    const Coords r = another_point_on(F, tangent, p);
    // Coefficient of t^2 in g(P + tR); the t^0 and t^1 coefficients vanish.
    Element quad = F.zero();
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        Element h = hess[i][j].evaluate(p);
        if (i == j) h = F.mul(h, half);
        quad = F.add(quad, F.mul(h, F.mul(r[i], r[j])));
      }
    }
    if (quad != F.zero()) continue;
    const unsigned mult = intersection_multiplicity(g, tangent, p);
    if (mult >= 3) out.push_back(InflectionDatum{ProjectivePoint{p, 1}, tangent, mult});
  }
  return out;
}

StohrVolochResult stohr_voloch_check(std::uint64_t n, std::uint64_t q,
                                     const std::vector<InflectionDatum>& inflections,
                                     std::uint64_t count) {
  std::int64_t excess = 0;
  for (const auto& inf : inflections) excess += static_cast<std::int64_t>(inf.mult) - 2;
  const std::int64_t num = static_cast<std::int64_t>(n * (n + q - 1)) - excess;
  StohrVolochResult out;
  out.integral = num % 2 == 0;
  out.bound = num / 2;
  out.attained = out.integral && static_cast<std::int64_t>(count) == out.bound;
  return out;
}

bool frobenius_classical_check(const TriPoly& g, const TriPoly* curve) {
  if (g.degree() < 2) throw std::invalid_argument("Frobenius classicality needs degree >= 2");
  if (exact_divide(frobenius_form(g), g)) return false;
  if (curve && exact_divide(frobenius_form(*curve), g)) return false;
  return true;
}

std::vector<ProjectivePoint> singularity_probe(const TriPoly& g, unsigned k_max) {
  if (g.degree() < 1) throw std::invalid_argument("singularity probe needs a nonconstant curve");
  std::vector<ProjectivePoint> found;
  const auto grad = gradient_of(g);
  for (unsigned k = 1; k <= k_max; ++k) {
    const Extension ext = make_extension(g.field(), k);
    const Field& F = *ext.field;
    const std::uint64_t Q = F.size();
    if (Q * Q > enumeration_ceiling())
      throw ResourceLimit("singularity probe over F_" + std::to_string(Q) +
                          " exceeds the enumeration ceiling");
    std::array<TriPoly, 4> polys{g.embedded(ext.embed), grad[0].embedded(ext.embed),
                                 grad[1].embedded(ext.embed), grad[2].embedded(ext.embed)};
    auto all_vanish = [&](const Coords& x) {
      for (const auto& p : polys)
        if (p.evaluate(x) != F.zero()) return false;
      return true;
    };
    // Restrict to x0 = x0v, x1 = x1v and find common roots in x2.
    auto scan_line = [&](Element x0v, Element x1v) {
      UPoly common;
      bool first = true;
      for (const auto& p : polys) {
        UPoly u(p.degree() + 1, F.zero());
        for (const auto& t : p.terms()) {
          const Element c = F.mul(t.coeff, F.mul(F.pow(x0v, t.mono.exp[0]), F.pow(x1v, t.mono.exp[1])));
          u[t.mono.exp[2]] = F.add(u[t.mono.exp[2]], c);
        }
        trim(u, F);
        common = first ? u : ugcd(std::move(common), u, F);
        first = false;
        if (!common.empty() && common.size() == 1) return;  // nonzero constant: no common root
      }
      for (std::uint32_t b = 0; b < Q; ++b) {
        const Element x2v{b};
        if (!common.empty() && eval_upoly(common, x2v, F) != F.zero()) continue;
        const Coords x{x0v, x1v, x2v};
        if (all_vanish(x)) found.push_back(ProjectivePoint{x, k});
      }
    };
    for (std::uint32_t a = 0; a < Q; ++a) scan_line(F.one(), Element{a});
    scan_line(F.zero(), F.one());
    const Coords last{F.zero(), F.zero(), F.one()};
    if (all_vanish(last)) found.push_back(ProjectivePoint{last, k});
  }
  return found;
}

bool irreducibility_evidence(std::uint64_t n, std::uint64_t q, std::uint64_t count) {
  const std::int64_t ni = static_cast<std::int64_t>(n);
  const std::int64_t slack = std::max(ni - 1, 2 * ni - 5);
  return 2 * static_cast<std::int64_t>(count) >=
         ni * (ni + static_cast<std::int64_t>(q) - 1) - 2 * slack;
}

bool classicality_evidence(std::uint64_t n, std::uint64_t q, std::uint64_t p,
                           std::uint64_t count) {
  if (n < 1) throw std::invalid_argument("classicality bound needs a curve of degree >= 1");
  return p * count > n * (n + q - 1);
}

ComponentPrediction predict_components(const EtaTriple& m, const Field& F) {
  const std::uint64_t q = F.size();
  const bool odd = F.half_order() % 2 == 1;
  const auto is = [&](int a, int b, int c) { return m == EtaTriple{a, b, c}; };
  ComponentPrediction out;
  std::uint64_t lines = 0;
  std::string sym;
  if (odd) {
    if (is(1, 1, 1) || is(-1, -1, 1)) {
      out.row = 1;
      sym = "3";
    } else if (is(-1, 1, 1)) {
      out.row = 2;
      lines = 1;
      sym = "0";
    } else if (is(-1, -1, -1)) {
      out.row = 3;
      lines = 3;
      sym = "0";
    } else if (is(0, 1, 1) || is(-1, 0, 1)) {
      out.row = 4;
      sym = "1";
    } else if (is(-1, -1, 0)) {
      out.row = 5;
      sym = "3";
    }
  } else {
    if (is(1, 1, 1)) {
      out.row = 1;
      sym = "0";
    } else if (is(-1, 1, 1) || is(-1, -1, -1)) {
      out.row = 2;
      sym = "3";
    } else if (is(-1, -1, 1)) {
      out.row = 3;
      lines = 2;
      sym = "0";
    } else if (is(0, 1, 1)) {
      out.row = 4;
      sym = "0";
    } else if (is(-1, 0, 1) || is(-1, -1, 0)) {
      out.row = 5;
      sym = "2";
    }
  }
  if (is(0, 0, 1)) {
    out.row = 6;
    sym = "n";
  } else if (is(-1, 0, 0)) {
    out.row = 7;
    out.d_lines = true;
    out.lines = F.half_order();
    return out;
  } else if (is(0, 0, 0)) {
    out.row = 8;
    sym = "3n";
  }
  if (out.row == 0) throw std::invalid_argument("unknown signature " + triple_string(m, '{', '}'));

  out.lines = lines;
  out.n = (q - 1 - 2 * lines) / 2;
  const std::int64_t n = static_cast<std::int64_t>(out.n);
  out.deficiency_symbol = sym;
  out.deficiency = sym == "n" ? n : sym == "3n" ? 3 * n : std::stoll(sym);
  const std::int64_t num = n * (n + static_cast<std::int64_t>(q) - 1) - out.deficiency * (n - 2);
  if (num % 2 != 0) throw std::logic_error("predicted count is not an integer");
  out.count_g = num / 2;
  return out;
}

std::vector<std::pair<Coords, LinearForm>> predicted_inflection_tangents(
    const CurveConfig& config) {
  const Field& F = *config.field;
  const auto& e = config.e;
  const auto sig = eta_signature(config);
  const auto& m = sig.multiset;
  const auto& eta = sig.ordered;
  const std::uint64_t d = F.half_order();
  const auto is = [&](int a, int b, int c) { return m == EtaTriple{a, b, c}; };
  const auto pw = [&](Element x) { return F.pow(x, d - 1); };
  const auto index_of = [&](int value, std::size_t nth = 0) {
    for (std::size_t i = 0; i < 3; ++i)
      if (eta[i] == value && nth-- == 0) return i;
    throw std::logic_error("signature lookup failed");
  };

  std::vector<std::pair<Coords, LinearForm>> out;
  auto add = [&](Coords point, std::initializer_list<std::pair<std::size_t, Element>> coeffs) {
    Coords c{F.zero(), F.zero(), F.zero()};
    for (const auto& [i, v] : coeffs) c[i] = v;
    out.emplace_back(normalize(F, point), make_line(F, c));
  };
  // Tangent at P_i: e_j e_i^{d-1} X_j + e_k e_i^{d-1} X_k.
  auto unit_tangent = [&](std::size_t i) {
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    add(unit(F, i), {{j, F.mul(e[j], pw(e[i]))}, {k, F.mul(e[k], pw(e[i]))}});
  };
  // Tangent at P_ij: e_j^{d-1} X_i + sign * e_i^{d-1} X_j.
  auto pair_tangent = [&](std::size_t i, std::size_t j, bool minus) {
    const Element second = minus ? F.neg(pw(e[i])) : pw(e[i]);
    add(pair_point(F, e, i, j), {{i, pw(e[j])}, {j, second}});
  };
  // A_k: points with X_k = 0 and a non-square free coordinate x_i, tangent x_i^{d-1} X_i + X_j.
  auto a_set = [&](std::size_t k) {
    const std::size_t i = k == 0 ? 1 : 0;
    const std::size_t j = k == 2 ? 1 : 2;
    for (const Element x : F.elements()) {
      if (F.eta(x) != -1) continue;
      Coords point{F.zero(), F.zero(), F.zero()};
      point[i] = x;
      point[j] = F.one();
      add(point, {{i, pw(x)}, {j, F.one()}});
    }
  };

  if (is(0, 0, 1)) {
    a_set(index_of(1));
  } else if (is(0, 0, 0)) {
    for (std::size_t k = 0; k < 3; ++k) a_set(k);
  } else if (sig.d_odd) {
    if (is(1, 1, 1)) {
      pair_tangent(0, 1, false);
      pair_tangent(0, 2, false);
      pair_tangent(1, 2, false);
    } else if (is(-1, -1, 1)) {
      const std::size_t i = index_of(-1, 0);
      const std::size_t j = index_of(-1, 1);
      unit_tangent(i);
      unit_tangent(j);
      pair_tangent(i, j, false);
    } else if (is(0, 1, 1)) {
      pair_tangent(index_of(1, 0), index_of(1, 1), false);
    } else if (is(-1, 0, 1)) {
      add(unit(F, index_of(-1)), {{index_of(1), F.one()}});
    } else if (is(-1, -1, 0)) {
      const std::size_t i = index_of(-1, 0);
      const std::size_t j = index_of(-1, 1);
      add(unit(F, i), {{j, F.one()}});
      add(unit(F, j), {{i, F.one()}});
      pair_tangent(i, j, false);
    }
  } else {
    if (is(-1, 1, 1)) {
      const std::size_t i = index_of(-1);
      unit_tangent(i);
      pair_tangent(i, index_of(1, 0), true);
      pair_tangent(i, index_of(1, 1), true);
    } else if (is(-1, -1, -1)) {
      for (std::size_t i = 0; i < 3; ++i) unit_tangent(i);
    } else if (is(-1, 0, 1)) {
      const std::size_t i = index_of(-1);
      const std::size_t k = index_of(1);
      add(unit(F, i), {{k, F.one()}});
      pair_tangent(i, k, true);
    } else if (is(-1, -1, 0)) {
      const std::size_t i = index_of(-1, 0);
      const std::size_t j = index_of(-1, 1);
      add(unit(F, i), {{j, F.one()}});
      add(unit(F, j), {{i, F.one()}});
    }
  }
  return out;
}

DecompositionReport decompose(const CurveConfig& config, const AnalysisOptions& options) {
  const Field& F = *config.field;
  const std::uint64_t q = F.size();
  const std::uint64_t d = F.half_order();
  DecompositionReport r;
  r.config = config;
  r.signature = eta_signature(config);
  r.curve = build_curve_poly(config);
  r.g = TriPoly(config.field);
  auto fail = [&](std::string check, std::string detail) {
    r.issues.push_back({std::move(check), std::move(detail)});
  };
  auto mismatch = [](std::uint64_t got, std::uint64_t want) {
    return "got " + std::to_string(got) + ", expected " + std::to_string(want);
  };
  const auto& m = r.signature.multiset;
  r.small_degree = q == 5;
  r.fermat_type = m == EtaTriple{0, 0, 1} || m == EtaTriple{0, 0, 0};
  r.probe_depth = options.probe_depth;

  // Rational points of C.
  r.zero_points = zero_coord_points(config);
  r.zero_points_expected = zero_coord_closed_form(m, F);
  if (r.zero_points.two_zero != r.zero_points_expected.first)
    fail("zero-coordinate points (two zeros)",
         mismatch(r.zero_points.two_zero, r.zero_points_expected.first));
  if (r.zero_points.one_zero != r.zero_points_expected.second)
    fail("zero-coordinate points (one zero)",
         mismatch(r.zero_points.one_zero, r.zero_points_expected.second));
  try {
    r.affine = affine_nonzero_count(config);
  } catch (const std::logic_error& ex) {
    fail("affine case formulas", ex.what());
  }
  r.affine_expected = m == EtaTriple{0, 0, 0} ? 0 : table2_closed_form(m, F);
  if (r.affine.total != r.affine_expected)
    fail("affine case formulas vs closed form", mismatch(r.affine.total, r.affine_expected));
  r.count_c = brute_count_points(r.curve, 1);
  if (r.count_c != r.zero_points.total + r.affine.total)
    fail("point count reconciliation", mismatch(r.count_c, r.zero_points.total + r.affine.total));

  // Linear components.
  auto fact = extract_linear_factors(r.curve);
  r.lines = fact.factors;
  r.g = fact.cofactor;
  r.line_count = r.lines.size();
  r.n = r.g.degree();
  std::uint64_t line_degree = 0;
  for (const auto& [line, mult] : r.lines) {
    line_degree += mult;
    if (mult != 1) fail("line multiplicity", to_string(line) + " has multiplicity " + std::to_string(mult));
  }
  if (r.n + line_degree != d) fail("degree bookkeeping", mismatch(r.n + line_degree, d));

  const auto predicted = predict_lines(config);
  r.is_d_lines = predicted.d_lines;
  if (predicted.d_lines) {
    if (r.line_count != d) fail("d concurrent lines", mismatch(r.line_count, d));
    TriPoly product = r.g;
    for (const auto& [line, mult] : r.lines)
      product = product * TriPoly::linear(config.field, line.c).pow(mult);
    if (!(product == r.curve)) fail("d concurrent lines", "product of lines does not reconstruct C");
  } else {
    std::vector<LinearForm> got;
    for (const auto& entry : r.lines) got.push_back(entry.first);
    std::vector<LinearForm> want = predicted.lines;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want)
      fail("linear components", "extracted " + std::to_string(got.size()) + " lines, predicted " +
                                    std::to_string(want.size()));
  }

  // Nonlinear part.
  r.count_g = r.n == 0 ? 0 : brute_count_points(r.g, 1);
  std::set<std::uint64_t> union_points;
  for (const auto& [line, mult] : r.lines) {
    for (const auto& pt : points_on_line(F, line)) {
      union_points.insert(plane_index(F, pt));
      if (r.g.evaluate(pt) == F.zero())
        fail("lines disjoint from G", "G vanishes at " + point_string(pt) + " on " + to_string(line));
    }
  }
  r.line_union_points = union_points.size();
  if (r.count_g + r.line_union_points != r.count_c)
    fail("count of G", mismatch(r.count_g, r.count_c - r.line_union_points));

  r.prediction = predict_components(m, F);
  if (r.is_d_lines) return r;

  if (r.line_count != r.prediction.lines)
    fail("predicted number of lines", mismatch(r.line_count, r.prediction.lines));
  if (r.n != r.prediction.n) fail("predicted degree of G", mismatch(r.n, r.prediction.n));
  if (static_cast<std::int64_t>(r.count_g) != r.prediction.count_g)
    fail("predicted count of G", mismatch(r.count_g, static_cast<std::uint64_t>(r.prediction.count_g)));
  if (r.n > 2) {
    const std::int64_t n = static_cast<std::int64_t>(r.n);
    const std::int64_t num = n * (n + static_cast<std::int64_t>(q) - 1) - 2 * static_cast<std::int64_t>(r.count_g);
    if (num % (n - 2) != 0)
      fail("deficiency", "n(n+q-1) - 2#G = " + std::to_string(num) + " not divisible by n-2");
    else
      r.deficiency = num / (n - 2);
  }

  if (r.n >= 2) {
    try {
      r.inflections = rational_inflections(r.g);
    } catch (const GeometryError& ex) {
      fail("smooth rational points", ex.what());
    }
    r.sv = stohr_voloch_check(r.n, q, r.inflections, r.count_g);
    if (!r.sv.integral) fail("Stohr-Voloch bound", "bound is not an integer");

    // Listed tangent lines at the zero-coordinate inflections.
    const auto listed = predicted_inflection_tangents(config);
    for (const auto& [point, tangent] : listed) {
      try {
        const LinearForm computed = tangent_line(r.g, point);
        const unsigned mult = intersection_multiplicity(r.g, computed, point);
        if (!(computed == tangent))
          fail("listed tangent", point_string(point) + ": computed " + to_string(computed) +
                                     ", listed " + to_string(tangent));
        else if (mult != r.n)
          fail("listed multiplicity", point_string(point) + " has multiplicity " + std::to_string(mult));
      } catch (const std::exception& ex) {
        fail("listed tangent", point_string(point) + ": " + ex.what());
      }
    }
    // For n >= 3 the listed points are exactly the rational inflections.
    if (!listed.empty() && r.n >= 3) {
      std::vector<Coords> want;
      std::vector<Coords> got;
      for (const auto& entry : listed) want.push_back(entry.first);
      for (const auto& inf : r.inflections) got.push_back(inf.point.x);
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      if (want != got)
        fail("listed inflection", "found " + std::to_string(got.size()) + " inflections, listed " +
                                      std::to_string(want.size()));
    }
    r.tangent_rows_checked = listed.size();

    r.frobenius_classical = frobenius_classical_check(r.g, &r.curve);
    r.irreducible_evidence = irreducibility_evidence(r.n, q, r.count_g);
    if (options.probe_depth > 0) r.singular_points = singularity_probe(r.g, options.probe_depth);
  }
  if (r.n >= 1) r.classicality_evidence = classicality_evidence(r.n, q, F.characteristic(), r.count_g);
  return r;
}

bool TheoremCheck::passed() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.passed; });
}

TheoremCheck theorem_main_check(const DecompositionReport& r) {
  TheoremCheck out;
  if (r.is_d_lines) {
    out.skipped = true;
    return out;
  }
  auto claim = [&](std::string name, bool ok, std::string detail) {
    out.claims.push_back({std::move(name), ok, std::move(detail)});
  };
  claim("line_count", r.line_count <= 3, "N = " + std::to_string(r.line_count));
  claim("count_matches_prediction", static_cast<std::int64_t>(r.count_g) == r.prediction.count_g,
        "#G = " + std::to_string(r.count_g) + ", predicted " + std::to_string(r.prediction.count_g));
  if (r.deficiency) {
    const std::int64_t i = *r.deficiency;
    const std::int64_t n = static_cast<std::int64_t>(r.n);
    const bool ok = (i >= 0 && i <= 3) || i == n || i == 3 * n;
    claim("deficiency_allowed", ok, "i = " + std::to_string(i));
  } else {
    claim("deficiency_allowed", true, "indeterminate for n = " + std::to_string(r.n));
  }
  if (r.n >= 2)
    claim("stohr_voloch_attained", r.sv.attained, "bound " + std::to_string(r.sv.bound));
  else
    claim("stohr_voloch_attained", true, "G is empty");
  claim("nonsingular", r.singular_points.empty(),
        r.probe_depth == 0 ? "probe skipped"
                           : std::to_string(r.singular_points.size()) + " singular points up to k = " +
                                 std::to_string(r.probe_depth));
  claim("frobenius_classical", r.n < 2 || r.frobenius_classical, r.n < 2 ? "G is empty" : "");
  std::string detail;
  for (const auto& issue : r.issues) detail += issue.check + ": " + issue.detail + "; ";
  claim("derivation_checks", r.issues.empty(), detail);
  return out;
}

}  // namespace fermat

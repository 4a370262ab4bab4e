#include "fermat/verify.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "fermat/curve_analysis.hpp"
#include "fermat/report.hpp"

namespace fermat {

namespace {

constexpr int kCriteria = 11;
constexpr std::size_t kMaxFailures = 5;

const std::array<const char*, kCriteria> kNames{
    "point-count reconciliation",
    "case-formula agreement",
    "diagonal quadric oracle",
    "linear components",
    "lines disjoint from G",
    "count of G and deficiency",
    "Stohr-Voloch equality and listed tangents",
    "Frobenius classicality and symbolic identities",
    "nonsingularity corroboration",
    "irreducibility and classicality thresholds",
    "convention independence",
};

// Outcome of one criterion on one configuration: nullopt when not applicable.
using Outcomes = std::array<std::optional<std::string>, kCriteria>;  // "" means pass
constexpr const char* kPass = "";

struct Tally {
  std::vector<CriterionResult> results;

  Tally() {
    for (int i = 0; i < kCriteria; ++i) results.push_back({i + 1, kNames[i], 0, 0, {}, ""});
  }
  void add(int id, bool ok, const std::string& what) {
    auto& r = results[id - 1];
    ++r.checked;
    if (ok) return;
    ++r.failed;
    if (r.failures.size() < kMaxFailures) r.failures.push_back(what);
  }
  void merge(const Outcomes& o, const std::string& where) {
    for (int i = 0; i < kCriteria; ++i)
      if (o[i]) add(i + 1, o[i]->empty(), where + ": " + *o[i]);
  }
};

std::string config_name(const Field& F, const Coords& e) {
  return "q=" + std::to_string(F.size()) + " e=" + to_string(e);
}

bool is_all_zero(const Field& F, const Coords& e) {
  return e[0] == F.zero() && e[1] == F.zero() && e[2] == F.zero();
}

std::string mismatch(std::int64_t got, std::int64_t want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

bool has_issue_prefix(const DecompositionReport& r, const std::string& prefix) {
  for (const auto& issue : r.issues)
    if (issue.check.rfind(prefix, 0) == 0) return true;
  return false;
}

std::uint64_t expected_count(const DecompositionReport& r) {
  return r.zero_points_expected.first + r.zero_points_expected.second + r.affine_expected;
}

std::string check_lines(const DecompositionReport& r) {
  const Field& F = *r.config.field;
  for (const auto& [line, mult] : r.lines)
    if (mult != 1) return to_string(line) + " has multiplicity " + std::to_string(mult);
  const auto predicted = predict_lines(r.config);
  if (predicted.d_lines) {
    std::vector<LinearForm> distinct;
    for (const auto& entry : r.lines) distinct.push_back(entry.first);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() != F.half_order()) return mismatch(distinct.size(), F.half_order()) + " lines";
    TriPoly product = r.g;
    for (const auto& [line, mult] : r.lines)
      product = product * TriPoly::linear(r.config.field, line.c).pow(mult);
    if (!(product == r.curve)) return "product of lines does not reconstruct C";
    return kPass;
  }
  std::vector<LinearForm> got;
  for (const auto& entry : r.lines) got.push_back(entry.first);
  auto want = predicted.lines;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) return "extracted " + std::to_string(got.size()) + " lines, predicted " + std::to_string(want.size());
  return kPass;
}

Outcomes evaluate(const CurveConfig& config, const AnalysisOptions& analysis, const FieldPtr& alt,
                  bool small_field) {
  const Field& F = *config.field;
  const std::int64_t q = F.size();
  Outcomes o;
  const auto r = decompose(config, analysis);
  const auto check = theorem_main_check(r);

  // 1
  if (r.count_c != expected_count(r) || r.zero_points.total != r.zero_points_expected.first + r.zero_points_expected.second)
    o[0] = "#C " + mismatch(r.count_c, expected_count(r));
  else
    o[0] = kPass;
  // 2
  if (!is_all_zero(F, config.e)) {
    if (has_issue_prefix(r, "affine case formulas") || r.affine.total != r.affine_expected)
      o[1] = mismatch(r.affine.total, r.affine_expected);
    else
      o[1] = kPass;
  }
  // 4
  o[3] = check_lines(r);
  // 5
  if (r.line_count >= 1 && r.line_count <= 3) {
    o[4] = kPass;
    for (const auto& [line, mult] : r.lines)
      for (const auto& pt : points_on_line(F, line))
        if (r.g.evaluate(pt) == F.zero()) o[4] = "G vanishes at " + to_string(pt) + " on " + to_string(line);
  }
  if (!r.is_d_lines) {
    // 6
    const auto& pred = r.prediction;
    if (static_cast<std::int64_t>(r.count_g) != pred.count_g || r.n != pred.n || r.line_count != pred.lines) {
      o[5] = "#G " + mismatch(r.count_g, pred.count_g) + ", n " + mismatch(r.n, pred.n);
    } else if (r.n > 2) {
      const std::int64_t n = r.n;
      const bool allowed = r.deficiency && ((*r.deficiency >= 0 && *r.deficiency <= 3) || *r.deficiency == n ||
                                            *r.deficiency == 3 * n);
      o[5] = allowed && *r.deficiency == pred.deficiency ? kPass : "deficiency outside the allowed set";
    } else {
      o[5] = kPass;
    }
    // 7
    if (r.n >= 2) {
      std::int64_t excess = 0;
      for (const auto& inf : r.inflections) excess += static_cast<std::int64_t>(inf.mult) - 2;
      const std::int64_t n = r.n;
      const std::int64_t want = n * (n + q - 1) - 2 * static_cast<std::int64_t>(r.count_g);
      if (excess != want)
        o[6] = "sum of (m-2) " + mismatch(excess, want);
      else if (!r.sv.attained)
        o[6] = "bound not attained";
      else if (has_issue_prefix(r, "listed") || has_issue_prefix(r, "smooth"))
        o[6] = "listed tangent data differ";
      else
        o[6] = kPass;
    }
    // 10
    if (r.n >= 1) {
      std::string detail;
      const auto& sym = pred.deficiency_symbol;
      if ((sym == "0" || sym == "1" || sym == "2" || sym == "3") &&
          !irreducibility_evidence(r.n, q, r.count_g))
        detail = "irreducibility threshold not met with #G=" + std::to_string(r.count_g);
      if (!r.classicality_evidence)
        detail += (detail.empty() ? "" : "; ") + std::string("classicality threshold not met with #G=") +
                  std::to_string(r.count_g) + ", n=" + std::to_string(r.n);
      o[9] = detail;
    }
  }
  // 8
  {
    std::string detail;
    if (r.n >= 2 && !r.frobenius_classical) detail = "G divides a Frobenius form";
    if (small_field && !verify_cube_identity(config)) detail += " cube identity fails";
    if (small_field && !verify_frobenius_formula(config)) detail += " Frobenius formula fails";
    if (r.n >= 2 || small_field) o[7] = detail;
  }
  // 9
  if (small_field && r.n >= 2 && r.probe_depth > 0)
    o[8] = r.singular_points.empty() ? kPass : to_string(r.singular_points.front().x) + " is singular";
  (void)check;

  // 11
  if (alt) {
    const Embedding iso(config.field, alt);
    const CurveConfig moved{alt, {iso(config.e[0]), iso(config.e[1]), iso(config.e[2])}};
    const auto zero = zero_coord_points(moved);
    const auto affine = affine_nonzero_count(moved);
    const auto count = brute_count_points(build_curve_poly(moved), 1);
    const auto expected_zero = zero_coord_closed_form(eta_signature(moved).multiset, *alt);
    const std::uint64_t expected_affine =
        is_all_zero(*alt, moved.e) ? 0 : table2_closed_form(eta_signature(moved).multiset, *alt);
    if (count != r.count_c)
      o[10] = "#C " + mismatch(count, r.count_c);
    else if (affine.n1 != r.affine.n1 || affine.n2 != r.affine.n2 || affine.n3 != r.affine.n3)
      o[10] = "case counts changed";
    else if (zero.total != r.zero_points.total || count != expected_zero.first + expected_zero.second + expected_affine)
      o[10] = "reconciliation fails under the alternate convention";
    else
      o[10] = kPass;
  }
  return o;
}

void diagonal_oracle(const Field& F, Tally& tally) {
  const std::uint32_t q = F.size();
  const std::array<Element, 3> betas{F.zero(), F.one(), F.lambda()};
  for (std::size_t s = 1; s <= 3; ++s) {
    std::uint64_t combos = 1;
    for (std::size_t j = 0; j < s; ++j) combos *= q - 1;
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      DiagonalEquation eq;
      std::uint64_t rest = idx;
      for (std::size_t j = 0; j < s; ++j) {
        eq.b.push_back(Element{static_cast<std::uint32_t>(1 + rest % (q - 1))});
        rest /= q - 1;
      }
      for (const auto beta : betas) {
        eq.beta = beta;
        const auto closed = count_diagonal(F, eq);
        const auto brute = brute_count_diagonal(F, eq);
        tally.add(3, closed == brute,
                  "q=" + std::to_string(q) + " s=" + std::to_string(s) + " " + mismatch(closed, brute));
      }
    }
  }
}

void spot_values(const FieldPtr& field, Tally& tally) {
  const Field& F = *field;
  struct Spot {
    std::uint32_t q;
    std::array<std::uint32_t, 3> e;
    std::uint64_t n;
    std::uint64_t count;
    std::int64_t i;
  };
  const std::array<Spot, 3> spots{{{11, {1, 3, 9}, 5, 33, 3}, {11, {2, 6, 7}, 2, 12, 0}, {13, {2, 5, 1}, 4, 32, 0}}};
  for (const auto& s : spots) {
    if (F.size() != s.q || F.degree() != 1) continue;
    const CurveConfig config{field, {Element{s.e[0]}, Element{s.e[1]}, Element{s.e[2]}}};
    const auto r = decompose(config, AnalysisOptions{0});
    const std::uint64_t brute = brute_count_points(r.g, 1);
    const std::int64_t i = r.deficiency ? *r.deficiency : r.prediction.deficiency;
    const bool ok = r.n == s.n && brute == s.count && r.count_g == s.count && i == s.i;
    tally.add(6, ok,
              "spot value " + config_name(F, config.e) + ": n=" + std::to_string(r.n) + " #G=" + std::to_string(brute) +
                  " i=" + std::to_string(i));
  }
}

void controls(Tally& tally) {
  // Hermitian curve over F_25: X0^6 + X1^6 + X2^6 is Frobenius nonclassical.
  const auto f25 = Field::build(5, 2);
  const TriPoly hermitian = TriPoly::monomial(f25, Monomial{{6, 0, 0}}, f25->one()) +
                            TriPoly::monomial(f25, Monomial{{0, 6, 0}}, f25->one()) +
                            TriPoly::monomial(f25, Monomial{{0, 0, 6}}, f25->one());
  tally.add(8, !frobenius_classical_check(hermitian), "Hermitian control reported classical");

  // Nodal cubic X1^2 X2 - X0^3 - X0^2 X2 over F_7, node at (0:0:1).
  const auto f7 = Field::build(7, 1);
  const TriPoly nodal = TriPoly::monomial(f7, Monomial{{0, 2, 1}}, f7->one()) -
                        TriPoly::monomial(f7, Monomial{{3, 0, 0}}, f7->one()) -
                        TriPoly::monomial(f7, Monomial{{2, 0, 1}}, f7->one());
  const auto sing = singularity_probe(nodal, 1);
  const ProjectivePoint node{{f7->zero(), f7->zero(), f7->one()}, 1};
  tally.add(9, sing.size() == 1 && sing.front() == node, "nodal control not detected");
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.passed(); });
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json crit = nlohmann::json::array();
  for (const auto& c : criteria)
    crit.push_back({{"id", c.id},
                    {"name", c.name},
                    {"checked", c.checked},
                    {"failed", c.failed},
                    {"failures", c.failures},
                    {"note", c.note},
                    {"passed", c.passed()}});
  return {{"fields", fields}, {"criteria", crit}, {"passed", passed()}};
}

FieldPtr alternate_convention(const Field& F) {
  FieldPtr base = F.degree() > 1
                      ? Field::with_modulus(F.characteristic(), irreducible_moduli(F.characteristic(), F.degree(), 2).at(1))
                      : Field::build(F.characteristic(), 1);
  int seen = 0;
  for (const auto x : base->elements())
    if (base->eta(x) == -1 && ++seen == 2) return base->with_lambda(x);
  throw std::logic_error("field has fewer than two non-squares");
}

VerifyReport run_verification(const VerifyOptions& options) {
  Tally tally;
  VerifyReport report;
  controls(tally);
  for (const auto& fp : options.fields) {
    const FieldPtr field = Field::build(fp.p, fp.h);
    const Field& F = *field;
    const bool small_field = F.size() <= kExhaustiveLimit;
    report.fields.push_back(F.describe());

    SweepSpec sweep;
    if (small_field) {
      sweep.mode = SweepMode::All;
    } else {
      sweep.mode = SweepMode::Sample;
      sweep.sample_size = options.samples;
      sweep.seed = options.seed;
    }
    const auto configs = sweep_configs(F, sweep);
    const AnalysisOptions analysis{small_field ? options.probe_depth : std::min(options.probe_depth, 1u)};
    const FieldPtr alt = alternate_convention(F);

    std::vector<Outcomes> outcomes(configs.size());
    std::vector<std::string> errors(configs.size());
    parallel_for(configs.size(), options.threads, [&](std::size_t i) {
      try {
        outcomes[i] = evaluate(CurveConfig{field, configs[i]}, analysis, alt, small_field);
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    });
    for (std::size_t i = 0; i < configs.size(); ++i) {
      const std::string where = config_name(F, configs[i]);
      if (!errors[i].empty()) tally.add(1, false, where + ": " + errors[i]);
      tally.merge(outcomes[i], where);
    }
    if (small_field) diagonal_oracle(F, tally);
    spot_values(field, tally);
  }
  if (options.probe_depth == 0)
    tally.results[8].note = "singularity probes skipped (probe depth 0); only the nodal control ran";
  report.criteria = std::move(tally.results);
  return report;
}

}  // namespace fermat

#include "fermat/report.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace fermat {

namespace {

using nlohmann::json;

std::string bool_str(bool b) { return b ? "true" : "false"; }

json coords_json(const Coords& v) { return json::array({v[0].index, v[1].index, v[2].index}); }

std::string deficiency_string(const DecompositionReport& r) {
  if (r.is_d_lines) return "";
  if (r.deficiency) return std::to_string(*r.deficiency);
  return "indeterminate";
}

bool row_verified(const DecompositionReport& r, const TheoremCheck& check) {
  return r.issues.empty() && (check.skipped || check.passed());
}

}  // namespace

CensusRow make_census_row(const DecompositionReport& r, const TheoremCheck& check) {
  const Field& F = *r.config.field;
  CensusRow row;
  row.p = F.characteristic();
  row.h = F.degree();
  row.q = F.size();
  row.e0 = r.config.e[0].index;
  row.e1 = r.config.e[1].index;
  row.e2 = r.config.e[2].index;
  row.signature = r.signature.ordered_string();
  row.d_parity = r.signature.d_odd ? "odd" : "even";
  row.N = r.line_count;
  row.is_d_lines = r.is_d_lines;
  row.n = r.n;
  row.count_C = r.count_c;
  row.count_G = r.count_g;
  row.predicted_count_G = r.is_d_lines ? 0 : r.prediction.count_g;
  row.deficiency_i = deficiency_string(r);
  row.sv_bound = r.sv.bound;
  row.sv_attained = r.sv.attained;
  row.frobenius_classical = r.frobenius_classical;
  row.irreducible_evidence = r.irreducible_evidence;
  row.classicality_evidence = r.classicality_evidence;
  row.singular_found = !r.singular_points.empty();
  row.verified = row_verified(r, check);
  return row;
}

std::string csv_header() {
  return "p,h,q,e0,e1,e2,signature,d_parity,N,is_d_lines,n,count_C,count_G,predicted_count_G,"
         "deficiency_i,sv_bound,sv_attained,frobenius_classical,irreducible_evidence,"
         "classicality_evidence,singular_found,verified";
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const CensusRow& r) {
  std::vector<std::string> f{std::to_string(r.p),
                             std::to_string(r.h),
                             std::to_string(r.q),
                             std::to_string(r.e0),
                             std::to_string(r.e1),
                             std::to_string(r.e2),
                             r.signature,
                             r.d_parity,
                             std::to_string(r.N),
                             bool_str(r.is_d_lines),
                             std::to_string(r.n),
                             std::to_string(r.count_C),
                             std::to_string(r.count_G),
                             std::to_string(r.predicted_count_G),
                             r.deficiency_i,
                             std::to_string(r.sv_bound),
                             bool_str(r.sv_attained),
                             bool_str(r.frobenius_classical),
                             bool_str(r.irreducible_evidence),
                             bool_str(r.classicality_evidence),
                             bool_str(r.singular_found),
                             bool_str(r.verified)};
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(f[i]);
  }
  return out;
}

json to_json(const CensusRow& r) {
  return json{{"p", r.p},
              {"h", r.h},
              {"q", r.q},
              {"e0", r.e0},
              {"e1", r.e1},
              {"e2", r.e2},
              {"signature", r.signature},
              {"d_parity", r.d_parity},
              {"N", r.N},
              {"is_d_lines", r.is_d_lines},
              {"n", r.n},
              {"count_C", r.count_C},
              {"count_G", r.count_G},
              {"predicted_count_G", r.predicted_count_G},
              {"deficiency_i", r.deficiency_i},
              {"sv_bound", r.sv_bound},
              {"sv_attained", r.sv_attained},
              {"frobenius_classical", r.frobenius_classical},
              {"irreducible_evidence", r.irreducible_evidence},
              {"classicality_evidence", r.classicality_evidence},
              {"singular_found", r.singular_found},
              {"verified", r.verified}};
}

json report_to_json(const DecompositionReport& r, const TheoremCheck& check) {
  const Field& F = *r.config.field;
  json j;
  j["field"] = {{"p", F.characteristic()},
                {"h", F.degree()},
                {"q", F.size()},
                {"d", F.half_order()},
                {"modulus", F.spec().modulus},
                {"lambda", F.lambda().index}};
  j["e"] = coords_json(r.config.e);
  j["signature"] = {{"ordered", r.signature.ordered_string()},
                    {"multiset", r.signature.multiset_string()},
                    {"d_parity", r.signature.d_odd ? "odd" : "even"}};
  j["curve"] = r.curve.to_string();
  j["zero_coordinate_points"] = {{"two_zero", r.zero_points.two_zero},
                                 {"one_zero", r.zero_points.one_zero},
                                 {"total", r.zero_points.total},
                                 {"expected_two_zero", r.zero_points_expected.first},
                                 {"expected_one_zero", r.zero_points_expected.second}};
  j["affine"] = {{"n1", r.affine.n1},
                 {"n2", r.affine.n2},
                 {"n3", r.affine.n3},
                 {"total", r.affine.total},
                 {"expected", r.affine_expected}};
  j["M"] = r.zero_points.total;
  j["count_C"] = r.count_c;

  json lines = json::array();
  for (const auto& [line, mult] : r.lines)
    lines.push_back({{"line", to_string(line)}, {"coefficients", coords_json(line.c)}, {"multiplicity", mult}});
  j["lines"] = lines;
  j["N"] = r.line_count;
  j["is_d_lines"] = r.is_d_lines;
  j["line_union_points"] = r.line_union_points;

  j["G"] = r.g.to_string();
  j["n"] = r.n;
  j["count_G"] = r.count_g;
  if (r.is_d_lines) {
    j["prediction"] = nullptr;
  } else {
    j["prediction"] = {{"row", r.prediction.row},
                       {"N", r.prediction.lines},
                       {"n", r.prediction.n},
                       {"deficiency_symbol", r.prediction.deficiency_symbol},
                       {"deficiency", r.prediction.deficiency},
                       {"count_G", r.prediction.count_g}};
  }
  if (r.deficiency)
    j["deficiency_i"] = *r.deficiency;
  else
    j["deficiency_i"] = r.is_d_lines ? "not applicable" : "indeterminate";

  json infl = json::array();
  for (const auto& inf : r.inflections)
    infl.push_back({{"point", to_string(inf.point.x)}, {"tangent", to_string(inf.tangent)}, {"multiplicity", inf.mult}});
  j["inflections"] = infl;
  j["tangent_rows_checked"] = r.tangent_rows_checked;
  j["sv_bound"] = r.sv.bound;
  j["sv_integral"] = r.sv.integral;
  j["sv_attained"] = r.sv.attained;
  j["frobenius_classical"] = r.frobenius_classical;
  j["irreducible_evidence"] = r.irreducible_evidence;
  j["fermat_type"] = r.fermat_type;
  j["classicality_evidence"] = r.classicality_evidence;
  j["probe_depth"] = r.probe_depth;
  j["singularity_probe"] = r.probe_depth == 0 ? "skipped" : "run";
  json sing = json::array();
  for (const auto& pt : r.singular_points) sing.push_back({{"point", to_string(pt.x)}, {"level", pt.level}});
  j["singular_points"] = sing;
  j["small_degree"] = r.small_degree;
  json issues = json::array();
  for (const auto& issue : r.issues) issues.push_back({{"check", issue.check}, {"detail", issue.detail}});
  j["issues"] = issues;

  json claims = json::array();
  for (const auto& c : check.claims)
    claims.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["theorem"] = {{"skipped", check.skipped}, {"claims", claims}};
  j["verified"] = row_verified(r, check);
  return j;
}

std::string render_text(const DecompositionReport& r, const TheoremCheck& check) {
  const Field& F = *r.config.field;
  std::ostringstream os;
  os << F.describe() << ", e = " << to_string(r.config.e) << "\n";
  os << "signature " << r.signature.ordered_string() << ", multiset " << r.signature.multiset_string()
     << ", d " << (r.signature.d_odd ? "odd" : "even") << "\n";
  if (r.small_degree) os << "small-degree degenerate case (q = 5)\n";
  os << "#C = " << r.count_c << " (zero-coordinate " << r.zero_points.total << ", affine " << r.affine.total
     << ")\n";
  if (r.is_d_lines) os << "C is a union of " << r.line_count << " concurrent lines\n";
  os << "lines N = " << r.line_count << "\n";
  for (const auto& [line, mult] : r.lines) {
    os << "  " << to_string(line);
    if (mult != 1) os << " (multiplicity " << mult << ")";
    os << "\n";
  }
  os << "G: degree n = " << r.n << ", #G = " << r.count_g;
  if (!r.is_d_lines) os << ", predicted " << r.prediction.count_g;
  os << "\n";
  if (!r.is_d_lines) os << "deficiency i = " << deficiency_string(r) << "\n";
  if (r.n >= 2) {
    os << "rational inflections: " << r.inflections.size() << "\n";
    for (const auto& inf : r.inflections)
      os << "  " << to_string(inf.point.x) << " tangent " << to_string(inf.tangent) << " multiplicity "
         << inf.mult << "\n";
    os << "Stohr-Voloch bound " << r.sv.bound << (r.sv.attained ? " attained" : " not attained") << "\n";
    os << "Frobenius classical: " << bool_str(r.frobenius_classical) << "\n";
    os << "irreducibility evidence: " << bool_str(r.irreducible_evidence);
    if (r.fermat_type) os << " (G is a diagonal Fermat curve)";
    os << "\n";
  }
  if (r.n >= 1) os << "classicality evidence: " << bool_str(r.classicality_evidence) << "\n";
  if (r.probe_depth == 0)
    os << "singularity probe skipped\n";
  else
    os << "singularity probe up to k = " << r.probe_depth << ": " << r.singular_points.size()
       << " singular points\n";
  for (const auto& issue : r.issues) os << "ISSUE " << issue.check << ": " << issue.detail << "\n";
  if (check.skipped) {
    os << "main theorem: skipped (d lines)\n";
  } else {
    for (const auto& c : check.claims) {
      os << (c.passed ? "  pass " : "  FAIL ") << c.name;
      if (!c.detail.empty()) os << " (" << c.detail << ")";
      os << "\n";
    }
  }
  os << (row_verified(r, check) ? "verified" : "NOT verified") << "\n";
  return os.str();
}

std::vector<Coords> sweep_configs(const Field& F, const SweepSpec& spec) {
  const std::uint64_t q = F.size();
  const std::uint64_t total = q * q * q;
  auto decode = [&](std::uint64_t v) {
    return Coords{Element{static_cast<std::uint32_t>(v / (q * q))}, Element{static_cast<std::uint32_t>(v / q % q)},
                  Element{static_cast<std::uint32_t>(v % q)}};
  };
  std::vector<Coords> out;
  switch (spec.mode) {
    case SweepMode::All:
      if (q > kExhaustiveLimit && !spec.allow_large)
        throw ResourceLimit("exhaustive sweep over q = " + std::to_string(q) + " (" + std::to_string(total) +
                            " configurations) needs --allow-large; consider --sweep sample N");
      out.reserve(total);
      for (std::uint64_t v = 0; v < total; ++v) out.push_back(decode(v));
      break;
    case SweepMode::Signatures:
      for (const auto& m : signature_rows()) out.push_back(representative(F, m));
      std::sort(out.begin(), out.end());
      break;
    case SweepMode::Sample: {
      std::mt19937_64 engine(spec.seed);
      std::vector<std::uint64_t> draws(spec.sample_size);
      for (auto& v : draws) v = engine() % total;
      std::sort(draws.begin(), draws.end());
      for (auto v : draws) out.push_back(decode(v));
      break;
    }
  }
  return out;
}

Coords representative(const Field& F, const EtaTriple& m) {
  const std::uint32_t q = F.size();
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c) {
        EtaTriple t{F.eta(Element{a}), F.eta(Element{b}), F.eta(Element{c})};
        std::sort(t.begin(), t.end());
        if (t == m) return Coords{Element{a}, Element{b}, Element{c}};
      }
  throw std::invalid_argument("no configuration has signature " + triple_string(m, '{', '}'));
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

CensusResult run_census(const FieldPtr& field, const std::vector<Coords>& configs,
                        const CensusOptions& options) {
  CensusResult result;
  const std::size_t chunk = options.fail_fast ? std::max<std::size_t>(1, options.threads) * 4 : configs.size();
  for (std::size_t start = 0; start < configs.size(); start += chunk) {
    const std::size_t len = std::min(chunk, configs.size() - start);
    std::vector<CensusRow> rows(len);
    parallel_for(len, options.threads, [&](std::size_t i) {
      const auto report = decompose(CurveConfig{field, configs[start + i]}, options.analysis);
      rows[i] = make_census_row(report, theorem_main_check(report));
    });
    for (auto& row : rows) {
      (row.verified ? result.passed : result.failed) += 1;
      result.rows.push_back(std::move(row));
      if (options.fail_fast && !result.rows.back().verified) {
        result.stopped_early = result.rows.size() < configs.size();
        return result;
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Tables

namespace {

struct TableWriter {
  std::vector<std::vector<std::string>> cells;
  bool ok = true;

  void row(std::vector<std::string> r) { cells.push_back(std::move(r)); }
  void check(std::vector<std::string>& r, bool good) {
    r.push_back(good ? "ok" : "MISMATCH");
    ok = ok && good;
  }
  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& r : cells)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], r[i].size());
      }
    std::ostringstream os;
    for (const auto& r : cells) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        os << std::left << std::setw(static_cast<int>(width[i])) << r[i];
        if (i + 1 < r.size()) os << "  ";
      }
      os << "\n";
    }
    return os.str();
  }
};

std::string sig(const EtaTriple& m) { return triple_string(m, '{', '}'); }

std::string with_symbol(const std::string& symbol, std::uint64_t value) {
  if (symbol == std::to_string(value)) return symbol;
  return symbol + "=" + std::to_string(value);
}

// Number of points (1:x1:x2), x1 x2 != 0, on C.
std::uint64_t brute_affine(const CurveConfig& config) {
  const Field& F = *config.field;
  const TriPoly c = build_curve_poly(config);
  std::uint64_t count = 0;
  for (std::uint32_t a = 1; a < F.size(); ++a)
    for (std::uint32_t b = 1; b < F.size(); ++b)
      if (c.evaluate(Coords{F.one(), Element{a}, Element{b}}) == F.zero()) ++count;
  return count;
}

std::string affine_formula(const EtaTriple& m, bool odd) {
  const auto is = [&](int a, int b, int c) { return m == EtaTriple{a, b, c}; };
  if (is(1, 1, 1)) return odd ? "3(q-1)(q-3)/8" : "3(q-1)^2/8";
  if (is(-1, 1, 1)) return odd ? "(3q^2-6q+7)/8" : "3(q-1)(q-3)/8";
  if (is(-1, -1, 1)) return odd ? "3(q-1)(q-3)/8" : "(3q^2-6q+11)/8";
  if (is(-1, -1, -1)) return odd ? "3(q^2-2q+5)/8" : "3(q-1)(q-3)/8";
  if (is(0, 1, 1)) return odd ? "(q-1)(3q-5)/8" : "3(q-1)^2/8";
  if (is(-1, 0, 1)) return odd ? "(q-1)(3q-5)/8" : "(q-1)(3q-7)/8";
  if (is(-1, -1, 0)) return odd ? "3(q-1)(q-3)/8" : "(q-1)(3q-7)/8";
  if (is(0, 0, 1)) return "(q-1)^2/4";
  return "(q-1)^2/2";
}

RenderedTable table_zero_coordinates(const FieldPtr& field) {
  const Field& F = *field;
  TableWriter t;
  t.row({"signature", "i=1", "i=2", "M", "brute i=1", "brute i=2", "check"});
  for (const auto& m : signature_rows()) {
    const auto [two, one] = zero_coord_closed_form(m, F);
    const auto pts = zero_coord_points(CurveConfig{field, representative(F, m)});
    std::string one_cell = std::to_string(one);
    if (m == EtaTriple{0, 0, 0}) one_cell = with_symbol("3d", one);
    else if (m == EtaTriple{0, 0, 1} || m == EtaTriple{-1, 0, 0}) one_cell = with_symbol("d", one);
    std::vector<std::string> r{sig(m), one_cell, std::to_string(two), std::to_string(one + two),
                               std::to_string(pts.one_zero), std::to_string(pts.two_zero)};
    t.check(r, pts.one_zero == one && pts.two_zero == two);
    t.row(std::move(r));
  }
  return {t.str(), t.ok};
}

RenderedTable table_affine(const FieldPtr& field) {
  const Field& F = *field;
  const bool odd = F.half_order() % 2 == 1;
  TableWriter t;
  t.row({"signature", "formula", "value", "case formulas", "brute", "check"});
  for (const auto& m : signature_rows()) {
    if (m == EtaTriple{0, 0, 0}) continue;
    const CurveConfig config{field, representative(F, m)};
    const std::uint64_t value = table2_closed_form(m, F);
    const std::uint64_t cases = affine_nonzero_count(config).total;
    const std::uint64_t brute = brute_affine(config);
    std::vector<std::string> r{sig(m), affine_formula(m, odd), std::to_string(value), std::to_string(cases),
                               std::to_string(brute)};
    t.check(r, value == cases && value == brute);
    t.row(std::move(r));
  }
  return {t.str(), t.ok};
}

RenderedTable table_lines(const FieldPtr& field) {
  const Field& F = *field;
  TableWriter t;
  t.row({"signature", "representative", "predicted N", "extracted N", "lines", "check"});
  for (const auto& m : signature_rows()) {
    const CurveConfig config{field, representative(F, m)};
    const auto pred = predict_components(m, F);
    const auto fact = extract_linear_factors(build_curve_poly(config));
    const auto lp = predict_lines(config);
    std::vector<LinearForm> got;
    bool simple = true;
    std::string names;
    for (const auto& [line, mult] : fact.factors) {
      got.push_back(line);
      simple = simple && mult == 1;
      if (!names.empty()) names += "; ";
      names += to_string(line);
    }
    bool good = simple && got.size() == pred.lines;
    if (!lp.d_lines) {
      auto want = lp.lines;
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      good = good && want == got;
    }
    std::vector<std::string> r{sig(m), to_string(config.e),
                               pred.d_lines ? with_symbol("d", pred.lines) : std::to_string(pred.lines),
                               std::to_string(fact.factors.size()), names.empty() ? "-" : names};
    t.check(r, good);
    t.row(std::move(r));
  }
  return {t.str(), t.ok};
}

RenderedTable table_components(const FieldPtr& field) {
  const Field& F = *field;
  std::map<int, std::vector<EtaTriple>> rows;
  for (const auto& m : signature_rows()) rows[predict_components(m, F).row].push_back(m);
  TableWriter t;
  t.row({"row", "signatures", "N", "n", "i", "#G formula", "#G", "brute #G", "check"});
  for (const auto& [row, sigs] : rows) {
    const auto pred = predict_components(sigs.front(), F);
    std::string names;
    for (const auto& m : sigs) names += (names.empty() ? "" : " ") + sig(m);
    if (pred.d_lines) {
      std::vector<std::string> r{"(" + std::to_string(row) + ")", names, with_symbol("d", pred.lines), "0", "-",
                                 "d lines", "-", "-"};
      const auto fact = extract_linear_factors(build_curve_poly(CurveConfig{field, representative(F, sigs.front())}));
      t.check(r, fact.factors.size() == pred.lines && fact.cofactor.degree() == 0);
      t.row(std::move(r));
      continue;
    }
    bool good = true;
    std::string brute;
    for (const auto& m : sigs) {
      const auto report = decompose(CurveConfig{field, representative(F, m)}, AnalysisOptions{0});
      good = good && static_cast<std::int64_t>(report.count_g) == pred.count_g && report.n == pred.n &&
             report.line_count == pred.lines;
      brute += (brute.empty() ? "" : " ") + std::to_string(report.count_g);
    }
    const std::string n_symbol = "(q-" + std::to_string(1 + 2 * pred.lines) + ")/2";
    std::vector<std::string> r{"(" + std::to_string(row) + ")",
                               names,
                               std::to_string(pred.lines),
                               with_symbol(n_symbol, pred.n),
                               pred.deficiency_symbol,
                               pred.deficiency == 0 ? "n(n+q-1)/2" : "n(n+q-1)/2 - i(n-2)/2",
                               std::to_string(pred.count_g),
                               brute};
    t.check(r, good);
    t.row(std::move(r));
  }
  return {t.str(), t.ok};
}

}  // namespace

RenderedTable render_table(const FieldPtr& field, int table) {
  const bool odd = field->half_order() % 2 == 1;
  std::string title;
  RenderedTable out;
  switch (table) {
    case 1:
      title = "Rational points of C with i zero coordinates";
      out = table_zero_coordinates(field);
      break;
    case 2:
      title = "Rational points (1:x1:x2) of C with x1 x2 != 0";
      out = table_affine(field);
      break;
    case 3:
      title = "Linear components of C";
      out = table_lines(field);
      break;
    case 4:
    case 5:
      if ((table == 4) != odd)
        throw std::invalid_argument("table " + std::to_string(table) + " needs d " + (table == 4 ? "odd" : "even") +
                                    ", but d = " + std::to_string(field->half_order()));
      title = std::string("Curve G, d ") + (odd ? "odd" : "even");
      out = table_components(field);
      break;
    default:
      throw std::invalid_argument("table must be 1, 2, 3, 4 or 5");
  }
  out.text = title + " over " + field->describe() + "\n" + out.text;
  return out;
}

}  // namespace fermat

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "fermat/report.hpp"
#include "fermat/verify.hpp"

using namespace fermat;

namespace {

DecompositionReport analyze(const FieldPtr& F, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                            unsigned depth = 1) {
  return decompose(CurveConfig{F, {Element{a}, Element{b}, Element{c}}}, AnalysisOptions{depth});
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out(1);
  for (char ch : line) {
    if (ch == ',')
      out.emplace_back();
    else
      out.back() += ch;
  }
  return out;
}

}  // namespace

TEST_CASE("JSON report") {
  const auto F11 = Field::build(11, 1);
  const auto r = analyze(F11, 1, 3, 9);
  const auto j = report_to_json(r, theorem_main_check(r));
  CHECK(j["n"] == 5);
  CHECK(j["count_G"] == 33);
  CHECK(j["sv_attained"] == true);
  CHECK(j["deficiency_i"] == 3);
  CHECK(j["verified"] == true);
  CHECK(j["singularity_probe"] == "run");

  const std::string text = j.dump(2);
  CHECK(nlohmann::json::parse(text).dump(2) == text);
  std::function<void(const nlohmann::json&)> no_floats = [&](const nlohmann::json& v) {
    CHECK_FALSE(v.is_number_float());
    if (v.is_structured())
      for (const auto& child : v) no_floats(child);
  };
  no_floats(j);

  const auto skipped = analyze(F11, 1, 3, 9, 0);
  CHECK(report_to_json(skipped, theorem_main_check(skipped))["singularity_probe"] == "skipped");
}

TEST_CASE("d-lines report") {
  const auto F7 = Field::build(7, 1);
  const auto r = analyze(F7, 3, 0, 0);
  const auto check = theorem_main_check(r);
  const auto j = report_to_json(r, check);
  CHECK(j["is_d_lines"] == true);
  CHECK(j["theorem"]["skipped"] == true);
  REQUIRE(j["lines"].size() == 3);
  std::set<std::string> names;
  for (const auto& line : j["lines"]) names.insert(line["line"].get<std::string>());
  CHECK(names == std::set<std::string>{"1*X1 + 1*X2", "1*X1 + 2*X2", "1*X1 + 4*X2"});
  CHECK(render_text(r, check).find("union of 3 concurrent lines") != std::string::npos);
}

TEST_CASE("CSV rows") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("(1,2,3)") == "\"(1,2,3)\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");

  const auto header = split(csv_header());
  CHECK(header.size() == 22);
  CHECK(header.front() == "p");
  CHECK(header.back() == "verified");

  const auto F11 = Field::build(11, 1);
  const auto r = analyze(F11, 1, 3, 9);
  const auto row = make_census_row(r, theorem_main_check(r));
  CHECK(row.signature == "(1,1,1)");
  CHECK(row.deficiency_i == "3");
  CHECK(row.verified);
  const std::string line = csv_line(row);
  CHECK(line.rfind("11,1,11,1,3,9,\"(1,1,1)\",odd,0,false,5,33,33,33,3,33,true", 0) == 0);
}

TEST_CASE("sweeps") {
  const auto F13 = Field::build(13, 1);
  const auto sigs = sweep_configs(*F13, {SweepMode::Signatures});
  CHECK(sigs.size() == 10);
  std::set<EtaTriple> covered;
  for (const auto& e : sigs) covered.insert(eta_signature(CurveConfig{F13, e}).multiset);
  CHECK(covered.size() == 10);
  CHECK(std::is_sorted(sigs.begin(), sigs.end()));

  CHECK(sweep_configs(*F13, {SweepMode::All}).size() == 2197);
  const auto F17 = Field::build(17, 1);
  CHECK_THROWS_AS(sweep_configs(*F17, {SweepMode::All}), ResourceLimit);
  CHECK(sweep_configs(*F17, {SweepMode::All, 0, 0, true}).size() == 4913);

  const auto F25 = Field::build(5, 2);
  const SweepSpec sample{SweepMode::Sample, 200, 42};
  const auto a = sweep_configs(*F25, sample);
  CHECK(a.size() == 200);
  CHECK(a == sweep_configs(*F25, sample));
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(a != sweep_configs(*F25, {SweepMode::Sample, 200, 43}));
}

TEST_CASE("census ordering is independent of thread count") {
  const auto F7 = Field::build(7, 1);
  const auto configs = sweep_configs(*F7, {SweepMode::All});
  CensusOptions one;
  CensusOptions four;
  four.threads = 4;
  const auto x = run_census(F7, configs, one);
  const auto y = run_census(F7, configs, four);
  REQUIRE(x.rows.size() == 343);
  CHECK(x.failed == 0);
  CHECK(x.passed == 343);
  for (std::size_t i = 0; i < x.rows.size(); ++i) CHECK(csv_line(x.rows[i]) == csv_line(y.rows[i]));
}

TEST_CASE("tables") {
  const auto F11 = Field::build(11, 1);
  const auto t2 = render_table(F11, 2);
  CHECK(t2.ok);
  CHECK(t2.text.find("{1,1,1}") != std::string::npos);
  CHECK(t2.text.find(" 30 ") != std::string::npos);
  CHECK(t2.text.find(" 39 ") != std::string::npos);
  CHECK_THROWS_AS(render_table(F11, 5), std::invalid_argument);
  CHECK_THROWS_AS(render_table(F11, 6), std::invalid_argument);

  const auto F7 = Field::build(7, 1);
  const auto t1 = render_table(F7, 1);
  CHECK(t1.ok);
  CHECK(t1.text.find("3d=9") != std::string::npos);

  const auto F13 = Field::build(13, 1);
  const auto t5 = render_table(F13, 5);
  CHECK(t5.ok);
  bool found = false;
  std::istringstream lines(t5.text);
  for (std::string line; std::getline(lines, line);)
    if (line.rfind("(3)", 0) == 0) {
      found = line.find("(q-5)/2=4") != std::string::npos && line.find(" 32 ") != std::string::npos;
    }
  CHECK(found);
  for (int t : {1, 2, 3}) CHECK(render_table(F13, t).ok);
  CHECK(render_table(F11, 4).ok);
}

TEST_CASE("alternate conventions") {
  const auto F25 = Field::build(5, 2);
  const auto alt = alternate_convention(*F25);
  CHECK(alt->size() == 25);
  CHECK(alt->spec().modulus != F25->spec().modulus);
  CHECK(alt->eta(alt->lambda()) == -1);
  const auto F7 = Field::build(7, 1);
  CHECK(alternate_convention(*F7)->lambda() == Element{5});
}

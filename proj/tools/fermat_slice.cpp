// fermat_slice: analyze plane sections of the Fermat surface over F_q.
//
// Exit status: 0 when every verification passes, 1 on a verification
// failure, 2 on invalid input or a refused resource request.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermat/curve_analysis.hpp"
#include "fermat/report.hpp"
#include "fermat/verify.hpp"

namespace {

using namespace fermat;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct FieldArgs {
  std::uint32_t p = 0;
  unsigned h = 1;
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--p", args.p, "Characteristic, a prime > 3")->required();
  cmd->add_option("--h", args.h, "Extension degree, q = p^h")->default_val(1);
}

unsigned default_depth(const Field& F) { return F.size() <= kExhaustiveLimit ? 3 : 1; }

// Writes to `path`, or stdout when empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane sections of the Fermat surface over finite fields"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  FieldArgs field_args;
  std::uint64_t e0 = 0, e1 = 0, e2 = 0;
  std::string format = "text";
  std::optional<unsigned> probe_depth;

  auto* analyze = app.add_subcommand("analyze", "Decompose one curve and verify every derived quantity");
  add_field_options(analyze, field_args);
  analyze->add_option("--e0", e0, "Coefficient index in [0, q)")->required();
  analyze->add_option("--e1", e1, "Coefficient index in [0, q)")->required();
  analyze->add_option("--e2", e2, "Coefficient index in [0, q)")->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->default_val("text");
  analyze->add_option("--probe-depth", probe_depth,
                      "Singularity probe over F_{q^k} for k up to K; 0 skips it (default 3 for q <= 13, else 1)");

  std::vector<std::string> sweep{"all"};
  std::uint64_t seed = 0;
  std::string out_path;
  bool fail_fast = false;
  bool allow_large = false;
  unsigned threads = 1;
  auto* census = app.add_subcommand(
      "census",
      "Analyze many configurations and write one CSV row each.\n"
      "Sampling draws std::mt19937_64(seed)() % q^3 N times with replacement and\n"
      "decodes v as e0 = v / q^2, e1 = (v / q) % q, e2 = v % q; rows are sorted.");
  add_field_options(census, field_args);
  census->add_option("--sweep", sweep, "all | signatures | sample N")->expected(1, 2);
  census->add_option("--seed", seed, "Seed for --sweep sample")->default_val(0);
  census->add_option("--out", out_path, "CSV output file (default stdout)");
  census->add_flag("--fail-fast", fail_fast, "Stop at the first unverified row");
  census->add_flag("--allow-large", allow_large, "Permit --sweep all for q > 13");
  census->add_option("--threads", threads, "Worker threads")->default_val(1);
  census->add_option("--probe-depth", probe_depth, "Singularity probe depth (default 1)");

  int table = 0;
  auto* tables = app.add_subcommand("tables", "Instantiate a classification table and check it by brute force");
  add_field_options(tables, field_args);
  tables->add_option("--table", table, "1, 2, 3, 4 (d odd) or 5 (d even)")->required();

  std::vector<std::uint32_t> p_list{5, 7, 11, 13};
  std::vector<unsigned> h_list;
  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Run the acceptance battery over a list of fields");
  verify->add_option("--p-list", p_list, "Characteristics; q <= 13 is swept exhaustively")->delimiter(',');
  verify->add_option("--h-list", h_list, "Extension degrees, paired with --p-list (one value applies to all)")->delimiter(',');
  verify->add_option("--probe-depth", verify_options.probe_depth)->default_val(3);
  verify->add_option("--samples", verify_options.samples, "Sampled configurations for q > 13")->default_val(200);
  verify->add_option("--seed", verify_options.seed)->default_val(42);
  verify->add_option("--threads", verify_options.threads)->default_val(1);
  verify->add_option("--out", out_path, "JSON report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*analyze) {
      const FieldPtr field = Field::build(field_args.p, field_args.h);
      const CurveConfig config{field, {field->from_index(e0), field->from_index(e1), field->from_index(e2)}};
      const auto report = decompose(config, AnalysisOptions{probe_depth.value_or(default_depth(*field))});
      const auto check = theorem_main_check(report);
      if (format == "json")
        std::cout << report_to_json(report, check).dump(2) << "\n";
      else
        std::cout << render_text(report, check);
      return report.issues.empty() && (check.skipped || check.passed()) ? kPass : kFail;
    }

    if (*census) {
      const FieldPtr field = Field::build(field_args.p, field_args.h);
      SweepSpec spec;
      spec.allow_large = allow_large;
      spec.seed = seed;
      if (sweep[0] == "all" && sweep.size() == 1) {
        spec.mode = SweepMode::All;
      } else if (sweep[0] == "signatures" && sweep.size() == 1) {
        spec.mode = SweepMode::Signatures;
      } else if (sweep[0] == "sample" && sweep.size() == 2) {
        spec.mode = SweepMode::Sample;
        spec.sample_size = std::stoull(sweep[1]);
      } else {
        throw std::invalid_argument("--sweep takes all, signatures or sample N");
      }
      CensusOptions options;
      options.analysis.probe_depth = probe_depth.value_or(1);
      options.threads = threads;
      options.fail_fast = fail_fast;
      const auto result = run_census(field, sweep_configs(*field, spec), options);
      std::string csv = csv_header() + "\n";
      for (const auto& row : result.rows) csv += csv_line(row) + "\n";
      emit(out_path, csv);
      std::cerr << field->describe() << ": " << result.rows.size() << " rows, " << result.passed << " verified, "
                << result.failed << " failed" << (result.stopped_early ? " (stopped early)" : "") << "\n";
      return result.failed == 0 ? kPass : kFail;
    }

    if (*tables) {
      const auto rendered = render_table(Field::build(field_args.p, field_args.h), table);
      std::cout << rendered.text;
      return rendered.ok ? kPass : kFail;
    }

    if (*verify) {
      if (h_list.empty()) h_list.assign(1, 1);
      if (h_list.size() != 1 && h_list.size() != p_list.size())
        throw std::invalid_argument("--h-list needs one value or as many as --p-list");
      verify_options.fields.clear();
      for (std::size_t i = 0; i < p_list.size(); ++i)
        verify_options.fields.push_back({p_list[i], h_list.size() == 1 ? h_list[0] : h_list[i]});
      const auto report = run_verification(verify_options);
      for (const auto& c : report.criteria) {
        std::cout << (c.passed() ? "PASS " : "FAIL ") << c.id << " " << c.name << " (" << c.checked << " checks, "
                  << c.failed << " failed)\n";
        for (const auto& f : c.failures) std::cout << "    " << f << "\n";
        if (!c.note.empty()) std::cout << "    " << c.note << "\n";
      }
      if (!out_path.empty()) emit(out_path, report.to_json().dump(2) + "\n");
      return report.passed() ? kPass : kFail;
    }
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

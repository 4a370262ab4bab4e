#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermat/curve_analysis.hpp"

namespace fermat {

/// One line of a census: a configuration, its decomposition and the verdict.
struct CensusRow {
  std::uint32_t p = 0;
  unsigned h = 0;
  std::uint64_t q = 0;
  std::uint32_t e0 = 0, e1 = 0, e2 = 0;
  std::string signature;  // ordered, e.g. "(-1,1,1)"
  std::string d_parity;   // "odd" or "even"
  std::uint64_t N = 0;
  bool is_d_lines = false;
  std::uint64_t n = 0;
  std::uint64_t count_C = 0;
  std::uint64_t count_G = 0;
  std::int64_t predicted_count_G = 0;
  std::string deficiency_i;  // integer, "indeterminate" or "" for d-lines rows
  std::int64_t sv_bound = 0;
  bool sv_attained = false;
  bool frobenius_classical = false;
  bool irreducible_evidence = false;
  bool classicality_evidence = false;
  bool singular_found = false;
  bool verified = false;
};

CensusRow make_census_row(const DecompositionReport& report, const TheoremCheck& check);

std::string csv_header();
std::string csv_line(const CensusRow& row);
/// RFC 4180 quoting: fields containing a comma, quote or newline are quoted.
std::string csv_escape(const std::string& field);

nlohmann::json to_json(const CensusRow& row);
nlohmann::json report_to_json(const DecompositionReport& report, const TheoremCheck& check);
std::string render_text(const DecompositionReport& report, const TheoremCheck& check);

// ---------------------------------------------------------------------------
// Census

enum class SweepMode { All, Signatures, Sample };

struct SweepSpec {
  SweepMode mode = SweepMode::All;
  std::uint64_t sample_size = 0;
  std::uint64_t seed = 0;
  bool allow_large = false;  // lift the q <= 13 gate on SweepMode::All
};

inline constexpr std::uint64_t kExhaustiveLimit = 13;

/// Configurations in lexicographic (e0, e1, e2) index order.
///  - All: every triple in F_q^3. Refused with ResourceLimit for q > 13 unless allowed.
///  - Signatures: the first triple of each of the ten eta multisets.
///  - Sample: sample_size draws of std::mt19937_64(seed)() % q^3, with replacement, sorted.
std::vector<Coords> sweep_configs(const Field& field, const SweepSpec& spec);

/// First configuration, in index order, whose eta multiset is `multiset`.
Coords representative(const Field& field, const EtaTriple& multiset);

struct CensusOptions {
  AnalysisOptions analysis;
  unsigned threads = 1;
  bool fail_fast = false;
};

struct CensusResult {
  std::vector<CensusRow> rows;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  bool stopped_early = false;
};

/// Analyzes every configuration; rows come back in input order whatever the
/// thread count. With fail_fast, stops after the first unverified row in order.
CensusResult run_census(const FieldPtr& field, const std::vector<Coords>& configs,
                        const CensusOptions& options);

/// Runs `fn(i)` for i in [0, count) over `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

// ---------------------------------------------------------------------------
// Tables

struct RenderedTable {
  std::string text;
  bool ok = true;
};

/// Instantiates table 1..5 at the field's q and checks every cell against a
/// brute-forced representative. Tables 4 and 5 are for d odd and d even; asking
/// for the other parity throws std::invalid_argument.
RenderedTable render_table(const FieldPtr& field, int table);

}  // namespace fermat

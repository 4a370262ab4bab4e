#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fermat/finite_field.hpp"

namespace fermat {

struct FieldParams {
  std::uint32_t p = 0;
  unsigned h = 1;
};

struct VerifyOptions {
  std::vector<FieldParams> fields{{5, 1}, {7, 1}, {11, 1}, {13, 1}};
  unsigned probe_depth = 3;       // used for q <= 13; larger fields probe at most k = 1
  std::uint64_t samples = 200;    // configurations per field with q > 13
  std::uint64_t seed = 42;
  unsigned threads = 1;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> failures;  // first few, for diagnosis
  std::string note;

  bool passed() const { return failed == 0 && checked > 0; }
};

struct VerifyReport {
  std::vector<CriterionResult> criteria;
  std::vector<std::string> fields;  // descriptions of the fields tested

  bool passed() const;
  nlohmann::json to_json() const;
};

/// Runs the eleven acceptance criteria over the listed fields. Fields with
/// q <= 13 are swept exhaustively; larger ones are sampled with the seed.
VerifyReport run_verification(const VerifyOptions& options);

/// Independent field with the same q: the second non-square as lambda and, for
/// h > 1, the second irreducible modulus.
FieldPtr alternate_convention(const Field& field);

}  // namespace fermat

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fermat/config.hpp"
#include "fermat/polynomial.hpp"
#include "fermat/projective.hpp"
#include "fermat/quadratic_counts.hpp"

namespace fermat {

/// Raised when an enumeration would exceed the configured ceiling.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for geometric preconditions that fail at a specific point or line.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum number of projective points an enumeration may visit. Defaults to
/// 2^24; the FERMAT_SLICE_MAX_ENUM environment variable overrides it.
std::uint64_t enumeration_ceiling();

// ---------------------------------------------------------------------------
// Rational points

struct ZeroCoordinatePoints {
  std::vector<ProjectivePoint> points;
  std::uint64_t two_zero = 0;  // among (1:0:0), (0:1:0), (0:0:1)
  std::uint64_t one_zero = 0;  // exactly one zero coordinate
  std::uint64_t total = 0;     // M
};

/// Enumerates the 3q points of P^2(F_q) with a zero coordinate that lie on C.
ZeroCoordinatePoints zero_coord_points(const CurveConfig& config);

/// Closed-form (two_zero, one_zero) counts by eta multiset and parity of d.
std::pair<std::uint64_t, std::uint64_t> zero_coord_closed_form(const EtaTriple& multiset,
                                                               const Field& field);

/// Number of points of P^2(F_{q^k}) on f = 0, by enumeration.
std::uint64_t brute_count_points(const TriPoly& f, unsigned k = 1);

/// The F_q-rational zeros of f, normalized, in plane enumeration order.
std::vector<Coords> rational_points(const TriPoly& f);

// ---------------------------------------------------------------------------
// Linear components

struct LinePrediction {
  bool d_lines = false;
  std::vector<LinearForm> lines;
};

/// Lines e_i X_i + e_j X_j with eta(-e_i e_j) = eta(e_k) = -1, or the marker for
/// the {-1,0,0} signature where C splits into d concurrent lines.
LinePrediction predict_lines(const CurveConfig& config);

// ---------------------------------------------------------------------------
// Local geometry

/// sum_i (df/dX_i)(P) X_i = 0. Throws GeometryError at a singular point.
LinearForm tangent_line(const TriPoly& f, const Coords& point);

/// Order of vanishing at P of f restricted to the line. Throws GeometryError
/// when the line is a component of f.
unsigned intersection_multiplicity(const TriPoly& f, const LinearForm& line, const Coords& point);

struct InflectionDatum {
  ProjectivePoint point;
  LinearForm tangent;
  unsigned mult = 0;
};

/// Rational points of G whose tangent meets G with multiplicity at least 3.
std::vector<InflectionDatum> rational_inflections(const TriPoly& g);

struct StohrVolochResult {
  std::int64_t bound = 0;
  bool integral = true;
  bool attained = false;
};

/// bound = (n(n + q - 1) - sum(m_i - 2)) / 2 over the given inflections.
StohrVolochResult stohr_voloch_check(std::uint64_t n, std::uint64_t q,
                                     const std::vector<InflectionDatum>& inflections,
                                     std::uint64_t count);

/// True iff G does not divide Phi_q(G). When `curve` is given, additionally
/// requires that G does not divide Phi_q(curve). Requires deg G >= 2.
bool frobenius_classical_check(const TriPoly& g, const TriPoly* curve = nullptr);

/// Points of P^2(F_{q^k}), 1 <= k <= k_max, where G and its three partials vanish.
std::vector<ProjectivePoint> singularity_probe(const TriPoly& g, unsigned k_max);

/// count >= n(n+q-1)/2 - max(n-1, 2n-5).
bool irreducibility_evidence(std::uint64_t n, std::uint64_t q, std::uint64_t count);

/// count > n(n+q-1)/p. Requires n >= 1.
bool classicality_evidence(std::uint64_t n, std::uint64_t q, std::uint64_t p,
                           std::uint64_t count);

// ---------------------------------------------------------------------------
// Classification of the nonlinear part

/// Predicted shape of C for an eta multiset: number of lines, degree of G and the
/// deficiency i in #G = n(n+q-1)/2 - i(n-2)/2.
struct ComponentPrediction {
  int row = 0;           // row of the odd/even classification table
  bool d_lines = false;  // {-1,0,0}: no prediction
  std::uint64_t lines = 0;
  std::uint64_t n = 0;
  std::int64_t deficiency = 0;
  std::string deficiency_symbol;  // "0", "1", "2", "3", "n" or "3n"
  std::int64_t count_g = 0;
};

ComponentPrediction predict_components(const EtaTriple& multiset, const Field& field);

/// Tangent line at each zero-coordinate rational point listed for the rows where
/// #G < n(n+q-1)/2; empty for the other rows.
std::vector<std::pair<Coords, LinearForm>> predicted_inflection_tangents(const CurveConfig& config);

// ---------------------------------------------------------------------------
// Full pipeline

struct AnalysisOptions {
  unsigned probe_depth = 1;  // 0 disables the extension-field singularity probe
};

struct VerificationIssue {
  std::string check;
  std::string detail;
};

struct DecompositionReport {
  CurveConfig config;
  EtaSignature signature;
  TriPoly curve{FieldPtr{}};

  ZeroCoordinatePoints zero_points;
  std::pair<std::uint64_t, std::uint64_t> zero_points_expected;
  AffineCountBreakdown affine;
  std::uint64_t affine_expected = 0;
  std::uint64_t count_c = 0;

  std::vector<std::pair<LinearForm, unsigned>> lines;
  std::uint64_t line_count = 0;  // N
  bool is_d_lines = false;
  std::uint64_t line_union_points = 0;

  TriPoly g{FieldPtr{}};
  std::uint64_t n = 0;
  std::uint64_t count_g = 0;
  ComponentPrediction prediction;
  std::optional<std::int64_t> deficiency;  // set when n > 2

  std::vector<InflectionDatum> inflections;
  std::uint64_t tangent_rows_checked = 0;
  StohrVolochResult sv;
  bool frobenius_classical = false;
  bool irreducible_evidence = false;
  bool classicality_evidence = false;
  // G is a diagonal Fermat curve ({0,0,1} and {0,0,0}), hence absolutely irreducible.
  bool fermat_type = false;
  unsigned probe_depth = 0;
  std::vector<ProjectivePoint> singular_points;
  bool small_degree = false;  // q = 5

  std::vector<VerificationIssue> issues;
};

DecompositionReport decompose(const CurveConfig& config, const AnalysisOptions& options = {});

struct ClaimResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TheoremCheck {
  bool skipped = false;  // d-lines configuration
  std::vector<ClaimResult> claims;

  bool passed() const;
};

TheoremCheck theorem_main_check(const DecompositionReport& report);

}  // namespace fermat

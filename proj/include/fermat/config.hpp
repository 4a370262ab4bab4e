#pragma once

#include <array>
#include <string>

#include "fermat/finite_field.hpp"
#include "fermat/projective.hpp"

namespace fermat {

/// The plane section X0^d + X1^d + X2^d + (e0 X0 + e1 X1 + e2 X2)^d = 0 over F_q.
struct CurveConfig {
  FieldPtr field;
  Coords e;
};

using EtaTriple = std::array<int, 3>;

/// Quadratic characters of (e0, e1, e2), as given and as a sorted multiset.
struct EtaSignature {
  EtaTriple ordered{};
  EtaTriple multiset{};  // ascending, e.g. {-1, 1, 1}
  bool d_odd = true;

  std::string ordered_string() const;
  std::string multiset_string() const;
};

EtaSignature eta_signature(const CurveConfig& config);

std::string triple_string(const EtaTriple& t, char open, char close);

/// The ten multisets {eta(e0), eta(e1), eta(e2)} in the row order used by the
/// zero-coordinate point count table.
const std::array<EtaTriple, 10>& signature_rows();

}  // namespace fermat

#pragma once

#include <cstdint>
#include <vector>

#include "fermat/config.hpp"
#include "fermat/finite_field.hpp"

namespace fermat {

/// b_1 Y_1^2 + ... + b_s Y_s^2 = beta with every b_j nonzero.
struct DiagonalEquation {
  std::vector<Element> b;
  Element beta;
};

/// Number of solutions in F_q^s, from the closed form keyed on the parity of s
/// and whether beta vanishes. Supports s in {1, 2, 3}.
std::uint64_t count_diagonal(const Field& field, const DiagonalEquation& eq);

/// Exhaustive count over F_q^s.
std::uint64_t brute_count_diagonal(const Field& field, const DiagonalEquation& eq);

/// Points (1:x1:x2) of the curve with x1 x2 != 0, split by which of
/// x1, x2, e0 + e1 x1 + e2 x2 are non-squares.
struct AffineCountBreakdown {
  std::uint64_t n1 = 0;
  std::uint64_t n2 = 0;
  std::uint64_t n3 = 0;
  std::uint64_t total = 0;
};

/// Case formulas over diagonal quadric counts; uses the field's lambda.
AffineCountBreakdown affine_nonzero_count(const CurveConfig& config);

/// Closed form for n1 + n2 + n3 by eta multiset and parity of d.
/// Throws std::invalid_argument for {0,0,0} or a malformed multiset.
std::uint64_t table2_closed_form(const EtaTriple& multiset, const Field& field);

}  // namespace fermat

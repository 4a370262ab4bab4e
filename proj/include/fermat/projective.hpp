#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fermat/finite_field.hpp"

namespace fermat {

using Coords = std::array<Element, 3>;

/// A point of P^2 over F_{q^k}; the first nonzero coordinate is 1.
struct ProjectivePoint {
  Coords x;
  unsigned level = 1;

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// c0*X0 + c1*X1 + c2*X2 = 0, scaled so the first nonzero coefficient is 1.
struct LinearForm {
  Coords c;

  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
};

/// Scales a nonzero triple so its first nonzero entry is 1. Throws FieldError on (0,0,0).
Coords normalize(const Field& field, Coords v);

ProjectivePoint make_point(const Field& field, Coords v, unsigned level = 1);
LinearForm make_line(const Field& field, Coords c);

/// Number of points of P^2(F_Q): Q^2 + Q + 1.
std::uint64_t plane_size(std::uint64_t field_size);

/// Normalized representative of the index-th point in the order
/// (1:a:b) for a, b in index order, then (0:1:b), then (0:0:1).
Coords plane_point(const Field& field, std::uint64_t index);
std::uint64_t plane_index(const Field& field, const Coords& normalized);

/// All q^2 + q + 1 normalized lines, in the same order as plane_point.
std::vector<LinearForm> all_lines(const Field& field);

/// The q + 1 rational points of a line, normalized.
std::vector<Coords> points_on_line(const Field& field, const LinearForm& line);

Element dot(const Field& field, const Coords& a, const Coords& b);

std::string to_string(const Coords& v);
std::string to_string(const LinearForm& line);

}  // namespace fermat

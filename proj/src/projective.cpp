#include "fermat/projective.hpp"

#include <sstream>

namespace fermat {

Coords normalize(const Field& field, Coords v) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (v[i] == field.zero()) continue;
    const Element s = field.inv(v[i]);
    for (auto& c : v) c = field.mul(c, s);
    return v;
  }
  throw FieldError("(0:0:0) is not a projective point");
}

ProjectivePoint make_point(const Field& field, Coords v, unsigned level) {
  return ProjectivePoint{normalize(field, v), level};
}

LinearForm make_line(const Field& field, Coords c) { return LinearForm{normalize(field, c)}; }

std::uint64_t plane_size(std::uint64_t field_size) {
  return field_size * field_size + field_size + 1;
}

Coords plane_point(const Field& field, std::uint64_t index) {
  const std::uint64_t q = field.size();
  if (index < q * q)
    return Coords{field.one(), Element{static_cast<std::uint32_t>(index / q)},
                  Element{static_cast<std::uint32_t>(index % q)}};
  index -= q * q;
  if (index < q) return Coords{field.zero(), field.one(), Element{static_cast<std::uint32_t>(index)}};
  return Coords{field.zero(), field.zero(), field.one()};
}

std::uint64_t plane_index(const Field& field, const Coords& v) {
  const std::uint64_t q = field.size();
  if (v[0] == field.one()) return std::uint64_t{v[1].index} * q + v[2].index;
  if (v[1] == field.one()) return q * q + v[2].index;
  return q * q + q;
}

std::vector<LinearForm> all_lines(const Field& field) {
  const std::uint64_t n = plane_size(field.size());
  std::vector<LinearForm> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(LinearForm{plane_point(field, i)});
  return out;
}

std::vector<Coords> points_on_line(const Field& field, const LinearForm& line) {
  const auto& c = line.c;
  // Two independent solutions of c . x = 0.
  Coords a;
  Coords b;
  if (c[0] != field.zero()) {
    const Element s = field.neg(field.inv(c[0]));
    a = Coords{field.mul(s, c[1]), field.one(), field.zero()};
    b = Coords{field.mul(s, c[2]), field.zero(), field.one()};
  } else if (c[1] != field.zero()) {
    const Element s = field.neg(field.inv(c[1]));
    a = Coords{field.one(), field.zero(), field.zero()};
    b = Coords{field.zero(), field.mul(s, c[2]), field.one()};
  } else {
    a = Coords{field.one(), field.zero(), field.zero()};
    b = Coords{field.zero(), field.one(), field.zero()};
  }
  std::vector<Coords> out;
  out.reserve(field.size() + 1);
  out.push_back(normalize(field, b));
  for (const Element t : field.elements()) {
    Coords v;
    for (std::size_t i = 0; i < 3; ++i) v[i] = field.add(a[i], field.mul(t, b[i]));
    out.push_back(normalize(field, v));
  }
  return out;
}

Element dot(const Field& field, const Coords& a, const Coords& b) {
  Element acc = field.zero();
  for (std::size_t i = 0; i < 3; ++i) acc = field.add(acc, field.mul(a[i], b[i]));
  return acc;
}

std::string to_string(const Coords& v) {
  std::ostringstream os;
  os << "(" << v[0].index << ":" << v[1].index << ":" << v[2].index << ")";
  return os.str();
}

std::string to_string(const LinearForm& line) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < 3; ++i) {
    if (line.c[i].index == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << line.c[i].index << "*X" << i;
  }
  return os.str();
}

}  // namespace fermat

#include "fermat/config.hpp"

#include <algorithm>
#include <sstream>

namespace fermat {

std::string triple_string(const EtaTriple& t, char open, char close) {
  std::ostringstream os;
  os << open << t[0] << "," << t[1] << "," << t[2] << close;
  return os.str();
}

std::string EtaSignature::ordered_string() const { return triple_string(ordered, '(', ')'); }
std::string EtaSignature::multiset_string() const { return triple_string(multiset, '{', '}'); }

EtaSignature eta_signature(const CurveConfig& config) {
  const Field& F = *config.field;
  EtaSignature sig;
  for (std::size_t i = 0; i < 3; ++i) sig.ordered[i] = F.eta(config.e[i]);
  sig.multiset = sig.ordered;
  std::sort(sig.multiset.begin(), sig.multiset.end());
  sig.d_odd = F.half_order() % 2 == 1;
  return sig;
}

const std::array<EtaTriple, 10>& signature_rows() {
  static const std::array<EtaTriple, 10> rows{{
      {1, 1, 1},
      {-1, 1, 1},
      {-1, -1, 1},
      {-1, -1, -1},
      {0, 1, 1},
      {-1, 0, 1},
      {-1, -1, 0},
      {0, 0, 1},
      {-1, 0, 0},
      {0, 0, 0},
  }};
  return rows;
}

}  // namespace fermat

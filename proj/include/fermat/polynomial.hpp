#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fermat/config.hpp"
#include "fermat/finite_field.hpp"
#include "fermat/projective.hpp"

namespace fermat {

/// Exponent triple (a0, a1, a2) of X0^a0 X1^a1 X2^a2. Among monomials of equal
/// degree the defaulted ordering is graded lex with X0 > X1 > X2.
struct Monomial {
  std::array<std::uint32_t, 3> exp{};

  std::uint32_t degree() const { return exp[0] + exp[1] + exp[2]; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse homogeneous polynomial in X0, X1, X2 over a finite field.
///
/// Terms are kept sorted in decreasing graded-lex order with nonzero coefficients,
/// so terms().front() is the leading term. All terms share one total degree.
class TriPoly {
 public:
  struct Term {
    Monomial mono;
    Element coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit TriPoly(FieldPtr field) : field_(std::move(field)) {}

  /// Combines duplicate monomials and drops zeros; throws if the result is not homogeneous.
  static TriPoly from_terms(FieldPtr field, std::vector<Term> terms);
  static TriPoly constant(FieldPtr field, Element c);
  static TriPoly monomial(FieldPtr field, Monomial m, Element c);
  static TriPoly variable(FieldPtr field, int i);
  static TriPoly linear(FieldPtr field, const Coords& c);

  const FieldPtr& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; 0 for constants and for the zero polynomial.
  std::uint32_t degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
  std::size_t size() const { return terms_.size(); }
  Element coefficient(const Monomial& m) const;
  const Term& leading_term() const { return terms_.front(); }

  Element evaluate(const Coords& x) const;

  TriPoly operator-() const;
  TriPoly scaled(Element c) const;
  TriPoly pow(unsigned e) const;
  /// Relabels variables: exponent of X_i moves to X_{perm[i]}.
  TriPoly permuted(const std::array<int, 3>& perm) const;
  /// Image of this polynomial under a field embedding.
  TriPoly embedded(const Embedding& embed) const;

  friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator-(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

  /// Text form, e.g. `1*X0^3 + 6*X1^2*X2`; coefficients are element indices.
  std::string to_string() const;

 private:
  FieldPtr field_;
  std::vector<Term> terms_;
};

/// (c0*X0 + c1*X1 + c2*X2)^e, expanded with multinomial coefficients mod p.
TriPoly linear_power(const FieldPtr& field, const Coords& c, unsigned e);

TriPoly partial_derivative(const TriPoly& f, int var);

/// Phi_q(f) = X0^q f_X0 + X1^q f_X1 + X2^q f_X2 with q the size of f's field.
TriPoly frobenius_form(const TriPoly& f);

/// Variable priority used for division; the identity means X0 > X1 > X2.
using VariableOrder = std::array<int, 3>;
inline constexpr VariableOrder kDefaultOrder{0, 1, 2};

/// Quotient h with f = g*h, or nullopt when g does not divide f.
std::optional<TriPoly> exact_divide(const TriPoly& f, const TriPoly& g,
                                    const VariableOrder& order = kDefaultOrder);

struct LinearFactorization {
  std::vector<std::pair<LinearForm, unsigned>> factors;
  TriPoly cofactor;
};

/// Divides out every F_q-rational line factor of f, repeatedly.
LinearFactorization extract_linear_factors(const TriPoly& f);

/// X0^d + X1^d + X2^d + (e0 X0 + e1 X1 + e2 X2)^d, fully expanded.
TriPoly build_curve_poly(const CurveConfig& config);

/// X0^m + X1^m + X2^m + (e0 X0 + e1 X1 + e2 X2)^m.
TriPoly power_sum(const CurveConfig& config, unsigned m);

/// Expands both sides of
///   sum X_i^{3d} = C^3 - 3 (X0^d + X1^d + X2^d) X3^d C
///                  - 3 (X0^d + X1^d)(X0^d + X2^d)(X1^d + X2^d)
/// with X3 = e0 X0 + e1 X1 + e2 X2, and compares them term by term.
bool verify_cube_identity(const CurveConfig& config);

/// Checks Phi_q(C) = d * (X0^{3d} + X1^{3d} + X2^{3d} + X3^{3d}) symbolically.
bool verify_frobenius_formula(const CurveConfig& config);

}  // namespace fermat

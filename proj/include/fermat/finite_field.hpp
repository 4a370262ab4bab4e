#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermat {

/// Raised for invalid field parameters and undefined operations (e.g. 1/0).
class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of F_{p^m}, identified by its index sum(digit_i * p^i), where the
/// digits are the coefficients of its residue polynomial, constant term first.
struct Element {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

/// Parameters of F_q, q = p^h = 2d + 1.
struct FieldSpec {
  std::uint32_t p = 0;
  unsigned h = 0;
  std::vector<std::uint32_t> modulus;  // monic, h + 1 coefficients, low degree first
  std::uint64_t q = 0;
  std::uint64_t d = 0;
  Element lambda;  // a fixed non-square
};

/// All monic irreducible polynomials of degree m over Z_p in lexicographic order
/// (coefficients compared low degree first), up to `limit` of them.
std::vector<std::vector<std::uint32_t>> irreducible_moduli(std::uint32_t p, unsigned m,
                                                           std::size_t limit);

bool is_prime(std::uint64_t n);

/// Exact arithmetic in F_{p^m}. Immutable after construction; share through
/// std::shared_ptr<const Field>.
///
/// Multiplication uses discrete log tables over a primitive element, addition in
/// proper extensions uses a Zech-style table of 1 + g^k.
class Field {
 public:
  /// Canonical F_{p^h}: smallest monic irreducible modulus, smallest non-square as lambda.
  static std::shared_ptr<const Field> build(std::uint32_t p, unsigned h);
  static std::shared_ptr<const Field> with_modulus(std::uint32_t p,
                                                   std::vector<std::uint32_t> modulus);
  /// Same field with a different choice of the fixed non-square.
  std::shared_ptr<const Field> with_lambda(Element lambda) const;

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.p; }
  unsigned degree() const { return spec_.h; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(spec_.q); }
  std::uint64_t half_order() const { return spec_.d; }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  Element minus_one() const { return neg(one()); }
  Element lambda() const { return spec_.lambda; }

  /// Checked conversion of an index in [0, q).
  Element from_index(std::uint64_t index) const;
  /// Image of an integer in the prime subfield.
  Element from_int(std::int64_t value) const;
  Element from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(Element a) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  /// Square-and-multiply; pow(0, 0) = 1.
  Element pow(Element a, std::uint64_t e) const;
  /// a * n for an integer n (n reduced mod p).
  Element scale(Element a, std::int64_t n) const { return mul(a, from_int(n)); }

  /// Quadratic character: 0 for 0, otherwise u^d read as +1 or -1.
  int eta(Element u) const;

  /// Discrete log to the internal primitive element; a must be nonzero.
  std::uint32_t log(Element a) const;
  Element exp(std::uint64_t k) const { return Element{exp_[k % (spec_.q - 1)]}; }

  std::vector<Element> elements() const;

  std::string describe() const;

 private:
  Field() = default;
  void init_tables();

  FieldSpec spec_;
  std::vector<std::uint32_t> exp_;       // exp_[k] = index of g^k, k in [0, q-1)
  std::vector<std::uint32_t> log_;       // log_[a] for a != 0
  std::vector<std::uint32_t> one_plus_;  // one_plus_[k] = index of 1 + g^k
};

using FieldPtr = std::shared_ptr<const Field>;

/// Field homomorphism F_{p^h} -> F_{p^{hk}} fixed by sending the residue class of t
/// to the smallest-index root of the base modulus.
class Embedding {
 public:
  Embedding(FieldPtr base, FieldPtr ext);

  Element operator()(Element a) const { return Element{image_[a.index]}; }
  const FieldPtr& base() const { return base_; }
  const FieldPtr& ext() const { return ext_; }

 private:
  FieldPtr base_;
  FieldPtr ext_;
  std::vector<std::uint32_t> image_;
};

/// F_{q^k} for the base field F_q, built canonically as F_{p^{hk}}, with the
/// embedding of F_q. k = 1 returns the base field itself and the identity map.
struct Extension {
  FieldPtr field;
  Embedding embed;
  unsigned level;
};

Extension make_extension(const FieldPtr& base, unsigned k);

}  // namespace fermat

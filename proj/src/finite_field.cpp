#include "fermat/finite_field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

namespace fermat {

namespace {

constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 22;

using Digits = std::vector<std::uint32_t>;

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// Remainder of f modulo the monic polynomial g over Z_p; both low degree first.
Digits poly_mod(Digits f, const Digits& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = f.size(); i-- > dg;) {
    const std::uint64_t c = f[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      const std::size_t k = i - dg + j;
      f[k] = static_cast<std::uint32_t>((f[k] + (p - c) * g[j]) % p);
    }
  }
  f.resize(std::min(f.size(), dg));
  return f;
}

bool is_zero_poly(const Digits& f) {
  for (auto c : f)
    if (c != 0) return false;
  return true;
}

bool is_irreducible(const Digits& modulus, std::uint32_t p) {
  const unsigned m = static_cast<unsigned>(modulus.size() - 1);
  if (m == 1) return true;
  if (modulus[0] == 0) return false;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (unsigned k = 1; k <= m / 2; ++k) {
    const std::uint64_t count = ipow(p, k);
    Digits g(k + 1);
    g[k] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (unsigned j = 0; j < k; ++j) {
        g[j] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (is_zero_poly(poly_mod(modulus, g, p))) return false;
    }
  }
  return true;
}

// Product of two residues modulo a monic modulus of degree m.
Digits mul_mod(const Digits& a, const Digits& b, const Digits& modulus, std::uint32_t p) {
  const std::size_t m = modulus.size() - 1;
  Digits prod(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  }
  Digits r = poly_mod(std::move(prod), modulus, p);
  r.resize(m, 0);
  return r;
}

Digits pow_mod(Digits a, std::uint64_t e, const Digits& modulus, std::uint32_t p) {
  Digits r(modulus.size() - 1, 0);
  r[0] = 1;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, modulus, p);
    a = mul_mod(a, a, modulus, p);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    out.push_back(f);
    while (n % f == 0) n /= f;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Digits to_digits(std::uint64_t index, std::uint32_t p, unsigned m) {
  Digits out(m);
  for (unsigned i = 0; i < m; ++i) {
    out[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return out;
}

std::uint32_t to_index(const Digits& digits, std::uint32_t p) {
  std::uint64_t idx = 0;
  for (std::size_t i = digits.size(); i-- > 0;) idx = idx * p + digits[i];
  return static_cast<std::uint32_t>(idx);
}

void check_characteristic(std::uint32_t p) {
  if (p <= 3) throw FieldError("characteristic must exceed 3");
  if (!is_prime(p)) throw FieldError("characteristic " + std::to_string(p) + " is not prime");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> irreducible_moduli(std::uint32_t p, unsigned m,
                                                           std::size_t limit) {
  std::vector<Digits> out;
  const std::uint64_t count = ipow(p, m);
  Digits f(m + 1);
  f[m] = 1;
  for (std::uint64_t idx = 0; idx < count && out.size() < limit; ++idx) {
    // c0 is the most significant position of the enumeration.
    std::uint64_t rest = idx;
    for (unsigned j = m; j-- > 0;) {
      f[j] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(f, p)) out.push_back(f);
  }
  return out;
}

std::shared_ptr<const Field> Field::build(std::uint32_t p, unsigned h) {
  check_characteristic(p);
  if (h < 1) throw FieldError("extension degree must be at least 1");
  if (ipow(p, h) > kMaxFieldSize) throw FieldError("field too large for table arithmetic");
  auto moduli = irreducible_moduli(p, h, 1);
  return with_modulus(p, std::move(moduli.front()));
}

std::shared_ptr<const Field> Field::with_modulus(std::uint32_t p,
                                                 std::vector<std::uint32_t> modulus) {
  check_characteristic(p);
  if (modulus.size() < 2) throw FieldError("modulus must have degree at least 1");
  if (modulus.back() != 1) throw FieldError("modulus must be monic");
  for (auto c : modulus)
    if (c >= p) throw FieldError("modulus coefficient out of range");
  const unsigned h = static_cast<unsigned>(modulus.size() - 1);
  if (ipow(p, h) > kMaxFieldSize) throw FieldError("field too large for table arithmetic");
  if (!is_irreducible(modulus, p)) throw FieldError("modulus is reducible");

  std::shared_ptr<Field> field(new Field());
  field->spec_.p = p;
  field->spec_.h = h;
  field->spec_.modulus = std::move(modulus);
  field->spec_.q = ipow(p, h);
  field->spec_.d = (field->spec_.q - 1) / 2;
  field->init_tables();
  for (std::uint32_t u = 1; u < field->size(); ++u) {
    if (field->eta(Element{u}) == -1) {
      field->spec_.lambda = Element{u};
      break;
    }
  }
  return field;
}

std::shared_ptr<const Field> Field::with_lambda(Element lambda) const {
  if (lambda.index >= size() || eta(lambda) != -1)
    throw FieldError("lambda must be a non-square");
  std::shared_ptr<Field> copy(new Field(*this));
  copy->spec_.lambda = lambda;
  return copy;
}

void Field::init_tables() {
  const std::uint32_t p = spec_.p;
  const unsigned m = spec_.h;
  const std::uint64_t q = spec_.q;
  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  const Digits one = to_digits(1, p, m);

  Digits generator;
  for (std::uint64_t cand = 2; cand < q; ++cand) {
    Digits g = to_digits(cand, p, m);
    bool primitive = true;
    for (auto r : factors) {
      if (pow_mod(g, order / r, spec_.modulus, p) == one) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator = std::move(g);
      break;
    }
  }
  if (generator.empty()) generator = one;  // q = 2 is excluded, but keep the loop total

  exp_.assign(order, 0);
  log_.assign(q, 0);
  Digits cur = one;
  for (std::uint64_t k = 0; k < order; ++k) {
    const std::uint32_t idx = to_index(cur, p);
    exp_[k] = idx;
    log_[idx] = static_cast<std::uint32_t>(k);
    cur = mul_mod(cur, generator, spec_.modulus, p);
  }
  if (m > 1) {
    one_plus_.assign(order, 0);
    for (std::uint64_t k = 0; k < order; ++k) {
      Digits dg = to_digits(exp_[k], p, m);
      dg[0] = (dg[0] + 1) % p;
      one_plus_[k] = to_index(dg, p);
    }
  }
}

Element Field::from_index(std::uint64_t index) const {
  if (index >= spec_.q)
    throw FieldError("element index " + std::to_string(index) + " outside [0, " +
                     std::to_string(spec_.q) + ")");
  return Element{static_cast<std::uint32_t>(index)};
}

Element Field::from_int(std::int64_t value) const {
  const std::int64_t p = spec_.p;
  return Element{static_cast<std::uint32_t>(((value % p) + p) % p)};
}

Element Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != spec_.h) throw FieldError("digit vector has wrong length");
  for (auto c : digits)
    if (c >= spec_.p) throw FieldError("digit out of range");
  return Element{to_index(Digits(digits.begin(), digits.end()), spec_.p)};
}

std::vector<std::uint32_t> Field::digits(Element a) const {
  return to_digits(a.index, spec_.p, spec_.h);
}

Element Field::add(Element a, Element b) const {
  if (spec_.h == 1) return Element{(a.index + b.index) % spec_.p};
  if (a.index == 0) return b;
  if (b.index == 0) return a;
  const std::uint64_t order = spec_.q - 1;
  const std::uint64_t la = log_[a.index];
  const std::uint64_t diff = (log_[b.index] + order - la) % order;
  const std::uint32_t s = one_plus_[diff];
  if (s == 0) return Element{0};
  return Element{exp_[(la + log_[s]) % order]};
}

Element Field::neg(Element a) const {
  if (a.index == 0) return a;
  if (spec_.h == 1) return Element{spec_.p - a.index};
  const std::uint64_t order = spec_.q - 1;
  return Element{exp_[(log_[a.index] + order / 2) % order]};
}

Element Field::mul(Element a, Element b) const {
  if (a.index == 0 || b.index == 0) return Element{0};
  const std::uint64_t order = spec_.q - 1;
  return Element{exp_[(std::uint64_t{log_[a.index]} + log_[b.index]) % order]};
}

Element Field::inv(Element a) const {
  if (a.index == 0) throw FieldError("inverse of zero");
  const std::uint64_t order = spec_.q - 1;
  return Element{exp_[(order - log_[a.index]) % order]};
}

Element Field::pow(Element a, std::uint64_t e) const {
  Element result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

int Field::eta(Element u) const {
  if (u.index == 0) return 0;
  const Element v = pow(u, spec_.d);
  if (v == one()) return 1;
  if (v == minus_one()) return -1;
  throw std::logic_error("u^d is neither 1 nor -1; field tables are inconsistent");
}

std::uint32_t Field::log(Element a) const {
  if (a.index == 0) throw FieldError("log of zero");
  return log_[a.index];
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out(spec_.q);
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = Element{i};
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << spec_.q;
  if (spec_.h > 1) {
    os << " = F_" << spec_.p << "[t]/(";
    bool first = true;
    for (std::size_t i = spec_.modulus.size(); i-- > 0;) {
      const auto c = spec_.modulus[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0 || c != 1) os << c;
      if (i > 0) os << (c != 1 ? "*" : "") << "t" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    os << ")";
  }
  return os.str();
}

Embedding::Embedding(FieldPtr base, FieldPtr ext) : base_(std::move(base)), ext_(std::move(ext)) {
  const Field& b = *base_;
  const Field& e = *ext_;
  if (b.characteristic() != e.characteristic() || e.degree() % b.degree() != 0)
    throw FieldError("no embedding between fields of incompatible size");
  image_.resize(b.size());
  if (base_ == ext_) {
    for (std::uint32_t i = 0; i < image_.size(); ++i) image_[i] = i;
    return;
  }
  const auto& modulus = b.spec().modulus;
  Element theta{0};
  bool found = false;
  for (std::uint32_t x = 0; x < e.size() && !found; ++x) {
    Element acc = e.zero();
    for (std::size_t i = modulus.size(); i-- > 0;)
      acc = e.add(e.mul(acc, Element{x}), e.from_int(modulus[i]));
    if (acc == e.zero()) {
      theta = Element{x};
      found = true;
    }
  }
  if (!found) throw std::logic_error("base modulus has no root in the extension");
  for (std::uint32_t i = 0; i < image_.size(); ++i) {
    const auto dg = b.digits(Element{i});
    Element acc = e.zero();
    for (std::size_t j = dg.size(); j-- > 0;)
      acc = e.add(e.mul(acc, theta), e.from_int(dg[j]));
    image_[i] = acc.index;
  }
}

Extension make_extension(const FieldPtr& base, unsigned k) {
  if (k < 1) throw FieldError("extension level must be at least 1");
  if (k == 1) return Extension{base, Embedding(base, base), 1};
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> cache;
  const auto key = std::make_pair(base->characteristic(), base->degree() * k);
  FieldPtr ext;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, Field::build(key.first, key.second)).first;
    ext = it->second;
  }
  return Extension{ext, Embedding(base, ext), k};
}

}  // namespace fermat

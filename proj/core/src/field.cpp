#include "simplicode/field.hpp"

#include "simplicode/errors.hpp"

#include <algorithm>
#include <string>

namespace simplicode {

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients, lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t k = p - 2; k > 0; k >>= 1) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo b over F_p; b must be nonzero with trimmed degree.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly digits_of(std::uint32_t index, std::uint32_t p, unsigned e) {
  Poly d(e, 0);
  for (unsigned j = 0; j < e; ++j) {
    d[j] = index % p;
    index /= p;
  }
  return d;
}

std::uint32_t index_of(const Poly& d, std::uint32_t p) {
  std::uint32_t index = 0;
  for (std::size_t j = d.size(); j-- > 0;) index = index * p + d[j];
  return index;
}

std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p, unsigned e,
                       const Poly& modulus) {
  if (e == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
  const Poly da = digits_of(a, p, e);
  const Poly db = digits_of(b, p, e);
  Poly prod(2 * e - 1, 0);
  for (unsigned i = 0; i < e; ++i)
    for (unsigned j = 0; j < e; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
  Poly r = poly_mod(std::move(prod), modulus, p);
  r.resize(e, 0);
  return index_of(r, p);
}

std::uint32_t slow_pow(std::uint32_t a, std::uint64_t k, std::uint32_t p, unsigned e,
                       const Poly& modulus) {
  std::uint32_t result = 1;
  while (k > 0) {
    if (k & 1) result = slow_mul(result, a, p, e, modulus);
    a = slow_mul(a, a, p, e, modulus);
    k >>= 1;
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), e};
}

bool is_irreducible(std::span<const std::uint32_t> coefficients, std::uint32_t p) {
  Poly f(coefficients.begin(), coefficients.end());
  if (f.size() < 2 || f.back() != 1) return false;
  for (auto c : f)
    if (c >= p) return false;
  const unsigned e = static_cast<unsigned>(f.size() - 1);
  if (e == 1) return true;
  // Trial division by every monic polynomial of degree 1..e/2.
  for (unsigned deg = 1; deg <= e / 2; ++deg) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = digits_of(static_cast<std::uint32_t>(low), p, deg);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned e) {
  if (e < 1) throw InvalidArgument("extension degree must be >= 1");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < e; ++i) count *= p;
  for (std::uint64_t low = 0; low < count; ++low) {
    Poly f = digits_of(static_cast<std::uint32_t>(low), p, e);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw ConsistencyError("no irreducible polynomial found");  // unreachable
}

FieldSpec::FieldSpec(std::uint32_t q) {
  auto pe = prime_power(q);
  if (!pe || q > kMaxFieldOrder)
    throw InvalidArgument("field order " + std::to_string(q) +
                          " is not a prime power in [2, 65536]");
  p_ = pe->first;
  e_ = pe->second;
  q_ = q;
  if (e_ > 1) modulus_ = default_modulus(p_, e_);
  build();
}

FieldSpec::FieldSpec(std::uint32_t q, std::vector<std::uint32_t> modulus) {
  auto pe = prime_power(q);
  if (!pe || q > kMaxFieldOrder)
    throw InvalidArgument("field order " + std::to_string(q) +
                          " is not a prime power in [2, 65536]");
  p_ = pe->first;
  e_ = pe->second;
  q_ = q;
  if (e_ == 1) {
    if (!modulus.empty() && !(modulus.size() == 2 && modulus[1] == 1 && modulus[0] < p_))
      throw InvalidArgument("prime field takes no modulus (or a monic linear one)");
  } else {
    if (modulus.size() != e_ + 1)
      throw InvalidArgument("modulus must have " + std::to_string(e_ + 1) + " coefficients");
    if (!is_irreducible(modulus, p_))
      throw InvalidArgument("modulus is not a monic irreducible polynomial over F_" +
                            std::to_string(p_));
    modulus_ = std::move(modulus);
  }
  build();
}

void FieldSpec::build() {
  auto t = std::make_shared<Tables>();
  t->pow_p.resize(e_ + 1);
  t->pow_p[0] = 1;
  for (unsigned j = 1; j <= e_; ++j) t->pow_p[j] = t->pow_p[j - 1] * p_;

  const std::uint32_t order = q_ - 1;
  std::uint32_t generator = 1;
  if (q_ > 2) {
    const auto factors = prime_factors(order);
    for (std::uint32_t g = 2; g < q_; ++g) {
      const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) {
        return slow_pow(g, order / r, p_, e_, modulus_) != 1;
      });
      if (primitive) {
        generator = g;
        break;
      }
    }
  }
  t->log.assign(q_, 0);
  t->antilog.assign(order, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    t->antilog[i] = x;
    t->log[x] = i;
    x = slow_mul(x, generator, p_, e_, modulus_);
  }
  if (x != 1) throw ConsistencyError("field generator does not have order q-1");
  tables_ = std::move(t);
}

Element FieldSpec::add(Element a, Element b) const {
  if (p_ == 2) return Element{a.index ^ b.index};
  if (e_ == 1) {
    const std::uint32_t s = a.index + b.index;
    return Element{s >= p_ ? s - p_ : s};
  }
  std::uint32_t result = 0, x = a.index, y = b.index, place = 1;
  for (unsigned j = 0; j < e_; ++j) {
    result += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return Element{result};
}

Element FieldSpec::neg(Element a) const {
  if (p_ == 2) return a;
  if (e_ == 1) return Element{a.index == 0 ? 0 : p_ - a.index};
  std::uint32_t result = 0, x = a.index, place = 1;
  for (unsigned j = 0; j < e_; ++j) {
    result += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return Element{result};
}

Element FieldSpec::mul(Element a, Element b) const {
  if (a.is_zero() || b.is_zero()) return zero();
  if (e_ == 1) return Element{static_cast<std::uint32_t>(std::uint64_t{a.index} * b.index % p_)};
  const auto& t = *tables_;
  std::uint32_t s = t.log[a.index] + t.log[b.index];
  if (s >= q_ - 1) s -= q_ - 1;
  return Element{t.antilog[s]};
}

Element FieldSpec::inv(Element a) const {
  if (a.is_zero()) throw InvalidArgument("zero has no multiplicative inverse");
  const auto& t = *tables_;
  const std::uint32_t l = t.log[a.index];
  return Element{t.antilog[l == 0 ? 0 : (q_ - 1) - l]};
}

Element FieldSpec::dot(std::span<const Element> a, std::span<const Element> x) const {
  if (a.size() != x.size())
    throw InvalidArgument("dot product of vectors with lengths " + std::to_string(a.size()) +
                          " and " + std::to_string(x.size()));
  Element sum = zero();
  for (std::size_t i = 0; i < a.size(); ++i) sum = add(sum, mul(a[i], x[i]));
  return sum;
}

std::uint32_t FieldSpec::digit(Element a, unsigned j) const {
  return (a.index / tables_->pow_p[j]) % p_;
}

Element FieldSpec::basis(unsigned j) const { return Element{tables_->pow_p[j]}; }

}  // namespace simplicode

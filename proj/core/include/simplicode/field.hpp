#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace simplicode {

/// An element of F_q. The index packs the polynomial sum c_i x^i with c_i
/// the base-p digits of the index, so 0 is the additive and 1 the
/// multiplicative identity.
struct Element {
  std::uint32_t index = 0;

  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t i) : index(i) {}

  constexpr bool is_zero() const { return index == 0; }
  friend constexpr auto operator<=>(Element, Element) = default;
};

using Vector = std::vector<Element>;

/// Largest supported field order.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// Arithmetic in F_q, q = p^e <= 2^16.
///
/// Extension fields are built from a degree-e irreducible modulus over F_p
/// and use log/antilog tables for multiplication and inversion. The object is
/// immutable; copies share the tables.
class FieldSpec {
 public:
  /// Field of order q with the default modulus (the smallest monic
  /// irreducible polynomial of degree e, coefficients compared from the
  /// constant term upward as a base-p number).
  explicit FieldSpec(std::uint32_t q);

  /// Field of order q with an explicit modulus given as coefficients
  /// c_0..c_e over F_p, lowest degree first. Must be monic and irreducible.
  FieldSpec(std::uint32_t q, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  unsigned e() const { return e_; }
  std::uint32_t q() const { return q_; }
  /// Coefficients c_0..c_e of the modulus; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Element zero() const { return Element{0}; }
  Element one() const { return Element{1}; }
  bool contains(Element a) const { return a.index < q_; }

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const;
  /// Throws InvalidArgument for a == 0.
  Element inv(Element a) const;

  /// Sum of a_i * x_i. Throws InvalidArgument on length mismatch.
  Element dot(std::span<const Element> a, std::span<const Element> x) const;

  /// Base-p digit j of the element (coefficient of x^j).
  std::uint32_t digit(Element a, unsigned j) const;
  /// The element x^j for 0 <= j < e.
  Element basis(unsigned j) const;

 private:
  struct Tables {
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> antilog;
    std::vector<std::uint32_t> pow_p;
  };

  void build();

  std::uint32_t p_ = 0;
  unsigned e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::shared_ptr<const Tables> tables_;
};

/// Splits q into (p, e) if q is a prime power, nullopt otherwise.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q);

bool is_prime(std::uint64_t n);

/// True iff the coefficient list c_0..c_e is a monic irreducible polynomial
/// of degree e >= 1 over F_p.
bool is_irreducible(std::span<const std::uint32_t> coefficients, std::uint32_t p);

/// Smallest monic irreducible polynomial of degree e over F_p.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned e);

}  // namespace simplicode

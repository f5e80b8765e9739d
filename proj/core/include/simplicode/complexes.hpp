#pragma once

#include "simplicode/bigint.hpp"
#include "simplicode/field.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace simplicode {

/// Subset of [m] = {1..m}; coordinate i is bit i-1.
using Mask = std::uint64_t;

inline constexpr int kMaxDimension = 64;

inline int mask_size(Mask a) { return __builtin_popcountll(a); }
inline bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline Mask full_mask(int m) { return m >= 64 ? ~Mask{0} : (Mask{1} << m) - 1; }

/// 1-based coordinates of a mask, ascending.
std::vector<int> mask_coordinates(Mask a);
Mask mask_from_coordinates(std::span<const int> coordinates);

struct Violation {
  enum class Kind { dimension, empty_family, range, cardinality, duplicate, maximality };
  Kind kind;
  std::string message;
};

/// Checks the support-family invariants for supports over [m]:
/// 1 <= m <= 64, h >= 1, every A_i inside [m] with 1 <= |A_i| < m, no
/// duplicates and no A_i contained in another.
std::optional<Violation> validate(int m, std::span<const Mask> supports);

/// The supports A_1..A_h of the maximal elements of a simplicial complex of
/// F_q^m, kept sorted by cardinality and then by coordinate list.
class SupportFamily {
 public:
  /// Validates and canonically orders the supports; throws InvalidArgument
  /// naming the violated invariant.
  static SupportFamily create(int m, std::vector<Mask> supports);

  int m() const { return m_; }
  std::size_t h() const { return supports_.size(); }
  std::span<const Mask> supports() const { return supports_; }
  Mask support(std::size_t i) const { return supports_[i]; }
  Mask union_mask() const;

  friend bool operator==(const SupportFamily&, const SupportFamily&) = default;

 private:
  SupportFamily(int m, std::vector<Mask> supports) : m_(m), supports_(std::move(supports)) {}

  int m_ = 0;
  std::vector<Mask> supports_;
};

/// Canonical text form, e.g. "m=5; A={1,2},{2,3,4}".
std::string format_family(const SupportFamily& family);

/// |Delta| by inclusion-exclusion over the intersections of the supports.
BigInt delta_size(const SupportFamily& family, std::uint64_t q);

/// Support of a vector as a mask.
Mask support_of(std::span<const Element> x);

/// True iff Supp(x) is contained in some A_i, i.e. x lies in the complex.
bool contains(const SupportFamily& family, std::span<const Element> x);
bool contains_support(const SupportFamily& family, Mask support);

struct PreconditionReport {
  bool exclusive_part_nonempty = false;  // A_i minus the union of the others is nonempty
  bool size_bound = false;               // q^m > sum q^|A_i|
  bool pairwise_disjoint = false;

  /// Both hypotheses of the general closed form hold.
  bool hypotheses_hold() const { return exclusive_part_nonempty && size_bound; }
};

PreconditionReport check_preconditions(const SupportFamily& family, std::uint64_t q);

/// Throws PreconditionError naming the first failed hypothesis.
void require_hypotheses(const SupportFamily& family, std::uint64_t q);

}  // namespace simplicode

#pragma once

#include "simplicode/bigint.hpp"
#include "simplicode/codes.hpp"
#include "simplicode/complexes.hpp"
#include "simplicode/field.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace simplicode {

/// Largest h for which the downward-closed class walk is attempted.
inline constexpr std::size_t kMaxLatticeWalkH = 6;
/// Largest h for which the lattice of nonempty sub-families is materialized.
inline constexpr std::size_t kMaxLatticeH = 16;

/// A nonempty sub-family S of the supports together with its intersection.
struct OmegaNode {
  std::uint32_t members = 0;  // bit i set iff A_{i+1} is in S
  Mask meet = 0;              // intersection of the supports in S
  int meet_size = 0;

  int order() const { return __builtin_popcount(members); }
  /// (-1)^{|S|-1}
  int sign() const { return order() % 2 == 1 ? 1 : -1; }
};

/// All 2^h - 1 nonempty sub-families, sub-families before super-families
/// (ordered by |S|, then by member bits).
class OmegaLattice {
 public:
  explicit OmegaLattice(const SupportFamily& family);

  std::size_t h() const { return h_; }
  std::span<const OmegaNode> nodes() const { return nodes_; }
  const OmegaNode& node(std::size_t i) const { return nodes_[i]; }
  std::size_t index_of(std::uint32_t members) const { return index_[members]; }

 private:
  std::size_t h_;
  std::vector<OmegaNode> nodes_;
  std::vector<std::size_t> index_;
};

/// A weight class R: a set of lattice nodes, bit i = node i (h <= 6).
struct RFamily {
  std::uint64_t members = 0;

  bool empty() const { return members == 0; }
  bool contains(std::size_t node) const { return members >> node & 1; }
};

/// True iff every nonempty sub-family of a member of R is also in R.
bool is_downward_closed(RFamily r, const OmegaLattice& lattice);

/// Number of nonzero messages whose pattern of "nonzero somewhere on the
/// intersection" is exactly R. Throws InvalidArgument if R is not downward
/// closed or the lattice has more than 64 nodes.
BigInt psi_size(RFamily r, const OmegaLattice& lattice, std::uint64_t q, int m);

/// Weight shared by the messages of class R, or nullopt when R contains a
/// node with empty intersection (the class is then empty).
std::optional<std::int64_t> class_weight(RFamily r, const OmegaLattice& lattice, std::uint64_t q,
                                         int m);

enum class SpectrumMethod { class_walk, disjoint, h1, h2, h3, star, per_message };

std::string_view to_string(SpectrumMethod tag);

struct ClosedFormSpectrum {
  Spectrum spectrum;
  SpectrumMethod tag = SpectrumMethod::class_walk;
};

/// [n, k, d] of the complement code predicted in closed form:
/// n = (q^m - |Delta|)/(q - 1), k = m, d = q^(m-1) - sum q^(|A_i|-1).
CodeParameters complement_parameters(const SupportFamily& family, std::uint64_t q);

/// Weight distribution of the complement code by summing |Psi_R| over all
/// downward-closed classes R. Requires the closed-form hypotheses and h <= 6.
Spectrum class_walk_spectrum(const SupportFamily& family, std::uint64_t q);

/// Disjoint-support enumerator indexed by R subset of [h] (h <= 12).
Spectrum disjoint_spectrum(const SupportFamily& family, std::uint64_t q);

/// Explicit multiplicity tables for h = 1, 2, 3.
ClosedFormSpectrum h_specialized_spectrum(const SupportFamily& family, std::uint64_t q);

/// Weight of the codeword for message a computed from which intersections a
/// touches. Throws InvalidArgument for a = 0.
std::int64_t message_weight(std::span<const Element> a, const SupportFamily& family,
                         const OmegaLattice& lattice, std::uint64_t q);

/// Spectrum of the code on the projective points inside the complex, derived
/// from the complement spectrum by w -> q^(m-1) - w and division of the
/// multiplicities by q^(m - |union A_i|).
Spectrum star_spectrum(const SupportFamily& family, std::uint64_t q);

/// Preferred closed form for the complement code: h <= 3 tables, then the
/// disjoint enumerator, then the general class walk.
ClosedFormSpectrum closed_form_spectrum(const SupportFamily& family, std::uint64_t q);

/// Throws GuardError if q^m does not fit comfortably in 62 bits.
void require_weight_range(std::uint64_t q, int m);

}  // namespace simplicode

#pragma once

#include "simplicode/complexes.hpp"
#include "simplicode/field.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace simplicode {

/// Largest q^m the F_q^m walk will visit.
inline constexpr std::uint64_t kMaxWalk = std::uint64_t{1} << 32;

/// A canonical representative of a point of PG(m-1, q): nonzero, with the
/// first nonzero coordinate equal to 1.
class ProjectivePoint {
 public:
  /// Throws InvalidArgument unless coords is already canonical.
  explicit ProjectivePoint(Vector coords);

  /// Scales a nonzero vector to its canonical representative.
  static ProjectivePoint normalize(const FieldSpec& field, std::span<const Element> v);

  std::span<const Element> coords() const { return coords_; }
  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;

 private:
  Vector coords_;
};

bool is_canonical(std::span<const Element> v);

/// Ordered list of canonical projective points; the columns of a generator
/// matrix. Points are stored contiguously, m coordinates each.
class DefiningSet {
 public:
  DefiningSet(std::uint32_t q, int m) : q_(q), m_(m) {}

  std::uint32_t q() const { return q_; }
  int m() const { return m_; }
  std::size_t size() const { return m_ == 0 ? 0 : coords_.size() / m_; }
  bool empty() const { return coords_.empty(); }
  std::span<const Element> point(std::size_t j) const {
    return std::span<const Element>(coords_).subspan(j * m_, m_);
  }

  void push_back(std::span<const Element> point);

 private:
  std::uint32_t q_;
  int m_;
  Vector coords_;
};

/// All (q^m - 1)/(q - 1) points of PG(m-1, q), lexicographic with
/// coordinate 1 most significant.
DefiningSet enumerate_pg(const FieldSpec& field, int m);

/// Canonical points outside the complex: Supp(x) not inside any A_i.
DefiningSet complement_defining_set(const SupportFamily& family, const FieldSpec& field);

/// Canonical points inside the complex (nonzero x with Supp(x) inside some A_i).
DefiningSet star_defining_set(const SupportFamily& family, const FieldSpec& field);

/// Matrix text block: one line per coordinate, one column per point,
/// entries are element indices separated by single spaces.
std::string to_matrix_text(const DefiningSet& set);

}  // namespace simplicode

#include "simplicode/geometry.hpp"

#include "simplicode/errors.hpp"

#include <functional>
#include <sstream>

namespace simplicode {

bool is_canonical(std::span<const Element> v) {
  for (Element x : v)
    if (!x.is_zero()) return x.index == 1;
  return false;
}

ProjectivePoint::ProjectivePoint(Vector coords) : coords_(std::move(coords)) {
  if (!is_canonical(coords_)) throw InvalidArgument("not a canonical projective point");
}

ProjectivePoint ProjectivePoint::normalize(const FieldSpec& field, std::span<const Element> v) {
  for (Element x : v) {
    if (x.is_zero()) continue;
    const Element scale = field.inv(x);
    Vector out;
    out.reserve(v.size());
    for (Element y : v) out.push_back(field.mul(scale, y));
    return ProjectivePoint(std::move(out));
  }
  throw InvalidArgument("the zero vector is not a projective point");
}

void DefiningSet::push_back(std::span<const Element> point) {
  if (point.size() != static_cast<std::size_t>(m_))
    throw InvalidArgument("point length does not match m");
  coords_.insert(coords_.end(), point.begin(), point.end());
}

namespace {

// Visits the canonical points of PG(m-1, q) in lexicographic order.
void walk_pg(const FieldSpec& field, int m, const std::function<void(const Vector&, Mask)>& visit) {
  if (m < 1 || m > kMaxDimension) throw InvalidArgument("m must lie in [1, 64]");
  const std::uint32_t q = field.q();
  long double total = 1;
  for (int i = 0; i < m; ++i) total *= q;
  if (total > static_cast<long double>(kMaxWalk))
    throw GuardError("q^m exceeds the 2^32 limit for walking F_q^m");

  // Lexicographic odometer, coordinate 1 most significant. A vector is
  // canonical iff its leading nonzero entry is 1.
  Vector v(m, Element{0});
  Mask support = 0;
  for (;;) {
    int lead = -1;
    for (int i = 0; i < m; ++i)
      if (!v[i].is_zero()) {
        lead = i;
        break;
      }
    if (lead >= 0 && v[lead].index == 1) visit(v, support);
    int i = m - 1;
    while (i >= 0 && v[i].index == q - 1) {
      v[i] = Element{0};
      support &= ~(Mask{1} << i);
      --i;
    }
    if (i < 0) break;
    v[i] = Element{v[i].index + 1};
    support |= Mask{1} << i;
  }
}

}  // namespace

DefiningSet enumerate_pg(const FieldSpec& field, int m) {
  DefiningSet out(field.q(), m);
  walk_pg(field, m, [&](const Vector& v, Mask) { out.push_back(v); });
  return out;
}

DefiningSet complement_defining_set(const SupportFamily& family, const FieldSpec& field) {
  DefiningSet out(field.q(), family.m());
  walk_pg(field, family.m(), [&](const Vector& v, Mask s) {
    if (!contains_support(family, s)) out.push_back(v);
  });
  if (out.empty()) throw ConsistencyError("complement defining set is empty");
  return out;
}

DefiningSet star_defining_set(const SupportFamily& family, const FieldSpec& field) {
  DefiningSet out(field.q(), family.m());
  walk_pg(field, family.m(), [&](const Vector& v, Mask s) {
    if (contains_support(family, s)) out.push_back(v);
  });
  return out;
}

std::string to_matrix_text(const DefiningSet& set) {
  std::ostringstream out;
  for (int i = 0; i < set.m(); ++i) {
    for (std::size_t j = 0; j < set.size(); ++j) out << (j ? " " : "") << set.point(j)[i].index;
    out << '\n';
  }
  return out.str();
}

}  // namespace simplicode

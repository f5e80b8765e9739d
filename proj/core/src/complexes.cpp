#include "simplicode/complexes.hpp"

#include "simplicode/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace simplicode {

std::vector<int> mask_coordinates(Mask a) {
  std::vector<int> out;
  for (int i = 0; i < 64; ++i)
    if (a >> i & 1) out.push_back(i + 1);
  return out;
}

Mask mask_from_coordinates(std::span<const int> coordinates) {
  Mask a = 0;
  for (int c : coordinates) {
    if (c < 1 || c > kMaxDimension) throw InvalidArgument("coordinate out of range");
    a |= Mask{1} << (c - 1);
  }
  return a;
}

namespace {

std::string set_text(Mask a) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int c : mask_coordinates(a)) {
    out << (first ? "" : ",") << c;
    first = false;
  }
  out << '}';
  return out.str();
}

bool canonical_less(Mask a, Mask b) {
  if (mask_size(a) != mask_size(b)) return mask_size(a) < mask_size(b);
  return mask_coordinates(a) < mask_coordinates(b);
}

}  // namespace

std::optional<Violation> validate(int m, std::span<const Mask> supports) {
  using K = Violation::Kind;
  if (m < 1 || m > kMaxDimension)
    return Violation{K::dimension, "dimension m=" + std::to_string(m) + " outside [1, 64]"};
  if (supports.empty()) return Violation{K::empty_family, "support family is empty"};
  const Mask all = full_mask(m);
  for (Mask a : supports) {
    if (!is_subset(a, all))
      return Violation{K::range, "support " + set_text(a) + " has coordinates outside [" +
                                     std::to_string(m) + "]"};
    if (a == 0) return Violation{K::cardinality, "empty support {}"};
    if (mask_size(a) >= m)
      return Violation{K::cardinality,
                       "support " + set_text(a) + " has cardinality m; need |A| < m"};
  }
  for (std::size_t i = 0; i < supports.size(); ++i) {
    for (std::size_t j = 0; j < supports.size(); ++j) {
      if (i == j) continue;
      if (supports[i] == supports[j])
        return Violation{K::duplicate, "duplicate support " + set_text(supports[i])};
      if (is_subset(supports[i], supports[j]))
        return Violation{K::maximality, "support " + set_text(supports[i]) +
                                            " is contained in " + set_text(supports[j])};
    }
  }
  return std::nullopt;
}

SupportFamily SupportFamily::create(int m, std::vector<Mask> supports) {
  if (auto v = validate(m, supports)) throw InvalidArgument(v->message);
  std::sort(supports.begin(), supports.end(), canonical_less);
  return SupportFamily(m, std::move(supports));
}

Mask SupportFamily::union_mask() const {
  Mask u = 0;
  for (Mask a : supports_) u |= a;
  return u;
}

std::string format_family(const SupportFamily& family) {
  std::ostringstream out;
  out << "m=" << family.m() << "; A=";
  for (std::size_t i = 0; i < family.h(); ++i) out << (i ? "," : "") << set_text(family.support(i));
  return out.str();
}

BigInt delta_size(const SupportFamily& family, std::uint64_t q) {
  // Signed multiplicity of each intersection mask over all nonempty S of the
  // family: adding A_i contributes {A_i} and flips the sign of every
  // previous S extended by A_i.
  std::map<Mask, BigInt> terms;
  for (Mask a : family.supports()) {
    std::map<Mask, BigInt> next = terms;
    for (const auto& [meet, coeff] : terms) next[meet & a] -= coeff;
    next[a] += 1;
    terms = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [meet, coeff] : terms) total += coeff * big_pow(q, mask_size(meet));
  return total;
}

Mask support_of(std::span<const Element> x) {
  if (x.size() > static_cast<std::size_t>(kMaxDimension))
    throw InvalidArgument("vector longer than 64 coordinates");
  Mask s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s |= Mask{1} << i;
  return s;
}

bool contains_support(const SupportFamily& family, Mask support) {
  return std::any_of(family.supports().begin(), family.supports().end(),
                     [&](Mask a) { return is_subset(support, a); });
}

bool contains(const SupportFamily& family, std::span<const Element> x) {
  if (x.size() != static_cast<std::size_t>(family.m()))
    throw InvalidArgument("vector length does not match m");
  return contains_support(family, support_of(x));
}

PreconditionReport check_preconditions(const SupportFamily& family, std::uint64_t q) {
  PreconditionReport r;
  const auto sup = family.supports();
  r.exclusive_part_nonempty = true;
  r.pairwise_disjoint = true;
  for (std::size_t i = 0; i < sup.size(); ++i) {
    Mask others = 0;
    for (std::size_t j = 0; j < sup.size(); ++j) {
      if (j == i) continue;
      others |= sup[j];
      if (j > i && (sup[i] & sup[j]) != 0) r.pairwise_disjoint = false;
    }
    if ((sup[i] & ~others) == 0) r.exclusive_part_nonempty = false;
  }
  BigInt sum = 0;
  for (Mask a : sup) sum += big_pow(q, mask_size(a));
  r.size_bound = big_pow(q, family.m()) > sum;
  return r;
}

void require_hypotheses(const SupportFamily& family, std::uint64_t q) {
  const auto r = check_preconditions(family, q);
  if (!r.exclusive_part_nonempty)
    throw PreconditionError("exclusive-part",
                            "hypothesis failed: some A_i is covered by the union of the others");
  if (!r.size_bound)
    throw PreconditionError("size-bound", "hypothesis failed: q^m > sum of q^|A_i| does not hold");
}

}  // namespace simplicode

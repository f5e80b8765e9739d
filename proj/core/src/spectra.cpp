#include "simplicode/spectra.hpp"

#include "simplicode/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace simplicode {

namespace {

std::int64_t ipow(std::uint64_t q, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::int64_t>(q);
  return r;
}

std::int64_t to_i64(const BigInt& v) { return v.convert_to<std::int64_t>(); }

}  // namespace

void require_weight_range(std::uint64_t q, int m) {
  BigInt qm = big_pow(q, m);
  if (qm > (BigInt(1) << 62))
    throw GuardError("q^m exceeds 2^62; weights would overflow 64-bit integers");
}

std::string_view to_string(SpectrumMethod tag) {
  switch (tag) {
    case SpectrumMethod::class_walk: return "class-walk";
    case SpectrumMethod::disjoint: return "disjoint";
    case SpectrumMethod::h1: return "h1";
    case SpectrumMethod::h2: return "h2";
    case SpectrumMethod::h3: return "h3";
    case SpectrumMethod::star: return "star";
    case SpectrumMethod::per_message: return "per-message";
  }
  return "unknown";
}

OmegaLattice::OmegaLattice(const SupportFamily& family) : h_(family.h()) {
  if (h_ > kMaxLatticeH)
    throw GuardError("sub-family lattice needs h <= " + std::to_string(kMaxLatticeH));
  const std::uint32_t count = (std::uint32_t{1} << h_) - 1;
  index_.assign(count + 1, static_cast<std::size_t>(-1));
  for (std::uint32_t s = 1; s <= count; ++s) {
    OmegaNode node;
    node.members = s;
    node.meet = ~Mask{0};
    for (std::size_t i = 0; i < h_; ++i)
      if (s >> i & 1) node.meet &= family.support(i);
    node.meet_size = mask_size(node.meet);
    nodes_.push_back(node);
  }
  std::stable_sort(nodes_.begin(), nodes_.end(), [](const OmegaNode& a, const OmegaNode& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members < b.members;
  });
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_[nodes_[i].members] = i;
}

bool is_downward_closed(RFamily r, const OmegaLattice& lattice) {
  const auto nodes = lattice.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!r.contains(i) || nodes[i].order() < 2) continue;
    for (std::size_t b = 0; b < lattice.h(); ++b) {
      if (!(nodes[i].members >> b & 1)) continue;
      if (!r.contains(lattice.index_of(nodes[i].members & ~(std::uint32_t{1} << b)))) return false;
    }
  }
  return true;
}

BigInt psi_size(RFamily r, const OmegaLattice& lattice, std::uint64_t q, int m) {
  if (lattice.nodes().size() > 64) throw InvalidArgument("weight classes need h <= 6");
  if (!is_downward_closed(r, lattice))
    throw InvalidArgument("R is not closed under taking nonempty sub-families");
  const auto nodes = lattice.nodes();
  Mask outside = 0;  // union of the intersections of nodes not in R
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!r.contains(i)) outside |= nodes[i].meet;
  if (r.empty()) return big_pow(q, m - mask_size(outside)) - 1;

  // q^{m-|U|} - sum over nonempty E subset of R of (-1)^{|E|-1} q^{m-|meets(E) u U|},
  // with the terms of equal union collected as we go.
  std::map<Mask, BigInt> terms{{outside, BigInt(1)}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!r.contains(i)) continue;
    std::map<Mask, BigInt> next = terms;
    for (const auto& [u, c] : terms) next[u | nodes[i].meet] -= c;
    terms.clear();
    for (auto& [u, c] : next)
      if (c != 0) terms.emplace(u, std::move(c));
  }
  BigInt total = 0;
  for (const auto& [u, c] : terms) total += c * big_pow(q, m - mask_size(u));
  return total;
}

std::optional<std::int64_t> class_weight(RFamily r, const OmegaLattice& lattice, std::uint64_t q,
                                         int m) {
  std::int64_t w = ipow(q, m - 1);
  const auto nodes = lattice.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!r.contains(i)) continue;
    if (nodes[i].meet_size == 0) return std::nullopt;
    w -= nodes[i].sign() * ipow(q, nodes[i].meet_size - 1);
  }
  return w;
}

CodeParameters complement_parameters(const SupportFamily& family, std::uint64_t q) {
  require_weight_range(q, family.m());
  const BigInt delta = delta_size(family, q);
  const BigInt qm = big_pow(q, family.m());
  if ((qm - delta) % (q - 1) != 0) throw ConsistencyError("q - 1 does not divide q^m - |Delta|");
  std::int64_t t = 0;
  for (Mask a : family.supports()) t += ipow(q, mask_size(a) - 1);
  CodeParameters p;
  p.q = static_cast<std::uint32_t>(q);
  p.n = to_i64((qm - delta) / (q - 1));
  p.k = family.m();
  p.d = ipow(q, family.m() - 1) - t;
  return p;
}

namespace {

// Total count and minimum weight must match the predicted parameters.
void check_spectrum(const Spectrum& s, std::uint64_t q, const char* who) {
  if (s.distribution.total() != big_pow(q, s.params.k))
    throw ConsistencyError(std::string(who) + ": multiplicities do not sum to q^k");
  if (s.distribution.min_nonzero() != s.params.d)
    throw ConsistencyError(std::string(who) + ": minimum weight differs from predicted d");
}

}  // namespace

Spectrum class_walk_spectrum(const SupportFamily& family, std::uint64_t q) {
  require_hypotheses(family, q);
  if (family.h() > kMaxLatticeWalkH)
    throw GuardError("the class walk supports h <= " + std::to_string(kMaxLatticeWalkH) +
                     "; use brute force");
  const int m = family.m();
  Spectrum out;
  out.params = complement_parameters(family, q);
  const OmegaLattice lattice(family);
  const auto nodes = lattice.nodes();

  // Nodes with empty intersection can never be in a nonempty class.
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].meet_size > 0) candidates.push_back(i);

  auto parents_present = [&](std::uint64_t members, std::size_t i) {
    if (nodes[i].order() < 2) return true;
    for (std::size_t b = 0; b < lattice.h(); ++b) {
      if (!(nodes[i].members >> b & 1)) continue;
      const std::size_t child = lattice.index_of(nodes[i].members & ~(std::uint32_t{1} << b));
      if (!(members >> child & 1)) return false;
    }
    return true;
  };

  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t pos,
                                                             std::uint64_t members) {
    if (pos == candidates.size()) {
      const RFamily r{members};
      const BigInt psi = psi_size(r, lattice, q, m);
      if (psi == 0) return;
      const auto w = class_weight(r, lattice, q, m);
      if (!w) throw ConsistencyError("nonempty class with an empty intersection");
      out.distribution.add(*w, psi);
      return;
    }
    const std::size_t i = candidates[pos];
    walk(pos + 1, members);
    if (parents_present(members, i)) walk(pos + 1, members | std::uint64_t{1} << i);
  };
  walk(0, 0);
  out.distribution.add(0, 1);
  check_spectrum(out, q, "class walk");
  return out;
}

Spectrum disjoint_spectrum(const SupportFamily& family, std::uint64_t q) {
  if (!check_preconditions(family, q).pairwise_disjoint)
    throw PreconditionError("pairwise-disjoint", "hypothesis failed: supports are not pairwise disjoint");
  const std::size_t h = family.h();
  if (h > 12) throw GuardError("disjoint enumerator supports h <= 12");
  const int m = family.m();
  require_weight_range(q, m);

  std::vector<int> sizes;
  int total_size = 0;
  for (Mask a : family.supports()) {
    sizes.push_back(mask_size(a));
    total_size += sizes.back();
  }

  Spectrum out;
  out.params.q = static_cast<std::uint32_t>(q);
  BigInt n_num = big_pow(q, m) + static_cast<long>(h) - 1;
  for (int s : sizes) n_num -= big_pow(q, s);
  out.params.n = to_i64(n_num / (q - 1));
  out.params.k = m;
  std::int64_t t = 0;
  for (int s : sizes) t += ipow(q, s - 1);
  out.params.d = ipow(q, m - 1) - t;

  out.distribution.add(0, 1);
  out.distribution.add(ipow(q, m - 1), big_pow(q, m - total_size) - 1);
  const std::uint32_t all = (std::uint32_t{1} << h) - 1;
  for (std::uint32_t r = 1; r <= all; ++r) {
    int out_size = 0;
    std::int64_t w = ipow(q, m - 1);
    for (std::size_t i = 0; i < h; ++i) {
      if (r >> i & 1)
        w -= ipow(q, sizes[i] - 1);
      else
        out_size += sizes[i];
    }
    BigInt mult = big_pow(q, m - out_size);
    for (std::uint32_t e = r; e != 0; e = (e - 1) & r) {
      int e_size = 0;
      for (std::size_t i = 0; i < h; ++i)
        if (e >> i & 1) e_size += sizes[i];
      const BigInt term = big_pow(q, m - e_size - out_size);
      if (__builtin_popcount(e) % 2 == 1)
        mult -= term;
      else
        mult += term;
    }
    out.distribution.add(w, mult);
  }
  check_spectrum(out, q, "disjoint enumerator");
  return out;
}

namespace {

// One row of a printed table: the weight is carried multiplied by q so that
// rows with a q^{-1} term (empty intersections) stay integral. Such rows
// always have multiplicity zero.
struct Row {
  BigInt weight_times_q;
  BigInt multiplicity;
};

Spectrum assemble(const std::vector<Row>& rows, CodeParameters params, std::uint64_t q) {
  Spectrum out;
  out.params = params;
  out.distribution.add(0, 1);
  for (const auto& row : rows) {
    if (row.multiplicity == 0) continue;
    if (row.multiplicity < 0) throw ConsistencyError("negative multiplicity in weight table");
    if (row.weight_times_q % q != 0)
      throw ConsistencyError("non-integral weight with nonzero multiplicity");
    out.distribution.add(to_i64(row.weight_times_q / q), row.multiplicity);
  }
  return out;
}

}  // namespace

ClosedFormSpectrum h_specialized_spectrum(const SupportFamily& family, std::uint64_t q) {
  const std::size_t h = family.h();
  if (h < 1 || h > 3)
    throw InvalidArgument("explicit tables cover h = 1, 2, 3; use the general class walk");
  const int m = family.m();
  require_weight_range(q, m);
  const auto pre = check_preconditions(family, q);
  if (!pre.size_bound)
    throw PreconditionError("size-bound", "hypothesis failed: q^m > sum of q^|A_i| does not hold");
  if (h == 3 && !pre.exclusive_part_nonempty)
    throw PreconditionError("exclusive-part",
                            "hypothesis failed: some A_i is covered by the union of the others");

  // Q(X) = q^{m-|X|}, W(X) = q^{|X|} (a weight term q^{|X|-1}, scaled by q).
  auto Q = [&](Mask x) { return big_pow(q, m - mask_size(x)); };
  auto W = [&](Mask x) { return big_pow(q, mask_size(x)); };
  const BigInt qm = big_pow(q, m);  // q^{m-1} scaled by q
  std::int64_t t = 0;
  for (Mask a : family.supports()) t += ipow(q, mask_size(a) - 1);

  CodeParameters params;
  params.q = static_cast<std::uint32_t>(q);
  params.k = m;
  params.d = ipow(q, m - 1) - t;

  std::vector<Row> rows;
  ClosedFormSpectrum out;
  if (h == 1) {
    const Mask a = family.support(0);
    params.n = to_i64((qm - W(a)) / (q - 1));
    rows = {{qm, Q(a) - 1}, {qm - W(a), qm - Q(a)}};
    out.tag = SpectrumMethod::h1;
  } else if (h == 2) {
    const Mask a1 = family.support(0), a2 = family.support(1);
    const Mask c = a1 & a2, u = a1 | a2;
    params.n = to_i64((qm - W(a1) - W(a2) + W(c)) / (q - 1));
    rows = {
        {qm, Q(u) - 1},
        {qm - W(a2), Q(a1) - Q(u)},
        {qm - W(a1), Q(a2) - Q(u)},
        {qm - W(a1) - W(a2), Q(c) - Q(a1) - Q(a2) + Q(u)},
        {qm - W(a1) - W(a2) + W(c), qm - Q(c)},
    };
    out.tag = SpectrumMethod::h2;
  } else {
    const Mask a1 = family.support(0), a2 = family.support(1), a3 = family.support(2);
    const Mask p12 = a1 & a2, p13 = a1 & a3, p23 = a2 & a3, i3 = a1 & a2 & a3;
    const Mask u = a1 | a2 | a3, pall = p12 | p13 | p23;
    const BigInt delta =
        W(a1) + W(a2) + W(a3) - W(p12) - W(p13) - W(p23) + W(i3);
    params.n = to_i64((qm - delta) / (q - 1));
    const BigInt sum = W(a1) + W(a2) + W(a3);
    rows = {
        {qm, Q(u) - 1},
        {qm - W(a1), Q(a2 | a3) - Q(u)},
        {qm - W(a2), Q(a1 | a3) - Q(u)},
        {qm - W(a3), Q(a1 | a2) - Q(u)},
        {qm - W(a1) - W(a2), Q(a3 | p12) - Q(a1 | a3) - Q(a2 | a3) + Q(u)},
        {qm - W(a1) - W(a2) + W(p12), Q(a3) - Q(a3 | p12)},
        {qm - W(a1) - W(a3), Q(a2 | p13) - Q(a1 | a2) - Q(a2 | a3) + Q(u)},
        {qm - W(a1) - W(a3) + W(p13), Q(a2) - Q(a2 | p13)},
        {qm - W(a2) - W(a3), Q(a1 | p23) - Q(a1 | a2) - Q(a1 | a3) + Q(u)},
        {qm - W(a2) - W(a3) + W(p23), Q(a1) - Q(a1 | p23)},
        {qm - sum, Q(pall) - Q(a1 | p23) - Q(a2 | p13) - Q(a3 | p12) + Q(a1 | a2) + Q(a1 | a3) +
                       Q(a2 | a3) - Q(u)},
        {qm - sum + W(p23), Q(p12 | p13) - Q(a1) - Q(pall) + Q(a1 | p23)},
        {qm - sum + W(p13), Q(p12 | p23) - Q(a2) - Q(pall) + Q(a2 | p13)},
        {qm - sum + W(p12), Q(p13 | p23) - Q(a3) - Q(pall) + Q(a3 | p12)},
        {qm - sum + W(p13) + W(p23), Q(p12) - Q(p12 | p13) - Q(p12 | p23) + Q(pall)},
        {qm - sum + W(p12) + W(p23), Q(p13) - Q(p12 | p13) - Q(p13 | p23) + Q(pall)},
        {qm - sum + W(p12) + W(p13), Q(p23) - Q(p12 | p23) - Q(p13 | p23) + Q(pall)},
        {qm - sum + W(p12) + W(p13) + W(p23),
         Q(i3) - Q(p12) - Q(p13) - Q(p23) + Q(p12 | p13) + Q(p12 | p23) + Q(p13 | p23) - Q(pall)},
        {qm - delta, qm - Q(i3)},
    };
    out.tag = SpectrumMethod::h3;
  }
  out.spectrum = assemble(rows, params, q);
  check_spectrum(out.spectrum, q, "explicit table");
  return out;
}

std::int64_t message_weight(std::span<const Element> a, const SupportFamily& family,
                         const OmegaLattice& lattice, std::uint64_t q) {
  if (a.size() != static_cast<std::size_t>(family.m()))
    throw InvalidArgument("message length does not match m");
  const Mask supp = support_of(a);
  if (supp == 0) throw InvalidArgument("weight formula needs a nonzero message");
  std::int64_t w = ipow(q, family.m() - 1);
  for (const auto& node : lattice.nodes())
    if ((node.meet & supp) != 0) w -= node.sign() * ipow(q, node.meet_size - 1);
  return w;
}

Spectrum star_spectrum(const SupportFamily& family, std::uint64_t q) {
  const Spectrum comp = family.h() <= kMaxLatticeWalkH
                            ? class_walk_spectrum(family, q)
                            : closed_form_spectrum(family, q).spectrum;
  const int m = family.m();
  const Mask u = family.union_mask();
  const BigInt divisor = big_pow(q, m - mask_size(u));
  const std::int64_t top = ipow(q, m - 1);

  // Multiset {q^{m-1} - wt(c_a) : a != 0} plus the zero codeword.
  WeightDistribution raw;
  raw.add(0, 1);
  for (const auto& [w, c] : comp.distribution.counts())
    if (w != 0) raw.add(top - w, c);

  Spectrum out;
  for (const auto& [w, c] : raw.counts()) {
    if (c % divisor != 0) throw ConsistencyError("star multiplicity not divisible by q^(m-|union|)");
    out.distribution.add(w, c / divisor);
  }
  const BigInt delta = delta_size(family, q);
  out.params.q = static_cast<std::uint32_t>(q);
  out.params.n = to_i64((delta - 1) / (q - 1));
  out.params.k = mask_size(u);
  out.params.d = ipow(q, mask_size(family.support(0)) - 1);
  check_spectrum(out, q, "star spectrum");
  return out;
}

ClosedFormSpectrum closed_form_spectrum(const SupportFamily& family, std::uint64_t q) {
  require_hypotheses(family, q);
  if (family.h() <= 3) return h_specialized_spectrum(family, q);
  if (check_preconditions(family, q).pairwise_disjoint)
    return {disjoint_spectrum(family, q), SpectrumMethod::disjoint};
  return {class_walk_spectrum(family, q), SpectrumMethod::class_walk};
}

}  // namespace simplicode

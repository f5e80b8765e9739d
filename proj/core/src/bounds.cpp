#include "simplicode/bounds.hpp"

#include "simplicode/errors.hpp"
#include "simplicode/spectra.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace simplicode {

std::int64_t griesmer_sum(int k, std::int64_t d, std::uint64_t q) {
  if (k < 1 || d < 1) throw InvalidArgument("griesmer_sum needs k >= 1 and d >= 1");
  std::int64_t sum = 0;
  std::int64_t power = 1;  // q^i, saturated once it reaches d
  for (int i = 0; i < k; ++i) {
    if (power >= d) {
      sum += k - i;  // every remaining term is 1
      break;
    }
    sum += (d + power - 1) / power;
    power *= static_cast<std::int64_t>(q);
  }
  return sum;
}

TDecomposition t_decompose(std::int64_t t, std::uint64_t q, int m) {
  if (m < 2) throw InvalidArgument("t_decompose needs m >= 2");
  std::int64_t bound = 1;
  for (int i = 0; i < m - 1; ++i) bound *= static_cast<std::int64_t>(q);
  if (t < 1 || t >= bound)
    throw InvalidArgument("T = " + std::to_string(t) + " outside [1, q^(m-1))");
  TDecomposition out;
  out.t = t;
  out.digits.assign(m - 1, 0);
  std::int64_t rest = t;
  for (int j = 0; j < m - 1; ++j) {
    out.digits[j] = static_cast<int>(rest % static_cast<std::int64_t>(q));
    rest /= static_cast<std::int64_t>(q);
  }
  out.v = -1;
  for (int j = 0; j < m - 1; ++j) {
    if (out.digits[j] == 0) continue;
    out.ell += out.digits[j];
    if (out.v < 0) out.v = j;
    out.u = j;
  }
  return out;
}

std::pair<std::int64_t, std::int64_t> griesmer_closed_form(std::int64_t t, std::uint64_t q, int m) {
  const TDecomposition dec = t_decompose(t, q, m);
  std::int64_t qm = 1;
  for (int i = 0; i < m; ++i) qm *= static_cast<std::int64_t>(q);
  const std::int64_t qi = static_cast<std::int64_t>(q);
  const std::int64_t num = qm - 1 - qi * t + dec.ell;
  if (num % (qi - 1) != 0) throw ConsistencyError("Griesmer closed form is not integral");
  const std::int64_t g = num / (qi - 1);
  return {g, g + dec.v + 1};
}

std::string_view to_string(DistanceOptimality d) {
  switch (d) {
    case DistanceOptimality::griesmer_implied: return "griesmer-implied";
    case DistanceOptimality::sufficient_condition_met: return "sufficient-condition-met";
    case DistanceOptimality::unknown: return "unknown";
  }
  return "unknown";
}

DistanceOptimality OptimalityReport::distance_optimal() const {
  if (is_griesmer) return DistanceOptimality::griesmer_implied;
  if (distance_optimal_sufficient) return DistanceOptimality::sufficient_condition_met;
  return DistanceOptimality::unknown;
}

OptimalityReport classify_numeric(const CodeParameters& params) {
  OptimalityReport r;
  r.n = params.n;
  r.k = params.k;
  r.d = params.d;
  r.q = params.q;
  r.g_kd = griesmer_sum(params.k, params.d, params.q);
  r.g_kd1 = griesmer_sum(params.k, params.d + 1, params.q);
  r.is_griesmer = r.n == r.g_kd;
  r.is_near_griesmer = r.n - r.g_kd == 1;
  r.distance_optimal_sufficient = r.g_kd1 > r.n;
  return r;
}

namespace {

void expect(bool numeric, bool combinatorial, const std::string& what, const SupportFamily& family,
            std::uint64_t q) {
  if (numeric != combinatorial)
    throw ConsistencyError(what + " disagrees with the numeric Griesmer classification for q=" +
                           std::to_string(q) + ", " + format_family(family));
}

std::int64_t ipow(std::uint64_t q, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= static_cast<std::int64_t>(q);
  return r;
}

}  // namespace

OptimalityReport classify(const SupportFamily& family, std::uint64_t q, const CodeParameters& params) {
  OptimalityReport r = classify_numeric(params);
  const auto pre = check_preconditions(family, q);
  if (!pre.hypotheses_hold() || params != complement_parameters(family, q)) return r;

  const int m = family.m();
  const std::int64_t h = static_cast<std::int64_t>(family.h());
  const std::int64_t qi = static_cast<std::int64_t>(q);
  std::vector<int> sizes;
  std::int64_t t = 0;
  for (Mask a : family.supports()) {
    sizes.push_back(mask_size(a));
    t += ipow(q, sizes.back() - 1);
  }
  const TDecomposition dec = t_decompose(t, q, m);
  const auto [g_closed, g1_closed] = griesmer_closed_form(t, q, m);
  if (g_closed != r.g_kd || g1_closed != r.g_kd1)
    throw ConsistencyError("closed-form Griesmer sums differ from the direct ceiling sums");

  const std::int64_t delta = delta_size(family, q).convert_to<std::int64_t>();
  std::map<int, int> same;
  for (int s : sizes) ++same[s];
  const bool few_equal = std::all_of(same.begin(), same.end(),
                                     [&](const auto& kv) { return kv.second <= static_cast<int>(q) - 1; });

  // General criteria.
  expect(r.is_griesmer, pre.pairwise_disjoint && few_equal, "Griesmer criterion", family, q);
  expect(r.distance_optimal_sufficient, delta - 1 + (qi - 1) * (dec.v + 1) > qi * t - dec.ell,
         "distance-optimality criterion", family, q);

  if (pre.pairwise_disjoint) {
    expect(r.is_near_griesmer, dec.ell == h - (qi - 1), "disjoint near-Griesmer criterion", family, q);
    expect(r.distance_optimal_sufficient, dec.ell + (qi - 1) * (dec.v + 1) > h,
           "disjoint distance-optimality criterion", family, q);
  }

  if (h == 1) {
    r.case_label = "single-support";
    expect(r.is_griesmer, true, "single-support Griesmer claim", family, q);
  } else if (h == 2) {
    const int a1 = sizes[0], a2 = sizes[1];
    const int c = mask_size(family.support(0) & family.support(1));
    const bool equal = a1 == a2;
    expect(dec.ell == (q == 2 && equal ? 1 : 2), true, "two-support digit sum", family, q);
    expect(dec.v == (q == 2 && equal ? a1 : a1 - 1), true, "two-support lowest digit", family, q);
    if (c == 0 && equal) {
      r.case_label = "two-support-case1";
      if (q == 2) {
        expect(r.is_near_griesmer && r.distance_optimal_sufficient, true, "two-support case 1 (q=2)", family, q);
      } else {
        expect(r.is_griesmer, true, "two-support case 1 (q>2)", family, q);
      }
    } else if (c == 0) {
      r.case_label = "two-support-case2";
      expect(r.is_griesmer, true, "two-support case 2", family, q);
    } else if (equal) {
      r.case_label = "two-support-case3";
      expect(r.distance_optimal_sufficient,
             dec.ell + (qi - 1) * (dec.v + 1) > ipow(q, c) + 1, "two-support case 3", family, q);
      if (q > 2 && c == 1) expect(r.is_near_griesmer, true, "two-support case 3 near-Griesmer", family, q);
    } else {
      r.case_label = "two-support-case4";
      expect(r.distance_optimal_sufficient, (qi - 1) * a1 + 1 > ipow(q, c), "two-support case 4", family, q);
      expect(r.is_near_griesmer, c == 1, "two-support case 4 near-Griesmer", family, q);
    }
  } else if (h == 3) {
    const Mask s1 = family.support(0), s2 = family.support(1), s3 = family.support(2);
    const int c12 = mask_size(s1 & s2), c13 = mask_size(s1 & s3), c23 = mask_size(s2 & s3);
    const int c123 = mask_size(s1 & s2 & s3);
    const int a1 = sizes[0], a2 = sizes[1], a3 = sizes[2];
    const int ones = (c12 == 1) + (c13 == 1) + (c23 == 1);
    const int zeros = (c12 == 0) + (c13 == 0) + (c23 == 0);

    expect(r.distance_optimal_sufficient,
           (qi - 1) * (dec.v + 1) + dec.ell - 1 >
               ipow(q, c12) + ipow(q, c13) + ipow(q, c23) - ipow(q, c123),
           "three-support distance-optimality criterion", family, q);
    if (q == 2) {
      const int expected_ell = (a1 == a2 && a2 == a3 - 1)                     ? 1
                               : ((a1 == a2 && a2 < a3 - 1) || a2 == a3) ? 2
                                                                          : 3;
      expect(dec.ell == expected_ell, true, "three-support binary digit sum", family, q);
    }

    if (pre.pairwise_disjoint && few_equal) {
      r.case_label = "three-support-griesmer";
    } else if (ones == 1 && zeros == 2 && few_equal) {
      r.case_label = "three-support-near-i";
      expect(r.is_near_griesmer, true, "three-support near-Griesmer condition i", family, q);
    } else if (q == 3 && pre.pairwise_disjoint && a1 == a2 && a2 == a3) {
      r.case_label = "three-support-near-ii";
      expect(r.is_near_griesmer, true, "three-support near-Griesmer condition ii", family, q);
    } else if (q == 2 && pre.pairwise_disjoint && ((a1 == a2 && a2 < a3 - 1) || (a2 == a3))) {
      r.case_label = "three-support-near-iii";
      expect(r.is_near_griesmer, true, "three-support near-Griesmer condition iii", family, q);
    }
  }
  return r;
}

}  // namespace simplicode

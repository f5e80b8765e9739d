#pragma once

#include "simplicode/codes.hpp"
#include "simplicode/complexes.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace simplicode {

/// g(k, d) = sum_{i=0}^{k-1} ceil(d / q^i).
std::int64_t griesmer_sum(int k, std::int64_t d, std::uint64_t q);

/// Base-q digits of 1 <= T < q^(m-1) and their statistics.
struct TDecomposition {
  std::int64_t t = 0;
  std::vector<int> digits;  // t_0 .. t_{m-2}
  int ell = 0;              // digit sum
  int v = 0;                // lowest nonzero position
  int u = 0;                // highest nonzero position
};

/// Throws InvalidArgument unless 1 <= T < q^(m-1).
TDecomposition t_decompose(std::int64_t t, std::uint64_t q, int m);

/// Closed forms of g(m, q^(m-1) - T) and g(m, q^(m-1) - T + 1).
std::pair<std::int64_t, std::int64_t> griesmer_closed_form(std::int64_t t, std::uint64_t q, int m);

enum class DistanceOptimality { griesmer_implied, sufficient_condition_met, unknown };

std::string_view to_string(DistanceOptimality d);

struct OptimalityReport {
  std::int64_t n = 0;
  int k = 0;
  std::int64_t d = 0;
  std::uint64_t q = 0;
  std::int64_t g_kd = 0;
  std::int64_t g_kd1 = 0;
  bool is_griesmer = false;
  bool is_near_griesmer = false;
  /// g(k, d+1) > n, so no [n, k, d+1] code exists.
  bool distance_optimal_sufficient = false;
  std::optional<std::string> case_label;

  DistanceOptimality distance_optimal() const;
};

/// Numeric Griesmer classification of arbitrary parameters.
OptimalityReport classify_numeric(const CodeParameters& params);

/// Classification of the complement code of a family. When the parameters
/// are those of the complement code and the closed-form hypotheses hold, the
/// numeric verdicts are cross-checked against the combinatorial criteria
/// (general, disjoint, h = 2 and h = 3 cases) and the matching printed case
/// is recorded in case_label. A disagreement throws ConsistencyError.
OptimalityReport classify(const SupportFamily& family, std::uint64_t q, const CodeParameters& params);

}  // namespace simplicode

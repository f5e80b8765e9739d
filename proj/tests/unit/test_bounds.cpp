#include "simplicode/bounds.hpp"
#include "simplicode/errors.hpp"
#include "simplicode/spectra.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace simplicode;

namespace {

SupportFamily fam(int m, std::vector<std::vector<int>> supports) {
  std::vector<Mask> s;
  for (auto& a : supports) s.push_back(mask_from_coordinates(a));
  return SupportFamily::create(m, s);
}

OptimalityReport classify_family(const SupportFamily& f, std::uint64_t q) {
  return classify(f, q, complement_parameters(f, q));
}

}  // namespace

TEST_CASE("griesmer_sum examples") {
  CHECK(griesmer_sum(5, 78, 3) == 117);
  CHECK(griesmer_sum(5, 78, 3) == 78 + 26 + 9 + 3 + 1);
  for (std::int64_t d : {1, 7, 100}) CHECK(griesmer_sum(1, d, 5) == d);
  const auto g6 = griesmer_sum(12, 1872, 2);
  CHECK(g6 == oracle::griesmer(12, 1872, 2));
  CHECK(g6 <= 3770);
  CHECK_THROWS_AS(griesmer_sum(0, 3, 2), InvalidArgument);
}

TEST_CASE("griesmer_sum matches the plain sum") {
  for (std::uint64_t q : {2, 3, 4, 5, 7})
    for (int k = 1; k <= 8; ++k)
      for (std::int64_t d = 1; d <= 400; ++d) REQUIRE(griesmer_sum(k, d, q) == oracle::griesmer(k, d, q));
}

TEST_CASE("t_decompose examples") {
  const auto t3 = t_decompose(3, 3, 5);
  CHECK(t3.digits == std::vector<int>{0, 1, 0, 0});
  CHECK(t3.ell == 1);
  CHECK(t3.v == 1);
  CHECK(t3.u == 1);
  const auto t6 = t_decompose(6, 3, 5);
  CHECK(t6.digits == std::vector<int>{0, 2, 0, 0});
  CHECK(t6.ell == 2);
  CHECK(t6.v == 1);
  CHECK(t6.u == 1);
  for (std::uint64_t q : {2, 3, 7}) {
    const auto t1 = t_decompose(1, q, 4);
    CHECK(t1.ell == 1);
    CHECK(t1.v == 0);
    CHECK(t1.u == 0);
  }
  CHECK_THROWS_AS(t_decompose(0, 3, 5), InvalidArgument);
  CHECK_THROWS_AS(t_decompose(81, 3, 5), InvalidArgument);
}

TEST_CASE("griesmer_closed_form examples") {
  CHECK(griesmer_closed_form(3, 3, 5).first == 117);
  CHECK(griesmer_closed_form(6, 3, 5).first == 113);
  CHECK(griesmer_closed_form(1, 2, 4) == std::pair<std::int64_t, std::int64_t>{14, 15});
  CHECK_THROWS_AS(griesmer_closed_form(8, 2, 4), InvalidArgument);
}

TEST_CASE("griesmer closed forms equal the ceiling sums") {
  for (std::uint64_t q : {2, 3, 5})
    for (int m = 2; m <= 6; ++m) {
      const std::int64_t top = static_cast<std::int64_t>(oracle::ipow(q, m - 1));
      for (std::int64_t t = 1; t < top; ++t) {
        const auto [g, g1] = griesmer_closed_form(t, q, m);
        REQUIRE(g == oracle::griesmer(m, top - t, q));
        REQUIRE(g1 == oracle::griesmer(m, top - t + 1, q));
      }
    }
}

TEST_CASE("classify examples") {
  const auto ex2 = classify_family(fam(5, {{1, 2}, {3, 4}}), 3);
  CHECK(ex2.is_griesmer);
  CHECK(ex2.distance_optimal() == DistanceOptimality::griesmer_implied);

  const auto ex4 = classify_family(fam(5, {{1}, {2}, {3}}), 3);
  CHECK(ex4.is_near_griesmer);
  CHECK_FALSE(ex4.is_griesmer);
  CHECK(ex4.case_label == "three-support-near-ii");

  const auto bin = classify_family(fam(6, {{1, 2}, {3, 4}}), 2);
  CHECK(bin.case_label == "two-support-case1");
  CHECK(bin.is_near_griesmer);
  CHECK(bin.distance_optimal_sufficient);
  CHECK(bin.distance_optimal() == DistanceOptimality::sufficient_condition_met);

  const auto ex1 = classify_family(fam(5, {{1, 2}}), 3);
  CHECK(ex1.is_griesmer);
  CHECK(ex1.case_label == "single-support");
  CHECK(ex1.g_kd == 117);
  CHECK(ex1.g_kd1 == 119);
}

TEST_CASE("numeric classification without a family") {
  const auto r = classify_numeric(CodeParameters{2, 3770, 12, 1872});
  CHECK(r.g_kd == oracle::griesmer(12, 1872, 2));
  CHECK_FALSE(r.is_griesmer);
  CHECK_FALSE(r.is_near_griesmer);
  CHECK(r.distance_optimal() == DistanceOptimality::unknown);
  CHECK(to_string(DistanceOptimality::griesmer_implied) == "griesmer-implied");
  CHECK(to_string(DistanceOptimality::sufficient_condition_met) == "sufficient-condition-met");
  CHECK(to_string(DistanceOptimality::unknown) == "unknown");
}

TEST_CASE("griesmer codes are distance-optimal") {
  for (std::uint64_t q : {2, 3, 4})
    for (int k = 1; k <= 6; ++k)
      for (std::int64_t d = 1; d <= 200; ++d) {
        const std::int64_t n = oracle::griesmer(k, d, q);
        const auto r = classify_numeric(CodeParameters{static_cast<std::uint32_t>(q), n, k, d});
        REQUIRE(r.is_griesmer);
        REQUIRE(r.distance_optimal_sufficient);
      }
}

TEST_CASE("criteria agree with numeric classification on random families") {
  // classify throws ConsistencyError on any disagreement
  gen::Rng rng(501);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t q = gen::uniform(rng, 2, 5);
    const int m = gen::uniform(rng, 2, 8);
    const auto f = gen::hypothesis_family(rng, m, 3, q);
    CAPTURE(q);
    CAPTURE(format_family(f));
    REQUIRE_NOTHROW(classify_family(f, q));
    const auto r = classify_family(f, q);
    REQUIRE(r.n - r.g_kd >= 0);
    if (f.h() == 1) REQUIRE(r.is_griesmer);
  }
}

TEST_CASE("star codes are never Griesmer beyond the simplex case") {
  // g(k, d+1) > n only for q = 2, h = 2 with two supports of size 2
  for (std::uint64_t q : {2, 3, 4}) {
    gen::Rng rng(502 + q);
    for (int i = 0; i < 400; ++i) {
      const int m = gen::uniform(rng, 3, 8);
      const auto f = gen::hypothesis_family(rng, m, 4, q);
      if (f.h() < 2 || mask_size(f.support(f.h() - 1)) < 2) continue;
      const auto s = star_spectrum(f, q);
      const auto r = classify_numeric(s.params);
      CAPTURE(q);
      CAPTURE(format_family(f));
      REQUIRE_FALSE(r.is_griesmer);
      const bool exception = q == 2 && f.h() == 2 && mask_size(f.support(0)) == 2 && mask_size(f.support(1)) == 2;
      if (r.distance_optimal_sufficient) REQUIRE(exception);
    }
  }
}

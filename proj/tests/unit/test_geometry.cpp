#include "simplicode/complexes.hpp"
#include "simplicode/errors.hpp"
#include "simplicode/geometry.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <set>

using namespace simplicode;

namespace {

std::vector<Vector> points(const DefiningSet& ds) {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < ds.size(); ++j) out.emplace_back(ds.point(j).begin(), ds.point(j).end());
  return out;
}

std::vector<Vector> lists(std::initializer_list<std::initializer_list<std::uint32_t>> rows) {
  std::vector<Vector> out;
  for (auto r : rows) {
    Vector v;
    for (auto x : r) v.push_back(Element(x));
    out.push_back(v);
  }
  return out;
}

}  // namespace

TEST_CASE("enumerate_pg examples") {
  CHECK(enumerate_pg(FieldSpec(3), 5).size() == 121);
  CHECK(points(enumerate_pg(FieldSpec(2), 2)) == lists({{0, 1}, {1, 0}, {1, 1}}));
  CHECK(enumerate_pg(FieldSpec(4), 3).size() == 21);
}

TEST_CASE("enumerate_pg matches the reference walk") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
    for (int m = 1; m <= 4; ++m) {
      CAPTURE(q);
      CAPTURE(m);
      REQUIRE(points(enumerate_pg(FieldSpec(q), m)) == oracle::pg_points(q, m));
    }
}

TEST_CASE("complement_defining_set examples") {
  const FieldSpec f3(3), f2(2);
  const std::vector<Mask> ex1{0b11};
  CHECK(complement_defining_set(SupportFamily::create(5, ex1), f3).size() == 117);
  const std::vector<Mask> ex3{0b11, 0b1110};
  CHECK(complement_defining_set(SupportFamily::create(5, ex3), f3).size() == 105);
  const std::vector<Mask> one{0b1};
  CHECK(points(complement_defining_set(SupportFamily::create(2, one), f2)) == lists({{0, 1}, {1, 1}}));
}

TEST_CASE("star_defining_set examples") {
  const std::vector<Mask> ex3{0b11, 0b1110};
  const auto fam3 = SupportFamily::create(5, ex3);
  CHECK(star_defining_set(fam3, FieldSpec(3)).size() == (oracle::delta_count(5, fam3.supports(), 3) - 1) / 2);
  CHECK(star_defining_set(fam3, FieldSpec(3)).size() == 16);
  const std::vector<Mask> a12{0b11};
  CHECK(star_defining_set(SupportFamily::create(4, a12), FieldSpec(2)).size() == 3);
}

TEST_CASE("canonical points") {
  const FieldSpec f(5);
  CHECK(is_canonical(std::vector<Element>{Element(0), Element(1), Element(3)}));
  CHECK_FALSE(is_canonical(std::vector<Element>{Element(0), Element(2), Element(3)}));
  CHECK_FALSE(is_canonical(std::vector<Element>{Element(0), Element(0)}));
  const Vector v{Element(0), Element(2), Element(4)};
  const auto p = ProjectivePoint::normalize(f, v);
  CHECK(p.coords()[1] == Element(1));
  CHECK(p.coords()[2] == Element(2));  // 4 / 2
  CHECK_THROWS_AS(ProjectivePoint{v}, InvalidArgument);
}

TEST_CASE("complement and star partition PG(m-1,q)") {
  gen::Rng rng(201);
  for (int i = 0; i < 120; ++i) {
    const std::uint32_t q = std::vector<std::uint32_t>{2, 3, 4, 5}[gen::uniform(rng, 0, 3)];
    const int m = gen::uniform(rng, 2, q <= 3 ? 7 : 5);
    const FieldSpec field(q);
    const auto fam = gen::family(rng, m, 3);
    CAPTURE(format_family(fam));
    const auto c = complement_defining_set(fam, field);
    const auto s = star_defining_set(fam, field);
    const std::uint64_t total = (oracle::ipow(q, m) - 1) / (q - 1);
    REQUIRE(c.size() + s.size() == total);
    REQUIRE(BigInt(c.size()) * (q - 1) + delta_size(fam, q) == BigInt(oracle::ipow(q, m)));
    REQUIRE(points(c) == oracle::code_columns(q, m, fam.supports(), true));
    REQUIRE(points(s) == oracle::code_columns(q, m, fam.supports(), false));

    std::set<Vector> seen;
    for (const auto& p : points(c)) {
      REQUIRE(is_canonical(p));
      REQUIRE(seen.insert(p).second);
    }
  }
}

TEST_CASE("matrix text") {
  const auto pg = enumerate_pg(FieldSpec(2), 2);
  CHECK(to_matrix_text(pg) == "0 1 1\n1 0 1\n");
}

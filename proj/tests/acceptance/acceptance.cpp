// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include "cli.hpp"

#include "simplicode/bounds.hpp"
#include "simplicode/codes.hpp"
#include "simplicode/errors.hpp"
#include "simplicode/geometry.hpp"
#include "simplicode/spectra.hpp"

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

using namespace simplicode;

namespace {

using Counts = std::map<std::int64_t, BigInt>;

// Runtime limits in seconds.
constexpr double kLimitSingleSupport = 1.0;
constexpr double kLimitTernaryFamilies = 4.0;  // 1 s each
constexpr double kLimitBinary19Weight = 10.0;
constexpr double kLimitIdentitySweep = 5.0;
constexpr double kLimitEquivalence = 60.0;
constexpr double kLimitClassification = 60.0;
constexpr double kLimitProjectivity = 60.0;
constexpr double kLimitStar = 30.0;
constexpr double kLimitDegenerations = 10.0;

// Exact agreement is required everywhere; no tolerance applies.
constexpr int kEquivalenceFamilies = 200;
constexpr int kStarFamilies = 50;
const std::map<std::uint32_t, int> kEquivalenceMaxM{{2, 8}, {3, 8}, {4, 8}, {5, 6}};

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Failure {
 public:
  void fail(const std::string& what) {
    if (ok_) detail_ = what;
    ok_ = false;
  }
  void expect(bool condition, const std::string& what) {
    if (!condition) fail(what);
  }
  Outcome outcome(const std::string& summary) const { return {ok_, ok_ ? summary : detail_}; }

 private:
  bool ok_ = true;
  std::string detail_;
};

SupportFamily fam(int m, std::vector<std::vector<int>> supports) {
  std::vector<Mask> s;
  for (auto& a : supports) s.push_back(mask_from_coordinates(a));
  return SupportFamily::create(m, s);
}

Counts counts(std::initializer_list<std::pair<std::int64_t, std::int64_t>> xs) {
  Counts out{{0, 1}};
  for (auto [w, c] : xs) out[w] = c;
  return out;
}

Spectrum brute(const SupportFamily& f, std::uint32_t q, bool complement = true) {
  const FieldSpec field(q);
  const auto ds = complement ? complement_defining_set(f, field) : star_defining_set(f, field);
  return brute_force_spectrum(build_generator(ds), field);
}

std::string params_text(const CodeParameters& p) {
  return "[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.d) + "]";
}

struct Example {
  const char* name;
  std::uint32_t q;
  SupportFamily family;
  CodeParameters params;
  Counts enumerator;
};

// Checks every closed form that applies plus brute force against the expected values.
void check_example(Failure& f, const Example& ex) {
  std::vector<std::pair<std::string, Spectrum>> methods;
  methods.emplace_back("brute", brute(ex.family, ex.q));
  methods.emplace_back("general", class_walk_spectrum(ex.family, ex.q));
  methods.emplace_back("h-table", h_specialized_spectrum(ex.family, ex.q).spectrum);
  if (check_preconditions(ex.family, ex.q).pairwise_disjoint)
    methods.emplace_back("disjoint", disjoint_spectrum(ex.family, ex.q));
  for (const auto& [name, s] : methods) {
    f.expect(s.params == ex.params, std::string(ex.name) + " " + name + " gives " + params_text(s.params));
    f.expect(oracle::as_map(s.distribution) == ex.enumerator,
             std::string(ex.name) + " " + name + " enumerator " + cli::format_enumerator(s.distribution));
  }
}

Outcome single_support() {
  Failure f;
  check_example(f, {"A={{1,2}}", 3, fam(5, {{1, 2}}), {3, 117, 5, 78}, counts({{78, 216}, {81, 26}})});
  const auto h1 = h_specialized_spectrum(fam(5, {{1, 2}}), 3);
  f.expect(h1.tag == SpectrumMethod::h1, "single-support table not selected");
  return f.outcome("[117,5,78], 1 + 216z^78 + 26z^81 by brute force, single-support table, class walk");
}

Outcome ternary_families() {
  Failure f;
  const std::vector<Example> examples{
      {"A={{1,2},{3,4}}", 3, fam(5, {{1, 2}, {3, 4}}), {3, 113, 5, 75}, counts({{75, 192}, {78, 48}, {81, 2}})},
      {"A={{1,2},{2,3,4}}", 3, fam(5, {{1, 2}, {2, 3, 4}}), {3, 105, 5, 69},
       counts({{69, 48}, {70, 162}, {72, 24}, {78, 6}, {81, 2}})},
      {"A={{1},{2},{3}}", 3, fam(5, {{1}, {2}, {3}}), {3, 118, 5, 78}, counts({{78, 72}, {79, 108}, {80, 54}, {81, 8}})},
      {"A={{1,2},{1,3},{4}}", 3, fam(5, {{1, 2}, {1, 3}, {4}}), {3, 113, 5, 74},
       counts({{74, 24}, {75, 120}, {76, 54}, {77, 24}, {78, 12}, {80, 6}, {81, 2}})},
  };
  for (const auto& ex : examples) {
    const auto start = std::chrono::steady_clock::now();
    check_example(f, ex);
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    f.expect(s < 1.0, std::string(ex.name) + " took " + std::to_string(s) + " s");
  }
  return f.outcome("[113,5,75], [105,5,69], [118,5,78], [113,5,74] with exact enumerators, all methods agree");
}

Outcome binary_19_weight() {
  Failure f;
  const auto family = fam(12, {{1, 2, 3, 4, 5}, {1, 2, 6, 7, 8, 9}, {1, 3, 4, 6, 7, 8, 10, 11}});
  const Counts expected = counts({{1872, 6},   {1874, 24},  {1876, 48},  {1878, 96}, {1880, 112},
                                  {1882, 224}, {1884, 672}, {1885, 2048}, {1886, 672}, {1888, 6},
                                  {1896, 112}, {1904, 6},   {1908, 48},  {1920, 6},  {2000, 2},
                                  {2002, 8},   {2016, 2},   {2032, 2},   {2048, 1}});
  const auto b = brute(family, 2);
  const auto table = h_specialized_spectrum(family, 2);
  f.expect(table.tag == SpectrumMethod::h3, "three-support table not selected");
  for (const auto& [name, s] : {std::pair<std::string, const Spectrum&>{"brute", b}, {"table", table.spectrum}}) {
    f.expect(s.params == CodeParameters{2, 3770, 12, 1872}, name + " gives " + params_text(s.params));
    f.expect(oracle::as_map(s.distribution) == expected, name + " enumerator differs");
    f.expect(s.distribution.distinct_nonzero() == 19, name + " weight count differs");
  }
  return f.outcome("[3770,12,1872], 19 weights coefficient-for-coefficient, brute force = table");
}

Outcome identity_sweep() {
  Failure f;
  long checked = 0;
  for (std::uint64_t q : {2, 3, 5})
    for (int m = 2; m <= 6; ++m) {
      const auto top = static_cast<std::int64_t>(oracle::ipow(q, m - 1));
      for (std::int64_t t = 1; t < top; ++t, ++checked) {
        const auto [g, g1] = griesmer_closed_form(t, q, m);
        const auto dg = oracle::griesmer(m, top - t, q), dg1 = oracle::griesmer(m, top - t + 1, q);
        f.expect(g == dg && g1 == dg1, "q=" + std::to_string(q) + " m=" + std::to_string(m) +
                                           " T=" + std::to_string(t) + " closed form differs");
        f.expect(griesmer_sum(m, top - t, q) == dg, "library ceiling sum differs");
      }
    }
  return f.outcome(std::to_string(checked) + " values of T, both identities exact");
}

Outcome equivalence() {
  Failure f;
  gen::Rng rng(20240501);
  const std::vector<std::uint32_t> qs{2, 3, 4, 5};
  for (int i = 0; i < kEquivalenceFamilies; ++i) {
    const std::uint32_t q = qs[i % qs.size()];
    const int m = gen::uniform(rng, 2, kEquivalenceMaxM.at(q));
    const auto family = gen::hypothesis_family(rng, m, 3, q);
    const auto b = brute(family, q);
    const auto closed = closed_form_spectrum(family, q);
    const auto walk = class_walk_spectrum(family, q);
    const std::string where = "q=" + std::to_string(q) + " " + format_family(family);
    f.expect(closed.spectrum.distribution == b.distribution, "table differs from brute force for " + where);
    f.expect(walk.distribution == b.distribution, "class walk differs from brute force for " + where);
    f.expect(closed.spectrum.params == b.params && walk.params == b.params, "parameters differ for " + where);
  }
  return f.outcome(std::to_string(kEquivalenceFamilies) + " random families, distributions identical");
}

Outcome classification() {
  Failure f;
  long families = 0, with_cases = 0;
  for (std::uint64_t q : {2, 3, 4})
    for (int m = 2; m <= 7; ++m)
      for (const auto& family : cli::canonical_families(m, 3)) {
        const auto pre = check_preconditions(family, q);
        if (!pre.hypotheses_hold()) continue;
        ++families;
        const std::string where = "q=" + std::to_string(q) + " " + format_family(family);
        const auto params = complement_parameters(family, q);
        OptimalityReport r;
        try {
          r = classify(family, q, params);  // asserts every case label against the numbers
        } catch (const ConsistencyError& e) {
          f.fail(e.what());
          continue;
        }
        with_cases += r.case_label.has_value();
        const std::int64_t gap = params.n - oracle::griesmer(m, params.d, q);
        f.expect(gap >= 0, "negative Griesmer gap for " + where);

        // Griesmer iff disjoint supports with at most q-1 of any one size
        std::map<int, int> sizes;
        std::int64_t t = 0;
        for (Mask a : family.supports()) {
          ++sizes[mask_size(a)];
          t += static_cast<std::int64_t>(oracle::ipow(q, mask_size(a) - 1));
        }
        bool few = true;
        for (auto [s, c] : sizes) few = few && c <= static_cast<int>(q) - 1;
        f.expect((gap == 0) == (pre.pairwise_disjoint && few), "Griesmer criterion mismatch for " + where);

        // disjoint: near-Griesmer iff the base-q digit sum of T is h - (q-1)
        if (pre.pairwise_disjoint) {
          int ell = 0;
          for (std::int64_t x = t; x > 0; x /= static_cast<std::int64_t>(q)) ell += x % static_cast<std::int64_t>(q);
          f.expect((gap == 1) == (ell == static_cast<int>(family.h()) - (static_cast<int>(q) - 1)),
                   "disjoint near-Griesmer criterion mismatch for " + where);
        }
        f.expect(r.is_griesmer == (gap == 0) && r.is_near_griesmer == (gap == 1), "report flags differ for " + where);
      }
  return f.outcome(std::to_string(families) + " canonical families, " + std::to_string(with_cases) +
                   " with case labels, zero mismatches");
}

Outcome projectivity() {
  Failure f;
  long codes = 0;
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const FieldSpec field(q);
    for (int m = 2; m <= 7; ++m)
      for (const auto& family : cli::canonical_families(m, 3)) {
        const std::string where = "q=" + std::to_string(q) + " " + format_family(family);
        f.expect(dual_distance_at_least(build_generator(complement_defining_set(family, field)), field, 3),
                 "complement code not projective for " + where);
        f.expect(dual_distance_at_least(build_generator(star_defining_set(family, field)), field, 3),
                 "star code not projective for " + where);
        codes += 2;
      }
  }
  return f.outcome(std::to_string(codes) + " codes with pairwise independent columns");
}

Outcome star_codes() {
  Failure f;
  gen::Rng rng(20240502);
  const std::vector<std::uint32_t> qs{2, 3, 4, 5};
  for (int i = 0; i < kStarFamilies; ++i) {
    const std::uint32_t q = qs[i % qs.size()];
    const int m = gen::uniform(rng, 2, q <= 3 ? 8 : 6);
    const auto family = gen::hypothesis_family(rng, m, 3, q);
    const std::string where = "q=" + std::to_string(q) + " " + format_family(family);
    const auto b = brute(family, q, false);
    const auto closed = star_spectrum(family, q);
    f.expect(b.distribution == closed.distribution, "star spectrum differs for " + where);
    f.expect(b.params.k == mask_size(family.union_mask()), "star dimension differs for " + where);
    f.expect(b.params.d == static_cast<std::int64_t>(oracle::ipow(q, mask_size(family.support(0)) - 1)),
             "star minimum distance differs for " + where);
    f.expect(b.params == closed.params, "star parameters differ for " + where);
  }
  return f.outcome(std::to_string(kStarFamilies) + " random families, brute force = complement relation");
}

Outcome degenerations() {
  Failure f;
  long checked = 0;
  for (std::uint32_t q : {2u, 3u, 4u})
    for (int r = 1; r <= 5; ++r) {
      std::vector<int> a;
      for (int i = 1; i <= r; ++i) a.push_back(i);
      const auto simplex = brute(fam(r + 1, {a}), q, false);
      const auto qr = static_cast<std::int64_t>(oracle::ipow(q, r));
      const CodeParameters expect{q, (qr - 1) / (q - 1), r, qr / q};
      f.expect(simplex.params == expect, "simplex q=" + std::to_string(q) + " r=" + std::to_string(r) + " gives " +
                                             params_text(simplex.params));
      f.expect(star_spectrum(fam(r + 1, {a}), q).params == expect, "closed simplex parameters differ");

      std::vector<std::vector<int>> singles;
      for (int i = 1; i <= r; ++i) singles.push_back({i});
      const auto trivial = brute(fam(r + 1, singles), q, false);
      const CodeParameters full{q, r, r, 1};
      f.expect(trivial.params == full, "singletons q=" + std::to_string(q) + " h=" + std::to_string(r) + " gives " +
                                           params_text(trivial.params));
      f.expect(trivial.distribution.total() == BigInt(qr), "singleton code is not the full space");
      checked += 2;
    }
  return f.outcome(std::to_string(checked) + " star codes: simplex and [h,h,1] parameters");
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "q=3, m=5, A={{1,2}} parameters and enumerator", kLimitSingleSupport, single_support},
      {2, "four ternary families with h = 2, 3", kLimitTernaryFamilies, ternary_families},
      {3, "binary m=12 family with 19 weights", kLimitBinary19Weight, binary_19_weight},
      {4, "Griesmer closed-form identity sweep", kLimitIdentitySweep, identity_sweep},
      {5, "closed form vs brute force on random families", kLimitEquivalence, equivalence},
      {6, "Griesmer classification consistency", kLimitClassification, classification},
      {7, "projectivity of complement and star codes", kLimitProjectivity, projectivity},
      {8, "star code spectrum consistency", kLimitStar, star_codes},
      {9, "simplex and trivial degenerations", kLimitDegenerations, degenerations},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds >= c.limit) {
      o.ok = false;
      o.detail = "runtime over limit";
    }
    failed += !o.ok;
    std::printf("%s  criterion %d: %s (%.3f s, limit %.0f s) - %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.limit, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}

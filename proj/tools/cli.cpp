#include "cli.hpp"

#include "simplicode/errors.hpp"
#include "simplicode/geometry.hpp"
#include "simplicode/spectra.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

namespace simplicode::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_space();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidArgument("cannot parse family \"" + std::string(text_) + "\" at offset " +
                          std::to_string(pos_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

SupportFamily parse_family(std::string_view text) {
  Parser in(text);
  in.expect('m');
  in.expect('=');
  const int m = in.integer();
  if (m < 1 || m > kMaxDimension) in.fail("m must lie in [1, 64]");
  in.expect(';');
  in.expect('A');
  in.expect('=');
  std::vector<Mask> supports;
  do {
    in.expect('{');
    Mask a = 0;
    if (in.peek('}')) throw InvalidArgument("empty support {} in \"" + std::string(text) + "\"");
    do {
      const int c = in.integer();
      if (c < 1 || c > m)
        throw InvalidArgument("coordinate " + std::to_string(c) + " outside [1, " +
                              std::to_string(m) + "]");
      const Mask bit = Mask{1} << (c - 1);
      if (a & bit) throw InvalidArgument("coordinate " + std::to_string(c) + " repeated in a support");
      a |= bit;
    } while (in.peek(',') && (in.expect(','), true));
    in.expect('}');
    supports.push_back(a);
  } while (in.peek(',') && (in.expect(','), true));
  if (!in.done()) in.fail("trailing characters");
  return SupportFamily::create(m, std::move(supports));
}

std::vector<std::uint32_t> parse_modulus(std::string_view text) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw InvalidArgument("modulus must be a comma-separated list of nonnegative integers");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

std::optional<Method> parse_method(std::string_view s) {
  if (s == "closed") return Method::closed;
  if (s == "brute") return Method::brute;
  if (s == "both") return Method::both;
  return std::nullopt;
}

std::optional<CodeKind> parse_code(std::string_view s) {
  if (s == "complement") return CodeKind::complement;
  if (s == "star") return CodeKind::star;
  return std::nullopt;
}

std::optional<OutputFormat> parse_output(std::string_view s) {
  if (s == "json") return OutputFormat::json;
  if (s == "table") return OutputFormat::table;
  return std::nullopt;
}

std::optional<ScanFilter> parse_filter(std::string_view s) {
  const std::string l = lower(s);
  if (l == "griesmer") return ScanFilter::griesmer;
  if (l == "near-griesmer") return ScanFilter::near_griesmer;
  if (l == "distance-optimal") return ScanFilter::distance_optimal;
  if (l == "all") return ScanFilter::all;
  return std::nullopt;
}

std::string format_enumerator(const WeightDistribution& dist) {
  std::ostringstream out;
  out << to_string(dist.count(0));
  for (const auto& [w, c] : dist.counts()) {
    if (w == 0) continue;
    out << " + ";
    if (c != 1) out << to_string(c);
    out << "z^" << w;
  }
  return out.str();
}

nlohmann::json distribution_json(const WeightDistribution& dist) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, c] : dist.counts()) arr.push_back({{"w", w}, {"count", to_string(c)}});
  return arr;
}

nlohmann::json report_json(const SupportFamily& family, const Spectrum& spectrum,
                           const OptimalityReport& report, std::string_view method) {
  nlohmann::json supports = nlohmann::json::array();
  for (Mask a : family.supports()) supports.push_back(mask_coordinates(a));
  nlohmann::json j;
  j["q"] = spectrum.params.q;
  j["m"] = family.m();
  j["supports"] = supports;
  j["n"] = spectrum.params.n;
  j["k"] = spectrum.params.k;
  j["d"] = spectrum.params.d;
  j["weight_distribution"] = distribution_json(spectrum.distribution);
  j["optimality"] = {
      {"griesmer", report.is_griesmer},
      {"near_griesmer", report.is_near_griesmer},
      {"distance_optimal", std::string(to_string(report.distance_optimal()))},
      {"g_kd", report.g_kd},
      {"g_kd_plus_1", report.g_kd1},
  };
  j["method"] = std::string(method);
  return j;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  long double r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / i;
  return static_cast<std::uint64_t>(r + 0.5);
}

constexpr std::uint64_t kMaxScanRegionVectors = 5'000'000;

}  // namespace

std::vector<SupportFamily> canonical_families(int m, int h_max) {
  if (m < 2 || m > kMaxDimension) throw InvalidArgument("scan needs 2 <= m <= 64");
  if (h_max < 1 || h_max > 4) throw GuardError("scan supports 1 <= h-max <= 4");
  std::vector<SupportFamily> out;
  for (int h = 1; h <= h_max; ++h) {
    // One count per Venn region (nonempty subset of the h supports); the
    // counts determine the family up to coordinate permutation.
    const int regions = (1 << h) - 1;
    if (binomial(static_cast<std::uint64_t>(m + regions), regions) > kMaxScanRegionVectors)
      throw GuardError("scan would enumerate too many families; lower m or h-max");

    std::vector<std::vector<int>> perms;
    std::vector<int> perm(h);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<int> count(regions + 1, 0);  // index = region mask, slot 0 unused
    int used = 0;
    for (;;) {
      bool canonical = true;
      for (const auto& p : perms) {
        // region mask r maps to the mask with bits relabeled by p
        for (int r = 1; r <= regions; ++r) {
          int image = 0;
          for (int b = 0; b < h; ++b)
            if (r >> b & 1) image |= 1 << p[b];
          if (count[image] != count[r]) {
            if (count[image] > count[r]) canonical = false;
            break;
          }
        }
        if (!canonical) break;
      }
      if (canonical) {
        std::vector<Mask> supports(h, 0);
        int coord = 0;
        for (int r = 1; r <= regions; ++r) {
          for (int c = 0; c < count[r]; ++c, ++coord)
            for (int b = 0; b < h; ++b)
              if (r >> b & 1) supports[b] |= Mask{1} << coord;
        }
        if (!validate(m, supports)) out.push_back(SupportFamily::create(m, std::move(supports)));
      }
      // next vector with total <= m, last region varying fastest
      int r = regions;
      while (r >= 1 && used == m) {
        used -= count[r];
        count[r] = 0;
        --r;
      }
      if (r < 1) break;
      ++count[r];
      ++used;
    }
  }
  return out;
}

namespace {

struct Computed {
  Spectrum spectrum;
  std::string method;
};

Spectrum brute(const SupportFamily& family, const FieldSpec& field, CodeKind code) {
  const DefiningSet ds = code == CodeKind::complement ? complement_defining_set(family, field)
                                                      : star_defining_set(family, field);
  return brute_force_spectrum(build_generator(ds), field);
}

Computed compute(const JobSpec& job, const SupportFamily& family, const FieldSpec& field,
                 std::ostream& err, int& exit_code) {
  exit_code = kOk;
  Computed result;
  Spectrum closed;
  std::string tag;
  if (job.method != Method::brute) {
    if (job.code == CodeKind::complement) {
      auto c = closed_form_spectrum(family, field.q());
      closed = std::move(c.spectrum);
      tag = std::string(to_string(c.tag));
    } else {
      require_hypotheses(family, field.q());
      closed = star_spectrum(family, field.q());
      tag = std::string(to_string(SpectrumMethod::star));
    }
  }
  switch (job.method) {
    case Method::closed:
      result = {closed, "closed:" + tag};
      break;
    case Method::brute:
      result = {brute(family, field, job.code), "brute"};
      break;
    case Method::both: {
      Spectrum b = brute(family, field, job.code);
      if (!(b.params == closed.params) || !(b.distribution == closed.distribution)) {
        err << "method disagreement for q=" << field.q() << ", " << format_family(family) << "\n";
        err << "closed (" << tag << "): [" << closed.params.n << ", " << closed.params.k << ", "
            << closed.params.d << "] " << format_enumerator(closed.distribution) << "\n";
        err << "brute: [" << b.params.n << ", " << b.params.k << ", " << b.params.d << "] "
            << format_enumerator(b.distribution) << "\n";
        exit_code = kMethodDisagreement;
        return result;
      }
      result = {std::move(b), "both:" + tag + "+brute"};
      break;
    }
  }
  return result;
}

FieldSpec make_field(const JobSpec& job) {
  return job.modulus.empty() ? FieldSpec(job.q) : FieldSpec(job.q, job.modulus);
}

OptimalityReport analyse(const JobSpec& job, const SupportFamily& family, const Spectrum& s) {
  return job.code == CodeKind::complement ? classify(family, job.q, s.params)
                                          : classify_numeric(s.params);
}

void write_table(std::ostream& out, const SupportFamily& family, const Spectrum& s,
                 const OptimalityReport& r, std::string_view method) {
  out << "q=" << s.params.q << " " << format_family(family) << "\n";
  out << "[" << s.params.n << ", " << s.params.k << ", " << s.params.d << "]_" << s.params.q
      << "  method=" << method << "\n";
  out << format_enumerator(s.distribution) << "\n";
  out << "griesmer=" << (r.is_griesmer ? "yes" : "no")
      << " near_griesmer=" << (r.is_near_griesmer ? "yes" : "no")
      << " distance_optimal=" << to_string(r.distance_optimal()) << " g(k,d)=" << r.g_kd
      << " g(k,d+1)=" << r.g_kd1;
  if (r.case_label) out << " case=" << *r.case_label;
  out << "\n";
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const PreconditionError& e) {
    err << "precondition failure [" << e.hypothesis() << "]: " << e.what() << "\n";
    return kPreconditionFailure;
  } catch (const InvalidArgument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const GuardError& e) {
    err << "too large: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace

int cmd_spectrum(const JobSpec& job, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FieldSpec field = make_field(job);
    const SupportFamily family = parse_family(job.family_text);
    int code = kOk;
    Computed c = compute(job, family, field, err, code);
    if (code != kOk) return code;
    const OptimalityReport r = analyse(job, family, c.spectrum);
    if (job.output == OutputFormat::json)
      out << report_json(family, c.spectrum, r, c.method).dump() << "\n";
    else
      write_table(out, family, c.spectrum, r, c.method);
    return static_cast<int>(kOk);
  });
}

int cmd_classify(const JobSpec& job, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FieldSpec field = make_field(job);
    const SupportFamily family = parse_family(job.family_text);
    int code = kOk;
    Computed c = compute(job, family, field, err, code);
    if (code != kOk) return code;
    const OptimalityReport r = analyse(job, family, c.spectrum);
    if (job.output == OutputFormat::table) {
      write_table(out, family, c.spectrum, r, c.method);
      return static_cast<int>(kOk);
    }
    nlohmann::json j = report_json(family, c.spectrum, r, c.method);
    j.erase("weight_distribution");
    j["optimality"]["case_label"] = r.case_label ? nlohmann::json(*r.case_label) : nlohmann::json();
    if (job.code == CodeKind::complement) {
      std::int64_t t = c.spectrum.params.d;
      std::int64_t top = 1;
      for (int i = 0; i < family.m() - 1; ++i) top *= job.q;
      t = top - t;
      if (t >= 1 && t < top) {
        const auto dec = t_decompose(t, job.q, family.m());
        j["optimality"]["T"] = dec.t;
        j["optimality"]["ell"] = dec.ell;
        j["optimality"]["v"] = dec.v;
        j["optimality"]["u"] = dec.u;
      }
    }
    out << j.dump() << "\n";
    return static_cast<int>(kOk);
  });
}

int cmd_scan(const ScanSpec& scan, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const FieldSpec field(scan.q);
    require_weight_range(scan.q, scan.m);
    for (const SupportFamily& family : canonical_families(scan.m, scan.h_max)) {
      if (!check_preconditions(family, scan.q).hypotheses_hold()) continue;
      const auto c = closed_form_spectrum(family, scan.q);
      const OptimalityReport r = classify(family, scan.q, c.spectrum.params);
      const bool pass = scan.filter == ScanFilter::all ||
                        (scan.filter == ScanFilter::griesmer && r.is_griesmer) ||
                        (scan.filter == ScanFilter::near_griesmer && r.is_near_griesmer) ||
                        (scan.filter == ScanFilter::distance_optimal &&
                         r.distance_optimal() != DistanceOptimality::unknown);
      if (!pass) continue;
      const std::string method = "closed:" + std::string(to_string(c.tag));
      if (scan.output == OutputFormat::json) {
        out << report_json(family, c.spectrum, r, method).dump() << "\n";
      } else {
        out << "q=" << scan.q << " " << format_family(family) << "  [" << c.spectrum.params.n << ", "
            << c.spectrum.params.k << ", " << c.spectrum.params.d << "]"
            << (r.is_griesmer ? " griesmer" : "") << (r.is_near_griesmer ? " near-griesmer" : "")
            << " " << to_string(r.distance_optimal());
        if (r.case_label) out << " " << *r.case_label;
        out << "\n";
      }
    }
    return static_cast<int>(kOk);
  });
}

}  // namespace simplicode::cli

#pragma once

#include "simplicode/bounds.hpp"
#include "simplicode/codes.hpp"
#include "simplicode/complexes.hpp"
#include "simplicode/field.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace simplicode::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kPreconditionFailure = 2,
  kMethodDisagreement = 3,
};

enum class Method { closed, brute, both };
enum class CodeKind { complement, star };
enum class OutputFormat { json, table };
enum class ScanFilter { griesmer, near_griesmer, distance_optimal, all };

struct JobSpec {
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // empty: default modulus
  std::string family_text;
  Method method = Method::closed;
  CodeKind code = CodeKind::complement;
  OutputFormat output = OutputFormat::json;
};

struct ScanSpec {
  std::uint32_t q = 0;
  int m = 0;
  int h_max = 1;
  ScanFilter filter = ScanFilter::all;
  OutputFormat output = OutputFormat::json;
};

/// Parses "m=M; A={..},{..}" with 1-based coordinates. Throws
/// InvalidArgument with a description of what is wrong.
SupportFamily parse_family(std::string_view text);

/// Parses a comma-separated coefficient list "c0,c1,...,ce".
std::vector<std::uint32_t> parse_modulus(std::string_view text);

std::optional<Method> parse_method(std::string_view s);
std::optional<CodeKind> parse_code(std::string_view s);
std::optional<OutputFormat> parse_output(std::string_view s);
std::optional<ScanFilter> parse_filter(std::string_view s);

/// Enumerator text "1 + 216z^78 + 26z^81".
std::string format_enumerator(const WeightDistribution& dist);

nlohmann::json distribution_json(const WeightDistribution& dist);
nlohmann::json report_json(const SupportFamily& family, const Spectrum& spectrum,
                           const OptimalityReport& report, std::string_view method);

/// Support families over [m] with 1 <= h <= h_max, one per class under
/// coordinate permutation and relabeling of the supports, in a fixed order.
/// Throws GuardError if the region enumeration would be too large.
std::vector<SupportFamily> canonical_families(int m, int h_max);

/// The `spectrum`/`star` commands. Writes the report to out, diagnostics to
/// err, and returns the exit code.
int cmd_spectrum(const JobSpec& job, std::ostream& out, std::ostream& err);

/// The `classify` command: parameters plus the optimality analysis.
int cmd_classify(const JobSpec& job, std::ostream& out, std::ostream& err);

/// The `scan` command: one report per line for each passing family.
int cmd_scan(const ScanSpec& scan, std::ostream& out, std::ostream& err);

}  // namespace simplicode::cli

#include "cli.hpp"

#include "simplicode/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace simplicode::cli;

int main(int argc, char** argv) {
  CLI::App app{"Projective codes from simplicial complexes: spectra and Griesmer classification"};
  app.require_subcommand(1);

  JobSpec job;
  std::string modulus;
  std::string method = "closed", output = "json", code = "complement";

  auto add_job = [&](CLI::App* cmd, bool with_code) {
    cmd->add_option("--q", job.q, "field order, a prime power <= 65536")->required();
    cmd->add_option("--family", job.family_text, "support family, e.g. \"m=5; A={1,2},{2,3,4}\"")->required();
    cmd->add_option("--method", method, "closed, brute or both")
        ->check(CLI::IsMember({"closed", "brute", "both"}));
    cmd->add_option("--output", output, "json or table")->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--modulus", modulus, "irreducible modulus coefficients c0,...,ce (monic)");
    if (with_code)
      cmd->add_option("--code", code, "complement or star")->check(CLI::IsMember({"complement", "star"}));
  };

  auto* spectrum = app.add_subcommand("spectrum", "weight distribution and parameters");
  add_job(spectrum, true);
  auto* classify = app.add_subcommand("classify", "Griesmer classification");
  add_job(classify, true);
  auto* star = app.add_subcommand("star", "spectrum of the star code");
  add_job(star, false);

  ScanSpec scan;
  std::string filter = "all";
  auto* scan_cmd = app.add_subcommand("scan", "classify all canonical families over [m]");
  scan_cmd->add_option("--q", scan.q, "field order")->required();
  scan_cmd->add_option("--m", scan.m, "ambient dimension")->required();
  scan_cmd->add_option("--h-max", scan.h_max, "largest number of supports (<= 4)");
  scan_cmd->add_option("--filter", filter, "griesmer, near-griesmer, distance-optimal or all")
      ->check(CLI::IsMember({"griesmer", "near-griesmer", "distance-optimal", "all"}));
  scan_cmd->add_option("--output", output, "json or table")->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidInput;
  }

  try {
    if (!modulus.empty()) job.modulus = parse_modulus(modulus);
  } catch (const simplicode::InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  }
  job.method = *parse_method(method);
  job.output = *parse_output(output);
  job.code = star->parsed() ? CodeKind::star : *parse_code(code);

  if (scan_cmd->parsed()) {
    scan.filter = *parse_filter(filter);
    scan.output = job.output;
    return cmd_scan(scan, std::cout, std::cerr);
  }
  if (classify->parsed()) return cmd_classify(job, std::cout, std::cerr);
  return cmd_spectrum(job, std::cout, std::cerr);
}

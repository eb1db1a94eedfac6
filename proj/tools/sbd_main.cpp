// Command-line front end: triangularize / diag-unitary / diag-invertible /
// verify. Exit codes: 0 success, 2 "no decomposition found", 1 input or
// internal error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sbd/commutant.hpp"
#include "sbd/diagonalize.hpp"
#include "sbd/errors.hpp"
#include "sbd/io.hpp"
#include "sbd/triangularize.hpp"
#include "sbd/verify.hpp"

namespace {

struct CommonOpts {
  std::string file;
  double rank_tol = 1e-10;
  double residual_tol = 1e-8;
  std::uint64_t seed = 0;
  int trials = 8;
  std::string output;
  std::string format = "json";
};

void attach_common(CLI::App* sub, CommonOpts& opts) {
  sub->add_option("file", opts.file, "matrix set JSON file")->required();
  sub->add_option("--tol", opts.rank_tol, "relative rank tolerance");
  sub->add_option("--residual-tol", opts.residual_tol,
                  "absolute zero-pattern tolerance");
  sub->add_option("--seed", opts.seed, "RNG seed for the subspace search");
  sub->add_option("--trials", opts.trials,
                  "number of seeded random combinations");
  sub->add_option("--output", opts.output, "write the report here");
  sub->add_option("--format", opts.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

sbd::Tolerances tolerances(const CommonOpts& opts) {
  sbd::Tolerances tol;
  tol.rank_tol = opts.rank_tol;
  tol.residual_tol = opts.residual_tol;
  tol.validate();
  return tol;
}

sbd::SearchConfig search_config(const CommonOpts& opts) {
  sbd::SearchConfig cfg;
  cfg.rng_seed = opts.seed;
  cfg.n_seed_combinations = opts.trials;
  return cfg;
}

void emit(const sbd::DecompositionReport& report, const sbd::NamedSet& set,
          const CommonOpts& opts) {
  const std::string body = opts.format == "text"
                               ? sbd::report_to_text(report, set.names)
                               : sbd::report_to_json(report, set.names);
  if (opts.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw sbd::ParseError("cannot open output file: " + opts.output);
    out << body;
  }
}

int run_decomposition(char which, const CommonOpts& opts) {
  const sbd::NamedSet set = sbd::parse_matrix_set(opts.file);
  const sbd::Tolerances tol = tolerances(opts);
  const sbd::SearchConfig cfg = search_config(opts);
  sbd::DecompositionReport report;
  switch (which) {
    case 'A':
      report = sbd::block_triangularize(set.mats, cfg, tol);
      break;
    case 'B':
      report = sbd::block_diagonalize_unitary(set.mats, cfg, tol);
      break;
    default:
      report = sbd::block_diagonalize_invertible(set.mats, cfg, tol);
      break;
  }
  emit(report, set, opts);
  return 0;
}

int run_verify(const CommonOpts& opts, const std::string& report_path) {
  const sbd::NamedSet set = sbd::parse_matrix_set(opts.file);
  const sbd::Tolerances tol = tolerances(opts);
  const sbd::ParsedReport parsed = sbd::parse_report(report_path);
  const sbd::ValidationResult result =
      sbd::validate_report(set.mats, parsed.report, tol);
  if (result.pass) {
    std::cout << "verification passed\n";
    return 0;
  }
  std::cout << "verification failed\n";
  for (const std::string& reason : result.failures)
    std::cerr << "  " << reason << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "simultaneous block triangularization / diagonalization of finite "
      "complex matrix sets"};
  app.require_subcommand(1);

  CommonOpts tri_opts, bu_opts, bi_opts, ver_opts;
  std::string report_path;

  CLI::App* tri = app.add_subcommand(
      "triangularize", "unitary simultaneous block triangularization");
  attach_common(tri, tri_opts);
  CLI::App* bu = app.add_subcommand(
      "diag-unitary",
      "simultaneous block diagonalization by a unitary matrix");
  attach_common(bu, bu_opts);
  CLI::App* bi = app.add_subcommand(
      "diag-invertible",
      "simultaneous block diagonalization by an invertible matrix");
  attach_common(bi, bi_opts);
  CLI::App* ver =
      app.add_subcommand("verify", "validate a report against a matrix set");
  attach_common(ver, ver_opts);
  ver->add_option("--report", report_path, "report JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (tri->parsed()) return run_decomposition('A', tri_opts);
    if (bu->parsed()) return run_decomposition('B', bu_opts);
    if (bi->parsed()) return run_decomposition('C', bi_opts);
    if (ver->parsed()) return run_verify(ver_opts, report_path);
  } catch (const sbd::NoDecomposition& e) {
    std::cerr << "no decomposition found: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

// Command-line front end: bands, spectrum, quilt, verify, counterexample,
// threshold. All outputs are deterministic for a fixed config and seed.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "latticebands/bands.hpp"
#include "latticebands/core.hpp"
#include "latticebands/report.hpp"
#include "latticebands/verify.hpp"

namespace lb = latticebands;

namespace {

constexpr int kExitAnalysis = 1;
constexpr int kExitInput = 2;

lb::Period parse_period(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos)
    throw CLI::ValidationError("--period", "expected PxQ, e.g. 5x4");
  try {
    return lb::Period(std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1)));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--period", "expected PxQ, e.g. 5x4");
  }
}

struct CommonOpts {
  std::string period_text;
  std::string potential_path;
  std::string out_path;
  std::string format = "csv";
  int resolution = 65;
  double tolerance = 1e-9;
  int threads = 1;
  unsigned seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool need_period) {
  auto* period = cmd->add_option("--period", opts.period_text, "period as PxQ");
  if (need_period) period->required();
  cmd->add_option("--potential", opts.potential_path, "potential file (json or csv)");
  cmd->add_option("--resolution", opts.resolution, "phase grid resolution")
      ->check(CLI::Range(2, 100000));
  cmd->add_option("--tolerance", opts.tolerance, "eigensolver tolerance")
      ->check(CLI::Range(1e-15, 1e-3));
  cmd->add_option("--out", opts.out_path, "output file path");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", opts.threads, "worker threads (0 = auto)");
  cmd->add_option("--seed", opts.seed, "seed for randomized sweeps");
}

lb::Potential resolve_potential(const CommonOpts& opts) {
  if (!opts.potential_path.empty()) {
    const bool json = opts.potential_path.size() >= 5 &&
                      opts.potential_path.substr(opts.potential_path.size() - 5) ==
                          ".json";
    lb::Potential v = lb::load_potential(
        opts.potential_path,
        json ? lb::PotentialFormat::json : lb::PotentialFormat::csv);
    if (!opts.period_text.empty() &&
        v.period() != parse_period(opts.period_text)) {
      lb::Period target = parse_period(opts.period_text);
      return v.retiled(target);
    }
    return v;
  }
  if (opts.period_text.empty())
    throw CLI::ValidationError("--period", "either --period or --potential required");
  return lb::Potential::zero(parse_period(opts.period_text));
}

void emit(const std::string& csv, const nlohmann::json& json, const CommonOpts& opts) {
  const std::string content = opts.format == "json" ? json.dump(2) + "\n" : csv;
  if (opts.out_path.empty())
    std::cout << content;
  else
    lb::write_text_file(opts.out_path, content);
}

int run(int argc, char** argv) {
  CLI::App app{"Band structure and gap analysis of discrete periodic "
               "Schrodinger operators on the square lattice"};
  app.require_subcommand(1);

  CommonOpts bands_opts, spectrum_opts, quilt_opts, verify_opts, kruger_opts,
      threshold_opts;
  double quilt_energy = 0.0;
  int verify_samples = 200;
  double kruger_delta = 0.5;
  std::string lambda_list = "0.01,0.02,0.05,0.1,0.2,0.5";

  auto* cmd_bands = app.add_subcommand("bands", "certified band enclosures");
  add_common(cmd_bands, bands_opts, false);

  auto* cmd_spectrum = app.add_subcommand("spectrum", "spectrum as interval union");
  add_common(cmd_spectrum, spectrum_opts, false);

  auto* cmd_quilt = app.add_subcommand("quilt", "eigenvalue-count quilt");
  add_common(cmd_quilt, quilt_opts, false);
  cmd_quilt->add_option("--energy", quilt_energy, "count energies below E")
      ->required();

  auto* cmd_verify =
      app.add_subcommand("verify", "interior certificates over an energy sweep");
  add_common(cmd_verify, verify_opts, true);
  cmd_verify->add_option("--samples", verify_samples, "number of energy samples")
      ->check(CLI::Range(0, 1000000));

  auto* cmd_kruger =
      app.add_subcommand("counterexample", "checkerboard gap at (-delta, delta)");
  add_common(cmd_kruger, kruger_opts, false);
  cmd_kruger->add_option("--delta", kruger_delta, "checkerboard amplitude")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* cmd_threshold =
      app.add_subcommand("threshold", "empirical small-coupling threshold probe");
  add_common(cmd_threshold, threshold_opts, true);
  cmd_threshold->add_option("--lambdas", lambda_list,
                            "comma-separated ascending coupling grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : kExitInput;
  }

  if (cmd_bands->parsed()) {
    const lb::Potential v = resolve_potential(bands_opts);
    const lb::BandSweep sweep =
        lb::compute_bands(v, bands_opts.resolution, bands_opts.threads);
    emit(lb::bands_csv(sweep), lb::bands_json(sweep), bands_opts);
    return 0;
  }
  if (cmd_spectrum->parsed()) {
    const lb::Potential v = resolve_potential(spectrum_opts);
    const lb::SpectrumApproximation spec =
        lb::spectrum(v, spectrum_opts.resolution, spectrum_opts.threads);
    emit(lb::spectrum_csv(spec), lb::spectrum_json(spec), spectrum_opts);
    return 0;
  }
  if (cmd_quilt->parsed()) {
    const lb::Potential v = resolve_potential(quilt_opts);
    const lb::Quilt q =
        lb::quilt(v, quilt_energy, quilt_opts.resolution, quilt_opts.threads);
    emit(lb::quilt_csv(q), lb::quilt_json(q), quilt_opts);
    return 0;
  }
  if (cmd_verify->parsed()) {
    const lb::Period pp = parse_period(verify_opts.period_text);
    const lb::SweepReport report =
        lb::verify_theorem_sweep(pp, verify_samples, verify_opts.threads);
    const nlohmann::json j = lb::sweep_report_json(report);
    verify_opts.format = "json";
    emit("", j, verify_opts);
    return report.failures == 0 ? 0 : kExitAnalysis;
  }
  if (cmd_kruger->parsed()) {
    try {
      const lb::SpectrumApproximation spec =
          lb::kruger_gap(kruger_delta, kruger_opts.resolution, kruger_opts.threads);
      emit(lb::spectrum_csv(spec), lb::spectrum_json(spec), kruger_opts);
      return 0;
    } catch (const std::runtime_error& e) {
      std::cerr << e.what() << "\n";
      return kExitAnalysis;
    }
  }
  if (cmd_threshold->parsed()) {
    lb::Potential base = lb::Potential::zero(lb::Period(1, 1));
    if (!threshold_opts.potential_path.empty()) {
      base = resolve_potential(threshold_opts);
    } else {
      // Seeded random potential on the requested period, unit sup norm.
      const lb::Period pp = parse_period(threshold_opts.period_text);
      std::mt19937 rng(threshold_opts.seed);
      std::uniform_real_distribution<double> dist(-1.0, 1.0);
      std::vector<double> vals(static_cast<std::size_t>(pp.p) * pp.q);
      for (double& x : vals) x = dist(rng);
      base = lb::Potential(pp, std::move(vals));
    }
    std::vector<double> lambdas;
    std::stringstream ls(lambda_list);
    std::string tok;
    while (std::getline(ls, tok, ','))
      if (!tok.empty()) lambdas.push_back(std::stod(tok));
    const lb::ThresholdReport report = lb::estimate_threshold(
        base, lambdas, threshold_opts.resolution, threshold_opts.threads);
    threshold_opts.format = "json";
    emit("", lb::threshold_json(report), threshold_opts);
    return 0;
  }
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* level = std::getenv("LATTICEBANDS_LOG"); level != nullptr)
    std::cerr << "latticebands log level: " << level << "\n";
  try {
    return run(argc, argv);
  } catch (const CLI::Error&) {
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnalysis;
  }
}

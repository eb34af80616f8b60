// dagger-lab: batch workbench for discrete-spectrum operator algebra.
// Subcommands: check-axioms, spectrum, extract-generator, evolve,
// continuum-limit. Exit codes: 0 pass, 1 numerical/axiom failure,
// 2 configuration error, 3 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "dagger/axioms.hpp"
#include "dagger/derivation.hpp"
#include "dagger/dynamics.hpp"
#include "dagger/io.hpp"
#include "dagger/lattice.hpp"
#include "dagger/linalg.hpp"
#include "dagger/random.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNumericalFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;

// DAGGER_LAB_THREADS caps internal parallelism; 0 means library default.
int env_thread_cap() {
  const char* raw = std::getenv("DAGGER_LAB_THREADS");
  if (raw == nullptr || *raw == '\0') {
    return 0;
  }
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == nullptr || *end != '\0' || value < 1) {
    throw dagger::InvalidArgumentError(
        "DAGGER_LAB_THREADS must be a positive integer");
  }
  return static_cast<int>(value);
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const dagger::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const dagger::InvalidArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const dagger::DimensionMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const dagger::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  }
}

struct CheckAxiomsOptions {
  long long dim = 8;
  std::string ensemble = "general_gaussian";
  long long trials = 1000;
  std::uint64_t seed = 0;
  double scale = 1.0;
  double tol = 1e-10;
  std::string out;
  std::string format = "json";
};

int run_check_axioms(const CheckAxiomsOptions& opt) {
  dagger::SweepConfig cfg;
  cfg.spec.dim = static_cast<Eigen::Index>(opt.dim);
  cfg.spec.ensemble = dagger::ensemble_from_string(opt.ensemble);
  cfg.spec.scale = opt.scale;
  cfg.trials = opt.trials;
  cfg.seed = opt.seed;
  cfg.tol.rel_tol = opt.tol;
  cfg.max_threads = env_thread_cap();

  const std::vector<dagger::AxiomReport> reports = dagger::run_axiom_sweep(cfg);

  if (opt.format == "json") {
    dagger::io::json array = dagger::io::json::array();
    for (const dagger::AxiomReport& report : reports) {
      array.push_back(dagger::io::axiom_report_to_json(report));
    }
    dagger::io::save_json_file(opt.out, array);
  } else {
    std::string csv = "axiom_id,passed,max_residual,trials,seed\n";
    char buf[128];
    for (const dagger::AxiomReport& report : reports) {
      std::snprintf(buf, sizeof buf, "%s,%d,%.17g,%ld,%llu\n",
                    dagger::to_string(report.axiom_id),
                    report.passed ? 1 : 0, report.max_residual, report.trials,
                    static_cast<unsigned long long>(report.seed));
      csv += buf;
    }
    dagger::io::write_text_file(opt.out, csv);
  }

  bool all_passed = true;
  for (const dagger::AxiomReport& report : reports) {
    std::printf("%s: %s max_residual=%.3e trials=%ld\n",
                dagger::to_string(report.axiom_id),
                report.passed ? "pass" : "FAIL", report.max_residual,
                report.trials);
    all_passed = all_passed && report.passed;
  }
  return all_passed ? kExitPass : kExitNumericalFailure;
}

struct SpectrumOptions {
  std::string kind;
  long long sites = 0;
  double spacing = 1.0;
  std::string centering = "from_zero";
  std::string boundary = "periodic";
  double hbar = 1.0;
  std::string input;
  std::string out;
  std::string format = "json";
};

int run_spectrum(const SpectrumOptions& opt) {
  dagger::Operator op;
  if (opt.kind == "file") {
    if (opt.input.empty()) {
      throw dagger::InvalidArgumentError("spectrum: --input is required with --kind file");
    }
    op = dagger::io::operator_from_json(dagger::io::load_json_file(opt.input));
  } else {
    if (opt.sites < 1) {
      throw dagger::InvalidArgumentError("spectrum: --sites is required for lattice operators");
    }
    dagger::LatticeSpec spec;
    spec.sites = static_cast<Eigen::Index>(opt.sites);
    spec.spacing = opt.spacing;
    spec.centering = dagger::centering_from_string(opt.centering);
    spec.boundary = dagger::boundary_from_string(opt.boundary);
    dagger::PlanckUnits units;
    units.hbar = opt.hbar;
    if (opt.kind == "position") {
      op = dagger::position_operator(spec, units);
    } else if (opt.kind == "time") {
      op = dagger::time_operator(spec, units);
    } else if (opt.kind == "momentum") {
      op = dagger::momentum_operator(spec, units);
    } else {
      throw dagger::InvalidArgumentError("spectrum: unknown kind " + opt.kind);
    }
  }

  const dagger::EigenDecomposition eig = dagger::hermitian_eig(op);
  const double residual = dagger::cstar_norm(op - dagger::reconstruct(eig));

  if (opt.format == "json") {
    dagger::io::json out;
    out["kind"] = opt.kind;
    out["dim"] = eig.source_dim;
    dagger::io::json values = dagger::io::json::array();
    for (Eigen::Index k = 0; k < eig.source_dim; ++k) {
      values.push_back(eig.eigenvalues(k));
    }
    out["eigenvalues"] = std::move(values);
    out["reconstruction_residual"] = residual;
    dagger::io::save_json_file(opt.out, out);
  } else {
    std::string csv = "index,eigenvalue\n";
    char buf[64];
    for (Eigen::Index k = 0; k < eig.source_dim; ++k) {
      std::snprintf(buf, sizeof buf, "%lld,%.17g\n",
                    static_cast<long long>(k), eig.eigenvalues(k));
      csv += buf;
    }
    dagger::io::write_text_file(opt.out, csv);
  }

  std::printf("spectrum: dim=%lld lambda_min=%.17g lambda_max=%.17g "
              "reconstruction_residual=%.3e\n",
              static_cast<long long>(eig.source_dim), eig.eigenvalues(0),
              eig.eigenvalues(eig.source_dim - 1), residual);
  return kExitPass;
}

struct ExtractGeneratorOptions {
  std::string input;
  std::string out;
  double tol = 1e-10;
  std::string format = "json";
};

int run_extract_generator(const ExtractGeneratorOptions& opt) {
  if (opt.format != "json") {
    throw dagger::InvalidArgumentError("extract-generator: only --format json is supported");
  }
  const dagger::Derivation delta =
      dagger::io::derivation_from_json(dagger::io::load_json_file(opt.input));
  dagger::ToleranceConfig tol;
  tol.rel_tol = opt.tol;
  const dagger::GeneratorExtraction extraction =
      dagger::extract_generator(delta, tol);
  dagger::io::save_json_file(opt.out,
                             dagger::io::generator_extraction_to_json(extraction));
  std::printf("extract-generator: residual=%.3e norm_lower_bound=%.17g",
              extraction.residual, extraction.derivation_norm_lower_bound);
  if (extraction.derivation_norm_exact) {
    std::printf(" norm_exact=%.17g", *extraction.derivation_norm_exact);
  }
  std::printf("\n");
  return kExitPass;
}

struct EvolveOptions {
  std::string t_file;
  std::string f_file;
  double s_max = 1.0;
  long long steps = 0;
  double hbar = 1.0;
  std::string out;
  std::string dump_dir;
};

int run_evolve(const EvolveOptions& opt) {
  if (opt.steps < 1) {
    throw dagger::InvalidArgumentError("evolve: --steps must be >= 1");
  }
  if (!(opt.s_max > 0.0) || !std::isfinite(opt.s_max)) {
    throw dagger::InvalidArgumentError("evolve: --s-max must be positive and finite");
  }
  const dagger::Operator t =
      dagger::io::operator_from_json(dagger::io::load_json_file(opt.t_file));
  const dagger::Operator f =
      dagger::io::operator_from_json(dagger::io::load_json_file(opt.f_file));

  std::vector<double> grid(static_cast<std::size_t>(opt.steps) + 1);
  for (long long j = 0; j <= opt.steps; ++j) {
    grid[static_cast<std::size_t>(j)] =
        opt.s_max * static_cast<double>(j) / static_cast<double>(opt.steps);
  }
  const dagger::EvolutionTrace trace =
      dagger::observable_flow_trace(f, t, grid, opt.hbar);

  dagger::io::write_text_file(opt.out, dagger::io::evolution_trace_csv(trace));
  if (!opt.dump_dir.empty()) {
    std::filesystem::create_directories(opt.dump_dir);
    for (std::size_t j = 0; j < trace.samples.size(); ++j) {
      const std::filesystem::path path =
          std::filesystem::path(opt.dump_dir) /
          ("sample_" + std::to_string(j) + ".json");
      dagger::io::save_json_file(
          path, dagger::io::operator_to_json(trace.samples[j].observable));
    }
  }

  double max_deviation = 0.0;
  for (const dagger::EvolutionSample& sample : trace.samples) {
    max_deviation = std::max(max_deviation, sample.deviation_from_initial);
  }
  std::printf("evolve: samples=%zu max_deviation=%.17g\n",
              trace.samples.size(), max_deviation);
  return kExitPass;
}

struct ContinuumOptions {
  std::vector<long long> sites;
  double center = 0.5;
  double width = 0.125;
  double wavenumber = 4.0 * std::numbers::pi;
  double shift = 0.1;
  double hbar = 1.0;
  std::string out;
};

int run_continuum(const ContinuumOptions& opt) {
  std::vector<Eigen::Index> sites;
  sites.reserve(opt.sites.size());
  for (long long d : opt.sites) {
    sites.push_back(static_cast<Eigen::Index>(d));
  }
  dagger::WavepacketSpec packet;
  packet.center = opt.center;
  packet.width = opt.width;
  packet.wavenumber = opt.wavenumber;

  const std::vector<dagger::ConvergenceRow> rows =
      dagger::continuum_limit_study(sites, packet, opt.shift, opt.hbar);
  dagger::io::write_text_file(opt.out, dagger::io::convergence_table_csv(rows));

  const dagger::ConvergenceRow& last = rows.back();
  std::printf("continuum-limit: finest_sites=%lld error=%.17g",
              static_cast<long long>(last.sites), last.error);
  if (rows.size() >= 2 && rows[rows.size() - 2].order) {
    std::printf(" final_order=%.17g", *rows[rows.size() - 2].order);
  }
  std::printf("\n");
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dagger-lab: discrete-spectrum operator algebra workbench"};
  app.require_subcommand(1);

  CheckAxiomsOptions axioms;
  CLI::App* check = app.add_subcommand(
      "check-axioms",
      "Property sweep of the involution, norm, and derivation identities over "
      "a seeded random operator ensemble");
  check->add_option("--dim", axioms.dim, "Operator dimension")->required();
  check
      ->add_option("--ensemble", axioms.ensemble,
                   "general_gaussian | hermitian_gaussian | "
                   "unitary_conjugated_diagonal")
      ->capture_default_str();
  check->add_option("--trials", axioms.trials, "Number of seeded trials")
      ->capture_default_str();
  check->add_option("--seed", axioms.seed, "Base seed; trial k uses seed+k")
      ->capture_default_str();
  check->add_option("--scale", axioms.scale, "Ensemble scale")
      ->capture_default_str();
  check->add_option("--tol", axioms.tol, "Relative tolerance")
      ->capture_default_str();
  check->add_option("--out", axioms.out, "Output report path")->required();
  check->add_option("--format", axioms.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  SpectrumOptions spectrum;
  CLI::App* spec = app.add_subcommand(
      "spectrum", "Eigenvalues of a lattice operator or an operator file");
  spec->add_option("--kind", spectrum.kind,
                   "position | time | momentum | file")
      ->check(CLI::IsMember({"position", "time", "momentum", "file"}))
      ->required();
  spec->add_option("--sites", spectrum.sites, "Lattice site count");
  spec->add_option("--spacing", spectrum.spacing, "Lattice spacing")
      ->capture_default_str();
  spec->add_option("--centering", spectrum.centering, "from_zero | centered")
      ->capture_default_str();
  spec->add_option("--boundary", spectrum.boundary, "periodic | open")
      ->capture_default_str();
  spec->add_option("--hbar", spectrum.hbar, "hbar (momentum operator)")
      ->capture_default_str();
  spec->add_option("--input", spectrum.input, "Operator JSON (kind=file)");
  spec->add_option("--out", spectrum.out, "Output path")->required();
  spec->add_option("--format", spectrum.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  ExtractGeneratorOptions extract;
  CLI::App* gen = app.add_subcommand(
      "extract-generator",
      "Recover the inner generator of a derivation from its superoperator");
  gen->add_option("input", extract.input, "Derivation JSON file")->required();
  gen->add_option("--out", extract.out, "GeneratorExtraction JSON path")
      ->required();
  gen->add_option("--tol", extract.tol, "Residual tolerance")
      ->capture_default_str();
  gen->add_option("--format", extract.format, "json")
      ->capture_default_str();

  EvolveOptions evolve;
  CLI::App* evo = app.add_subcommand(
      "evolve", "Heisenberg flow of an observable under a Hermitian generator");
  evo->add_option("t_file", evolve.t_file, "Generator operator JSON")
      ->required();
  evo->add_option("f_file", evolve.f_file, "Observable operator JSON")
      ->required();
  evo->add_option("--s-max", evolve.s_max, "Flow parameter endpoint")
      ->required();
  evo->add_option("--steps", evolve.steps, "Number of uniform steps")
      ->required();
  evo->add_option("--hbar", evolve.hbar, "hbar")->capture_default_str();
  evo->add_option("--out", evolve.out, "Trace CSV path")->required();
  evo->add_option("--dump-dir", evolve.dump_dir,
                  "Directory for per-sample operator JSON dumps");

  ContinuumOptions continuum;
  CLI::App* cont = app.add_subcommand(
      "continuum-limit",
      "Momentum-translation convergence study on refining lattices");
  cont->add_option("--sites", continuum.sites,
                   "Increasing site counts (each >= 16)")
      ->required()
      ->delimiter(',');
  cont->add_option("--center", continuum.center, "Packet center on [0,1)")
      ->capture_default_str();
  cont->add_option("--width", continuum.width, "Packet FWHM")
      ->capture_default_str();
  cont->add_option("--wavenumber", continuum.wavenumber, "Carrier wavenumber")
      ->capture_default_str();
  cont->add_option("--shift", continuum.shift, "Translation distance")
      ->capture_default_str();
  cont->add_option("--hbar", continuum.hbar, "hbar")->capture_default_str();
  cont->add_option("--out", continuum.out, "Convergence CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  if (app.got_subcommand(check)) {
    return guarded([&] { return run_check_axioms(axioms); });
  }
  if (app.got_subcommand(spec)) {
    return guarded([&] { return run_spectrum(spectrum); });
  }
  if (app.got_subcommand(gen)) {
    return guarded([&] { return run_extract_generator(extract); });
  }
  if (app.got_subcommand(evo)) {
    return guarded([&] { return run_evolve(evolve); });
  }
  if (app.got_subcommand(cont)) {
    return guarded([&] { return run_continuum(continuum); });
  }
  return kExitConfigError;
}

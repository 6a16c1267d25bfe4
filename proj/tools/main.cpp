// Copyright 2026 The sympovm developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end. Exit codes: 0 success, 1 validation failure
// (non-positive element, failed report, broken internal identity), 2 usage
// error (bad flags, malformed or inconsistent input files, preconditions).

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sympovm/bloch.hpp"
#include "sympovm/io.hpp"
#include "sympovm/kappa_search.hpp"
#include "sympovm/povm.hpp"
#include "sympovm/simplex_frames.hpp"
#include "sympovm/statistics.hpp"
#include "sympovm/su_basis.hpp"
#include "sympovm/version.hpp"

namespace {

using namespace sympovm;

constexpr double kCertifyMargin = 1e-6;
constexpr int kPurityRejectionCap = 100000;

// Canonical frame under a full-scale random orientation; the single
// convention behind every --seed frame in the CLI.
DirectionalFrame seeded_frame(int dim, int count, std::uint64_t seed) {
  Rng rng(seed);
  return rotate_frame(DirectionalFrame::canonical(dim, count),
                      Orientation::random(dim, 1.0, rng));
}

void emit_json(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << dump_json(j);
  } else {
    write_json_file(out_path, j);
  }
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw std::runtime_error("cannot open '" + out_path + "' for writing");
  }
  out << text;
  if (!out) {
    throw std::runtime_error("failed writing '" + out_path + "'");
  }
}

struct LoadedPovm {
  SuBasis basis;
  SymmetricPovm povm;
};

LoadedPovm load_povm(const std::string& path, double tol_psd) {
  const Json j = read_json_file(path);
  if (!j.is_object() || !j.contains("dim")) {
    throw std::runtime_error("POVM file '" + path + "': missing field 'dim'");
  }
  SuBasis basis = SuBasis::generate(j.at("dim").get<int>());
  SymmetricPovm povm = povm_from_json(j, basis, tol_psd);
  return LoadedPovm{std::move(basis), std::move(povm)};
}

Matrix load_state(const std::string& path, int dim) {
  const Matrix rho = density_from_json(read_json_file(path));
  if (rho.rows() != dim) {
    throw std::invalid_argument("state in '" + path + "' has dimension " +
                                std::to_string(rho.rows()) + ", POVM expects " +
                                std::to_string(dim));
  }
  return rho;
}

int run_basis(int dim, const std::string& out) {
  const SuBasis basis = SuBasis::generate(dim);
  const StructureConstants sc = StructureConstants::compute(basis);
  emit_json(basis_to_json(basis, sc), out);
  return 0;
}

int run_povm_build(int dim, int outcomes, double kappa, const std::string& frame_path,
                   const std::optional<std::uint64_t>& seed, double tol_psd,
                   const std::string& out) {
  if (frame_path.empty() == !seed.has_value()) {
    throw std::invalid_argument("exactly one of --frame or --seed is required");
  }
  DirectionalFrame frame =
      frame_path.empty() ? seeded_frame(dim, outcomes, *seed)
                         : frame_from_json(read_json_file(frame_path));
  if (frame.dim() != dim || frame.count() != outcomes) {
    throw std::invalid_argument("frame in '" + frame_path + "' is dim " +
                                std::to_string(frame.dim()) + " with " +
                                std::to_string(frame.count()) +
                                " vectors; flags say dim " + std::to_string(dim) +
                                " with " + std::to_string(outcomes));
  }
  const SuBasis basis = SuBasis::generate(dim);
  const SymmetricPovm povm = SymmetricPovm::build(kappa, frame, basis, tol_psd);
  emit_json(povm_to_json(povm), out);
  return 0;
}

int run_povm_validate(const std::string& path, double tol, double tol_psd,
                      const std::string& out) {
  const LoadedPovm loaded = load_povm(path, tol_psd);
  const PovmValidationReport report = validate_povm(loaded.povm, tol, tol_psd);
  Json j{{"schema_version", kSchemaVersion},
         {"file", path},
         {"dim", loaded.povm.dim()},
         {"count", loaded.povm.count()},
         {"kappa", loaded.povm.kappa()},
         {"completeness_residual", report.completeness_residual},
         {"trace_residual", report.trace_residual},
         {"pair_trace_residual", report.pair_trace_residual},
         {"min_eigenvalue", report.min_eigenvalue},
         {"min_pair_distance", report.min_pair_distance},
         {"tol", report.tol},
         {"distinct", report.distinct},
         {"passed", report.passed}};
  if (report.passed) {
    j["classification"] = classify(loaded.povm, tol);
  }
  emit_json(j, out);
  return report.passed ? 0 : 1;
}

int run_probs(const std::string& state_path, const std::string& povm_path,
              const std::string& out) {
  const LoadedPovm loaded = load_povm(povm_path, kDefaultPsdTol);
  const Matrix rho = load_state(state_path, loaded.povm.dim());
  emit_json(probabilities_to_json(outcome_probabilities(rho, loaded.povm, loaded.basis)),
            out);
  return 0;
}

int run_reconstruct(const std::string& probs_path, const std::string& povm_path,
                    double tol_psd, const std::string& out) {
  const LoadedPovm loaded = load_povm(povm_path, kDefaultPsdTol);
  const ProbabilityVector p = probabilities_from_json(read_json_file(probs_path));
  emit_json(reconstruction_to_json(reconstruct_state(p, loaded.povm, loaded.basis, tol_psd)),
            out);
  return 0;
}

int run_sample(const std::string& state_path, const std::string& povm_path,
               std::uint64_t shots, std::uint64_t seed, const std::string& out) {
  const LoadedPovm loaded = load_povm(povm_path, kDefaultPsdTol);
  const Matrix rho = load_state(state_path, loaded.povm.dim());
  emit_json(counts_to_json(sample_outcomes(rho, loaded.povm, loaded.basis, shots, seed)),
            out);
  return 0;
}

int run_tomo(const std::string& state_path, const std::string& povm_path,
             std::uint64_t shots, int trials, std::uint64_t seed, const std::string& out) {
  const LoadedPovm loaded = load_povm(povm_path, kDefaultPsdTol);
  const Matrix rho = load_state(state_path, loaded.povm.dim());
  emit_json(
      tomography_to_json(tomography_error(rho, loaded.povm, loaded.basis, shots, trials, seed)),
      out);
  return 0;
}

// Draws a state with Bloch norm purity * outer radius along a uniformly
// random admissible direction; rejection keeps the draw inside the state set.
Matrix random_state_at_purity(double purity, const SuBasis& basis, Rng& rng) {
  const int dim = basis.dim();
  if (purity == 0.0) {
    return Matrix::Identity(dim, dim) / static_cast<double>(dim);
  }
  for (int attempt = 0; attempt < kPurityRejectionCap; ++attempt) {
    const RealVector n = random_direction(dim, rng);
    if (purity <= kappa_max_along(n, basis)) {
      return density_from_bloch(purity * n, basis);
    }
  }
  throw std::invalid_argument("no direction admits purity " + format_double(purity) +
                              " after " + std::to_string(kPurityRejectionCap) + " draws");
}

int run_project(int dim, int outcomes, double kappa, int samples,
                std::optional<double> purity, std::uint64_t seed, const std::string& out) {
  const SuBasis basis = SuBasis::generate(dim);
  const DirectionalFrame frame = seeded_frame(dim, outcomes, derive_seed(seed, 0));
  const SymmetricPovm povm = SymmetricPovm::build(kappa, frame, basis);

  Rng rng(derive_seed(seed, 1));
  std::vector<RealVector> points;
  points.reserve(static_cast<std::size_t>(samples));
  for (int s = 0; s < samples; ++s) {
    const Matrix rho = purity.has_value() ? random_state_at_purity(*purity, basis, rng)
                                          : random_pure_state(dim, rng);
    const SimplexPoint v = embed_point(outcome_probabilities(rho, povm, basis), povm);
    const RealVector parallel =
        project_onto_frame(bloch_from_density(rho, basis), frame);
    const double residual = (v.coords - kappa * parallel).norm();
    if (residual > 1e-10) {
      throw std::logic_error("probability point " + std::to_string(s) +
                             " deviates from kappa * b_parallel by " +
                             format_double(residual));
    }
    points.push_back(v.coords);
  }

  std::ostringstream cloud;
  std::ostringstream label;
  label << "seeded orientation dim=" << dim << " outcomes=" << outcomes
        << " kappa=" << format_double(kappa) << " seed=" << seed;
  if (purity.has_value()) {
    label << " purity=" << format_double(*purity);
  }
  write_point_cloud_csv(cloud, label.str(), points);
  emit_text(cloud.str(), out);
  return 0;
}

int run_search(int dim, int outcomes, int restarts, int iters, double step,
               std::uint64_t seed, const std::string& out, const std::string& trace) {
  SearchConfig config;
  config.dim = dim;
  config.count = outcomes;
  config.restarts = restarts;
  config.max_iterations = iters;
  config.initial_step = step;
  config.master_seed = seed;

  const SuBasis basis = SuBasis::generate(dim);
  const SearchResult result = optimize_orientation(config, basis);
  const bool certified = certify(result, basis, kCertifyMargin);
  emit_json(search_result_to_json(result, certified), out);
  if (!trace.empty()) {
    std::ostringstream csv;
    write_restart_trace_csv(csv, result.per_restart_bests);
    emit_text(csv.str(), trace);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric POVMs and qudit Bloch-vector geometry"};
  app.set_version_flag("--version", std::string("sympovm ") + kVersion + " (schema " +
                                        std::to_string(kSchemaVersion) + ")");
  app.require_subcommand(1);

  // basis
  auto* basis_cmd = app.add_subcommand("basis", "emit the traceless Hermitian generator basis");
  int basis_dim = 2;
  std::string basis_out;
  basis_cmd->add_option("--dim", basis_dim, "Hilbert space dimension")
      ->required()
      ->check(CLI::Range(2, 16));
  basis_cmd->add_option("--out", basis_out, "output path (default stdout)");

  // povm build / povm validate
  auto* povm_cmd = app.add_subcommand("povm", "build or validate symmetric POVMs");
  povm_cmd->require_subcommand(1);

  auto* build_cmd = povm_cmd->add_subcommand("build", "build from (kappa, frame)");
  int build_dim = 2;
  int build_outcomes = 2;
  double build_kappa = 0.0;
  std::string build_frame;
  std::optional<std::uint64_t> build_seed;
  double build_tol_psd = kDefaultPsdTol;
  std::string build_out;
  build_cmd->add_option("--dim", build_dim, "Hilbert space dimension")
      ->required()
      ->check(CLI::Range(2, 16));
  build_cmd->add_option("--outcomes", build_outcomes, "number of POVM elements")->required();
  build_cmd->add_option("--kappa", build_kappa, "purity parameter in (0, 1]")->required();
  auto* frame_opt = build_cmd->add_option("--frame", build_frame, "frame JSON file");
  build_cmd->add_option("--seed", build_seed, "random-orientation seed")->excludes(frame_opt);
  build_cmd->add_option("--tol-psd", build_tol_psd, "eigenvalue floor tolerance");
  build_cmd->add_option("--out", build_out, "output path (default stdout)");

  auto* validate_cmd = povm_cmd->add_subcommand("validate", "validate a POVM file");
  std::string validate_path;
  double validate_tol = 1e-9;
  double validate_tol_psd = kDefaultPsdTol;
  std::string validate_out;
  validate_cmd->add_option("file", validate_path, "POVM JSON file")->required();
  validate_cmd->add_option("--tol", validate_tol, "report tolerance");
  validate_cmd->add_option("--tol-psd", validate_tol_psd, "eigenvalue floor tolerance");
  validate_cmd->add_option("--out", validate_out, "output path (default stdout)");

  // probs
  auto* probs_cmd = app.add_subcommand("probs", "outcome probabilities of a state");
  std::string probs_state, probs_povm, probs_out;
  probs_cmd->add_option("--state", probs_state, "density matrix JSON file")->required();
  probs_cmd->add_option("--povm", probs_povm, "POVM JSON file")->required();
  probs_cmd->add_option("--out", probs_out, "output path (default stdout)");

  // reconstruct
  auto* rec_cmd = app.add_subcommand("reconstruct", "linear inversion from probabilities");
  std::string rec_probs, rec_povm, rec_out;
  double rec_tol_psd = kDefaultPsdTol;
  rec_cmd->add_option("--probs", rec_probs, "probabilities JSON file")->required();
  rec_cmd->add_option("--povm", rec_povm, "POVM JSON file")->required();
  rec_cmd->add_option("--tol-psd", rec_tol_psd, "physicality tolerance");
  rec_cmd->add_option("--out", rec_out, "output path (default stdout)");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "draw measurement outcomes");
  std::string sample_state, sample_povm, sample_out;
  std::uint64_t sample_shots = 0;
  std::uint64_t sample_seed = 0;
  sample_cmd->add_option("--state", sample_state, "density matrix JSON file")->required();
  sample_cmd->add_option("--povm", sample_povm, "POVM JSON file")->required();
  sample_cmd->add_option("--shots", sample_shots, "number of draws")->required();
  sample_cmd->add_option("--seed", sample_seed, "RNG seed")->required();
  sample_cmd->add_option("--out", sample_out, "output path (default stdout)");

  // tomo
  auto* tomo_cmd = app.add_subcommand("tomo", "repeated-reconstruction error statistics");
  std::string tomo_state, tomo_povm, tomo_out;
  std::uint64_t tomo_shots = 0;
  int tomo_trials = 0;
  std::uint64_t tomo_seed = 0;
  tomo_cmd->add_option("--state", tomo_state, "density matrix JSON file")->required();
  tomo_cmd->add_option("--povm", tomo_povm, "POVM JSON file")->required();
  tomo_cmd->add_option("--shots", tomo_shots, "shots per trial")->required();
  tomo_cmd->add_option("--trials", tomo_trials, "number of trials")->required();
  tomo_cmd->add_option("--seed", tomo_seed, "RNG seed")->required();
  tomo_cmd->add_option("--out", tomo_out, "output path (default stdout)");

  // project
  auto* project_cmd =
      app.add_subcommand("project", "point cloud of probability vectors in the simplex");
  int project_dim = 2;
  int project_outcomes = 2;
  double project_kappa = 0.0;
  int project_samples = 0;
  std::optional<double> project_purity;
  std::uint64_t project_seed = 0;
  std::string project_out;
  project_cmd->add_option("--dim", project_dim, "Hilbert space dimension")
      ->required()
      ->check(CLI::Range(2, 16));
  project_cmd->add_option("--outcomes", project_outcomes, "number of POVM elements")
      ->required();
  project_cmd->add_option("--kappa", project_kappa, "POVM purity parameter")->required();
  project_cmd->add_option("--samples", project_samples, "number of states")
      ->required()
      ->check(CLI::Range(1, 10000000));
  project_cmd->add_option("--purity", project_purity,
                          "sample states at this purity instead of Haar-random pure ones")
      ->check(CLI::Range(0.0, 1.0));
  project_cmd->add_option("--seed", project_seed, "RNG seed")->required();
  project_cmd->add_option("--out", project_out, "output path (default stdout)");

  // search
  auto* search_cmd = app.add_subcommand("search", "maximize the frame kappa ceiling");
  int search_dim = 2;
  int search_outcomes = 2;
  int search_restarts = 20;
  int search_iters = 5000;
  double search_step = 0.3;
  std::uint64_t search_seed = 0;
  std::string search_out, search_trace;
  search_cmd->add_option("--dim", search_dim, "Hilbert space dimension")
      ->required()
      ->check(CLI::Range(2, 16));
  search_cmd->add_option("--outcomes", search_outcomes, "number of frame directions")
      ->required();
  search_cmd->add_option("--restarts", search_restarts, "independent restarts");
  search_cmd->add_option("--iters", search_iters, "iterations per restart");
  search_cmd->add_option("--step", search_step, "initial proposal step size");
  search_cmd->add_option("--seed", search_seed, "master RNG seed")->required();
  search_cmd->add_option("--out", search_out, "output path (default stdout)");
  search_cmd->add_option("--trace", search_trace, "per-restart best-kappa CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(basis_cmd)) {
      return run_basis(basis_dim, basis_out);
    }
    if (app.got_subcommand(povm_cmd)) {
      if (povm_cmd->got_subcommand(build_cmd)) {
        return run_povm_build(build_dim, build_outcomes, build_kappa, build_frame,
                              build_seed, build_tol_psd, build_out);
      }
      return run_povm_validate(validate_path, validate_tol, validate_tol_psd, validate_out);
    }
    if (app.got_subcommand(probs_cmd)) {
      return run_probs(probs_state, probs_povm, probs_out);
    }
    if (app.got_subcommand(rec_cmd)) {
      return run_reconstruct(rec_probs, rec_povm, rec_tol_psd, rec_out);
    }
    if (app.got_subcommand(sample_cmd)) {
      return run_sample(sample_state, sample_povm, sample_shots, sample_seed, sample_out);
    }
    if (app.got_subcommand(tomo_cmd)) {
      return run_tomo(tomo_state, tomo_povm, tomo_shots, tomo_trials, tomo_seed, tomo_out);
    }
    if (app.got_subcommand(project_cmd)) {
      return run_project(project_dim, project_outcomes, project_kappa, project_samples,
                         project_purity, project_seed, project_out);
    }
    if (app.got_subcommand(search_cmd)) {
      return run_search(search_dim, search_outcomes, search_restarts, search_iters,
                        search_step, search_seed, search_out, search_trace);
    }
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const PovmBuildError& e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

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

#include "sympovm/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "sympovm/version.hpp"

namespace sympovm {

namespace {

void check_schema(const Json& j, const char* what) {
  if (!j.is_object()) {
    throw std::runtime_error(std::string(what) + ": expected a JSON object");
  }
  if (!j.contains("schema_version")) {
    throw std::runtime_error(std::string(what) + ": missing field 'schema_version'");
  }
  const int version = j.at("schema_version").get<int>();
  if (version != kSchemaVersion) {
    throw std::runtime_error(std::string(what) + ": unsupported schema_version " +
                             std::to_string(version) + ", expected " +
                             std::to_string(kSchemaVersion));
  }
}

const Json& require(const Json& j, const char* field, const char* what) {
  if (!j.contains(field)) {
    throw std::runtime_error(std::string(what) + ": missing field '" + field + "'");
  }
  return j.at(field);
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      entries.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
  }
  return entries;
}

Matrix matrix_from_json(const Json& j, int dim) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(dim) * dim) {
    throw std::runtime_error("matrix entries: expected a flat row-major list of " +
                             std::to_string(dim * dim) + " [re, im] pairs");
  }
  Matrix m(dim, dim);
  std::size_t idx = 0;
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c, ++idx) {
      const Json& pair = j.at(idx);
      if (!pair.is_array() || pair.size() != 2) {
        throw std::runtime_error("matrix entry " + std::to_string(idx) +
                                 ": expected an [re, im] pair");
      }
      m(r, c) = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
  }
  return m;
}

Json density_to_json(const Matrix& rho) {
  return Json{{"schema_version", kSchemaVersion},
              {"dim", static_cast<int>(rho.rows())},
              {"matrix", matrix_to_json(rho)}};
}

Matrix density_from_json(const Json& j) {
  check_schema(j, "density matrix");
  const int dim = require(j, "dim", "density matrix").get<int>();
  if (dim < 2) {
    throw std::runtime_error("density matrix: dim must be >= 2");
  }
  const Matrix rho = matrix_from_json(require(j, "matrix", "density matrix"), dim);
  if ((rho - rho.adjoint()).norm() > 1e-12) {
    throw std::runtime_error("density matrix: not Hermitian within 1e-12");
  }
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-12) {
    throw std::runtime_error("density matrix: trace deviates from 1 beyond 1e-12");
  }
  return rho;
}

Json bloch_to_json(int dim, const RealVector& b) {
  if (b.size() != bloch_size(dim)) {
    throw std::invalid_argument("Bloch vector length does not match dim");
  }
  return Json{{"schema_version", kSchemaVersion},
              {"dim", dim},
              {"coords", std::vector<double>(b.data(), b.data() + b.size())}};
}

RealVector bloch_from_json(const Json& j, int* dim_out) {
  check_schema(j, "Bloch vector");
  const int dim = require(j, "dim", "Bloch vector").get<int>();
  const auto coords = require(j, "coords", "Bloch vector").get<std::vector<double>>();
  if (static_cast<Eigen::Index>(coords.size()) != bloch_size(dim)) {
    throw std::runtime_error("Bloch vector: expected " + std::to_string(bloch_size(dim)) +
                             " coordinates for dim " + std::to_string(dim));
  }
  if (dim_out != nullptr) {
    *dim_out = dim;
  }
  return Eigen::Map<const RealVector>(coords.data(), static_cast<Eigen::Index>(coords.size()));
}

Json basis_to_json(const SuBasis& basis, const StructureConstants& sc) {
  Json generators = Json::array();
  for (const Matrix& g : basis.generators()) {
    generators.push_back(matrix_to_json(g));
  }
  Json constants = Json::array();
  for (const auto& e : sc.entries()) {
    constants.push_back(Json{{"indices", Json::array({e.a + 1, e.b + 1, e.c + 1})},
                             {"d", e.d},
                             {"f", e.f}});
  }
  return Json{{"schema_version", kSchemaVersion},
              {"dim", basis.dim()},
              {"generators", generators},
              {"structure_constants", constants}};
}

Json frame_to_json(const DirectionalFrame& frame) {
  Json vectors = Json::array();
  for (int i = 0; i < frame.count(); ++i) {
    const RealVector v = frame.vector(i);
    vectors.push_back(std::vector<double>(v.data(), v.data() + v.size()));
  }
  return Json{{"schema_version", kSchemaVersion},
              {"dim", frame.dim()},
              {"count", frame.count()},
              {"vectors", vectors}};
}

DirectionalFrame frame_from_json(const Json& j) {
  check_schema(j, "frame");
  const int dim = require(j, "dim", "frame").get<int>();
  const int count = require(j, "count", "frame").get<int>();
  const Json& vectors = require(j, "vectors", "frame");
  if (!vectors.is_array() || vectors.size() != static_cast<std::size_t>(count)) {
    throw std::runtime_error("frame: 'vectors' must list exactly " + std::to_string(count) +
                             " vectors");
  }
  RealMatrix m(bloch_size(dim), count);
  for (int i = 0; i < count; ++i) {
    const auto v = vectors.at(static_cast<std::size_t>(i)).get<std::vector<double>>();
    if (static_cast<Eigen::Index>(v.size()) != bloch_size(dim)) {
      throw std::runtime_error("frame: vector " + std::to_string(i) + " has length " +
                               std::to_string(v.size()) + ", expected " +
                               std::to_string(bloch_size(dim)));
    }
    m.col(i) = Eigen::Map<const RealVector>(v.data(), static_cast<Eigen::Index>(v.size()));
  }
  return DirectionalFrame::from_vectors(dim, std::move(m));
}

Json povm_to_json(const SymmetricPovm& povm) {
  Json elements = Json::array();
  for (const Matrix& e : povm.elements()) {
    elements.push_back(matrix_to_json(e));
  }
  return Json{{"schema_version", kSchemaVersion},
              {"dim", povm.dim()},
              {"count", povm.count()},
              {"kappa", povm.kappa()},
              {"alpha", povm.alpha()},
              {"beta", povm.beta()},
              {"frame", frame_to_json(povm.frame())},
              {"elements", elements}};
}

SymmetricPovm povm_from_json(const Json& j, const SuBasis& basis, double tol_psd) {
  check_schema(j, "POVM");
  const int dim = require(j, "dim", "POVM").get<int>();
  const int count = require(j, "count", "POVM").get<int>();
  const double kappa = require(j, "kappa", "POVM").get<double>();
  const DirectionalFrame frame = frame_from_json(require(j, "frame", "POVM"));
  if (frame.dim() != dim || frame.count() != count) {
    throw std::runtime_error("POVM: frame shape disagrees with the dim/count fields");
  }
  SymmetricPovm povm = SymmetricPovm::build(kappa, frame, basis, tol_psd);

  // The stored elements must match the rebuild; anything else means the file
  // was edited inconsistently.
  const Json& elements = require(j, "elements", "POVM");
  if (!elements.is_array() || elements.size() != static_cast<std::size_t>(count)) {
    throw std::runtime_error("POVM: 'elements' must list exactly " + std::to_string(count) +
                             " matrices");
  }
  for (int i = 0; i < count; ++i) {
    const Matrix stored = matrix_from_json(elements.at(static_cast<std::size_t>(i)), dim);
    if ((stored - povm.element(i)).norm() > 1e-10) {
      throw std::runtime_error("POVM: stored element " + std::to_string(i) +
                               " disagrees with its rebuild from (kappa, frame)");
    }
  }
  return povm;
}

Json probabilities_to_json(const ProbabilityVector& p) {
  std::vector<double> probs(static_cast<std::size_t>(p.count));
  for (int i = 0; i < p.count; ++i) {
    if (p.probs[i] < -1e-12) {
      throw std::invalid_argument("probability " + std::to_string(i) +
                                  " is negative beyond tolerance: " +
                                  std::to_string(p.probs[i]));
    }
    probs[static_cast<std::size_t>(i)] = std::max(p.probs[i], 0.0);
  }
  return Json{{"schema_version", kSchemaVersion}, {"count", p.count}, {"probs", probs}};
}

ProbabilityVector probabilities_from_json(const Json& j) {
  check_schema(j, "probabilities");
  ProbabilityVector p;
  p.count = require(j, "count", "probabilities").get<int>();
  const auto probs = require(j, "probs", "probabilities").get<std::vector<double>>();
  if (static_cast<int>(probs.size()) != p.count) {
    throw std::runtime_error("probabilities: 'probs' must list exactly " +
                             std::to_string(p.count) + " entries");
  }
  p.probs = Eigen::Map<const RealVector>(probs.data(), static_cast<Eigen::Index>(probs.size()));
  double sum = 0.0;
  for (int i = 0; i < p.count; ++i) {
    if (p.probs[i] < -1e-12) {
      throw std::runtime_error("probabilities: entry " + std::to_string(i) + " is negative");
    }
    sum += p.probs[i];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::runtime_error("probabilities: entries sum to " + std::to_string(sum));
  }
  return p;
}

Json counts_to_json(const OutcomeCounts& counts) {
  return Json{{"schema_version", kSchemaVersion},
              {"count", counts.count},
              {"shots", counts.shots},
              {"tallies", counts.tallies}};
}

Json reconstruction_to_json(const Reconstruction& rec) {
  return Json{{"schema_version", kSchemaVersion},
              {"dim", static_cast<int>(rec.rho.rows())},
              {"matrix", matrix_to_json(rec.rho)},
              {"min_eigenvalue", rec.min_eigenvalue},
              {"trace_deviation", rec.trace_deviation},
              {"physical", rec.physical}};
}

Json tomography_to_json(const TomographyStats& stats) {
  return Json{{"schema_version", kSchemaVersion},
              {"shots", stats.shots},
              {"trials", stats.trials},
              {"mean_error", stats.mean_error},
              {"std_error", stats.std_error}};
}

Json search_result_to_json(const SearchResult& result, bool certified) {
  Json j{{"schema_version", kSchemaVersion},
         {"best_kappa", result.best_kappa},
         {"per_restart_bests", result.per_restart_bests},
         {"iterations_used", result.iterations_used},
         {"converged", result.converged},
         {"certified", certified}};
  if (result.best_frame.has_value()) {
    j["best_frame"] = frame_to_json(*result.best_frame);
  }
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "' for reading");
  }
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out << dump_json(j);
  if (!out) {
    throw std::runtime_error("failed writing '" + path + "'");
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

std::string format_double(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_point_cloud_csv(std::ostream& out, const std::string& frame_label,
                           const std::vector<RealVector>& points) {
  out << "# frame: " << frame_label << "\n";
  if (points.empty()) {
    return;
  }
  const Eigen::Index width = points.front().size();
  for (Eigen::Index k = 0; k < width; ++k) {
    out << (k == 0 ? "" : ",") << "v" << (k + 1);
  }
  out << "\n";
  for (const RealVector& point : points) {
    for (Eigen::Index k = 0; k < width; ++k) {
      out << (k == 0 ? "" : ",") << format_double(point[k]);
    }
    out << "\n";
  }
}

void write_restart_trace_csv(std::ostream& out, const std::vector<double>& bests) {
  out << "restart,best_kappa\n";
  for (std::size_t r = 0; r < bests.size(); ++r) {
    out << r << "," << format_double(bests[r]) << "\n";
  }
}

}  // namespace sympovm

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

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sympovm/bloch.hpp"
#include "sympovm/io.hpp"
#include "sympovm/version.hpp"

using namespace sympovm;

namespace {

DirectionalFrame random_frame(int dim, int count, std::uint64_t seed) {
  Rng rng(seed);
  return rotate_frame(DirectionalFrame::canonical(dim, count),
                      Orientation::random(dim, 1.0, rng));
}

Json reparse(const Json& j) { return Json::parse(dump_json(j)); }

}  // namespace

TEST_CASE("density matrices survive a serialize/parse round trip exactly") {
  Rng rng(331);
  for (int dim : {2, 3, 4}) {
    const Matrix rho = random_density_matrix(dim, rng);
    const Matrix back = density_from_json(reparse(density_to_json(rho)));
    CHECK((back.array() == rho.array()).all());
  }
}

TEST_CASE("density loading rejects tampered documents") {
  Rng rng(337);
  Json j = density_to_json(random_density_matrix(2, rng));

  Json wrong_schema = j;
  wrong_schema["schema_version"] = kSchemaVersion + 1;
  CHECK_THROWS_WITH_AS(density_from_json(wrong_schema),
                       doctest::Contains("unsupported schema_version"), std::runtime_error);

  Json no_schema = j;
  no_schema.erase("schema_version");
  CHECK_THROWS_AS(density_from_json(no_schema), std::runtime_error);

  Json not_hermitian = j;
  not_hermitian["matrix"][1][0] = 0.9;  // breaks conjugate symmetry
  not_hermitian["matrix"][1][1] = 0.9;
  CHECK_THROWS_WITH_AS(density_from_json(not_hermitian), doctest::Contains("Hermitian"),
                       std::runtime_error);

  Json bad_trace = j;
  bad_trace["matrix"][0][0] = bad_trace["matrix"][0][0].get<double>() + 0.5;
  CHECK_THROWS_WITH_AS(density_from_json(bad_trace), doctest::Contains("trace"),
                       std::runtime_error);

  Json short_matrix = j;
  short_matrix["matrix"].erase(3);
  CHECK_THROWS_AS(density_from_json(short_matrix), std::runtime_error);
}

TEST_CASE("Bloch vectors round trip with their dimension") {
  const SuBasis basis = SuBasis::generate(3);
  Rng rng(347);
  const RealVector b = bloch_from_density(random_density_matrix(3, rng), basis);
  int dim = 0;
  const RealVector back = bloch_from_json(reparse(bloch_to_json(3, b)), &dim);
  CHECK(dim == 3);
  CHECK((back.array() == b.array()).all());

  CHECK_THROWS_AS(bloch_to_json(2, b), std::invalid_argument);  // length mismatch
  Json j = bloch_to_json(3, b);
  j["dim"] = 4;
  CHECK_THROWS_AS(bloch_from_json(j), std::runtime_error);
}

TEST_CASE("frames round trip exactly") {
  const DirectionalFrame frame = random_frame(3, 5, 349);
  const DirectionalFrame back = frame_from_json(reparse(frame_to_json(frame)));
  CHECK(back.dim() == 3);
  CHECK(back.count() == 5);
  CHECK((back.vectors().array() == frame.vectors().array()).all());

  Json j = frame_to_json(frame);
  j["count"] = 4;
  CHECK_THROWS_AS(frame_from_json(j), std::runtime_error);
}

TEST_CASE("POVM loading rebuilds and cross-checks the stored elements") {
  const SuBasis basis = SuBasis::generate(2);
  const SymmetricPovm povm = SymmetricPovm::build(1.0, random_frame(2, 4, 353), basis);
  const Json j = reparse(povm_to_json(povm));

  const SymmetricPovm back = povm_from_json(j, basis);
  CHECK(back.kappa() == povm.kappa());
  for (int i = 0; i < 4; ++i) {
    CHECK((back.element(i) - povm.element(i)).norm() == 0.0);
  }

  Json tampered_kappa = j;
  tampered_kappa["kappa"] = 0.7;  // elements no longer match the rebuild
  CHECK_THROWS_WITH_AS(povm_from_json(tampered_kappa, basis),
                       doctest::Contains("disagrees with its rebuild"), std::runtime_error);

  Json tampered_element = j;
  tampered_element["elements"][2][0][0] =
      tampered_element["elements"][2][0][0].get<double>() + 1e-6;
  CHECK_THROWS_WITH_AS(povm_from_json(tampered_element, basis),
                       doctest::Contains("disagrees with its rebuild"), std::runtime_error);

  Json wrong_dim = j;
  wrong_dim["dim"] = 3;
  CHECK_THROWS_AS(povm_from_json(wrong_dim, basis), std::runtime_error);
}

TEST_CASE("probability serialization clamps noise and rejects real negatives") {
  ProbabilityVector p;
  p.count = 3;
  p.probs = RealVector::Zero(3);
  p.probs << 0.5, 0.5 + 1e-13, -1e-13;
  const Json j = probabilities_to_json(p);
  CHECK(j["probs"][2].get<double>() == 0.0);
  CHECK(j["probs"][0].get<double>() == 0.5);

  p.probs[2] = -1e-6;
  CHECK_THROWS_AS(probabilities_to_json(p), std::invalid_argument);
}

TEST_CASE("probability loading checks shape, sign, and normalization") {
  ProbabilityVector p;
  p.count = 4;
  p.probs = RealVector::Constant(4, 0.25);
  const ProbabilityVector back = probabilities_from_json(reparse(probabilities_to_json(p)));
  CHECK(back.count == 4);
  CHECK((back.probs.array() == p.probs.array()).all());

  Json j = probabilities_to_json(p);
  j["probs"][0] = 0.5;  // sum 1.25
  CHECK_THROWS_WITH_AS(probabilities_from_json(j), doctest::Contains("sum"),
                       std::runtime_error);
  j["probs"][0] = -0.25;
  j["probs"][1] = 0.75;
  CHECK_THROWS_WITH_AS(probabilities_from_json(j), doctest::Contains("negative"),
                       std::runtime_error);
  j = probabilities_to_json(p);
  j["probs"].erase(3);
  CHECK_THROWS_AS(probabilities_from_json(j), std::runtime_error);
}

TEST_CASE("basis documents use 1-based structure-constant indices") {
  const SuBasis basis = SuBasis::generate(2);
  const StructureConstants sc = StructureConstants::compute(basis);
  const Json j = reparse(basis_to_json(basis, sc));
  CHECK(j["dim"] == 2);
  CHECK(j["generators"].size() == 3);
  REQUIRE(j["structure_constants"].size() == 1);  // only the Levi-Civita triple survives
  const Json& entry = j["structure_constants"][0];
  CHECK(entry["indices"] == Json::array({1, 2, 3}));
  CHECK(entry["d"].get<double>() == 0.0);
  CHECK(entry["f"].get<double>() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("double formatting round trips exactly") {
  for (const double value : {0.1, 1.0 / 3.0, 2.0 / 3.0, 1e-300, 1.0 + 1e-15,
                             123456789.123456789, -0.4999999999999999, 5e-324}) {
    const std::string text = format_double(value);
    CHECK(std::strtod(text.c_str(), nullptr) == value);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-2.0) == "-2");
}

TEST_CASE("point cloud CSV layout is stable") {
  std::vector<RealVector> points;
  RealVector a(3);
  a << 0.5, -1.0, 0.25;
  RealVector b(3);
  b << 0.0, 2.0, -0.125;
  points.push_back(a);
  points.push_back(b);
  std::ostringstream out;
  write_point_cloud_csv(out, "canonical d=2 N=3", points);
  CHECK(out.str() ==
        "# frame: canonical d=2 N=3\n"
        "v1,v2,v3\n"
        "0.5,-1,0.25\n"
        "0,2,-0.125\n");
}

TEST_CASE("restart trace CSV layout is stable") {
  std::ostringstream out;
  write_restart_trace_csv(out, {0.5, 0.875});
  CHECK(out.str() ==
        "restart,best_kappa\n"
        "0,0.5\n"
        "1,0.875\n");
}

TEST_CASE("counts and analysis results serialize with schema tags") {
  OutcomeCounts counts;
  counts.count = 3;
  counts.tallies = {10, 0, 90};
  counts.shots = 100;
  const Json cj = reparse(counts_to_json(counts));
  CHECK(cj["schema_version"] == kSchemaVersion);
  CHECK(cj["shots"] == 100);
  CHECK(cj["tallies"] == Json::array({10, 0, 90}));

  Reconstruction rec;
  rec.rho = Matrix::Identity(2, 2) / 2.0;
  rec.min_eigenvalue = 0.5;
  rec.trace_deviation = 0.0;
  rec.physical = true;
  const Json rj = reparse(reconstruction_to_json(rec));
  CHECK(rj["dim"] == 2);
  CHECK(rj["physical"] == true);
  CHECK(rj["min_eigenvalue"] == 0.5);

  TomographyStats stats;
  stats.mean_error = 0.25;
  stats.std_error = 0.0625;
  stats.shots = 1000;
  stats.trials = 8;
  const Json tj = reparse(tomography_to_json(stats));
  CHECK(tj["mean_error"] == 0.25);
  CHECK(tj["trials"] == 8);
}

TEST_CASE("search results serialize the best frame when present") {
  SearchResult result;
  result.best_kappa = 0.75;
  result.per_restart_bests = {0.5, 0.75};
  result.iterations_used = 123;
  result.converged = true;
  const Json without = reparse(search_result_to_json(result, false));
  CHECK_FALSE(without.contains("best_frame"));
  CHECK(without["certified"] == false);
  CHECK(without["per_restart_bests"] == Json::array({0.5, 0.75}));

  result.best_frame = DirectionalFrame::canonical(2, 3);
  const Json with = reparse(search_result_to_json(result, true));
  CHECK(with["certified"] == true);
  const DirectionalFrame back = frame_from_json(with["best_frame"]);
  CHECK(back.count() == 3);
}

TEST_CASE("file IO reports the offending path") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path();

  const fs::path missing = dir / "sympovm_io_missing.json";
  fs::remove(missing);
  CHECK_THROWS_WITH_AS(read_json_file(missing.string()), doctest::Contains("sympovm_io_missing"),
                       std::runtime_error);

  const fs::path malformed = dir / "sympovm_io_malformed.json";
  {
    std::ofstream out(malformed);
    out << "{\"schema_version\": 1,";  // truncated document
  }
  CHECK_THROWS_WITH_AS(read_json_file(malformed.string()),
                       doctest::Contains("sympovm_io_malformed"), std::runtime_error);

  const fs::path good = dir / "sympovm_io_good.json";
  const Json j = bloch_to_json(2, RealVector::Zero(3));
  write_json_file(good.string(), j);
  CHECK(read_json_file(good.string()) == j);

  std::ifstream in(good.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == dump_json(j));  // two-space indent, trailing newline
  CHECK(buffer.str().back() == '\n');

  fs::remove(malformed);
  fs::remove(good);
}

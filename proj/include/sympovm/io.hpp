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

#pragma once

#include <nlohmann/json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "sympovm/kappa_search.hpp"
#include "sympovm/povm.hpp"
#include "sympovm/simplex_frames.hpp"
#include "sympovm/statistics.hpp"
#include "sympovm/su_basis.hpp"
#include "sympovm/types.hpp"

namespace sympovm {

using Json = nlohmann::json;

// Every emitted document carries {"schema_version": kSchemaVersion}; loaders
// reject other versions.

// Complex matrices serialize as flat row-major [re, im] pair lists.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, int dim);

Json density_to_json(const Matrix& rho);
Matrix density_from_json(const Json& j);

Json bloch_to_json(int dim, const RealVector& b);
RealVector bloch_from_json(const Json& j, int* dim_out = nullptr);

// Structure-constant indices are 1-based in the file format.
Json basis_to_json(const SuBasis& basis, const StructureConstants& sc);

Json frame_to_json(const DirectionalFrame& frame);
DirectionalFrame frame_from_json(const Json& j);

Json povm_to_json(const SymmetricPovm& povm);
// Strict load: rebuilds the elements from (kappa, frame) and rejects files
// whose stored elements or trace constants disagree with the rebuild.
SymmetricPovm povm_from_json(const Json& j, const SuBasis& basis,
                             double tol_psd = kDefaultPsdTol);

// Probabilities are clamped to [0, 1] on output only.
Json probabilities_to_json(const ProbabilityVector& p);
ProbabilityVector probabilities_from_json(const Json& j);

Json counts_to_json(const OutcomeCounts& counts);
Json reconstruction_to_json(const Reconstruction& rec);
Json tomography_to_json(const TomographyStats& stats);
Json search_result_to_json(const SearchResult& result, bool certified);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);
// Two-space indentation and a trailing newline; the single dump path keeps
// repeated runs byte-identical.
std::string dump_json(const Json& j);

// Shortest-width formatting that still round-trips doubles exactly.
std::string format_double(double value);

// One row per point, comma-separated coordinates; rows prefixed by comment
// lines naming the frame source and a column header.
void write_point_cloud_csv(std::ostream& out, const std::string& frame_label,
                           const std::vector<RealVector>& points);

void write_restart_trace_csv(std::ostream& out, const std::vector<double>& bests);

}  // namespace sympovm


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

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sympovm/bloch.hpp"
#include "sympovm/kappa_search.hpp"
#include "sympovm/povm.hpp"
#include "sympovm/rng.hpp"
#include "sympovm/simplex_frames.hpp"
#include "sympovm/statistics.hpp"
#include "sympovm/su_basis.hpp"
#include "sympovm/version.hpp"

namespace py = pybind11;
using namespace sympovm;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Symmetric POVMs and qudit Bloch-vector geometry";
  m.attr("__version__") = kVersion;
  m.attr("__schema_version__") = kSchemaVersion;

  py::register_exception<PovmBuildError>(m, "PovmBuildError", PyExc_RuntimeError);

  // rng
  py::class_<Rng>(m, "Rng", "Deterministic 64-bit generator with pinned transforms")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("next_u64", &Rng::next_u64)
      .def("uniform", &Rng::uniform)
      .def("gaussian", &Rng::gaussian)
      .def("below", &Rng::below, py::arg("bound"));
  m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("index"),
        "Decorrelated child seed for (master, index)");

  // su_basis
  py::class_<SuBasis>(m, "SuBasis")
      .def_static("generate", &SuBasis::generate, py::arg("dim"))
      .def_static("from_generators", &SuBasis::from_generators, py::arg("dim"),
                  py::arg("generators"))
      .def_property_readonly("dim", &SuBasis::dim)
      .def_property_readonly("size", &SuBasis::size)
      .def("generator", &SuBasis::generator, py::arg("a"))
      .def("generators", &SuBasis::generators)
      .def("linear_combination", &SuBasis::linear_combination, py::arg("coeffs"));

  py::class_<StructureConstants> sc(m, "StructureConstants");
  py::class_<StructureConstants::Entry>(sc, "Entry")
      .def_readonly("a", &StructureConstants::Entry::a)
      .def_readonly("b", &StructureConstants::Entry::b)
      .def_readonly("c", &StructureConstants::Entry::c)
      .def_readonly("d", &StructureConstants::Entry::d)
      .def_readonly("f", &StructureConstants::Entry::f);
  sc.def_static("compute", &StructureConstants::compute, py::arg("basis"),
                py::arg("zero_floor") = 1e-13)
      .def_property_readonly("dim", &StructureConstants::dim)
      .def("d", &StructureConstants::d, py::arg("a"), py::arg("b"), py::arg("c"))
      .def("f", &StructureConstants::f, py::arg("a"), py::arg("b"), py::arg("c"))
      .def("entries", &StructureConstants::entries);

  py::class_<BasisRelationsReport>(m, "BasisRelationsReport")
      .def_readonly("commutator_residual", &BasisRelationsReport::commutator_residual)
      .def_readonly("anticommutator_residual",
                    &BasisRelationsReport::anticommutator_residual)
      .def_readonly("gram_residual", &BasisRelationsReport::gram_residual)
      .def_readonly("tol", &BasisRelationsReport::tol)
      .def_readonly("passed", &BasisRelationsReport::passed);
  m.def("verify_basis_relations", &verify_basis_relations, py::arg("basis"), py::arg("sc"),
        py::arg("tol"));

  // bloch
  py::class_<Radii>(m, "Radii")
      .def_readonly("outer", &Radii::outer)
      .def_readonly("inner", &Radii::inner);
  m.def("radii", &radii, py::arg("dim"));

  py::class_<PurityDecomposition>(m, "PurityDecomposition")
      .def_readonly("kappa", &PurityDecomposition::kappa)
      .def_readonly("direction", &PurityDecomposition::direction)
      .def_property_readonly("dim", &PurityDecomposition::dim);
  py::class_<PositivityCheck>(m, "PositivityCheck")
      .def_readonly("valid", &PositivityCheck::valid)
      .def_readonly("min_eigenvalue", &PositivityCheck::min_eigenvalue);

  m.def("density_from_bloch", &density_from_bloch, py::arg("b"), py::arg("basis"));
  m.def("bloch_from_density", &bloch_from_density, py::arg("rho"), py::arg("basis"),
        py::arg("tol") = 1e-10);
  m.def("decompose", &decompose, py::arg("b"));
  m.def("compose", &compose, py::arg("p"));
  m.def("is_bloch_vector", &is_bloch_vector, py::arg("b"), py::arg("basis"),
        py::arg("tol_psd") = kDefaultPsdTol);
  m.def("star_product", &star_product, py::arg("b1"), py::arg("b2"), py::arg("sc"));
  m.def("pure_state_test", &pure_state_test, py::arg("b"), py::arg("sc"), py::arg("tol"));
  m.def("state_overlap", &state_overlap, py::arg("p1"), py::arg("p2"));
  m.def("max_angle", &max_angle, py::arg("kappa"), py::arg("dim"));
  m.def("kappa_max_along", &kappa_max_along, py::arg("n"), py::arg("basis"));
  m.def("hermitian_eigenvalues", &hermitian_eigenvalues, py::arg("m"));
  m.def("random_pure_state", &random_pure_state, py::arg("dim"), py::arg("rng"));
  m.def("random_density_matrix", &random_density_matrix, py::arg("dim"), py::arg("rng"));
  m.def("random_direction", &random_direction, py::arg("dim"), py::arg("rng"));

  // simplex_frames
  py::class_<DirectionalFrame>(m, "DirectionalFrame")
      .def_static("canonical", &DirectionalFrame::canonical, py::arg("dim"),
                  py::arg("count"))
      .def_static("from_vectors", &DirectionalFrame::from_vectors, py::arg("dim"),
                  py::arg("vectors"))
      .def_property_readonly("dim", &DirectionalFrame::dim)
      .def_property_readonly("count", &DirectionalFrame::count)
      .def("vectors", &DirectionalFrame::vectors)
      .def("vector", &DirectionalFrame::vector, py::arg("i"));

  py::class_<Orientation>(m, "Orientation")
      .def_static("identity", &Orientation::identity, py::arg("dim"))
      .def_static("random", &Orientation::random, py::arg("dim"), py::arg("scale"),
                  py::arg("rng"))
      .def_static("from_coefficients", &Orientation::from_coefficients, py::arg("dim"),
                  py::arg("coefficients"))
      .def_static("coefficient_count", &Orientation::coefficient_count, py::arg("dim"))
      .def_property_readonly("dim", &Orientation::dim)
      .def_property_readonly("coefficients", &Orientation::coefficients)
      .def("rotation_matrix", &Orientation::rotation_matrix);

  m.def("rotate_frame",
        py::overload_cast<const DirectionalFrame&, const Orientation&>(&rotate_frame),
        py::arg("frame"), py::arg("orientation"));
  m.def("rotate_frame",
        py::overload_cast<const DirectionalFrame&, const RealMatrix&>(&rotate_frame),
        py::arg("frame"), py::arg("rotation"));

  py::class_<FrameValidationReport>(m, "FrameValidationReport")
      .def_readonly("norm_deviation", &FrameValidationReport::norm_deviation)
      .def_readonly("cosine_deviation", &FrameValidationReport::cosine_deviation)
      .def_readonly("sum_norm", &FrameValidationReport::sum_norm)
      .def_readonly("tol", &FrameValidationReport::tol)
      .def_readonly("passed", &FrameValidationReport::passed);
  m.def("validate_frame", &validate_frame, py::arg("frame"), py::arg("tol"));
  m.def("n_min", &n_min, py::arg("kappa"), py::arg("dim"));
  m.def("probability_simplex_vertices", &probability_simplex_vertices, py::arg("frame"));

  // povm
  py::class_<SymmetricPovm>(m, "SymmetricPovm")
      .def_static("build", &SymmetricPovm::build, py::arg("kappa"), py::arg("frame"),
                  py::arg("basis"), py::arg("tol_psd") = kDefaultPsdTol)
      .def_property_readonly("dim", &SymmetricPovm::dim)
      .def_property_readonly("count", &SymmetricPovm::count)
      .def_property_readonly("kappa", &SymmetricPovm::kappa)
      .def_property_readonly("alpha", &SymmetricPovm::alpha)
      .def_property_readonly("beta", &SymmetricPovm::beta)
      .def_property_readonly("frame", &SymmetricPovm::frame)
      .def("elements", &SymmetricPovm::elements)
      .def("element", &SymmetricPovm::element, py::arg("i"));

  py::class_<PovmValidationReport>(m, "PovmValidationReport")
      .def_readonly("completeness_residual", &PovmValidationReport::completeness_residual)
      .def_readonly("trace_residual", &PovmValidationReport::trace_residual)
      .def_readonly("pair_trace_residual", &PovmValidationReport::pair_trace_residual)
      .def_readonly("min_eigenvalue", &PovmValidationReport::min_eigenvalue)
      .def_readonly("min_pair_distance", &PovmValidationReport::min_pair_distance)
      .def_readonly("tol", &PovmValidationReport::tol)
      .def_readonly("distinct", &PovmValidationReport::distinct)
      .def_readonly("passed", &PovmValidationReport::passed);
  m.def("validate_povm", &validate_povm, py::arg("povm"), py::arg("tol"),
        py::arg("tol_psd") = kDefaultPsdTol);
  m.def("validate_elements", &validate_elements, py::arg("elements"), py::arg("dim"),
        py::arg("kappa"), py::arg("tol"), py::arg("tol_psd") = kDefaultPsdTol);

  py::class_<AlphaBeta>(m, "AlphaBeta")
      .def_readonly("alpha", &AlphaBeta::alpha)
      .def_readonly("beta", &AlphaBeta::beta);
  m.def("alpha_beta", &alpha_beta, py::arg("povm"));
  m.def("classify", &classify, py::arg("povm"), py::arg("tol"));

  // statistics
  py::class_<ProbabilityVector>(m, "ProbabilityVector")
      .def(py::init<>())
      .def_readwrite("count", &ProbabilityVector::count)
      .def_readwrite("probs", &ProbabilityVector::probs);
  py::class_<SimplexPoint>(m, "SimplexPoint")
      .def_readonly("dim", &SimplexPoint::dim)
      .def_readonly("coords", &SimplexPoint::coords);
  py::class_<OutcomeCounts>(m, "OutcomeCounts")
      .def_readonly("count", &OutcomeCounts::count)
      .def_readonly("tallies", &OutcomeCounts::tallies)
      .def_readonly("shots", &OutcomeCounts::shots);
  py::class_<Reconstruction>(m, "Reconstruction")
      .def_readonly("rho", &Reconstruction::rho)
      .def_readonly("min_eigenvalue", &Reconstruction::min_eigenvalue)
      .def_readonly("trace_deviation", &Reconstruction::trace_deviation)
      .def_readonly("physical", &Reconstruction::physical);
  py::class_<TomographyStats>(m, "TomographyStats")
      .def_readonly("mean_error", &TomographyStats::mean_error)
      .def_readonly("std_error", &TomographyStats::std_error)
      .def_readonly("shots", &TomographyStats::shots)
      .def_readonly("trials", &TomographyStats::trials);

  m.def("outcome_probabilities", &outcome_probabilities, py::arg("rho"), py::arg("povm"),
        py::arg("basis"));
  m.def("embed_point", &embed_point, py::arg("p"), py::arg("povm"));
  m.def("project_onto_frame", &project_onto_frame, py::arg("b"), py::arg("frame"));
  m.def("verify_projection_theorem", &verify_projection_theorem, py::arg("rho"),
        py::arg("povm"), py::arg("basis"));
  m.def("reconstruct_state", &reconstruct_state, py::arg("p"), py::arg("povm"),
        py::arg("basis"), py::arg("tol_psd") = kDefaultPsdTol);
  m.def("sample_outcomes", &sample_outcomes, py::arg("rho"), py::arg("povm"),
        py::arg("basis"), py::arg("shots"), py::arg("seed"));
  m.def("frequencies", &frequencies, py::arg("counts"));
  m.def("tomography_error", &tomography_error, py::arg("rho"), py::arg("povm"),
        py::arg("basis"), py::arg("shots"), py::arg("trials"), py::arg("seed"));

  // kappa_search
  py::class_<SearchConfig>(m, "SearchConfig")
      .def(py::init<>())
      .def_readwrite("dim", &SearchConfig::dim)
      .def_readwrite("count", &SearchConfig::count)
      .def_readwrite("restarts", &SearchConfig::restarts)
      .def_readwrite("max_iterations", &SearchConfig::max_iterations)
      .def_readwrite("initial_step", &SearchConfig::initial_step)
      .def_readwrite("step_decay", &SearchConfig::step_decay)
      .def_readwrite("convergence_tol", &SearchConfig::convergence_tol)
      .def_readwrite("master_seed", &SearchConfig::master_seed);
  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("best_kappa", &SearchResult::best_kappa)
      .def_readonly("best_frame", &SearchResult::best_frame)
      .def_readonly("per_restart_bests", &SearchResult::per_restart_bests)
      .def_readonly("iterations_used", &SearchResult::iterations_used)
      .def_readonly("converged", &SearchResult::converged);
  m.def("kappa_max_for_frame", &kappa_max_for_frame, py::arg("frame"), py::arg("basis"));
  m.def("optimize_orientation", &optimize_orientation, py::arg("config"), py::arg("basis"));
  m.def("certify",
        py::overload_cast<const DirectionalFrame&, double, const SuBasis&, double>(&certify),
        py::arg("frame"), py::arg("kappa"), py::arg("basis"), py::arg("margin"));
  m.def("certify", py::overload_cast<const SearchResult&, const SuBasis&, double>(&certify),
        py::arg("result"), py::arg("basis"), py::arg("margin"));
}

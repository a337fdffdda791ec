// Copyright 2026 The entdesign Authors
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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "entdesign/ensembles.hpp"
#include "entdesign/moments.hpp"
#include "entdesign/permgroup.hpp"
#include "entdesign/quantum.hpp"
#include "entdesign/sampling.hpp"
#include "entdesign/weingarten.hpp"

namespace py = pybind11;
using namespace entdesign;

namespace {

std::vector<ComplexMatrix> matrices(const UnitaryEnsemble& e) {
  std::vector<ComplexMatrix> out;
  for (const auto& u : e.members()) out.push_back(u.entries());
  return out;
}

UnitaryEnsemble uniform_unitaries(const std::vector<ComplexMatrix>& members) {
  std::vector<UnitaryMatrix> us;
  for (const auto& m : members) us.emplace_back(m);
  return UnitaryEnsemble::uniform(std::move(us));
}

py::tuple estimate(const McEstimate& e) { return py::make_tuple(e.mean, e.std_error); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Haar and design averages of entanglement entropies";

  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);
  py::register_exception<std::length_error>(m, "CapExceeded", PyExc_ValueError);

  m.def("state_moment", [](int d_A, int d_B, int alpha) {
    return to_fraction_string(haar_state_moment({d_A, d_B}, alpha).value);
  }, py::arg("d_A"), py::arg("d_B"), py::arg("alpha"));
  m.def("choi_moment", [](int d_A, int d_B, int d_C, int d_D, int alpha) {
    return to_fraction_string(haar_choi_moment({d_A, d_B, d_C, d_D}, alpha).value);
  }, py::arg("d_A"), py::arg("d_B"), py::arg("d_C"), py::arg("d_D"), py::arg("alpha"));
  m.def("weingarten", [](int d, const std::vector<int>& cycle_type) {
    return to_fraction_string(weingarten(d, IntegerPartition(cycle_type)));
  }, py::arg("d"), py::arg("cycle_type"));
  m.def("catalan", [](int alpha) { return catalan(alpha).get_str(); });
  m.def("cycle_lemma", [](int alpha) {
    const auto r = verify_cycle_lemma(alpha);
    return py::make_tuple(r.holds, r.saturating_count);
  });
  m.def("mn_character", [](const std::vector<int>& lambda, const std::vector<int>& mu) {
    return mn_character(IntegerPartition(lambda), IntegerPartition(mu));
  });

  m.def("theorem_bound", [](const std::string& name, std::optional<int> d_A, std::optional<int> d_B,
                            std::optional<int> d_C, std::optional<int> d_D, std::optional<int> d,
                            std::optional<int> alpha, std::optional<double> a, int field_constant) {
    BoundParams p{d_A, d_B, d_C, d_D, d, alpha, a, field_constant};
    const auto r = theorem_bound(parse_theorem(name), p);
    py::dict out;
    out["theorem"] = std::string(theorem_name(r.theorem));
    out["bound_bits"] = r.bound_bits;
    out["valid"] = r.valid;
    out["asymptotic"] = r.asymptotic;
    out["relaxed_bits"] = r.relaxed_bits;
    out["alpha"] = r.alpha;
    out["constraint_report"] = r.constraint_report;
    return out;
  }, py::arg("theorem"), py::kw_only(), py::arg("d_A") = py::none(), py::arg("d_B") = py::none(),
     py::arg("d_C") = py::none(), py::arg("d_D") = py::none(), py::arg("d") = py::none(),
     py::arg("alpha") = py::none(), py::arg("a") = py::none(), py::arg("field_constant") = 2);

  m.def("trace_power", [](const ComplexMatrix& rho, int alpha) { return trace_power(DensityMatrix(rho), alpha); });
  m.def("renyi_entropy", [](const ComplexMatrix& rho, int alpha) { return renyi_entropy(DensityMatrix(rho), alpha); });
  m.def("tsallis_entropy", [](const ComplexMatrix& rho, int alpha) {
    return tsallis_entropy(DensityMatrix(rho), alpha);
  });
  m.def("unified_entropy", [](const ComplexMatrix& rho, int alpha, double s) {
    return unified_entropy(DensityMatrix(rho), alpha, s);
  });
  m.def("min_entropy", [](const ComplexMatrix& rho) { return min_entropy(DensityMatrix(rho)); });
  m.def("von_neumann", [](const ComplexMatrix& rho) { return von_neumann(DensityMatrix(rho)); });
  m.def("reduced_density", [](const ComplexVector& psi, const Dims& dims, const std::vector<int>& keep) {
    return reduced_density(PureState(psi, dims), keep).entries();
  }, py::arg("psi"), py::arg("dims"), py::arg("keep"));
  m.def("choi_state", [](const ComplexMatrix& u) { return choi_state(UnitaryMatrix(u)).amplitudes(); });
  m.def("negative_tripartite", [](const ComplexMatrix& u, int d_A, int d_B, int d_C, int d_D) {
    const auto r = negative_tripartite(UnitaryMatrix(u), {d_A, d_B, d_C, d_D}, VonNeumannOrder{});
    return r.direct;
  });

  m.def("haar_unitary", [](int d, std::uint64_t seed) {
    RandomStream rng(seed);
    return sample_haar_unitary(d, rng).entries();
  }, py::arg("d"), py::arg("seed"));
  m.def("mc_state_moment", [](int d_A, int d_B, int alpha, std::int64_t n, std::uint64_t seed) {
    McEstimate e;
    {
      py::gil_scoped_release release;
      e = mc_state_moment({d_A, d_B}, alpha, n, RandomStream(seed));
    }
    return estimate(e);
  }, py::arg("d_A"), py::arg("d_B"), py::arg("alpha"), py::arg("n"), py::arg("seed"));
  m.def("mc_choi_moment", [](int d_A, int d_B, int d_C, int d_D, int alpha, std::int64_t n, std::uint64_t seed) {
    McEstimate e;
    {
      py::gil_scoped_release release;
      e = mc_choi_moment({d_A, d_B, d_C, d_D}, alpha, n, RandomStream(seed));
    }
    return estimate(e);
  }, py::arg("d_A"), py::arg("d_B"), py::arg("d_C"), py::arg("d_D"), py::arg("alpha"), py::arg("n"),
     py::arg("seed"));

  m.def("gap2_spectrum", [](int d_A, int d_B) {
    const auto s = gap2_spectrum(d_A, d_B);
    return py::make_tuple(s.lambda1, s.lambda2, s.multiplicity);
  });
  m.def("gap2_purity", [](int d_A, int d_B) { return to_fraction_string(gap2_purity_exact(d_A, d_B)); });
  m.def("gap2_design_state", [](int d_A, int d_B) { return gap2_design_state(d_A, d_B).amplitudes(); });
  m.def("gap_renyi_upper_bound", &gap_renyi_upper_bound, py::arg("d_A"), py::arg("r"), py::arg("alpha"));

  m.def("pauli_group", [](int n) { return matrices(pauli_group(n)); });
  m.def("single_qubit_clifford", [] { return matrices(single_qubit_clifford()); });
  m.def("frame_potential", [](const std::vector<ComplexMatrix>& members, int t) {
    return frame_potential(uniform_unitaries(members), t);
  }, py::arg("members"), py::arg("t"));
}

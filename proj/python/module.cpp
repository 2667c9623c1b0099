#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinwire/chain.hpp"
#include "spinwire/error.hpp"
#include "spinwire/logical.hpp"
#include "spinwire/mqc.hpp"
#include "spinwire/oracle.hpp"
#include "spinwire/propagator.hpp"
#include "spinwire/serialization.hpp"
#include "spinwire/states.hpp"

namespace py = pybind11;
using namespace spinwire;

namespace {

py::dict to_dict(const LogicalCorrelations& c) {
  py::dict out;
  for (auto axis : kLogicalAxes) out[py::str(std::string(to_string(axis)))] = c[axis];
  out["F"] = c.fidelity();
  return out;
}

py::dict to_dict(const MqcSpectrum& s) {
  py::dict out;
  out["time"] = s.time;
  out["intensities"] = s.intensities;
  out["normalization"] = s.normalization;
  out["imaginary_residue"] = s.imaginary_residue;
  std::map<int, double> normalized;
  for (const auto& [q, v] : s.intensities) normalized[q] = s.normalized(q);
  out["normalized"] = normalized;
  return out;
}

}  // namespace

PYBIND11_MODULE(_spinwire, m) {
  m.doc() = "spinwire C++ core";
  m.attr("__version__") = SPINWIRE_VERSION;

  static py::exception<Error> error(m, "SpinwireError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::enum_<Model>(m, "Model").value("xx", Model::kXX).value("dq", Model::kDQ).value("dipolar", Model::kDipolar);
  py::enum_<Family>(m, "Family")
      .value("homogeneous", Family::kHomogeneous)
      .value("engineered", Family::kEngineered)
      .value("dipolar", Family::kDipolar)
      .value("custom", Family::kCustom);
  py::enum_<StateKind>(m, "StateKind")
      .value("z_ends", StateKind::kZEnds)
      .value("y_logical", StateKind::kYLogical)
      .value("x_logical", StateKind::kXLogical)
      .value("full_z", StateKind::kFullZ);
  py::enum_<LogicalAxis>(m, "LogicalAxis")
      .value("x", LogicalAxis::kX)
      .value("y", LogicalAxis::kY)
      .value("z", LogicalAxis::kZ)
      .value("identity", LogicalAxis::kIdentity);

  py::class_<ChainSpec>(m, "ChainSpec")
      .def(py::init<int, std::vector<double>, Model, Family, double>(), py::arg("n"), py::arg("couplings"),
           py::arg("model") = Model::kXX, py::arg("family") = Family::kCustom, py::arg("scale") = 0.0)
      .def_property_readonly("n", &ChainSpec::n)
      .def_property_readonly("model", &ChainSpec::model)
      .def_property_readonly("family", &ChainSpec::family)
      .def_property_readonly("scale", &ChainSpec::scale)
      .def_property_readonly("couplings",
                             [](const ChainSpec& s) { return std::vector<double>(s.couplings().begin(), s.couplings().end()); })
      .def_property_readonly("is_long_range", &ChainSpec::is_long_range)
      .def("coupling_matrix", &ChainSpec::coupling_matrix)
      .def("with_model", &ChainSpec::with_model)
      .def("__eq__", [](const ChainSpec& a, const ChainSpec& b) { return a == b; })
      .def("__repr__", [](const ChainSpec& s) {
        return "ChainSpec(n=" + std::to_string(s.n()) + ", model=" + std::string(to_string(s.model())) +
               ", family=" + std::string(to_string(s.family())) + ")";
      });

  m.def("homogeneous_couplings", &homogeneous_couplings, py::arg("n"), py::arg("d"), py::arg("model") = Model::kXX);
  m.def("engineered_couplings", &engineered_couplings, py::arg("n"), py::arg("d"), py::arg("model") = Model::kXX);
  m.def(
      "dipolar_couplings",
      [](std::vector<double> positions, double prefactor, bool full, Model model) {
        return dipolar_couplings({std::move(positions), prefactor},
                                 full ? Truncation::kFull : Truncation::kNearestNeighbor, model);
      },
      py::arg("positions"), py::arg("prefactor") = 1.0, py::arg("full") = false, py::arg("model") = Model::kXX);
  m.def("implant_spacings", &implant_spacings, py::arg("n"), py::arg("r_min"));
  m.def("perturb_couplings", &perturb_couplings, py::arg("spec"), py::arg("relative_sigma"), py::arg("seed"));
  m.def("transfer_timing", [](const ChainSpec& s) {
    const auto t = transfer_timing(s);
    return py::make_tuple(t.t_star, t.group_velocity);
  });
  m.def("engineered_timing", [](int n, double d) {
    const auto t = engineered_timing(n, d);
    return py::make_tuple(t.t_star, t.group_velocity);
  });
  m.def("normalized_time", &normalized_time, py::arg("n"), py::arg("d"), py::arg("t"));

  m.def("spectral_decompose", [](const ChainSpec& s) {
    const auto sd = spectral_decompose(s);
    return py::make_tuple(Eigen::VectorXd(sd.omegas), Eigen::MatrixXd(sd.modes));
  });
  m.def(
      "propagate", [](const ChainSpec& s, double t) { return Eigen::MatrixXcd(propagate(s, t).amplitudes()); },
      py::arg("spec"), py::arg("t"), "Single-excitation propagator exp(-iMt), 0-based indices.");
  m.def(
      "slater_amplitude",
      [](const ChainSpec& s, double t, const std::vector<int>& sources, const std::vector<int>& targets) {
        return slater_amplitude(propagate(s, t), sources, targets);
      },
      py::arg("spec"), py::arg("t"), py::arg("sources"), py::arg("targets"));
  m.def(
      "polarization_correlation",
      [](const ChainSpec& s, int j, int l, double t) { return polarization_correlation(s, j, l, t, s.model()); },
      py::arg("spec"), py::arg("j"), py::arg("l"), py::arg("t"));
  m.def(
      "end_autocorrelation",
      [](const ChainSpec& s, double t, StateKind kind) { return end_autocorrelation(s, t, kind, s.model()); },
      py::arg("spec"), py::arg("t"), py::arg("initial"));

  m.def(
      "logical_correlations",
      [](const ChainSpec& s, double t, bool correction) {
        return to_dict(logical_correlations(s, t, s.model(), correction));
      },
      py::arg("spec"), py::arg("t"), py::arg("parity_correction") = false);
  m.def("logical_transport_homogeneous", &logical_transport_homogeneous, py::arg("n"), py::arg("d"),
        py::arg("axis"), py::arg("t"));
  m.def("logical_transport_engineered", &logical_transport_engineered, py::arg("n"), py::arg("d"),
        py::arg("axis"), py::arg("t"));
  m.def("entanglement_fidelity", &entanglement_fidelity, py::arg("n"), py::arg("d"), py::arg("family"),
        py::arg("t"));
  m.def("dq_parity_correction", &dq_parity_correction, py::arg("n"));

  m.def(
      "mqc_analytic", [](int n, double d, StateKind kind, double t) { return to_dict(mqc_analytic(n, d, kind, t)); },
      py::arg("n"), py::arg("d"), py::arg("initial"), py::arg("t"));
  m.def(
      "mqc_oracle",
      [](const ChainSpec& s, StateKind kind, double t, int steps) {
        return to_dict(mqc_oracle(s, prepare_state(s.n(), kind), t, steps));
      },
      py::arg("spec"), py::arg("initial"), py::arg("t"), py::arg("phase_steps") = kDefaultPhaseSteps);
  m.def(
      "similarity_check", [](int n, std::uint64_t seed) { return oracle::similarity_check(n, seed); },
      py::arg("n"), py::arg("seed") = 1);

  m.def("chain_to_json", &chain_to_json, py::arg("spec"), py::arg("indent") = 2);
  m.def("chain_from_json", &chain_from_json, py::arg("text"));
}

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latticebands/bands.hpp"
#include "latticebands/core.hpp"
#include "latticebands/floquet.hpp"
#include "latticebands/laplace1d.hpp"
#include "latticebands/verify.hpp"

namespace py = pybind11;
using namespace latticebands;

PYBIND11_MODULE(_latticebands, m) {
  m.doc() = "Floquet-Bloch spectra of discrete 2D periodic Schrodinger operators";

  py::class_<Period>(m, "Period")
      .def(py::init<int, int>(), py::arg("p"), py::arg("q"))
      .def_readonly("p", &Period::p)
      .def_readonly("q", &Period::q)
      .def("__repr__", [](const Period& pp) {
        return "Period(" + std::to_string(pp.p) + ", " + std::to_string(pp.q) + ")";
      });
  m.def("normalized_even", &normalized_even);
  m.def("normalized_odd", &normalized_odd);

  py::class_<BlochPhase>(m, "BlochPhase")
      .def(py::init<double, double>(), py::arg("theta"), py::arg("phi"))
      .def_readonly("theta", &BlochPhase::theta)
      .def_readonly("phi", &BlochPhase::phi);

  py::class_<EnergyInterval>(m, "EnergyInterval")
      .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
      .def_readonly("lo", &EnergyInterval::lo)
      .def_readonly("hi", &EnergyInterval::hi);

  py::class_<Potential>(m, "Potential")
      .def(py::init([](int p, int q, const std::vector<std::vector<double>>& rows) {
             std::vector<double> flat;
             for (const auto& row : rows)
               flat.insert(flat.end(), row.begin(), row.end());
             return Potential(Period(p, q), std::move(flat));
           }),
           py::arg("p"), py::arg("q"), py::arg("values"))
      .def_static("zero", &Potential::zero)
      .def_static("checkerboard", &Potential::checkerboard)
      .def_property_readonly("period", &Potential::period)
      .def("sup_norm", &Potential::sup_norm)
      .def("retiled", &Potential::retiled)
      .def("scaled", &Potential::scaled)
      .def("at", &Potential::at);

  py::class_<SpectrumApproximation>(m, "SpectrumApproximation")
      .def_readonly("intervals", &SpectrumApproximation::intervals)
      .def_readonly("error_bound", &SpectrumApproximation::error_bound)
      .def_property_readonly("component_count",
                             &SpectrumApproximation::component_count);

  m.def("interval_union", &interval_union, py::arg("intervals"),
        py::arg("merge_tol"));

  m.def(
      "eigenvalues_1d",
      [](int r, double theta) { return eigenvalues_1d(r, theta).eigenvalues; },
      py::arg("r"), py::arg("theta"));
  m.def("twisted_laplacian_matrix", &twisted_laplacian_matrix, py::arg("r"),
        py::arg("theta"));
  m.def("discriminant",
        py::overload_cast<double, int>(&discriminant), py::arg("z"), py::arg("r"));
  m.def("derivative_magnitude", &derivative_magnitude, py::arg("lam"), py::arg("r"));
  m.def("derivative_signs", &derivative_signs, py::arg("r"));

  m.def(
      "build_fiber",
      [](const Potential& v, const BlochPhase& ph) {
        return build_fiber(v, ph).entries;
      },
      py::arg("potential"), py::arg("phase"));
  m.def("separable_eigenvalues", &separable_eigenvalues, py::arg("p"), py::arg("q"),
        py::arg("phase"));
  m.def(
      "fiber_eigenvalues",
      [](const Potential& v, const BlochPhase& ph) {
        return fiber_eigenvalues(v, ph).eigenvalues;
      },
      py::arg("potential"), py::arg("phase"));
  m.def(
      "count_below",
      [](const Potential& v, const BlochPhase& ph, double e, double margin)
          -> std::optional<int> { return count_below(v, ph, e, margin).count; },
      py::arg("potential"), py::arg("phase"), py::arg("energy"),
      py::arg("safety_margin") = 1e-9);
  m.def(
      "multiplicity_profile",
      [](int p, int q, bool at_pi) {
        return multiplicity_profile(
            p, q, at_pi ? CornerPhase::pi_pi : CornerPhase::zero_zero);
      },
      py::arg("p"), py::arg("q"), py::arg("at_pi") = false);

  py::class_<Band>(m, "Band")
      .def_readonly("index", &Band::index)
      .def_readonly("enclosure", &Band::enclosure)
      .def_readonly("grid_error", &Band::grid_error);

  m.def(
      "compute_bands",
      [](const Potential& v, int resolution, int threads) {
        return compute_bands(v, resolution, threads).bands;
      },
      py::arg("potential"), py::arg("resolution") = 65, py::arg("threads") = 1);
  m.def("spectrum", &spectrum, py::arg("potential"), py::arg("resolution") = 65,
        py::arg("threads") = 1);
  m.def("find_gaps", &find_gaps, py::arg("spectrum"), py::arg("potential"));

  py::class_<Quilt>(m, "Quilt")
      .def_readonly("energy", &Quilt::energy)
      .def_readonly("resolution", &Quilt::resolution)
      .def_readonly("counts", &Quilt::counts)
      .def_readonly("undefined_cells", &Quilt::undefined_cells);
  m.def("quilt", &quilt, py::arg("potential"), py::arg("energy"),
        py::arg("resolution") = 65, py::arg("threads") = 1);

  m.def(
      "exceptional_energies",
      [](int r) { return exceptional_energies(r).values; }, py::arg("r"));

  py::class_<InteriorCertificate>(m, "InteriorCertificate")
      .def_readonly("energy", &InteriorCertificate::energy)
      .def_readonly("phase_a", &InteriorCertificate::phase_a)
      .def_readonly("phase_b", &InteriorCertificate::phase_b)
      .def_readonly("count_a", &InteriorCertificate::count_a)
      .def_readonly("count_b", &InteriorCertificate::count_b)
      .def_readonly("witness_band", &InteriorCertificate::witness_band)
      .def_readonly("margin", &InteriorCertificate::margin);

  m.def(
      "certify_interior",
      [](double energy, const Period& pp, bool corners_only)
          -> std::optional<InteriorCertificate> {
        return certify_interior(energy, pp,
                                corners_only ? CertifyStrategy::corners_only
                                             : CertifyStrategy::automatic)
            .certificate;
      },
      py::arg("energy"), py::arg("period"), py::arg("corners_only") = false);

  m.def("kruger_gap", &kruger_gap, py::arg("delta"), py::arg("resolution") = 129,
        py::arg("threads") = 1);
}

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <string>
#include <vector>

#include "hypocert/envelope.h"
#include "hypocert/error.h"
#include "hypocert/hcindex.h"
#include "hypocert/io.h"
#include "hypocert/linops.h"
#include "hypocert/lorentz.h"
#include "hypocert/pipeline.h"
#include "hypocert/shorttime.h"
#include "hypocert/staircase.h"

namespace py = pybind11;

namespace hypocert {
namespace {

// Structured results cross the boundary as JSON text; the Python package
// decodes them into dictionaries.
std::string index_json(const ComplexMatrix& C, int max_m) {
  const OperatorSplit split = hermitian_split(C);
  const HcIndexResult index_C = hc_index(split, HcVariant::kCBased, max_m);
  const HcIndexResult index_S = hc_index(split, HcVariant::kSBased, max_m);
  const double k1 = min_eigenvalue(
      hermitian_part(split.R + split.J * split.R * split.J.adjoint()));
  Json j = index_fragment(index_C, index_S, k1);
  j["C_based"] = to_json(index_C);
  j["S_based"] = to_json(index_S);
  return j.dump();
}

std::string staircase_json(const ComplexMatrix& C) {
  return to_json(staircase_form(hermitian_split(C))).dump();
}

std::string certify_json(const ComplexMatrix& C) {
  return certification_to_json(certify(hermitian_split(C))).dump();
}

std::string envelope_json(const ComplexMatrix& C, const std::vector<double>& etas,
                          int points, double c_scale, double tol) {
  const Certification cert = certify(hermitian_split(C));
  ShortTimeCertificate sc = cert.short_cert;
  sc.c *= c_scale;
  std::vector<double> grid = default_time_grid(cert.long_cert, sc, points);
  const std::vector<double> short_grid = linear_grid(0.0, sc.tau, points);
  grid.insert(grid.end(), short_grid.begin() + 1, short_grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const EnvelopeReport report =
      check_envelopes(cert.split, cert.long_cert, sc, etas, grid, tol);
  return envelope_summary(report, cert.time_scale).dump();
}

std::string lorentz_json(double sigma, double nmax, int K) {
  const std::vector<ModeVector> modes = mode_classes(nmax);
  return lemma1_summary(reproduce_lemma1(sigma, modes, K)).dump();
}

py::tuple P_matrix(const ComplexMatrix& C, int m) {
  const LyapunovP P = build_P(hermitian_split(C), m);
  return py::make_tuple(P.P, P.norm_P, P.rate_C, P.rate_S);
}

}  // namespace
}  // namespace hypocert

PYBIND11_MODULE(_hypocert, m) {
  using namespace hypocert;
  m.doc() = "Hypocoercivity certificates (native core)";

  py::register_exception<Error>(m, "HypocertError", PyExc_ValueError);

  m.def("expm", &expm, py::arg("A"));
  m.def("propagator_norm", &propagator_norm, py::arg("C"), py::arg("t"));
  m.def("kappa3", &kappa3, py::arg("kappa1"));
  m.def("epsilon_curve", &epsilon_curve, py::arg("eta"));
  m.def("lemma1_envelope", &lemma1_envelope, py::arg("n_abs"),
        py::arg("lambda0"), py::arg("t"));
  m.def("lorentz_generator",
        [](double sigma, int n1, int n2, int K) {
          return lorentz_generator(sigma, {n1, n2}, K);
        },
        py::arg("sigma"), py::arg("n1"), py::arg("n2"), py::arg("K"));
  m.def("lyapunov_P", &P_matrix, py::arg("C"), py::arg("m"));
  m.def("index_json", &index_json, py::arg("C"), py::arg("max_m") = 4);
  m.def("staircase_json", &staircase_json, py::arg("C"));
  m.def("certify_json", &certify_json, py::arg("C"));
  m.def("envelope_json", &envelope_json, py::arg("C"), py::arg("etas"),
        py::arg("points") = 200, py::arg("c_scale") = 1.0,
        py::arg("tol") = kDefaultEnvelopeTol);
  m.def("lorentz_json", &lorentz_json, py::arg("sigma"), py::arg("nmax"),
        py::arg("K") = kDefaultLorentzTruncation);
}

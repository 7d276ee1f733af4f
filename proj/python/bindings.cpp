#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sik/certify.hpp"
#include "sik/commands.hpp"
#include "sik/index.hpp"
#include "sik/lyapunov.hpp"
#include "sik/norms.hpp"
#include "sik/oracle.hpp"
#include "sik/operator.hpp"

namespace py = pybind11;

namespace {

sik::TrigPoly poly_from_list(const std::vector<std::complex<double>>& nonneg) {
  if (nonneg.empty()) return sik::TrigPoly();
  return sik::TrigPoly::real_from_nonnegative(nonneg);
}

py::dict inertia_dict(const sik::Inertia& in) {
  py::dict d;
  d["n_plus"] = in.n_plus;
  d["n_minus"] = in.n_minus;
  d["n_zero"] = in.n_zero;
  d["zero_tol"] = in.zero_tol;
  return d;
}

}  // namespace

PYBIND11_MODULE(_sik, m) {
  m.doc() = "Certified instability index of -h'''' - (a h)'' + (b h)' - c h with periodic coefficients.";

  py::class_<sik::OperatorSpec>(m, "OperatorSpec")
      .def(py::init([](const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b,
                       const std::vector<std::complex<double>>& c) {
             return sik::OperatorSpec(poly_from_list(a), poly_from_list(b), poly_from_list(c));
           }),
           py::arg("a") = std::vector<std::complex<double>>{}, py::arg("b") = std::vector<std::complex<double>>{},
           py::arg("c") = std::vector<std::complex<double>>{},
           "Fourier coefficients of a, b, c for modes 0, 1, 2, ...; negative modes follow by conjugate symmetry.")
      .def_static("constant", &sik::OperatorSpec::constant, py::arg("a"), py::arg("b"), py::arg("c"))
      .def_static("benilov", &sik::OperatorSpec::benilov, py::arg("alpha1"), py::arg("alpha2"), py::arg("alpha3"))
      .def_property_readonly("max_mode", &sik::OperatorSpec::max_mode)
      .def("digest", [](const sik::OperatorSpec& s) { return sik::spec_digest(s); });

  m.def("leibnitz_constant", &sik::leibnitz_constant);
  m.def(
      "constant_M", [](const sik::OperatorSpec& s, std::optional<double> c) { return sik::constant_M(s, c ? *c : sik::leibnitz_constant()); },
      py::arg("spec"), py::arg("leibnitz") = py::none());
  m.def("dispersion_index", &sik::dispersion_index, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("N"));

  m.def(
      "assemble_A", [](const sik::OperatorSpec& s, int N) { return sik::assemble_A(s, N).entries; }, py::arg("spec"), py::arg("N"),
      "Matrix of P_N A P_N; row/column k is Fourier mode k - N.");

  m.def(
      "solve_lyapunov",
      [](const sik::CMatrix& A, double pencil_tol) { return sik::solve_lyapunov_identity(A, pencil_tol).U; }, py::arg("A"),
      py::arg("pencil_tol") = 1e-10, "Hermitian U with A^H U + U A = I.");
  m.def("kronecker_lyapunov", &sik::kronecker_lyapunov, py::arg("A"), py::arg("V"));

  m.def(
      "inertia_hermitian",
      [](const sik::CMatrix& H, std::optional<double> tol) { return inertia_dict(sik::inertia_hermitian(H, tol)); }, py::arg("H"),
      py::arg("zero_tol") = py::none());
  m.def(
      "instability_index",
      [](const sik::CMatrix& A, std::optional<double> tol) {
        const sik::SpectralCount sc = sik::instability_index_general(A, tol);
        py::dict d = inertia_dict(sc.counts);
        d["axis_gap"] = sc.axis_gap;
        return d;
      },
      py::arg("A"), py::arg("axis_tol") = py::none());

  m.def(
      "certified_index",
      [](const sik::OperatorSpec& s, int max_N, int N_min, bool with_uinv, double axis_tol, std::optional<double> leibnitz) {
        sik::CertifyOptions o;
        o.max_N = max_N;
        o.N_min = N_min;
        o.with_uinv = with_uinv;
        o.axis_tol = axis_tol;
        o.leibnitz = leibnitz;
        sik::Certificate cert;
        {
          py::gil_scoped_release release;
          cert = sik::certified_index(s, o);
        }
        py::module_ json = py::module_::import("json");
        py::dict d = json.attr("loads")(sik::certificate_json_text(cert));
        d["kappa"] = cert.kappa();
        return d;
      },
      py::arg("spec"), py::arg("max_N") = 2048, py::arg("N_min") = 8, py::arg("with_uinv") = false, py::arg("axis_tol") = 1e-8,
      py::arg("leibnitz") = py::none(), "Certificate as a dict with the JSON field names plus 'kappa'.");

  m.def(
      "spectrum",
      [](const sik::OperatorSpec& s, std::optional<int> N) {
        const sik::SpectrumResult r = sik::compute_spectrum(s, N, sik::CertifyOptions{});
        return Eigen::Map<const sik::CVector>(r.eigenvalues.data(), static_cast<Eigen::Index>(r.eigenvalues.size())).eval();
      },
      py::arg("spec"), py::arg("N") = py::none(), "Eigenvalues of P_N A P_N, largest real part first.");

  m.def(
      "triple_norm_U0", [](int N) { return sik::triple_norm(sik::GreenKernel::build(N).kernel()); }, py::arg("N"));

  m.def("validate", []() {
    std::ostringstream os;
    const int rc = sik::cmd_validate(os);
    return py::make_tuple(rc == 0, os.str());
  });
}

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include <array>
#include <complex>
#include <sstream>

#include "mvspace/errors.hpp"
#include "mvspace/exponential.hpp"
#include "mvspace/interactions.hpp"
#include "mvspace/lorentz.hpp"
#include "mvspace/schrodinger.hpp"
#include "mvspace/spacetime.hpp"
#include "mvspace/waves.hpp"

namespace py = pybind11;
using namespace mvspace;

namespace {

Vector3 to_vector(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }
std::array<double, 3> from_vector(const Vector3& v) { return {v.x, v.y, v.z}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cl(3,0) multivectors for spacetime physics";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ArgumentError>(m, "ArgumentError", error.ptr());
  py::register_exception<OverflowError>(m, "OverflowError", error.ptr());
  py::register_exception<DivisionByZeroError>(m, "DivisionByZeroError", error.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", error.ptr());
  py::register_exception<SuperluminalError>(m, "SuperluminalError", error.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", error.ptr());
  py::register_exception<DegenerateGeometryError>(m, "DegenerateGeometryError", error.ptr());
  py::register_exception<UnitError>(m, "UnitError", error.ptr());
  py::register_exception<AccuracyError>(m, "AccuracyError", error.ptr());

  py::class_<Multivector>(m, "Multivector")
      .def(py::init<>())
      .def(py::init([](const std::array<double, 8>& c) { return Multivector(c); }), py::arg("coefficients"))
      .def_static("scalar", &Multivector::scalar)
      .def_static("vector", [](const std::array<double, 3>& v) { return Multivector::vector(to_vector(v)); })
      .def_static("bivector", [](const std::array<double, 3>& d) { return Multivector::bivector(to_vector(d)); })
      .def_static("pseudoscalar", &Multivector::pseudoscalar)
      .def_static("basis", [](std::size_t k) {
        if (k >= Multivector::kSize) throw ArgumentError("basis index must be 0..7");
        return Multivector::basis(static_cast<Blade>(k));
      })
      .def_property_readonly("coefficients", &Multivector::coefficients)
      .def("__getitem__", [](const Multivector& x, std::size_t k) {
        if (k >= Multivector::kSize) throw py::index_error();
        return x[k];
      })
      .def("__len__", [](const Multivector&) { return Multivector::kSize; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(py::self / double())
      .def(-py::self)
      .def(py::self == py::self)
      .def("grade", [](const Multivector& x, int k) { return grade(x, k); })
      .def("reverse", [](const Multivector& x) { return reverse(x); })
      .def("star", [](const Multivector& x) { return star(x); })
      .def("max_abs", &Multivector::max_abs)
      .def("norm_squared", &Multivector::norm_squared)
      .def("__repr__", [](const Multivector& x) {
        std::ostringstream os;
        os << "Multivector(" << x << ")";
        return os.str();
      });

  m.def("exp_general", &exp_general, py::arg("m"), py::arg("tol") = kExpTolerance, py::arg("max_terms") = kExpMaxTerms);
  m.def("exp_vector", [](double phi, const std::array<double, 3>& a) { return exp_vector(phi, to_vector(a)); },
        py::arg("phi"), py::arg("axis"));
  m.def("exp_bivector", [](double theta, const std::array<double, 3>& a) { return exp_bivector(theta, to_vector(a)); },
        py::arg("theta"), py::arg("axis"));
  m.def("rapidity_from_speed", &rapidity_from_speed);

  m.def("rotate", [](const std::array<double, 3>& v, double theta, const std::array<double, 3>& u) {
    return from_vector(rotate(to_vector(v), theta, to_vector(u)));
  }, py::arg("v"), py::arg("theta"), py::arg("axis"));
  m.def("boost_field", [](const std::array<double, 3>& e, const std::array<double, 3>& b, double phi,
                          const std::array<double, 3>& v_hat, double c) {
    const FieldMultivector f = boost_field(FieldMultivector(to_vector(e), to_vector(b), c), phi, to_vector(v_hat));
    return py::make_tuple(from_vector(f.e()), from_vector(f.b()));
  }, py::arg("E"), py::arg("B"), py::arg("phi"), py::arg("v_hat"), py::arg("c") = 1.0);
  m.def("boost_event", [](const std::array<double, 3>& x, const std::array<double, 3>& t, double phi,
                          const std::array<double, 3>& v_hat, double c) {
    const Event e = boost_event(Event(to_vector(x), to_vector(t), c), phi, to_vector(v_hat));
    return py::make_tuple(from_vector(e.x()), from_vector(e.t()));
  }, py::arg("x"), py::arg("t"), py::arg("phi"), py::arg("v_hat"), py::arg("c") = 1.0);
  m.def("interval_squared", [](const std::array<double, 3>& x, const std::array<double, 3>& t, double c) {
    return interval_squared(Event(to_vector(x), to_vector(t), c));
  }, py::arg("x"), py::arg("t"), py::arg("c") = 1.0);

  m.def("compton_wavelength_shift", &compton_wavelength_shift, py::arg("lambda_i"), py::arg("theta"), py::arg("m"),
        py::arg("h"), py::arg("c"));
  m.def("compton_lambda_f", [](double lambda_i, double theta, double mass, double h, double c) {
    return compton_solve_multivector(lambda_i, theta, mass, h, c).lambda_f;
  }, py::arg("lambda_i"), py::arg("theta"), py::arg("m"), py::arg("h"), py::arg("c"));

  m.def("dispersion_residual", [](const std::array<double, 3>& k, const std::array<double, 3>& w, double mass,
                                  double hbar, double c) {
    return dispersion_residual(WaveMultivector(to_vector(k), to_vector(w), c), mass, hbar);
  }, py::arg("k"), py::arg("w"), py::arg("m"), py::arg("hbar") = 1.0, py::arg("c") = 1.0);
  m.def("current", [](const Multivector& psi) {
    const Current j = current(psi);
    return py::make_tuple(j.rho, from_vector(j.j));
  });

  py::class_<WavePacketParams>(m, "WavePacketParams")
      .def(py::init([](double sigma, double k0, double mass, double hbar) {
        WavePacketParams p{sigma, k0, mass, hbar};
        p.validate();
        return p;
      }), py::arg("sigma") = 1.0, py::arg("k0") = 10.0, py::arg("m") = 1.0, py::arg("hbar") = 1.0)
      .def_readonly("sigma", &WavePacketParams::sigma)
      .def_readonly("k0", &WavePacketParams::k0)
      .def_readonly("m", &WavePacketParams::m)
      .def_readonly("hbar", &WavePacketParams::hbar);
  auto to_complex = [](const ComplexLike& z) { return std::complex<double>(z.re, z.im); };
  m.def("closed_form", [to_complex](const WavePacketParams& p, double x, double t) { return to_complex(closed_form(p, x, t)); });
  m.def("propagate_quadrature", [to_complex](const WavePacketParams& p, double x, double t) {
    return to_complex(propagate_quadrature(p, x, t));
  });
  m.def("spread", &spread);
  m.def("rotation_rate_reference", &rotation_rate_reference);
  m.def("phase_rotation_rate", [](const WavePacketParams& p, double begin, double end) {
    return phase_rotation_rate(p, {begin, end});
  });
}

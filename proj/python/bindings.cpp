#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "thetaring/certificate.hpp"
#include "thetaring/quotient.hpp"

namespace py = pybind11;
using namespace thetaring;

namespace {

LocalPoly parse_local(const std::string& text, std::uint64_t p) {
  return parse_polynomial<LocalizedRational>(text, LocalRing{p});
}

py::dict verdict(const VerificationResult& r) {
  py::dict d;
  d["holds"] = r.holds;
  d["detail"] = r.detail;
  d["certificate"] = r.certificate ? py::object(py::str(format_certificate(*r.certificate))) : py::object(py::none());
  return d;
}

}  // namespace

PYBIND11_MODULE(thetaring, m) {
  m.doc() = "Exact verification of nilpotence bounds in the theta^p example ring";

  m.def("vp", [](const std::string& n, std::uint64_t p) { return vp(Integer(n), p); }, py::arg("n"), py::arg("p"));
  m.def("nilpotence_bound", [](long long n) { return nilpotence_bound(Integer(std::to_string(n))).get_str(); },
        py::arg("n"));
  m.def("F", [](std::uint64_t p, unsigned n) { return to_string(ThetaContext(p).F(n), kST); }, py::arg("p"),
        py::arg("n"));
  m.def("psi", [](const std::string& f, std::uint64_t p) { return to_string(ThetaContext(p).psi(parse_local(f, p))); },
        py::arg("f"), py::arg("p"));
  m.def("theta",
        [](const std::string& f, std::uint64_t p) { return to_string(ThetaContext(p).theta(parse_local(f, p))); },
        py::arg("f"), py::arg("p"));
  m.def(
      "check_axioms",
      [](const std::string& f, const std::string& g, std::uint64_t p) {
        AxiomReport r = ThetaContext(p).check_axioms(parse_local(f, p), parse_local(g, p));
        py::dict d;
        for (const auto& c : r.checks) d[py::str(c.name)] = c.holds;
        return d;
      },
      py::arg("f"), py::arg("g"), py::arg("p"));
  m.def(
      "is_member",
      [](const std::string& f, std::uint64_t p, unsigned e, unsigned mod_exp) {
        ThetaContext theta(p);
        MembershipModule mod = MembershipModule::build(theta, e, mod_exp);
        MembershipResult r = mod.is_member(parse_local(f, p));
        py::dict d;
        d["member"] = r.member;
        d["residue"] = to_string(r.witness.to_polynomial());
        d["certificate"] =
            r.certificate ? py::object(py::str(format_certificate(*r.certificate))) : py::object(py::none());
        return d;
      },
      py::arg("f"), py::arg("p"), py::arg("e"), py::arg("m"));
  m.def("verify_certificate", [](const std::string& text) { return verify_certificate(parse_certificate(text)); },
        py::arg("text"));

  py::class_<ExampleRing>(m, "ExampleRing")
      .def(py::init<std::uint64_t>(), py::arg("p"))
      .def_property_readonly("p", &ExampleRing::prime)
      .def("nilpotence_exponent", &ExampleRing::nilpotence_exponent, py::arg("e"))
      .def("verify_nilpotence", [](const ExampleRing& r, unsigned e, unsigned m) { return verdict(r.verify_nilpotence(e, m)); },
           py::arg("e"), py::arg("m"))
      .def("verify_sharpness", [](const ExampleRing& r, unsigned e) { return verdict(r.verify_sharpness(e)); },
           py::arg("e"))
      .def("check_theta_stability",
           [](const ExampleRing& r, unsigned e, unsigned m) { return verdict(r.check_theta_stability(e, m)); },
           py::arg("e"), py::arg("m"))
      .def("verify_prop2",
           [](const ExampleRing& r, unsigned e, unsigned m, unsigned k) { return verdict(r.verify_prop2(e, m, k)); },
           py::arg("e"), py::arg("m"), py::arg("k"))
      .def("verify_prop3",
           [](const ExampleRing& r, unsigned e, unsigned m, unsigned k) { return verdict(r.verify_prop3(e, m, k)); },
           py::arg("e"), py::arg("m"), py::arg("k"));
}

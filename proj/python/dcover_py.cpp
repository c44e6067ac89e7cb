#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dcover/errors.hpp"
#include "dcover/serialize.hpp"

namespace py = pybind11;

// Arbitrary-precision integers travel as Python ints through their decimal
// representation.
namespace pybind11::detail {
template <>
struct type_caster<dcover::Integer> {
  PYBIND11_TYPE_CASTER(dcover::Integer, const_name("int"));

  bool load(handle src, bool convert) {
    if (!src) return false;
    if (!PyLong_Check(src.ptr())) {
      if (!convert || !PyIndex_Check(src.ptr())) return false;
    }
    object as_int = reinterpret_steal<object>(PyNumber_Index(src.ptr()));
    if (!as_int) {
      PyErr_Clear();
      return false;
    }
    value = dcover::Integer(str(as_int).cast<std::string>());
    return true;
  }

  static handle cast(const dcover::Integer& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

py::object from_json(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::object fraction(const dcover::Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(py::cast(dcover::numerator(r)),
                                                            py::cast(dcover::denominator(r)));
}

}  // namespace

PYBIND11_MODULE(_dcover, m) {
  using namespace dcover;
  m.doc() = "Canonical double covers of P2 and Hirzebruch surfaces";
  m.attr("__version__") = kVersion;

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<AuditRefusal> audit_refusal(m, "AuditRefusal", domain_error.ptr());
  static py::exception<InvariantViolation> invariant_violation(m, "InvariantViolation",
                                                               PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const AuditRefusal& e) {
      py::object type = py::reinterpret_borrow<py::object>(audit_refusal.ptr());
      py::object err = type(e.what());
      err.attr("failing") = py::cast(e.failing_conditions());
      PyErr_SetObject(audit_refusal.ptr(), err.ptr());
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    } catch (const InvariantViolation& e) {
      py::set_error(invariant_violation, e.what());
    }
  });

  py::class_<SurfaceBase>(m, "SurfaceBase")
      .def_static("projective_plane", &SurfaceBase::projective_plane)
      .def_static("hirzebruch", &SurfaceBase::hirzebruch, py::arg("e"))
      .def_property_readonly("is_plane", &SurfaceBase::is_plane)
      .def_property_readonly("e", [](const SurfaceBase& s) { return s.e(); })
      .def_property_readonly("name", &SurfaceBase::name)
      .def(py::self == py::self)
      .def("__repr__", [](const SurfaceBase& s) { return "SurfaceBase(" + s.name() + ")"; });

  py::class_<DivisorClass>(m, "DivisorClass")
      .def_static("plane", &DivisorClass::plane, py::arg("d"))
      .def_static("hirzebruch", &DivisorClass::hirzebruch, py::arg("e"), py::arg("alpha"),
                  py::arg("beta"))
      .def_property_readonly("base", &DivisorClass::base)
      .def_property_readonly("degree", [](const DivisorClass& d) { return d.degree(); })
      .def_property_readonly("alpha", [](const DivisorClass& d) { return d.alpha(); })
      .def_property_readonly("beta", [](const DivisorClass& d) { return d.beta(); })
      .def_property_readonly("label", &DivisorClass::label)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", [](const DivisorClass& d) {
        return "DivisorClass(" + d.base().name() + ", " + d.label() + ")";
      });

  py::class_<Polarization>(m, "Polarization")
      .def(py::init<DivisorClass>(), py::arg("hyperplane"))
      .def_static("plane", &Polarization::plane, py::arg("d"))
      .def_static("hirzebruch", &Polarization::hirzebruch, py::arg("e"), py::arg("a"),
                  py::arg("b"))
      .def_property_readonly("base", &Polarization::base)
      .def_property_readonly("hyperplane", &Polarization::hyperplane)
      .def_property_readonly("canonical", &Polarization::canonical)
      .def_property_readonly("branch", &Polarization::branch)
      .def_property_readonly("trace_zero", &Polarization::trace_zero)
      .def_property_readonly("ambient_dimension",
                             [](const Polarization& p) { return p.ambient_dimension(); })
      .def_property_readonly("label", &Polarization::label)
      .def("__repr__", [](const Polarization& p) { return "Polarization(" + p.label() + ")"; });

  py::class_<CohomologyTable>(m, "CohomologyTable")
      .def_readonly("h0", &CohomologyTable::h0)
      .def_readonly("h1", &CohomologyTable::h1)
      .def_readonly("h2", &CohomologyTable::h2)
      .def_readonly("chi", &CohomologyTable::chi)
      .def("as_tuple", [](const CohomologyTable& t) { return py::make_tuple(t.h0, t.h1, t.h2); })
      .def("__repr__", [](const CohomologyTable& t) {
        return "CohomologyTable(h0=" + t.h0.str() + ", h1=" + t.h1.str() + ", h2=" + t.h2.str() +
               ")";
      });

  py::class_<CoverInvariants>(m, "CoverInvariants")
      .def_readonly("p_g", &CoverInvariants::p_g)
      .def_readonly("q", &CoverInvariants::q)
      .def_readonly("chi", &CoverInvariants::chi)
      .def_readonly("c1_sq", &CoverInvariants::c1_sq)
      .def_readonly("c2", &CoverInvariants::c2)
      .def_property_readonly("chern_ratio",
                             [](const CoverInvariants& inv) { return fraction(inv.chern_ratio); });

  m.def("canonical_class", &canonical_class, py::arg("base"));
  m.def("intersect", &intersect);
  m.def("is_very_ample", &is_very_ample);
  m.def("is_base_point_free", &is_base_point_free);
  m.def("has_smooth_member", &has_smooth_member);

  m.def("cohomology", &cohomology, py::arg("divisor"));
  m.def("h0_lattice_oracle", &h0_lattice_oracle, py::arg("divisor"));
  m.def("serre_dual", &serre_dual, py::arg("divisor"));
  m.def("pushforward_twists", &pushforward_twists, py::arg("divisor"));

  m.def("invariants", &invariants, py::arg("polarization"));
  m.def("moduli_dimension", &moduli_dimension, py::arg("polarization"));
  m.def("normal_sheaf_h0", &normal_sheaf_h0, py::arg("polarization"));
  m.def("tangent_chi_constant", &tangent_chi_constant, py::arg("base"));

  m.def(
      "audit", [](const Polarization& p) { return from_json(to_json(audit(p))); },
      py::arg("polarization"), "Hypothesis audit report as a dict.");
  m.def("bpf_exception_locus", &bpf_exception_locus, py::arg("e"), py::arg("a_max"));

  m.def(
      "enumerate_points",
      [](const Integer& a, const Integer& x_max, bool include_f1, bool include_p2) {
        EnumerationOptions options;
        options.include_f1 = include_f1;
        options.include_p2 = include_p2;
        py::list out;
        for (const auto& pt : enumerate_points(a, x_max, options).points)
          out.append(from_json(to_json(pt)));
        return out;
      },
      py::arg("a"), py::arg("x_max"), py::arg("include_f1") = true, py::arg("include_p2") = false);
  m.def(
      "line_intersection",
      [](const Integer& a, const Integer& a_prime) {
        auto [x, y] = line_intersection(a, a_prime);
        return py::make_tuple(x, fraction(y));
      },
      py::arg("a"), py::arg("a_prime"));
  m.def(
      "figure_svg", [](int n) { return render_svg(figure_dataset(n)); }, py::arg("n"));

  m.def(
      "xi_candidates",
      [](const Integer& mm, const Integer& bound) {
        return from_json(to_json(xi_candidates(mm, bound)));
      },
      py::arg("m"), py::arg("bound"));
  m.def("p2_solutions", &p2_solutions, py::arg("m"));
  m.def("verify_moduli_examples", []() { return from_json(to_json(verify_moduli_examples())); });
}

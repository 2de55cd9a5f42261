#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bzf/classify.hpp"
#include "bzf/command.hpp"
#include "bzf/error.hpp"
#include "bzf/morphisms.hpp"
#include "bzf/syntax.hpp"

namespace py = pybind11;
using namespace bzf;

namespace {
  py::dict report_dict(StructureReport const& r) {
    py::dict d;
    d["has_zero"]                   = r.has_zero;
    d["has_identity"]               = r.has_identity;
    d["simple"]                     = r.simple;
    d["zero_simple"]                = r.zero_simple;
    d["bisimple"]                   = r.bisimple;
    d["zero_bisimple"]              = r.zero_bisimple;
    d["e_unitary"]                  = r.e_unitary;
    d["contains_extended_bicyclic"] = r.contains_extended_bicyclic;
    d["iso_type"]                   = std::string(to_string(r.iso_type.kind));
    d["i0"]                         = r.iso_type.i0;
    d["j0"]                         = r.iso_type.j0;
    d["zero_bisimple_branch"]       = r.zero_bisimple_branch;
    d["nonzero_d_classes"]          = r.nonzero_d_classes;
    return d;
  }
}  // namespace

PYBIND11_MODULE(_bzf, m) {
  m.doc() = "Exact computations in the semigroup B_Z^F";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (Error const& e) {
      std::string const message = e.code() + ": " + e.what();
      PyErr_SetString(error.ptr(), message.c_str());
    }
  });

  py::class_<EpSet>(m, "EpSet")
      .def(py::init([](std::string const& text) { return parse_set(text); }),
           py::arg("text") = "{}")
      .def_static("finite", &EpSet::finite)
      .def_static("ray", &EpSet::ray)
      .def_static("progression", &EpSet::progression)
      .def("contains", &EpSet::contains)
      .def("__contains__", &EpSet::contains)
      .def("is_empty", &EpSet::is_empty)
      .def("members_below", &EpSet::members_below)
      .def_property_readonly("threshold", &EpSet::threshold)
      .def_property_readonly("period", &EpSet::period)
      .def("shift", [](EpSet const& s, std::int64_t d) { return shift(s, d); })
      .def("__and__", [](EpSet const& a, EpSet const& b) { return intersect(a, b); })
      .def("__or__", [](EpSet const& a, EpSet const& b) { return unite(a, b); })
      .def("__le__", [](EpSet const& a, EpSet const& b) { return is_subset(a, b); })
      .def("__eq__", [](EpSet const& a, EpSet const& b) { return a == b; })
      .def("__hash__", [](EpSet const& s) { return py::hash(py::str(s.to_string())); })
      .def("__str__", &EpSet::to_string)
      .def("__repr__", [](EpSet const& s) { return "EpSet('" + s.to_string() + "')"; });

  m.def("exists_shift_subset", &exists_shift_subset);

  py::class_<Family>(m, "Family")
      .def_static("close",
                  [](std::vector<EpSet> const& gens, std::size_t cap) {
                    return Family::close(gens, cap);
                  },
                  py::arg("generators"),
                  py::arg("cap") = Family::default_cap)
      .def_static("from_members", [](std::vector<EpSet> const& sets) {
        return Family::from_members(sets);
      })
      .def_static("parse", [](std::string const& text) {
        return parse_family(text).build();
      })
      .def_property_readonly("members", &Family::members)
      .def_property_readonly("has_empty", &Family::has_empty)
      .def("__len__", &Family::size)
      .def("__contains__", &Family::contains)
      .def("__str__", &Family::to_string);

  m.def("is_omega_closed", [](std::vector<EpSet> const& sets) {
    return is_omega_closed(sets).closed;
  });

  py::class_<Element>(m, "Element")
      .def_static("zero", &Element::zero)
      .def_static("triple", &Element::triple)
      .def_static("parse", [](std::string const& text, SemigroupCtx const& ctx) {
        return parse_element(text).resolve(ctx);
      })
      .def_property_readonly("is_zero", &Element::is_zero)
      .def_property_readonly("i", &Element::i)
      .def_property_readonly("j", &Element::j)
      .def_property_readonly("set", &Element::set)
      .def("__eq__", [](Element const& a, Element const& b) { return a == b; })
      .def("__str__", &Element::to_string)
      .def("__repr__", &Element::to_string);

  py::class_<SemigroupCtx>(m, "Semigroup")
      .def(py::init<Family>())
      .def_static("singletons", &SemigroupCtx::singletons)
      .def("element", &SemigroupCtx::make)
      .def("zero", &SemigroupCtx::zero)
      .def("multiply",
           [](SemigroupCtx const& ctx, Element const& a, Element const& b) {
             return ctx.multiply(a, b);
           })
      .def("classify",
           [](SemigroupCtx const& ctx) { return report_dict(classify(ctx)); })
      .def("sigma",
           [](SemigroupCtx const& ctx, Element const& a) {
             return sigma_hom(ctx, a);
           })
      .def("__str__", &SemigroupCtx::to_string);

  m.def("inverse", &inverse);
  m.def("is_idempotent", &is_idempotent);
  m.def("natural_leq", &natural_leq);
  m.def("green", [](Element const& a, Element const& b, std::string const& rel) {
    auto r = parse_green_rel(rel);
    if (!r) {
      throw py::value_error("relation must be one of R, L, H, D, J");
    }
    return green(a, b, *r);
  });
  m.def("to_brandt",
        [](Element const& a) { return to_brandt(a).to_string(); });

  m.def(
      "execute",
      [](std::string const& text, std::uint64_t seed, std::size_t samples,
         std::int64_t window) {
        Options o;
        o.seed    = seed;
        o.samples = samples;
        o.window  = window;
        Response r = execute(text, o);
        return py::make_tuple(r.json, r.exit_code);
      },
      py::arg("text"),
      py::arg("seed")    = Options{}.seed,
      py::arg("samples") = Options{}.samples,
      py::arg("window")  = Options{}.window);
}

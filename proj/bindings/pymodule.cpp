#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "rsalg/catalog.hpp"
#include "rsalg/errors.hpp"
#include "rsalg/identities.hpp"
#include "rsalg/lemmas.hpp"
#include "rsalg/serialize.hpp"
#include "rsalg/structure.hpp"
#include "rsalg/version.hpp"

namespace py = pybind11;
using namespace rsalg;

namespace {

// python-facing handle; AlgebraSpec itself is immutable and shared
struct PyAlgebra {
    AlgebraPtr p;
};

Element make_element(const PyAlgebra& a, const std::vector<std::string>& coords) {
    if (coords.size() != a.p->dim())
        throw validation_error("coordinate count differs from algebra dimension");
    std::vector<Scalar> c;
    c.reserve(coords.size());
    for (const auto& s : coords)
        c.push_back(Scalar::parse(a.p->ring(), s));
    return Element(a.p, std::move(c));
}

CheckReport run_check(const PyAlgebra& a, const std::string& identity) {
    if (identity == "abelian-type")
        return check_abelian_type(a.p);
    if (auto id = identity_by_name(identity))
        return check_multilinear_identity(a.p, *id);
    throw validation_error("unknown identity \"" + identity + "\"");
}

CheckReport run_random_check(const PyAlgebra& a, const std::string& identity,
                             std::uint64_t prime, std::size_t trials, std::uint64_t seed) {
    auto id = identity_by_name(identity);
    if (!id)
        throw validation_error("unknown identity \"" + identity + "\"");
    return randomized_check(a.p, *id, prime, trials, seed);
}

std::vector<std::string> element_strings(const std::vector<Element>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& e : v)
        out.push_back(e.to_string());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact verifier for five right-symmetric and right-alternative algebras";
    m.attr("__version__") = version_string;

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const parse_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const validation_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const parameter_error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<Element>(m, "Element")
        .def_property_readonly("coords",
                               [](const Element& e) {
                                   std::vector<std::string> out;
                                   for (const auto& c : e.coords())
                                       out.push_back(c.to_string());
                                   return out;
                               })
        .def("is_zero", &Element::is_zero)
        .def("scaled", [](const Element& e, const std::string& c) {
            return e.scaled(Scalar::parse(e.algebra()->ring(), c));
        })
        .def("__add__", [](const Element& a, const Element& b) { return a + b; })
        .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
        .def("__neg__", [](const Element& a) { return -a; })
        .def("__mul__", [](const Element& a, const Element& b) { return multiply(a, b); })
        .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
        .def("__str__", &Element::to_string)
        .def("__repr__", [](const Element& e) { return "<Element " + e.to_string() + ">"; });

    py::class_<PyAlgebra>(m, "Algebra")
        .def_property_readonly("name", [](const PyAlgebra& a) { return a.p->name(); })
        .def_property_readonly("dim", [](const PyAlgebra& a) { return a.p->dim(); })
        .def_property_readonly("labels", [](const PyAlgebra& a) { return a.p->labels(); })
        .def_property_readonly("parity", [](const PyAlgebra& a) { return a.p->parity(); })
        .def_property_readonly("graded", [](const PyAlgebra& a) { return a.p->graded(); })
        .def_property_readonly("ring", [](const PyAlgebra& a) { return a.p->ring().to_string(); })
        .def("basis", [](const PyAlgebra& a, std::size_t i) { return Element::basis(a.p, i); })
        .def("zero", [](const PyAlgebra& a) { return Element::zero(a.p); })
        .def("element", &make_element, py::arg("coords"),
             "element from a list of coefficient strings")
        .def("product",
             [](const PyAlgebra& a, std::size_t i, std::size_t j) {
                 std::vector<std::pair<std::size_t, std::string>> out;
                 for (const auto& t : a.p->product(i, j))
                     out.emplace_back(t.k, t.c.to_string());
                 return out;
             },
             "structure constants of basis(i) * basis(j) as (k, coeff) pairs")
        .def("to_json", [](const PyAlgebra& a) { return serialize_algebra(a.p); })
        .def("__repr__", [](const PyAlgebra& a) {
            return "<Algebra " + a.p->name() + ", dim " + std::to_string(a.p->dim()) + ">";
        });

    py::class_<CheckReport>(m, "CheckReport")
        .def_readonly("identity", &CheckReport::identity)
        .def_readonly("holds", &CheckReport::holds)
        .def_readonly("tuples_checked", &CheckReport::tuples_checked)
        .def_readonly("witness", &CheckReport::witness)
        .def_readonly("witness_detail", &CheckReport::witness_detail)
        .def("json", [](const CheckReport& r) { return to_json(r).dump(2); })
        .def("__repr__", [](const CheckReport& r) {
            return "<CheckReport " + r.identity + (r.holds ? ": holds>" : ": fails>");
        });

    py::class_<SimplicityVerdict>(m, "SimplicityVerdict")
        .def_readonly("simple", &SimplicityVerdict::simple)
        .def_readonly("graded", &SimplicityVerdict::graded)
        .def_readonly("ambient_dim", &SimplicityVerdict::ambient_dim)
        .def_readonly("generators_tested", &SimplicityVerdict::generators_tested)
        .def_readonly("witness_generator", &SimplicityVerdict::witness_generator)
        .def_readonly("witness_closure_dim", &SimplicityVerdict::witness_closure_dim)
        .def_property_readonly("witness_closure_basis",
                               [](const SimplicityVerdict& v) {
                                   return element_strings(v.witness_closure_basis);
                               })
        .def("json", [](const SimplicityVerdict& v) { return to_json(v).dump(2); });

    py::class_<ExtractionRecord>(m, "ExtractionRecord")
        .def_readonly("label", &ExtractionRecord::label)
        .def_readonly("expected", &ExtractionRecord::expected)
        .def_readonly("actual", &ExtractionRecord::actual)
        .def_readonly("z_degree", &ExtractionRecord::z_degree)
        .def_readonly("matched", &ExtractionRecord::matched)
        .def_readonly("counted", &ExtractionRecord::counted)
        .def_readonly("note", &ExtractionRecord::note);

    py::class_<LemmaReport>(m, "LemmaReport")
        .def_readonly("lemma", &LemmaReport::lemma)
        .def_readonly("model", &LemmaReport::model)
        .def_readonly("pass_", &LemmaReport::pass)
        .def_property_readonly("passed", [](const LemmaReport& r) { return r.pass; })
        .def_readonly("records", &LemmaReport::records)
        .def_readonly("conventions", &LemmaReport::conventions)
        .def("counted_displays", &LemmaReport::counted_displays)
        .def("findings", &LemmaReport::findings)
        .def("to_text", &LemmaReport::to_text)
        .def("json", [](const LemmaReport& r) { return to_json(r).dump(2); })
        .def("__repr__", [](const LemmaReport& r) {
            return "<LemmaReport lemma " + std::to_string(r.lemma) +
                   (r.pass ? ": PASS>" : ": FAIL>");
        });

    py::class_<ShadowReport>(m, "ShadowReport")
        .def_readonly("lemma", &ShadowReport::lemma)
        .def_readonly("arg", &ShadowReport::arg)
        .def_readonly("prime", &ShadowReport::prime)
        .def_readonly("samples", &ShadowReport::samples)
        .def_readonly("seed", &ShadowReport::seed)
        .def_readonly("displays", &ShadowReport::displays)
        .def_readonly("failures", &ShadowReport::failures)
        .def_readonly("pass_", &ShadowReport::pass)
        .def_property_readonly("passed", [](const ShadowReport& r) { return r.pass; })
        .def("json", [](const ShadowReport& r) { return to_json(r).dump(2); });

    m.def("matrix_rs",
          [](std::size_t n) { return PyAlgebra{matrix_rs(n, RingDesc::rationals())}; },
          py::arg("n") = 2);
    m.def("b_nn", [](std::size_t n) { return PyAlgebra{b_nn(n, RingDesc::rationals())}; },
          py::arg("n") = 2);
    m.def("b_22",
          [](const std::optional<std::string>& nu) {
              if (!nu)
                  return PyAlgebra{b_22_symbolic()};
              RingDesc qq = RingDesc::rationals();
              return PyAlgebra{b_22(Scalar::parse(qq, *nu), qq)};
          },
          py::arg("nu") = std::nullopt, "nu as a rational string, or None for symbolic");
    m.def("b_44",
          [](const std::optional<std::vector<std::string>>& w) {
              if (!w)
                  return PyAlgebra{b_44_symbolic()};
              if (w->size() != 4)
                  throw validation_error("w needs four entries");
              RingDesc qq = RingDesc::rationals();
              return PyAlgebra{b_44(WMatrix{Scalar::parse(qq, (*w)[0]), Scalar::parse(qq, (*w)[1]),
                                            Scalar::parse(qq, (*w)[2]), Scalar::parse(qq, (*w)[3])},
                                    qq)};
          },
          py::arg("w") = std::nullopt, "four rational strings row-major, or None for symbolic");
    m.def("rs_v2m2", [] { return PyAlgebra{rs_v2m2_symbolic()}; });

    m.def("parse_algebra", [](const std::string& text) { return PyAlgebra{parse_algebra(text)}; });
    m.def("load_algebra_file",
          [](const std::string& path) { return PyAlgebra{load_algebra_file(path)}; });
    m.def("save_algebra_file",
          [](const PyAlgebra& a, const std::string& path) { save_algebra_file(a.p, path); });

    m.def("associator", &associator);
    m.def("commutator", &commutator);

    m.def("check_identity", &run_check, py::arg("algebra"), py::arg("identity"),
          "exact check on every basis tuple; identities: right-symmetric, "
          "right-alternative-super, associative, commutative, abelian-type");
    m.def("random_check", &run_random_check, py::arg("algebra"), py::arg("identity"),
          py::arg("prime") = 1000003, py::arg("trials") = 100, py::arg("seed") = 0);

    m.def("center", [](const PyAlgebra& a) { return compute_center(a.p).basis; });
    m.def("even_center", [](const PyAlgebra& a) { return compute_even_center(a.p).basis; });
    m.def("unit", [](const PyAlgebra& a) { return find_unit(a.p); });
    m.def("check_simple",
          [](const PyAlgebra& a, bool graded) { return check_simple(a.p, graded); },
          py::arg("algebra"), py::arg("graded") = false);

    m.def("verify_lemma1", &verify_lemma1, py::arg("n") = 2);
    m.def("verify_lemma2", &verify_lemma2, py::arg("which_case"));
    m.def("verify_lemma3", &verify_lemma3, py::arg("n") = 2);
    m.def("verify_lemma4", &verify_lemma4);
    m.def("verify_lemma5", &verify_lemma5);
    m.def("modular_shadow", &modular_shadow, py::arg("lemma"), py::arg("n_or_case") = 2,
          py::arg("prime") = 1000003, py::arg("samples") = 100, py::arg("seed") = 0);
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gqlab/characters.hpp"
#include "gqlab/errors.hpp"
#include "gqlab/geometry.hpp"
#include "gqlab/group_ring.hpp"
#include "gqlab/kantor.hpp"
#include "gqlab/search.hpp"
#include "gqlab/suites.hpp"

namespace py = pybind11;
using namespace gqlab;

namespace {

std::pair<std::string, std::string> frac(const mpq_class& q) { return {q.get_num().get_str(), q.get_den().get_str()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "gqlab core bindings; JSON-valued results are returned as strings";

    static py::exception<Error> exc(m, "GqlabError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(exc, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
        }
    });

    py::class_<FiniteGroup>(m, "FiniteGroup")
        .def_property_readonly("order", &FiniteGroup::order)
        .def_property_readonly("label", &FiniteGroup::label)
        .def("multiply", &FiniteGroup::multiply)
        .def("inverse", &FiniteGroup::inverse)
        .def("exponent", &FiniteGroup::exponent)
        .def("is_abelian", &FiniteGroup::is_abelian);

    m.def("heisenberg_group", &heisenberg_group, py::arg("q"));
    m.def("elementary_abelian", &elementary_abelian, py::arg("p"), py::arg("n"));
    m.def("cyclic_group", &cyclic_group, py::arg("n"));
    m.def("class_count", [](const FiniteGroup& g) { return class_data(g).class_count(); });
    m.def("character_degrees", [](const FiniteGroup& g) { return character_table(g).degrees; });

    py::class_<KantorFamily>(m, "KantorFamily")
        .def_readonly("s", &KantorFamily::s)
        .def_readonly("t", &KantorFamily::t)
        .def_readonly("group", &KantorFamily::group)
        .def("members", [](const KantorFamily& f) {
            std::vector<std::vector<Element>> out;
            for (const auto& a : f.members) out.push_back(a.members());
            return out;
        })
        .def("to_json", [](const KantorFamily& f) { return family_to_json(f).dump(); });

    m.def("classical_wq_family", &classical_wq_family, py::arg("q"));
    m.def("t2_oval_family", &t2_oval_family, py::arg("q"), py::arg("k") = 2);
    m.def("family_from_json", [](const std::string& s) { return family_from_json(nlohmann::json::parse(s)); });
    m.def("verify_kantor_axioms", [](const KantorFamily& f) { return to_json(verify_kantor_axioms(f)).dump(); });

    m.def("verify_fourdim_algebra", [](const KantorFamily& f) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : verify_fourdim_algebra(f)) arr.push_back(to_json(r));
        return arr.dump();
    });

    m.def("chi_multiplicities", [](const KantorFamily& f, const std::string& which) {
        auto cd = class_data(f.group);
        auto t = character_table(f.group, cd);
        auto cf = which == "S" ? chi_S(f, cd) : chi_T(f, cd);
        auto cert = certify_character(cf, t);
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& q : cert.multiplicities) out.push_back(frac(q));
        return out;
    });

    m.def("ott_gap_inner_product", [](std::uint64_t s, std::uint64_t u, std::uint64_t gp, std::uint64_t m1) {
        return frac(ott_gap_inner_product(s, u, gp, m1).value);
    });

    m.def("lambda3", [](const KantorFamily& f) { return incidence_spectrum(coset_geometry(f).gq).lambda3; });
    m.def("derived_counts", [](std::uint32_t q) {
        auto cg = coset_geometry(classical_wq_family(q));
        auto d = payne_derive(cg.gq, cg.infinity);
        return std::make_pair(d.gq.num_points(), d.gq.num_lines());
    });

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, const KantorFamily& f, std::uint64_t seed, unsigned jobs) {
            py::gil_scoped_release nogil;
            return to_json(run_suite(name, f, SuiteOptions{seed, jobs, 100})).dump();
        },
        py::arg("name"), py::arg("family"), py::arg("seed") = 12345, py::arg("jobs") = 1);

    m.def("scan_names", &scan_names);
    m.def(
        "run_scan",
        [](const std::string& name, std::optional<unsigned> max_e, std::optional<std::uint64_t> max_q1) {
            py::gil_scoped_release nogil;
            ScanOverrides o;
            o.max_e = max_e;
            o.max_q1 = max_q1;
            return certificate_dump(run_scan(name, o));
        },
        py::arg("name"), py::arg("max_e") = py::none(), py::arg("max_q1") = py::none());
    m.def("verify_certificate", [](const std::string& text) {
        auto c = certificate_from_json(nlohmann::json::parse(text));
        return !first_bad_trace(c).has_value();
    });
    m.def("evaluate_expression", [](const std::string& e) { return frac(evaluate_expression(e)); });
}

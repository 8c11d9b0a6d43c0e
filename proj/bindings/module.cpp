// Python bindings for the classifier. Arbitrary-precision integers cross the
// boundary as native python ints (via decimal strings), so no precision is
// lost in either direction.
#include "sarkisov/catalog.hpp"
#include "sarkisov/divisor_lattice.hpp"
#include "sarkisov/errors.hpp"
#include "sarkisov/flop_calculus.hpp"
#include "sarkisov/k3_lattice.hpp"
#include "sarkisov/link_classifier.hpp"
#include "sarkisov/reports.hpp"
#include "sarkisov/secant_calculus.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using sarkisov::Int;

namespace pybind11::detail {

template <> struct type_caster<Int> {
    PYBIND11_TYPE_CASTER(Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) {
            return false;
        }
        PyObject* str = PyObject_Str(src.ptr());
        if (str == nullptr) {
            PyErr_Clear();
            return false;
        }
        const auto text = reinterpret_steal<object>(str);
        value = Int(text.cast<std::string>());
        return true;
    }

    static handle cast(const Int& v, return_value_policy, handle) {
        const std::string s = v.str();
        return handle(PyLong_FromString(s.c_str(), nullptr, 10));
    }
};

} // namespace pybind11::detail

namespace {

sarkisov::BlowupSetup make_setup(const Int& d, const Int& g, const std::string& ambient) {
    return {sarkisov::find_ambient(sarkisov::builtin_catalog(), ambient), d, g};
}

sarkisov::DivisorClass make_class(const std::pair<Int, Int>& he) {
    return {he.first, he.second};
}

sarkisov::FlopData make_flop(const std::vector<std::tuple<Int, Int, Int>>& curves) {
    sarkisov::FlopData flop;
    for (const auto& [h, e, mult] : curves) {
        flop.curves.push_back({h, e, mult});
    }
    return flop;
}

sarkisov::ClassifyOptions make_options(bool k3_hypothesis, bool genericity, const Int& modulus_max,
                                       const Int& box, const Int& partner_box,
                                       const Int& partner_d_max, const Int& partner_g_max) {
    sarkisov::ClassifyOptions opts;
    opts.gate.k3_quartic_hypothesis = k3_hypothesis;
    opts.gate.curve_general_position = genericity;
    opts.diophantine.modulus_sweep_max = modulus_max;
    opts.diophantine.search_box = box;
    opts.partner.box = partner_box;
    opts.partner.d_max = partner_d_max;
    opts.partner.g_max = partner_g_max;
    return opts;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact-arithmetic Sarkisov link classifier for curve blowups of rank-1 Fano "
              "threefolds";
    m.attr("__version__") = "0.1.0";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const sarkisov::Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "intersection_table",
        [](const Int& d, const Int& g, const std::string& ambient) {
            const auto t = sarkisov::intersection_table(make_setup(d, g, ambient));
            py::dict out;
            out["hhh"] = t.hhh;
            out["hhe"] = t.hhe;
            out["hee"] = t.hee;
            out["eee"] = t.eee;
            return out;
        },
        py::arg("d"), py::arg("g"), py::arg("ambient") = "P3",
        "Cup products of H and E on the blowup");

    m.def(
        "triple_product",
        [](const std::pair<Int, Int>& d1, const std::pair<Int, Int>& d2,
           const std::pair<Int, Int>& d3, const Int& d, const Int& g, const std::string& ambient) {
            return sarkisov::triple_product(make_class(d1), make_class(d2), make_class(d3),
                                            make_setup(d, g, ambient));
        },
        py::arg("d1"), py::arg("d2"), py::arg("d3"), py::arg("d"), py::arg("g"),
        py::arg("ambient") = "P3", "D1.D2.D3 for classes given as (h, e) pairs");

    m.def(
        "anticanonical_cube",
        [](const Int& d, const Int& g, const std::string& ambient) {
            return sarkisov::anticanonical_cube(make_setup(d, g, ambient));
        },
        py::arg("d"), py::arg("g"), py::arg("ambient") = "P3", "(-K_X)^3");

    m.def(
        "anticanonical_form",
        [](const Int& d, const Int& g, const std::string& ambient) {
            const auto q = sarkisov::anticanonical_quadratic_form(make_setup(d, g, ambient));
            py::dict out;
            out["a"] = q.a;
            out["b"] = q.b;
            out["c"] = q.c;
            out["minus_k_cubed"] = q.minus_k_cubed;
            out["sigma"] = q.sigma;
            out["tau"] = q.tau;
            return out;
        },
        py::arg("d"), py::arg("g"), py::arg("ambient") = "P3",
        "(-K).D^2 as a quadratic form plus the mixed pairings");

    m.def("quadrisecant_count", &sarkisov::quadrisecant_count, py::arg("d"), py::arg("g"),
          "Number of 4-secant lines of a general space curve");

    m.def(
        "k3_is_nef",
        [](const Int& n, const Int& d, const Int& g, const Int& k) {
            const auto v = sarkisov::is_nef_kH_minus_C({n, d, g}, k);
            return std::make_pair(v.holds, v.reason);
        },
        py::arg("n"), py::arg("d"), py::arg("g"), py::arg("k"),
        "(holds, reason) for nefness of kH_S - C");

    m.def(
        "k3_is_free",
        [](const Int& n, const Int& d, const Int& g, const Int& k) {
            const auto v = sarkisov::is_free_kH_minus_C({n, d, g}, k);
            return std::make_pair(v.holds, v.reason);
        },
        py::arg("n"), py::arg("d"), py::arg("g"), py::arg("k"),
        "(holds, reason) for base point freeness of kH_S - C");

    m.def(
        "k3_self_intersection",
        [](const Int& n, const Int& d, const Int& g, const Int& a, const Int& b) {
            return sarkisov::k3_self_intersection({n, d, g}, a, b);
        },
        py::arg("n"), py::arg("d"), py::arg("g"), py::arg("a"), py::arg("b"),
        "(a H_S + b C)^2 on the K3 lattice");

    m.def(
        "no_rational_curves_obstruction",
        [](const Int& n, const Int& d, const Int& g) {
            return sarkisov::no_rational_curves_obstruction({n, d, g});
        },
        py::arg("n"), py::arg("d"), py::arg("g"), "4Z congruence ruling out (-2)-classes");

    m.def(
        "represents",
        [](const Int& a, const Int& b, const Int& c, const Int& target, const Int& modulus_max,
           const Int& box) {
            const auto v = sarkisov::represents({a, b, c}, target, modulus_max, box);
            py::dict out;
            switch (v.status) {
            case sarkisov::RepresentabilityVerdict::Status::represented:
                out["status"] = "REPRESENTED";
                out["witness"] = std::make_pair(v.x, v.y);
                break;
            case sarkisov::RepresentabilityVerdict::Status::not_represented:
                out["status"] = "NOT_REPRESENTED";
                out["modulus"] = v.modulus;
                break;
            case sarkisov::RepresentabilityVerdict::Status::unknown:
                out["status"] = "UNKNOWN";
                out["search_box"] = v.search_box;
                break;
            }
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("target"), py::arg("modulus_max") = 64,
        py::arg("box") = 1000, "Sound representability verdict for a x^2 + b x y + c y^2");

    m.def(
        "isotropic_over_rationals",
        [](const Int& a, const Int& b, const Int& c) {
            return sarkisov::isotropic_over_rationals({a, b, c});
        },
        py::arg("a"), py::arg("b"), py::arg("c"), "Rational isotropy (exact)");

    m.def(
        "strict_transform_cube",
        [](const std::pair<Int, Int>& cls, const Int& d, const Int& g,
           const std::vector<std::tuple<Int, Int, Int>>& curves, const std::string& ambient) {
            return sarkisov::strict_transform_cube(make_class(cls), make_setup(d, g, ambient),
                                                   make_flop(curves));
        },
        py::arg("cls"), py::arg("d"), py::arg("g"), py::arg("curves"), py::arg("ambient") = "P3",
        "Cube of a class across the flop; curves are (H.l, E.l, multiplicity)");

    m.def(
        "flop_defect",
        [](const Int& d, const Int& g, const std::vector<std::tuple<Int, Int, Int>>& curves,
           const std::string& ambient) {
            const auto v = sarkisov::defect(make_setup(d, g, ambient), make_flop(curves));
            return std::make_pair(v.e, sarkisov::dec(v.normalized));
        },
        py::arg("d"), py::arg("g"), py::arg("curves"), py::arg("ambient") = "P3",
        "(e, e/r^3) with the normalized defect as a canonical rational string");

    m.def(
        "classify_json",
        [](const Int& d, const Int& g, const std::string& ambient, bool k3_hypothesis,
           bool genericity, const Int& modulus_max, const Int& box, const Int& partner_box,
           const Int& partner_d_max, const Int& partner_g_max) {
            const auto catalog = sarkisov::builtin_catalog();
            const sarkisov::BlowupSetup setup{sarkisov::find_ambient(catalog, ambient), d, g};
            const auto result =
                sarkisov::classify(setup, catalog,
                                   make_options(k3_hypothesis, genericity, modulus_max, box,
                                                partner_box, partner_d_max, partner_g_max));
            return sarkisov::classification_json(result).dump(2);
        },
        py::arg("d"), py::arg("g"), py::arg("ambient") = "P3", py::arg("k3_hypothesis") = true,
        py::arg("genericity") = true, py::arg("modulus_max") = 64, py::arg("box") = 1000,
        py::arg("partner_box") = 64, py::arg("partner_d_max") = 64, py::arg("partner_g_max") = 64,
        "Full classification record as a JSON string");

    m.def(
        "scan_csv",
        [](const Int& d_min, const Int& d_max, const Int& g_min, const Int& g_max,
           const std::string& ambient, int jobs) {
            sarkisov::ScanRequest request;
            request.d_min = d_min;
            request.d_max = d_max;
            request.g_min = g_min;
            request.g_max = g_max;
            request.ambient = ambient;
            request.format = sarkisov::OutputFormat::csv;
            request.jobs = jobs;
            return sarkisov::run_scan(request, sarkisov::builtin_catalog());
        },
        py::arg("d_min"), py::arg("d_max"), py::arg("g_min"), py::arg("g_max"),
        py::arg("ambient") = "P3", py::arg("jobs") = 1, "CSV scan over a (d, g) rectangle");
}

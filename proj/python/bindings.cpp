#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brauerk3/classify.hpp"
#include "brauerk3/error.hpp"
#include "brauerk3/nslattice.hpp"

#include <json.hpp>

namespace py = pybind11;
using namespace brauerk3;

// Integers cross the boundary as decimal strings.

namespace {

PrimitiveTriple triple(const std::string& a, const std::string& b, const std::string& c) {
    return normalize_triple(Int(a), Int(b), Int(c));
}

Place place(const std::string& v) {
    if (v == "inf") return Place::infinity();
    return Place::prime(arith::to_u64(Int(v)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Brauer group computations for diagonal cubic Kummer surfaces";

    py::register_exception<Error>(m, "DomainError", PyExc_ValueError);

    m.def("normalize_triple", [](const std::string& a, const std::string& b, const std::string& c) {
        auto t = triple(a, b, c);
        return std::vector<std::string>{t.a.get_str(), t.b.get_str(), t.c.get_str()};
    });
    m.def("cube_class", [](const std::string& n) { return cube_class(arith::parse_rational(n)).to_string(); });
    m.def("is_cube", [](const std::string& n) { return is_cube(arith::parse_rational(n)); });
    m.def("choose_lambda", [](const std::string& a, const std::string& b, const std::string& c) {
        auto l = choose_lambda(triple(a, b, c));
        return std::make_pair(arith::str(l.value()), to_string(l.source));
    });

    m.def("eisenstein_norm", [](const std::string& x, const std::string& y) {
        return EisensteinInt(Int(x), Int(y)).norm().get_str();
    });
    m.def("primary_associate", [](const std::string& x, const std::string& y) {
        auto z = primary_associate(EisensteinInt(Int(x), Int(y)));
        return std::make_pair(z.x().get_str(), z.y().get_str());
    });
    m.def("residue_symbol", [](const std::string& x, const std::string& y, std::uint64_t p, unsigned degree) {
        return power_residue_symbol(EisensteinInt(Int(x), Int(y)), residue_prime(p), degree).exponent();
    }, py::arg("x"), py::arg("y"), py::arg("p"), py::arg("degree") = 3);

    m.def("jacobian_D", [](const std::string& a, const std::string& b, const std::string& c) {
        return jacobian_D(triple(a, b, c)).get_str();
    });
    m.def("find_m3_witness", [](const std::string& D, const std::string& lambda, std::uint64_t bound) {
        Rational l = arith::parse_rational(lambda);
        auto cert = find_m3_witness(CurveModel{Int(D)}, l, ScanOptions{bound, 1});
        py::dict d;
        d["p"] = cert.p;
        d["pi"] = cert.pi.pi.to_string();
        d["hecke_value"] = cert.hecke.value.to_string();
        d["in_O3"] = cert.in_o3;
        d["verified"] = verify_certificate(cert, CurveModel{Int(D)}, l);
        return d;
    }, py::arg("D"), py::arg("lambda_"), py::arg("bound") = 100000);

    m.def("brauer_of_ExE", [](const std::string& D) { return to_string(brauer_of_ExE(Int(D))); });
    m.def("brauer_of_Y", [](const std::string& a, const std::string& b, const std::string& c) {
        return to_string(brauer_of_Y(triple(a, b, c)));
    });
    m.def("full_report_json", [](const std::string& a, const std::string& b, const std::string& c,
                                 bool assume_y_soluble) {
        ReportOptions options;
        options.assume_y_soluble = assume_y_soluble;
        nlohmann::ordered_json j = full_report(triple(a, b, c), options);
        return j.dump();
    }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("assume_y_soluble") = false);

    m.def("cyclic_h1", [](std::optional<std::pair<long, long>> cm) {
        auto ring = cm ? EndomorphismRing::imaginary(cm->first, cm->second) : EndomorphismRing::non_cm();
        auto r = cyclic_h1(rho_action(ring));
        std::vector<std::string> factors;
        for (const auto& f : r.invariant_factors) factors.push_back(f.get_str());
        py::dict d;
        d["trivial"] = r.trivial();
        d["kernel_rank"] = r.kernel_rank;
        d["image_rank"] = r.image_rank;
        d["invariant_factors"] = factors;
        return d;
    }, py::arg("cm") = py::none());
    m.def("verify_a2_invariants", &verify_a2_invariants);
    m.def("torsion_surjectivity_det", [] { return torsion_surjectivity_det().get_str(); });

    m.def("hilbert_symbol", [](const std::string& a, const std::string& b, const std::string& v) {
        return hilbert_symbol(arith::parse_rational(a), arith::parse_rational(b), place(v));
    });
    m.def("diagonal_cubic_soluble", [](const std::string& a, const std::string& b, const std::string& c,
                                       const std::string& v) { return diagonal_cubic_soluble(triple(a, b, c), place(v)); });
    m.def("evaluation_image", [](unsigned precision) {
        return evaluation_image(enumerate_E_points(-27, 2, precision)).to_string();
    }, py::arg("precision") = 8);
}

// Python bindings for the main operations. Inputs are polynomial strings
// (variables inferred from the text, x-names lowercase or uppercase);
// structured results come back as plain dicts via JSON.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "apolar/certify.hpp"

namespace py = pybind11;
using namespace apolar;

namespace {

FieldSpec field_from_args(const std::string& field, uint32_t p) {
    if (field == "rational") return FieldSpec{FieldSpec::Kind::Rational, 0};
    if (field == "fp") return FieldSpec{FieldSpec::Kind::Fp, p};
    throw Error("BadArgument", "field must be 'fp' or 'rational'");
}

py::object json_to_py(const Json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

template <class Fn>
py::object dispatch(const std::string& field, uint32_t p, Fn&& fn) {
    FieldSpec fs = field_from_args(field, p);
    if (fs.kind == FieldSpec::Kind::Fp) return fn(FpOps{fs.p}, fs);
    return fn(RatOps{}, fs);
}

template <class F>
MPoly<F> poly_from_text(const std::string& text, const FieldSpec& fs, const F& K) {
    auto vars = collect_variables(text);
    if (vars.empty()) throw SyntaxError("no variables found in \"" + text + "\"");
    return parse_poly(text, make_ring(vars, fs), K);
}

template <class F>
Json presentation_json(const AlgebraPresentation<F>& B, const F& K) {
    Json gens = Json::array();
    for (const auto& g : B.min_gens) gens.push_back(g.to_string(K));
    return Json{{"variables", B.ring->names()},
                {"generators", gens},
                {"hilbert", hf_json(B.hf)},
                {"length", B.length()},
                {"socle_degree", B.socle_degree()}};
}

Json tangent_json(const TangentReport& rep) {
    return Json{{"t0", graded_dims_json(rep.t0)},
                {"t1", graded_dims_json(rep.t1)},
                {"tnt", rep.tnt},
                {"concentrated_minus_one", rep.concentrated_minus_one},
                {"positive_vanishes", rep.positive_vanishes},
                {"length", rep.algebra_length},
                {"socle_degree", rep.socle_degree},
                {"der_bb_degree_1", rep.der_bb_1}};
}

}  // namespace

PYBIND11_MODULE(_apolar, m) {
    m.doc() = "apolar algebras, graded cotangent invariants, and non-reducedness certificates";

    py::register_exception<Error>(m, "ApolarError");

    m.def(
        "parse_print",
        [](const std::string& text, const std::string& field, uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec& fs) -> py::object {
                return py::str(poly_from_text(text, fs, K).to_string(K));
            });
        },
        py::arg("text"), py::arg("field") = "fp", py::arg("p") = 32003,
        "parse a polynomial and return its canonical printed form");

    m.def(
        "contract",
        [](const std::string& s, const std::string& bigf, const std::string& field, uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec& fs) -> py::object {
                std::string joint = s + "+" + bigf;  // infer one common ring
                auto vars = collect_variables(joint);
                auto ring = make_ring(vars, fs);
                auto sp = parse_poly(s, ring, K);
                auto fp = parse_poly(bigf, ring, K);
                return py::str(apolar::contract(sp, fp, K).to_string(K));
            });
        },
        py::arg("s"), py::arg("F"), py::arg("field") = "fp", py::arg("p") = 32003,
        "divided-power contraction s o F");

    m.def(
        "annihilator",
        [](const std::string& text, const std::string& field, uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec& fs) -> py::object {
                auto f = poly_from_text(text, fs, K);
                py::list out;
                for (const auto& g : annihilator(f, K)) out.append(g.to_string(K));
                return out;
            });
        },
        py::arg("F"), py::arg("field") = "fp", py::arg("p") = 32003,
        "minimal generators of Ann(F)");

    m.def(
        "apolar",
        [](const std::string& text, const std::string& field, uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec& fs) -> py::object {
                auto B = apolar_algebra(poly_from_text(text, fs, K), K);
                return json_to_py(presentation_json(B, K));
            });
        },
        py::arg("F"), py::arg("field") = "fp", py::arg("p") = 32003,
        "presentation of Apolar(F): generators, Hilbert function, length");

    m.def(
        "hilbert",
        [](const std::string& text, const std::string& field, uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec& fs) -> py::object {
                auto B = apolar_algebra(poly_from_text(text, fs, K), K);
                py::list out;
                for (int h : B.hf) out.append(h);
                return out;
            });
        },
        py::arg("F"), py::arg("field") = "fp", py::arg("p") = 32003,
        "Hilbert function of Apolar(F)");

    m.def(
        "betti",
        [](const std::string& text, const std::string& field, uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec& fs) -> py::object {
                auto B = apolar_algebra(poly_from_text(text, fs, K), K);
                return json_to_py(betti_json(minimal_betti(B, K)));
            });
        },
        py::arg("F"), py::arg("field") = "fp", py::arg("p") = 32003,
        "minimal graded Betti numbers (i <= 2) of Apolar(F) as [i, j, count] triples");

    m.def(
        "tangent",
        [](const std::string& text, const std::string& field, uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec& fs) -> py::object {
                auto B = apolar_algebra(poly_from_text(text, fs, K), K);
                return json_to_py(tangent_json(t1_graded(B, K)));
            });
        },
        py::arg("F"), py::arg("field") = "fp", py::arg("p") = 32003,
        "graded T^0 and T^1 of Apolar(F) with the TNT/concentration flags");

    m.def(
        "t2",
        [](const std::vector<std::string>& gens, const std::string& field, uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec& fs) -> py::object {
                std::string joint;
                for (const auto& g : gens) joint += g + "+";
                joint += "0";
                auto vars = collect_variables(joint);
                auto ring = make_ring(vars, fs);
                std::vector<decltype(parse_poly(gens[0], ring, K))> gs;
                for (const auto& g : gens) gs.push_back(parse_poly(g, ring, K));
                auto B = presentation_from_generators(gs, K);
                return json_to_py(graded_dims_json(t2_residue_graded(B, K)));
            });
        },
        py::arg("generators"), py::arg("field") = "fp", py::arg("p") = 32003,
        "graded T^2(B,k) of S/(generators)");

    m.def(
        "union_along_point",
        [](const std::string& ftext, const std::string& gtext, const std::string& field,
           uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec& fs) -> py::object {
                auto BX = apolar_algebra(poly_from_text(ftext, fs, K), K);
                auto BY = apolar_algebra(poly_from_text(gtext, fs, K), K);
                auto U = union_along_point(BX, BY, K);
                auto s = socle(U, K);
                Json j = presentation_json(U, K);
                j["socle_dim"] = s.total_dim();
                return json_to_py(j);
            });
        },
        py::arg("F"), py::arg("G"), py::arg("field") = "fp", py::arg("p") = 32003,
        "union along the point of Apolar(F) and Apolar(G)");

    m.def(
        "connect",
        [](const std::string& ftext, const std::string& gtext, const std::string& field,
           uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec& fs) -> py::object {
                auto f = poly_from_text(ftext, fs, K);
                auto g = poly_from_text(gtext, fs, K);
                auto cs = connected_sum(f, g, K);
                Json j{{"direct", presentation_json(cs.direct, K)},
                       {"quotient", presentation_json(cs.quotient, K)},
                       {"agree", cs.agree}};
                return json_to_py(j);
            });
        },
        py::arg("F"), py::arg("G"), py::arg("field") = "fp", py::arg("p") = 32003,
        "connected sum via both presentations, with the agreement flag");

    m.def(
        "fiber",
        [](const std::string& ftext, const std::string& gtext, bool check_sum,
           const std::string& field, uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec& fs) -> py::object {
                auto f = poly_from_text(ftext, fs, K);
                auto g = poly_from_text(gtext, fs, K);
                auto rep = expected_fiber(f, g, K, check_sum);
                Json j{{"fiber", presentation_json(rep.fiber, K)},
                       {"tangent_dim", rep.tangent_dim},
                       {"expected_tangent_dim", rep.expected_tangent_dim},
                       {"tangent_ok", rep.tangent_ok},
                       {"inputs_tnt", rep.inputs_tnt},
                       {"sum_checked", rep.sum_checked},
                       {"sum_negative_dim", rep.sum_negative_dim},
                       {"sum_concentrated", rep.sum_concentrated},
                       {"sum_matches_fiber", rep.sum_matches_fiber}};
                return json_to_py(j);
            });
        },
        py::arg("F"), py::arg("G"), py::arg("check_sum") = true, py::arg("field") = "fp",
        py::arg("p") = 32003, "predicted deformation fiber (O_X (x) O_Y)/(f - g)");

    m.def(
        "very_general",
        [](const std::string& text, const std::string& field, uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec& fs) -> py::object {
                auto rep = is_very_general_cubic(poly_from_text(text, fs, K), K);
                Json j{{"n", rep.n},
                       {"hf_ok", rep.hf_ok},
                       {"betti_ok", rep.betti_ok},
                       {"tnt", rep.tnt},
                       {"concentrated_minus_one", rep.concentrated_minus_one},
                       {"hf", hf_json(rep.hf)},
                       {"very_general", rep.all()}};
                return json_to_py(j);
            });
        },
        py::arg("F"), py::arg("field") = "fp", py::arg("p") = 32003,
        "the three very-general-cubic bullets for a cubic form");

    m.def(
        "certify",
        [](const std::string& ftext, const std::string& gtext, uint64_t seed,
           const std::string& field, uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec& fs) -> py::object {
                auto f = poly_from_text(ftext, fs, K);
                auto g = poly_from_text(gtext, fs, K);
                auto cert = certify_nonreduced(f, g, K, seed);
                return json_to_py(cert.body);
            });
        },
        py::arg("F"), py::arg("G"), py::arg("seed") = 0, py::arg("field") = "fp",
        py::arg("p") = 32003, "non-reducedness certificate for the pair (F, G)");

    m.def(
        "search",
        [](int n, int trials, uint64_t seed, const std::string& field, uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec&) -> py::object {
                return json_to_py(search_very_general(n, trials, seed, K));
            });
        },
        py::arg("n"), py::arg("trials"), py::arg("seed") = 0, py::arg("field") = "fp",
        py::arg("p") = 32003, "sample cubics and report the condition bullets per trial");

    m.def(
        "paper_examples",
        [](const std::string& field, uint32_t p) {
            return dispatch(field, p, [&](auto K, const FieldSpec&) -> py::object {
                return json_to_py(verify_paper_examples(K).to_json());
            });
        },
        py::arg("field") = "fp", py::arg("p") = 32003,
        "verify the two explicit cubics and the Setting conditions for the pair");
}

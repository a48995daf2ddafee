// apolar: exact-arithmetic toolkit for apolar algebras, graded cotangent
// invariants, connected sums, and non-reducedness certificates.
//
// Exit codes: 0 = computation succeeded and all asserted conditions hold;
// 1 = computation succeeded but a checked condition fails; 2 = usage or
// input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "apolar/certify.hpp"

using namespace apolar;

namespace {

struct GlobalOpts {
    std::string field = "fp:32003";
    uint64_t seed = 20250808ull;
    bool json = false;
    std::string window;
    std::string out;
};

FieldSpec parse_field(const std::string& text) {
    if (text == "rational" || text == "q" || text == "Q")
        return FieldSpec{FieldSpec::Kind::Rational, 0};
    if (text == "fp") return FieldSpec{};
    if (text.rfind("fp:", 0) == 0) {
        uint32_t p = static_cast<uint32_t>(std::stoul(text.substr(3)));
        return FieldSpec{FieldSpec::Kind::Fp, p};
    }
    throw CLI::ValidationError("--field", "expected fp:<prime> or rational");
}

std::pair<int, int> parse_window(const std::string& text) {
    auto colon = text.find(':', 1);  // skip a leading minus sign
    if (colon == std::string::npos)
        throw CLI::ValidationError("--window", "expected lo:hi, e.g. -5:3");
    return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

// Inline polynomial text, or the contents of a file when the argument names
// one.
std::string slurp_input(const std::string& arg) {
    std::ifstream in(arg);
    if (!in.good()) return arg;
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(g.out);
        out << text << "\n";
    }
}

template <class F>
MPoly<F> parse_input(const std::string& arg, const FieldSpec& fs, const F& K) {
    std::string text = slurp_input(arg);
    auto vars = collect_variables(text);
    if (vars.empty()) throw SyntaxError("no variables found in \"" + text + "\"");
    return parse_poly(text, make_ring(vars, fs), K);
}

std::string hf_string(const std::vector<int>& hf) {
    std::string s = "(";
    for (size_t i = 0; i < hf.size(); ++i) s += (i ? "," : "") + std::to_string(hf[i]);
    return s + ")";
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

std::string dims_line(const GradedDims& g) {
    if (g.dims.empty()) return "0";
    std::string s;
    for (const auto& [e, d] : g.dims)
        s += (s.empty() ? "" : "  ") + std::to_string(e) + ":" + std::to_string(d);
    return s;
}

// ---- subcommand bodies, templated over the field ---------------------------

template <class F>
int run_apolar(const GlobalOpts& g, const std::string& farg, const FieldSpec& fs, const F& K) {
    auto f = parse_input(farg, fs, K);
    auto B = apolar_algebra(f, K);
    if (g.json) {
        emit(g, presentation_json(B, K).dump(2));
    } else {
        std::ostringstream os;
        os << "Apolar(F) for F = " << f.to_string(K) << "\n";
        os << "annihilator generators:\n";
        for (const auto& gen : B.min_gens) os << "  " << gen.to_string(K) << "\n";
        os << "hilbert function: " << hf_string(B.hf) << "\n";
        os << "length: " << B.length() << ", socle degree: " << B.socle_degree();
        emit(g, os.str());
    }
    return 0;
}

template <class F>
int run_hilbert(const GlobalOpts& g, const std::string& farg, const FieldSpec& fs, const F& K) {
    auto f = parse_input(farg, fs, K);
    auto B = apolar_algebra(f, K);
    if (g.json)
        emit(g, Json{{"hilbert", hf_json(B.hf)}, {"length", B.length()}}.dump(2));
    else
        emit(g, hf_string(B.hf));
    return 0;
}

template <class F>
int run_betti(const GlobalOpts& g, const std::string& farg, const FieldSpec& fs, const F& K) {
    auto f = parse_input(farg, fs, K);
    auto B = apolar_algebra(f, K);
    auto bt = minimal_betti(B, K);
    if (g.json) {
        emit(g, Json{{"betti", betti_json(bt)}}.dump(2));
    } else {
        std::ostringstream os;
        os << "minimal graded Betti numbers (steps 0..2):";
        for (const auto& [key, v] : bt.counts)
            os << "\n  beta(" << key.first << "," << key.second << ") = " << v;
        emit(g, os.str());
    }
    return 0;
}

template <class F>
int run_tangent(const GlobalOpts& g, const std::string& farg, const FieldSpec& fs, const F& K) {
    auto f = parse_input(farg, fs, K);
    auto B = apolar_algebra(f, K);
    TangentReport rep;
    if (!g.window.empty()) {
        auto [lo, hi] = parse_window(g.window);
        rep = t1_graded(B, K, lo, hi);
    } else {
        rep = t1_graded(B, K);
    }
    if (g.json) {
        emit(g, tangent_json(rep).dump(2));
    } else {
        std::ostringstream os;
        os << "T^0 (graded derivations): " << dims_line(rep.t0) << "\n";
        os << "T^1 (first-order deformations): " << dims_line(rep.t1) << "\n";
        os << "trivial negative tangents (TNT): " << (rep.tnt ? "true" : "false") << "\n";
        os << "concentrated in degree -1: " << (rep.concentrated_minus_one ? "true" : "false")
           << "\n";
        os << "positive part vanishes: " << (rep.positive_vanishes ? "true" : "false") << "\n";
        int n = B.ring->nvars();
        os << "Der(B,B)_1 = " << rep.der_bb_1 << "  [candidates: n^2-C(n+1,2)+n = "
           << n * n - (n + 1) * n / 2 + n << ", n^2-C(n+1,2)-n = "
           << n * n - (n + 1) * n / 2 - n << "]";
        emit(g, os.str());
    }
    return 0;
}

template <class F>
int run_very_general(const GlobalOpts& g, const std::string& farg, const FieldSpec& fs,
                     const F& K) {
    auto f = parse_input(farg, fs, K);
    auto rep = is_very_general_cubic(f, K);
    if (g.json) {
        emit(g, Json{{"n", rep.n},
                     {"hf_ok", rep.hf_ok},
                     {"betti_ok", rep.betti_ok},
                     {"tnt", rep.tnt},
                     {"concentrated_minus_one", rep.concentrated_minus_one},
                     {"hf", hf_json(rep.hf)},
                     {"betti", betti_json(rep.betti)},
                     {"t1_negative", graded_dims_json(rep.t1_negative)},
                     {"very_general", rep.all()}}
                    .dump(2));
    } else {
        std::ostringstream os;
        os << "hilbert function " << hf_string(rep.hf) << ": " << (rep.hf_ok ? "ok" : "FAIL")
           << "\n";
        os << "quadric generators, linear syzygies only: " << (rep.betti_ok ? "ok" : "FAIL")
           << "\n";
        os << "trivial negative tangents: " << (rep.tnt ? "ok" : "FAIL") << "\n";
        os << "very general: " << (rep.all() ? "true" : "false");
        emit(g, os.str());
    }
    return rep.all() ? 0 : 1;
}

template <class F>
int run_union(const GlobalOpts& g, const std::string& farg, const std::string& garg,
              const FieldSpec& fs, const F& K) {
    auto f = parse_input(farg, fs, K);
    auto h = parse_input(garg, fs, K);
    auto BX = apolar_algebra(f, K);
    auto BY = apolar_algebra(h, K);
    auto U = union_along_point(BX, BY, K);
    auto s = socle(U, K);
    if (g.json) {
        Json j = presentation_json(U, K);
        Json sd = Json::array();
        for (const auto& [deg, dim] : s.dims) sd.push_back(Json::array({deg, dim}));
        j["socle_dims"] = sd;
        emit(g, j.dump(2));
    } else {
        std::ostringstream os;
        os << "union along the point, presented in " << U.ring->nvars() << " variables\n";
        os << "hilbert function: " << hf_string(U.hf) << "\n";
        os << "length: " << U.length() << "\n";
        os << "socle dimension: " << s.total_dim();
        emit(g, os.str());
    }
    return 0;
}

template <class F>
int run_connect(const GlobalOpts& g, const std::string& farg, const std::string& garg,
                const FieldSpec& fs, const F& K) {
    auto f = parse_input(farg, fs, K);
    auto h = parse_input(garg, fs, K);
    auto cs = connected_sum(f, h, K);
    if (g.json) {
        Json j{{"direct", presentation_json(cs.direct, K)},
               {"quotient", presentation_json(cs.quotient, K)},
               {"agree", cs.agree}};
        emit(g, j.dump(2));
    } else {
        std::ostringstream os;
        os << "connected sum Apolar(F+G)\n";
        os << "hilbert function: " << hf_string(cs.direct.hf) << "\n";
        os << "length: " << cs.direct.length() << "\n";
        os << "dual presentations agree: " << (cs.agree ? "true" : "false");
        emit(g, os.str());
    }
    return cs.agree ? 0 : 1;
}

template <class F>
int run_fiber(const GlobalOpts& g, const std::string& farg, const std::string& garg,
              const FieldSpec& fs, const F& K) {
    auto f = parse_input(farg, fs, K);
    auto h = parse_input(garg, fs, K);
    auto rep = expected_fiber(f, h, K, true);
    bool ok = rep.tangent_ok && (!rep.sum_checked || rep.sum_matches_fiber);
    if (g.json) {
        emit(g, Json{{"fiber", presentation_json(rep.fiber, K)},
                     {"tangent_dim", rep.tangent_dim},
                     {"expected_tangent_dim", rep.expected_tangent_dim},
                     {"tangent_ok", rep.tangent_ok},
                     {"inputs_tnt", rep.inputs_tnt},
                     {"sum_checked", rep.sum_checked},
                     {"sum_negative_dim", rep.sum_negative_dim},
                     {"sum_concentrated", rep.sum_concentrated},
                     {"sum_matches_fiber", rep.sum_matches_fiber}}
                    .dump(2));
    } else {
        std::ostringstream os;
        os << "deformation fiber (O_X (x) O_Y)/(f(t_x) - g(t_y))\n";
        os << "hilbert function: " << hf_string(rep.fiber.hf) << "\n";
        os << "tangent dimension at the origin: " << rep.tangent_dim << " (expected "
           << rep.expected_tangent_dim << ")\n";
        if (rep.sum_checked)
            os << "negative T^1 of the connected sum: " << rep.sum_negative_dim
               << ", concentrated in degree -1: " << (rep.sum_concentrated ? "true" : "false")
               << ", matches fiber: " << (rep.sum_matches_fiber ? "true" : "false");
        else
            os << "connected-sum tangent check skipped (inputs are not TNT)";
        emit(g, os.str());
    }
    return ok ? 0 : 1;
}

template <class F>
int run_certify(const GlobalOpts& g, const std::string& farg, const std::string& garg,
                const FieldSpec& fs, const F& K) {
    auto f = parse_input(farg, fs, K);
    auto h = parse_input(garg, fs, K);
    auto cert = certify_nonreduced(f, h, K, g.seed);
    if (g.json) {
        emit(g, cert.dump());
    } else {
        std::ostringstream os;
        os << "verdict: " << cert.verdict << "\n";
        for (const auto& c : cert.body["setting"])
            os << "  [" << c["tier"].template get<std::string>() << "] "
               << c["name"].template get<std::string>() << ": "
               << (c["passed"].template get<bool>() ? "pass" : "FAIL") << "\n";
        for (const auto& c : cert.body["extra"])
            os << "  [" << c["tier"].template get<std::string>() << "] "
               << c["name"].template get<std::string>() << ": "
               << (c["passed"].template get<bool>() ? "pass" : "FAIL") << "\n";
        os << "hash: " << cert.body["canonical_hash"].template get<std::string>();
        emit(g, os.str());
    }
    return cert.certified ? 0 : 1;
}

template <class F>
int run_search(const GlobalOpts& g, int n, int trials, const F& K) {
    std::ofstream out;
    if (!g.out.empty()) out.open(g.out, std::ios::app);  // append-only results log
    auto sink = [&](const Json& rec) {
        if (out.is_open())
            out << rec.dump() << "\n";
        else
            std::cout << rec.dump() << "\n";
    };
    auto res = search_very_general(n, trials, g.seed, K, sink);
    if (g.json) {
        Json summary{{"n", res["n"]},
                     {"trials", res["trials"]},
                     {"seed", res["seed"]},
                     {"summary", res["summary"]}};
        std::cout << summary.dump(2) << "\n";
    } else {
        std::cout << "trials: " << trials << ", all bullets true: "
                  << res["summary"]["all_bullets"] << ", tnt: " << res["summary"]["tnt"]
                  << ", hf: " << res["summary"]["hf_ok"]
                  << ", betti: " << res["summary"]["betti_ok"] << "\n";
    }
    return 0;
}

template <class F>
int run_paper_examples(const GlobalOpts& g, const F& K) {
    auto rep = verify_paper_examples(K);
    if (g.json) {
        emit(g, rep.to_json().dump(2));
    } else {
        std::ostringstream os;
        for (const auto& e : rep.entries) {
            os << e.label << ": " << e.polynomial << "\n";
            os << "  hilbert function: " << hf_string(e.hf) << " (matches (1,m,m,1): "
               << (e.hf_matches_1mm1 ? "true" : "false") << ")\n";
            os << "  concentrated in degree -1: "
               << (e.concentrated_minus_one ? "true" : "false") << "\n";
            os << "  T^1 in degree -1 nonzero: " << (e.t1_minus_one_nonzero ? "true" : "false")
               << "\n";
        }
        os << "setting conditions for the pair: " << (rep.setting_pass ? "pass" : "FAIL");
        emit(g, os.str());
    }
    return rep.all_pass() ? 0 : 1;
}

template <class Fn>
int with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.kind == FieldSpec::Kind::Fp) return fn(FpOps{fs.p});
    return fn(RatOps{});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"apolar: apolar algebras, cotangent invariants, and non-reducedness certificates"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("APOLAR_FIELD")) g.field = env;
    app.add_option("--field", g.field, "coefficient field: fp:<prime> or rational")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized constructions")->capture_default_str();
    app.add_flag("--json", g.json, "emit JSON reports");
    app.add_option("--window", g.window, "degree window lo:hi for tangent scans");
    app.add_option("--out", g.out, "write the report (or search log) to this file");

    std::string farg, garg;
    int search_n = 10, search_trials = 20;

    auto* cmd_apolar = app.add_subcommand("apolar", "annihilator and apolar algebra of a form");
    cmd_apolar->add_option("F", farg, "dual form (text or file)")->required();
    auto* cmd_hilbert = app.add_subcommand("hilbert", "Hilbert function of Apolar(F)");
    cmd_hilbert->add_option("F", farg)->required();
    auto* cmd_betti = app.add_subcommand("betti", "minimal graded Betti numbers of Apolar(F)");
    cmd_betti->add_option("F", farg)->required();
    auto* cmd_tangent = app.add_subcommand("tangent", "graded T^0 and T^1 of Apolar(F)");
    cmd_tangent->add_option("F", farg);
    cmd_tangent->add_option("--cubic", farg, "the dual cubic (alias for the positional form)");
    auto* cmd_vg = app.add_subcommand("very-general", "check the very-general-cubic conditions");
    cmd_vg->add_option("F", farg)->required();
    auto* cmd_union = app.add_subcommand("union", "union along the point of two apolar algebras");
    cmd_union->add_option("F", farg)->required();
    cmd_union->add_option("G", garg)->required();
    auto* cmd_connect = app.add_subcommand("connect", "connected sum along both presentations");
    cmd_connect->add_option("F", farg)->required();
    cmd_connect->add_option("G", garg)->required();
    auto* cmd_fiber = app.add_subcommand("fiber", "predicted deformation fiber of the connected sum");
    cmd_fiber->add_option("F", farg)->required();
    cmd_fiber->add_option("G", garg)->required();
    auto* cmd_certify = app.add_subcommand("certify", "non-reducedness certificate for a pair");
    cmd_certify->add_option("F", farg)->required();
    cmd_certify->add_option("G", garg)->required();
    auto* cmd_search = app.add_subcommand("search", "sample cubics and log the condition bullets");
    cmd_search->add_option("--n", search_n, "number of variables")->capture_default_str();
    cmd_search->add_option("--trials", search_trials, "number of trials")->capture_default_str();
    auto* cmd_paper = app.add_subcommand("paper-examples", "verify the two explicit cubics");

    // global flags may trail the subcommand arguments
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        FieldSpec fs = parse_field(g.field);
        return with_field(fs, [&](auto K) -> int {
            if (cmd_apolar->parsed()) return run_apolar(g, farg, fs, K);
            if (cmd_hilbert->parsed()) return run_hilbert(g, farg, fs, K);
            if (cmd_betti->parsed()) return run_betti(g, farg, fs, K);
            if (cmd_tangent->parsed()) {
                if (farg.empty()) throw SyntaxError("tangent needs a polynomial");
                return run_tangent(g, farg, fs, K);
            }
            if (cmd_vg->parsed()) return run_very_general(g, farg, fs, K);
            if (cmd_union->parsed()) return run_union(g, farg, garg, fs, K);
            if (cmd_connect->parsed()) return run_connect(g, farg, garg, fs, K);
            if (cmd_fiber->parsed()) return run_fiber(g, farg, garg, fs, K);
            if (cmd_certify->parsed()) return run_certify(g, farg, garg, fs, K);
            if (cmd_search->parsed()) return run_search(g, search_n, search_trials, K);
            if (cmd_paper->parsed()) return run_paper_examples(g, K);
            return 2;
        });
    } catch (const PreconditionFailed& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const CharTooSmall& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

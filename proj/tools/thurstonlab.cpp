#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "thurstonlab/exceptional.hpp"
#include "thurstonlab/fuzz.hpp"
#include "thurstonlab/manifold_io.hpp"
#include "thurstonlab/niceness.hpp"
#include "thurstonlab/svg.hpp"
#include "thurstonlab/swtheory.hpp"

using namespace thurstonlab;
using json = nlohmann::json;

namespace {

VecZ parse_csv(const std::string& s, const std::string& flag) {
    VecZ v;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw input_error("empty component in --" + flag);
            try {
                v.push_back(std::stoll(cur));
            } catch (const std::exception&) {
                throw input_error("malformed integer '" + cur + "' in --" + flag);
            }
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return v;
}

void emit(const json& j) { std::cout << canonical_dump(j); }

int max_support_config() {
    if (const char* env = std::getenv("THURSTONLAB_MAX_SUPPORT")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (const std::exception&) {
            throw input_error("THURSTONLAB_MAX_SUPPORT is not an integer");
        }
    }
    return kDefaultMaxSupport;
}

json vertices_json(const DualBall& b) {
    json verts = json::array();
    for (const auto& v : b.integral_vertices()) verts.push_back(v);
    return verts;
}

json rational_vec_json(const VecQ& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_string(x));
    return a;
}

VecZ required_euler(const BundleInput& in, const std::string& flag_value) {
    if (!flag_value.empty()) return parse_csv(flag_value, "euler");
    if (in.euler) return *in.euler;
    throw input_error("--euler is required (or supply it in a bundle file)");
}

NicenessVerdict niceness_for(const Manifold3& m) {
    if (!m.delta) return {nice_status::undecided, std::nullopt};
    return is_nice(*m.delta, max_support_config());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Norm-ball combinatorics for circle bundles over 3-manifolds"};
    app.require_subcommand(1);

    std::string file, sigma_s, euler_s, curve_s, e_s, svg_path;
    long long trials = 100;
    std::uint64_t seed = 0;
    bool serial = false, torsion = false, exact_flag = false, fast_flag = false;

    auto* c_norm = app.add_subcommand("norm", "Evaluate the norm of a class");
    c_norm->add_option("file", file)->required();
    c_norm->add_option("--sigma", sigma_s)->required();

    auto* c_ball = app.add_subcommand("ball", "Dual ball vertices and edges");
    c_ball->add_option("file", file)->required();
    c_ball->add_option("--svg", svg_path);

    auto* c_xi = app.add_subcommand("xi", "Finite exceptional set");
    auto* c_xi_list = c_xi->add_subcommand("list", "Enumerate the exceptional classes");
    c_xi_list->add_option("file", file)->required();
    auto* c_xi_test = c_xi->add_subcommand("test", "Membership test");
    c_xi_test->add_option("file", file)->required();
    c_xi_test->add_option("--e", e_s)->required();

    auto* c_theta = app.add_subcommand("theta", "Ray-exceptional set");
    auto* c_theta_test = c_theta->add_subcommand("test", "Membership test");
    c_theta_test->add_option("file", file)->required();
    c_theta_test->add_option("--e", e_s)->required();

    auto* c_nice = app.add_subcommand("nice", "Alexander-polynomial niceness");
    auto* c_nice_check = c_nice->add_subcommand("check", "Decide niceness");
    c_nice_check->add_option("file", file)->required();
    c_nice_check->add_flag("--exact", exact_flag, "force the exact partition decision");
    c_nice_check->add_flag("--fast", fast_flag, "face-sum criterion only");

    auto* c_sw = app.add_subcommand("sw", "Seiberg-Witten support pipelines");
    auto* c_sw_avg = c_sw->add_subcommand("average", "Push the support to the bundle");
    c_sw_avg->add_option("file", file)->required();
    c_sw_avg->add_option("--euler", euler_s);
    auto* c_sw_basic = c_sw->add_subcommand("basic", "Basic classes upstairs");
    c_sw_basic->add_option("file", file)->required();
    c_sw_basic->add_option("--euler", euler_s);

    auto* c_bound = app.add_subcommand("bound", "Refined adjunction bound");
    c_bound->add_option("file", file)->required();
    c_bound->add_option("--euler", euler_s);
    c_bound->add_option("--sigma", sigma_s)->required();
    c_bound->add_option("--curve", curve_s)->required();

    auto* c_betti = app.add_subcommand("betti", "Betti numbers of the bundle");
    c_betti->add_option("file", file)->required();
    c_betti->add_option("--euler", euler_s);
    c_betti->add_flag("--torsion", torsion, "treat the euler class as torsion");

    auto* c_cover = app.add_subcommand("cover", "Finite-cover bookkeeping");
    auto* c_cover_check = c_cover->add_subcommand("check", "Validate a cover datum");
    c_cover_check->add_option("file", file)->required();

    auto* c_sympl = app.add_subcommand("symplectic", "Symplectic-cone status");
    c_sympl->add_option("file", file)->required();
    c_sympl->add_option("--sigma", sigma_s)->required();
    c_sympl->add_option("--curve", curve_s)->required();
    c_sympl->add_option("--euler", euler_s);

    auto* c_fuzz = app.add_subcommand("fuzz", "Property fuzzing");
    std::string fuzz_kind;
    auto* c_fuzz_obs = c_fuzz->add_subcommand("observation", "Edge-translate property");
    auto* c_fuzz_claim = c_fuzz->add_subcommand("claim", "Witness-existence property");
    auto* c_fuzz_norms = c_fuzz->add_subcommand("norms", "Seminorm properties");
    for (auto* sc : {c_fuzz_obs, c_fuzz_claim, c_fuzz_norms}) {
        sc->add_option("--trials", trials);
        sc->add_option("--seed", seed);
        sc->add_flag("--serial", serial, "run trials on one thread");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (c_norm->parsed()) {
            BundleInput in = load_input_file(file);
            Covector sigma{parse_csv(sigma_s, "sigma")};
            emit(json{{"sigma", sigma.entries},
                      {"norm", int_to_json(thurston_norm(in.manifold.dual_ball, sigma))},
                      {"source", in.manifold.ball_source}});
        } else if (c_ball->parsed()) {
            BundleInput in = load_input_file(file);
            const DualBall& b = in.manifold.dual_ball;
            json es = json::array();
            for (const auto& e : edges(b.ball()))
                es.push_back(json::array({to_integral(e.a), to_integral(e.b)}));
            json out{{"vertices", vertices_json(b)},
                     {"edges", es},
                     {"dimension", b.ball().dim()},
                     {"degenerate", b.ball().dim() < 2},
                     {"source", in.manifold.ball_source}};
            if (!svg_path.empty()) {
                std::ofstream svg(svg_path);
                if (!svg) throw input_error("cannot write " + svg_path);
                svg << ball_svg(b);
                out["svg"] = svg_path;
            }
            emit(out);
        } else if (c_xi_list->parsed()) {
            BundleInput in = load_input_file(file);
            const DualBall& b = in.manifold.dual_ball;
            json classes = json::array();
            for (const auto& w : xi_enumerate(b)) classes.push_back(w);
            json carriers = json::array();
            for (const auto& c : exceptional_segments(b).carriers)
                carriers.push_back(json{{"from", rational_vec_json(c.seg.a)},
                                        {"to", rational_vec_json(c.seg.b)},
                                        {"vertex", rational_vec_json(c.vertex)}});
            emit(json{{"classes", classes},
                      {"count", classes.size()},
                      {"carriers", carriers},
                      {"degenerate", b.ball().dim() < 2},
                      {"source", in.manifold.ball_source}});
        } else if (c_xi_test->parsed()) {
            BundleInput in = load_input_file(file);
            VecZ e = parse_csv(e_s, "e");
            emit(json{{"e", e}, {"xi", xi_test(in.manifold.dual_ball, e)}});
        } else if (c_theta_test->parsed()) {
            BundleInput in = load_input_file(file);
            VecZ e = parse_csv(e_s, "e");
            emit(json{{"e", e},
                      {"theta", theta_test(in.manifold.dual_ball, e)},
                      {"degenerate", in.manifold.dual_ball.ball().dim() < 2}});
        } else if (c_nice_check->parsed()) {
            BundleInput in = load_input_file(file);
            if (!in.manifold.delta) throw input_error("manifold has no alexander polynomial");
            const LaurentPoly& delta = *in.manifold.delta;
            json out;
            auto nice_provenance = [](nice_status s) {
                return s == nice_status::nice || s == nice_status::not_nice
                           ? "Definition of nice"
                           : "Remark (Newton polyhedron)";
            };
            if (fast_flag) {
                bool pass = face_sum_criterion(delta);
                nice_status s = pass ? nice_status::sufficient_only_pass : nice_status::undecided;
                out["status"] = to_string(s);
                out["method"] = "face-sum";
                out["provenance"] = nice_provenance(s);
            } else {
                int cutoff = exact_flag ? std::numeric_limits<int>::max() : max_support_config();
                NicenessVerdict v = is_nice(delta, cutoff);
                out["status"] = to_string(v.status);
                out["method"] = v.status == nice_status::nice || v.status == nice_status::not_nice
                                    ? "partition"
                                    : "face-sum";
                out["provenance"] = nice_provenance(v.status);
                if (v.witness) out["witness"] = v.witness->entries;
                if (!exact_flag) out["max_support"] = max_support_config();
            }
            emit(out);
        } else if (c_sw_avg->parsed() || c_sw_basic->parsed()) {
            BundleInput in = load_input_file(file);
            if (!in.manifold.sw) throw input_error("manifold has no sw support");
            VecZ e = required_euler(in, euler_s);
            if (static_cast<int>(e.size()) != in.manifold.b1)
                throw input_error("--euler length != b1");
            SWSupport pushed = sw_pushforward(*in.manifold.sw, e);
            json warnings = json::array();
            if (in.manifold.b1 <= 2)
                warnings.push_back("averaging hypothesis b1 > 2 is not met; treat as formal");
            const char* prov = is_zero(e) ? "Remark 1" : "Theorem 2.1";
            if (c_sw_avg->parsed()) {
                json supp = json::array();
                for (const auto& [c1, v] : pushed.entries)
                    supp.push_back(json{{"c1", c1}, {"value", int_to_json(v)}});
                emit(json{{"euler", e},
                          {"support", supp},
                          {"provenance", prov},
                          {"warnings", warnings}});
            } else {
                json classes = json::array();
                for (const auto& [c1, v] : pushed.entries) classes.push_back(c1);
                emit(json{{"euler", e},
                          {"classes", classes},
                          {"provenance", prov},
                          {"warnings", warnings}});
            }
        } else if (c_bound->parsed()) {
            BundleInput in = load_input_file(file);
            VecZ e = required_euler(in, euler_s);
            Bundle4 b{in.manifold, e, in.euler_torsion && euler_s.empty()};
            ClassH2M a{Covector{parse_csv(sigma_s, "sigma")}, parse_csv(curve_s, "curve")};
            NicenessVerdict nice = niceness_for(in.manifold);
            BoundResult r = refined_bound(b, a, nice);
            emit(json{{"value", int_to_json(r.value)},
                      {"status", to_string(r.status)},
                      {"provenance", provenance(r.status)},
                      {"self_intersection", int_to_json(self_intersection(b, a))},
                      {"norm", int_to_json(thurston_norm(in.manifold.dual_ball, a.sigma))},
                      {"xi", xi_test(in.manifold.dual_ball, e)},
                      {"theta", theta_test(in.manifold.dual_ball, e)},
                      {"niceness", to_string(nice.status)},
                      {"ball_source", in.manifold.ball_source}});
        } else if (c_betti->parsed()) {
            BundleInput in = load_input_file(file);
            VecZ e = required_euler(in, euler_s);
            bool t = torsion || in.euler_torsion;
            Bundle4 b{in.manifold, e, t};
            try {
                BettiPair bp = betti_numbers(b);
                emit(json{{"b2", bp.b2}, {"b2_plus", bp.b2_plus}});
            } catch (const precondition_error& ex) {
                if (ex.code() != errc::torsion_euler) throw;
                emit(json{{"status", "product-up-to-cover"},
                          {"provenance", "Section 3.4"},
                          {"note", "torsion euler class; the bundle is finitely covered "
                                   "by a product and the betti formula is not asserted"}});
            }
        } else if (c_cover_check->parsed()) {
            CoverInput c = load_cover_file(file);
            CoverReport rep = validate_cover(c.base, c.datum, c.classes);
            json checks = json::array();
            for (const auto& chk : rep.norm_checks)
                checks.push_back(json{{"sigma", chk.sigma},
                                      {"base_norm", int_to_json(chk.base_norm)},
                                      {"cover_norm", int_to_json(chk.cover_norm)},
                                      {"ok", chk.ok}});
            json out{{"composition_ok", rep.composition_ok},
                     {"deg_M", rep.deg_m},
                     {"norm_checks", checks},
                     {"all_ok", rep.all_ok}};
            if (c.euler) {
                try {
                    out["euler_of_cover"] = euler_of_cover(c.datum, *c.euler);
                } catch (const precondition_error& ex) {
                    if (ex.code() != errc::not_divisible) throw;
                    out["euler_of_cover"] = "NOT_DIVISIBLE";
                    out["all_ok"] = false;
                }
            }
            emit(out);
        } else if (c_sympl->parsed()) {
            BundleInput in = load_input_file(file);
            VecZ e(in.manifold.b1, 0);
            if (!euler_s.empty())
                e = parse_csv(euler_s, "euler");
            else if (in.euler)
                e = *in.euler;
            Bundle4 b{in.manifold, e, false};
            ClassH2M a{Covector{parse_csv(sigma_s, "sigma")}, parse_csv(curve_s, "curve")};
            SymplecticVerdict v = symplectic_status(b, a);
            emit(json{{"symplectic_candidate", v.symplectic_candidate}, {"reasons", v.reasons}});
        } else if (c_fuzz_obs->parsed() || c_fuzz_claim->parsed() || c_fuzz_norms->parsed()) {
            FuzzReport rep;
            if (c_fuzz_obs->parsed()) rep = run_observation_fuzz(trials, seed, !serial);
            else if (c_fuzz_claim->parsed()) rep = run_claim_fuzz(trials, seed, !serial);
            else rep = run_norms_fuzz(trials, seed, !serial);
            json out{{"trials", rep.trials}, {"failures", rep.failures}, {"seed", seed}};
            if (rep.failures > 0) {
                out["first_failure"] = rep.first_failure;
                emit(out);
                return 3;
            }
            emit(out);
        }
        return 0;
    } catch (const precondition_error& e) {
        emit(json{{"error", to_string(e.code())}, {"message", e.what()}});
        return 2;
    } catch (const input_error& e) {
        emit(json{{"error", "BAD_SCHEMA"}, {"message", e.what()}});
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

// padictk: p-adic L-function and leading-term toolkit CLI
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "padictk/acceptance.hpp"
#include "padictk/json_io.hpp"
#include "padictk/quad_fields.hpp"
#include "padictk/regions_signs.hpp"

namespace {

using namespace padictk;

constexpr const char* kVersion = "0.1.0";

struct GlobalOpts {
    long p = 5;
    long N = 8;
    long M = 32;
    long budget = 200000000;
    std::uint64_t seed = 1;
    std::string output;
};

Json meta_block(const GlobalOpts& g) {
    Json meta;
    meta["version"] = kVersion;
    meta["config"] = {{"p", g.p},
                      {"precision", g.N},
                      {"truncation", g.M},
                      {"budget", g.budget},
                      {"seed", g.seed}};
    if (auto cv = frozen_convention(g.p)) {
        meta["calibration"] = {{"u_exp", cv->u_exp},
                               {"t_exp", cv->t_exp},
                               {"stickelberger_normalization", "a/Q - 1/2"},
                               {"generator_convention", "u = 1 + p"}};
    }
    return meta;
}

void emit(const GlobalOpts& g, Json doc) {
    doc["meta"] = meta_block(g);
    std::string text = doc.dump(2);
    if (!g.output.empty()) {
        std::ofstream out(g.output);
        out << text << "\n";
    } else {
        std::cout << text << "\n";
    }
}

Json kl_series_json(const KLSeries& kl) {
    Json j;
    j["series"] = series_to_json(kl.has_pole() ? kl.numerator() : kl.series());
    if (kl.has_pole()) j["denominator"] = series_to_json(*kl.denominator());
    j["level"] = kl.level();
    j["smoothing_c"] = kl.smoothing_c();
    j["convention"] = {{"u_exp", kl.convention().u_exp},
                       {"t_exp", kl.convention().t_exp}};
    if (!kl.has_pole()) {
        auto ml = kl.mu_lambda();
        j["mu"] = ml.mu;
        j["lambda"] = ml.lambda;
    }
    return j;
}

StickelbergerOptions series_opts(const GlobalOpts& g, long level) {
    StickelbergerOptions opts;
    opts.N = g.N;
    opts.M = g.M;
    opts.budget = g.budget;
    opts.max_level = level;
    return opts;
}

Json report_json(const IdentityReport& rep) {
    Json j;
    j["samples"] = rep.samples;
    j["agreements"] = rep.agreements;
    j["failures"] = rep.failures;
    j["exact"] = rep.exact();
    j["convention"] = rep.convention;
    if (!rep.lhs_only.empty()) j["lhs_only_factors"] = rep.lhs_only;
    if (!rep.rhs_only.empty()) j["rhs_only_factors"] = rep.rhs_only;
    return j;
}

Json product_json(const EulerProduct& e) {
    Json j;
    j["value"] = rat_to_string(e.value);
    Json fs = Json::array();
    for (const auto& f : e.factors)
        fs.push_back({{"label", f.label},
                      {"value", rat_to_string(f.value)},
                      {"exponent", f.exponent}});
    j["factors"] = fs;
    return j;
}

Json read_json_arg(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return Json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw MathError("BadInput", "cannot open " + arg);
    Json j;
    in >> j;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic L-function interpolation data and leading-term algebra"};
    app.set_config("--config")->envname("PADICTK_CONFIG");
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOpts g;
    app.add_option("--p", g.p, "odd prime")
        ->capture_default_str()
        ->check([](const std::string& v) -> std::string {
            long p = std::stol(v);
            if (p < 3 || p % 2 == 0 || !padictk::is_prime(padictk::Int(p)))
                return "p must be an odd prime";
            return {};
        });
    app.add_option("--precision", g.N, "coefficient precision N (>= 2)")
        ->capture_default_str()
        ->check(CLI::Range(2L, 64L));
    app.add_option("--truncation", g.M, "series truncation order M")
        ->capture_default_str();
    app.add_option("--budget", g.budget, "enumeration/expansion budget")
        ->capture_default_str();
    app.add_option("--seed", g.seed, "RNG seed for sampled suites")
        ->capture_default_str();
    app.add_option("--output", g.output, "write the JSON document here");
    app.require_subcommand(1);

    // ---- kl ----
    auto* kl_cmd = app.add_subcommand("kl", "Kubota-Leopoldt value at s");
    std::string kl_chi = "trivial";
    long kl_s = 0;
    kl_cmd->add_option("--chi", kl_chi, "character spec");
    kl_cmd->add_option("--s", kl_s, "integer evaluation point")->required();
    kl_cmd->callback([&] {
        auto chi = parse_character(kl_chi, g.p);
        auto value = kl_value(chi, PadicNumber::from_integer(kl_s, g.p, g.N + 2),
                              g.p, g.N);
        Json doc;
        doc["chi"] = character_to_json(chi);
        doc["s"] = kl_s;
        doc["value"] = padic_to_json(value);
        doc["precision"] = g.N;
        if (kl_s <= 0) {
            auto sp = kl_special(chi, 1 - kl_s, g.p, g.N);
            if (sp.exact) doc["exact"] = rat_to_string(*sp.exact);
        }
        emit(g, doc);
    });

    // ---- stickelberger ----
    auto* st_cmd =
        app.add_subcommand("stickelberger", "Iwasawa series from the tower");
    std::string st_chi = "omega^2";
    long st_level = 0;
    st_cmd->add_option("--chi", st_chi, "even character spec");
    st_cmd->add_option("--level", st_level, "force the tower level");
    st_cmd->callback([&] {
        auto chi = parse_character(st_chi, g.p);
        auto kl = stickelberger_kl(chi, g.p, series_opts(g, st_level));
        Json doc = kl_series_json(kl);
        doc["chi"] = character_to_json(chi);
        emit(g, doc);
    });

    // ---- gross-rhs ----
    auto* gr_cmd = app.add_subcommand(
        "gross-rhs", "Kubota-Leopoldt product on the Gross right-hand side");
    std::string gr_chi = "omega^2";
    long gr_D = -4;
    gr_cmd->add_option("--chi", gr_chi, "even character spec");
    gr_cmd->add_option("--D", gr_D, "fundamental discriminant < 0")->required();
    gr_cmd->callback([&] {
        if (g.M < g.N)
            throw MathError("BadInput",
                            "truncation law: gross-rhs runs need M >= N");
        auto chi = parse_character(gr_chi, g.p);
        GrossFactorization gross(chi, gr_D, g.p, series_opts(g, 0));
        Json doc;
        doc["chi"] = character_to_json(chi);
        doc["D"] = gr_D;
        doc["product"] = kl_series_json(gross.product());
        doc["factor_one"] = kl_series_json(gross.factor_one());
        doc["factor_two_raw"] = kl_series_json(gross.factor_two_raw());
        emit(g, doc);
    });

    // ---- coleman ----
    auto* co_cmd =
        app.add_subcommand("coleman", "Coates-Wiles values D^k log g_c (0)");
    long co_c = 2, co_k = 1;
    co_cmd->add_option("--c", co_c, "unit index c >= 2")->required();
    co_cmd->add_option("--k", co_k, "derivative order k >= 1")->required();
    co_cmd->callback([&] {
        auto v = coates_wiles(co_c, co_k, g.p, g.N);
        Json doc;
        doc["c"] = co_c;
        doc["k"] = co_k;
        doc["exact"] = rat_to_string(v.exact);
        doc["padic"] = padic_to_json(v.padic);
        emit(g, doc);
    });

    // ---- euler ----
    auto* eu_cmd = app.add_subcommand("euler", "modified Euler factors");
    std::string eu_op = "adjoint";
    std::string eu_params = "{}";
    long eu_samples = 1000;
    eu_cmd->add_option("--op", eu_op,
                       "adjoint|deg4|triple|bdp|ad6|verify-8eq4x4|verify-ad-bdp");
    eu_cmd->add_option("--params", eu_params, "JSON parameters or a file path");
    eu_cmd->add_option("--samples", eu_samples, "sample count for verifiers");
    eu_cmd->callback([&] {
        Json doc;
        doc["op"] = eu_op;
        if (eu_op == "verify-8eq4x4") {
            doc["report"] = report_json(verify_identity_8_eq_4x4(eu_samples, g.seed));
        } else if (eu_op == "verify-ad-bdp") {
            doc["report"] =
                report_json(verify_identity_ad_eq_bdp_times_quad(eu_samples, g.seed));
        } else {
            Json P = read_json_arg(eu_params);
            if (eu_op == "adjoint") {
                doc["result"] = product_json(euler_adjoint(hecke_from_json(P.at("f"))));
            } else if (eu_op == "deg4") {
                Dominance dom = P.value("dominance", "f") == std::string("g")
                                    ? Dominance::G
                                    : Dominance::F;
                doc["result"] = product_json(euler_deg4(hecke_from_json(P.at("f")),
                                                        hecke_from_json(P.at("g")),
                                                        P.at("j").get<long>(), dom));
            } else if (eu_op == "triple") {
                TripleRegion reg = P.value("region", "f") == std::string("bal")
                                       ? TripleRegion::Balanced
                                       : TripleRegion::FDominant;
                doc["result"] = product_json(euler_triple(
                    hecke_from_json(P.at("f")), hecke_from_json(P.at("g")),
                    hecke_from_json(P.at("h")), P.at("c").get<long>(), reg));
            } else if (eu_op == "bdp") {
                BDPVariant variant = P.value("variant", "phi") == std::string("phi'")
                                         ? BDPVariant::PhiPrime
                                         : BDPVariant::Phi;
                CMParams cm;
                cm.g = cm_from_json(P.at("cm_g"));
                cm.h = cm_from_json(P.at("cm_h"));
                doc["result"] = product_json(euler_bdp(hecke_from_json(P.at("f")),
                                                       cm, P.at("c").get<long>(),
                                                       variant));
            } else if (eu_op == "ad6") {
                AdjointBranch br = P.value("branch", "ad") == std::string("f")
                                       ? AdjointBranch::F
                                       : AdjointBranch::Ad;
                doc["result"] = product_json(euler_adjoint6(
                    hecke_from_json(P.at("f")), hecke_from_json(P.at("g")), br));
            } else {
                throw MathError("BadInput", "unknown euler op: " + eu_op);
            }
        }
        emit(g, doc);
    });

    // ---- signs ----
    auto* sg_cmd = app.add_subcommand("signs", "weight regions and root numbers");
    long sg_k = 0, sg_l = 0, sg_m = 0;
    std::string sg_region;
    int sg_fin = +1, sg_epsf = +1;
    bool sg_have_fin = false, sg_have_epsf = false;
    sg_cmd->add_option("--k", sg_k, "weight w(kappa)");
    sg_cmd->add_option("--l", sg_l, "weight w(lambda)");
    sg_cmd->add_option("--m", sg_m, "weight w(mu)");
    sg_cmd->add_option("--region", sg_region, "bal|f|g|h (skip classification)");
    sg_cmd->add_option("--finite-prod", sg_fin, "product of finite local signs")
        ->check(CLI::IsMember({-1, 1}));
    sg_cmd
        ->add_option("--eps-f", sg_epsf, "constant sign eps(f) for the table")
        ->check(CLI::IsMember({-1, 1}));
    sg_cmd->parse_complete_callback([&] {
        sg_have_fin = sg_cmd->count("--finite-prod") > 0;
        sg_have_epsf = sg_cmd->count("--eps-f") > 0;
    });
    sg_cmd->callback([&] {
        Json doc;
        if (sg_have_epsf) {
            Region2 r2 = sg_region == "ad"
                             ? Region2::Ad
                             : (sg_region == "f" ? Region2::F
                                                 : classify2(sg_k, sg_l));
            auto t = selfdual_table(r2, sg_epsf);
            doc["region"] = region2_name(r2);
            doc["eps_f"] = sg_epsf;
            doc["eps_triple"] = t.eps_triple;
            doc["eps_adjoint"] = t.eps_adjoint;
        } else {
            Region3 r3;
            if (!sg_region.empty()) {
                r3 = sg_region == "bal"  ? Region3::Balanced
                     : sg_region == "f"  ? Region3::F
                     : sg_region == "g"  ? Region3::G
                                         : Region3::H;
            } else {
                auto c = classify3({sg_k, sg_l, sg_m});
                r3 = c.region;
                doc["central"] = c.central;
                if (c.tie) doc["tie"] = true;
            }
            doc["region"] = region3_name(r3);
            if (sg_have_fin) {
                doc["finite_prod"] = sg_fin;
                doc["epsilon"] = global_sign(r3, sg_fin);
                Json van = Json::array();
                for (auto v : forced_vanishing(sg_fin)) van.push_back(region3_name(v));
                doc["vanishing"] = van;
            }
        }
        emit(g, doc);
    });

    // ---- quadfield ----
    auto* qf_cmd =
        app.add_subcommand("quadfield", "imaginary quadratic field invariants");
    long qf_D = -4;
    qf_cmd->add_option("--D", qf_D, "fundamental discriminant < 0")->required();
    qf_cmd->callback([&] {
        QuadField K(qf_D);
        auto rep = class_number_formula_check(qf_D);
        Json doc;
        doc["D"] = qf_D;
        doc["h"] = K.class_number();
        doc["omega"] = K.torsion_order();
        doc["B1"] = rat_to_string(rep.B1);
        doc["class_number_formula_holds"] = rep.holds;
        doc["split_at_p"] = K.splits(g.p);
        if (K.splits(g.p)) {
            auto pl = pi_log(qf_D, g.p, g.N);
            doc["u"] = Json::array({pl.a, pl.b});
            doc["u_denominator"] = pl.denom;
            doc["u_conjugated"] = pl.conjugated;
            doc["u_embedded"] = padic_to_json(pl.u_embedded);
            doc["log_u"] = padic_to_json(pl.log_u);
            doc["seed_convention"] = "least admissible residue";
        }
        emit(g, doc);
    });

    // ---- leading-term ----
    auto* lt_cmd =
        app.add_subcommand("leading-term", "delta elements and Fitting ideals");
    std::string lt_input;
    lt_cmd->add_option("--input", lt_input, "JSON input or a file path")
        ->required();
    lt_cmd->callback([&] {
        FreeMap phi = freemap_from_json(read_json_arg(lt_input));
        Json doc;
        auto d = delta_element(phi);
        Json dj = Json::array();
        for (const auto& x : d) dj.push_back(ring_elem_to_json(x));
        doc["delta"] = dj;
        Json fj = Json::array();
        for (const auto& x : fitting0(phi).generators())
            fj.push_back(ring_elem_to_json(x));
        doc["fitt0"] = fj;
        auto rep = verify_fitt_stark(phi);
        doc["fitt_stark"] = rep.equal ? "equal" : "unequal";
        if (!rep.equal) doc["fitt_stark_detail"] = rep.detail;
        doc["delta_in_bidual"] = delta_in_bidual(phi);
        emit(g, doc);
    });

    // ---- verify ----
    auto* vf_cmd = app.add_subcommand("verify", "run the acceptance matrix");
    std::string vf_suite = "all";
    vf_cmd->add_option("--suite", vf_suite, "suite name or 'all'");
    vf_cmd->callback([&] {
        Json doc;
        Json cases = Json::array();
        bool all_pass = true;
        auto run_one = [&](int id) {
            auto r = run_criterion(id);
            cases.push_back({{"id", r.id},
                             {"name", r.name},
                             {"pass", r.pass},
                             {"detail", r.detail}});
            all_pass &= r.pass;
        };
        if (vf_suite == "all") {
            for (int id = 1; id <= 10; ++id) run_one(id);
        } else {
            bool found = false;
            for (auto& [name, id] : acceptance_suites())
                if (name == vf_suite) {
                    run_one(id);
                    found = true;
                }
            if (!found)
                throw MathError("BadInput", "unknown suite: " + vf_suite);
        }
        doc["cases"] = cases;
        doc["pass"] = all_pass;
        emit(g, doc);
        if (!all_pass) std::exit(1);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const padictk::MathError& e) {
        Json err;
        err["error"] = {{"code", e.code()}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 0;
}

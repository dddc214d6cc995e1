#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "motivecalc/json_io.hpp"
#include "motivecalc/verify.hpp"

namespace mc = motivecalc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotGeneric = 3;
constexpr int kExitMissingData = 4;

struct RunConfig {
    long g = 2;
    long N = 0;
    long d = 1;
    std::string alpha_csv;
    std::string space = "NL";
    bool fixed_det = false;
    bool collapse_pic = false;
    bool expand = false;
    bool betti_rows = false;
    bool show_exponents = false;
    bool path_log = false;
    std::string output = "plain";
    std::uint64_t seed = 0;
    std::string tilde_betti_path;
    std::string suite;
    long trials = 0;
    long suite_g = 0;
    long suite_N = 0;
};

std::uint64_t env_seed() {
    if (const char* s = std::getenv("MOTIVECALC_SEED")) return std::strtoull(s, nullptr, 10);
    return 0;
}

mc::CurveContext make_context(const RunConfig& cfg) {
    mc::CurveContext ctx(cfg.g, cfg.N, cfg.collapse_pic);
    if (!cfg.tilde_betti_path.empty()) {
        std::ifstream in(cfg.tilde_betti_path);
        if (!in) throw std::invalid_argument("cannot open " + cfg.tilde_betti_path);
        mc::Json j = mc::Json::parse(in);
        ctx.tilde_sym_betti = mc::betti_table_from_json(j);
    }
    return ctx;
}

mc::Weight parse_alpha(const RunConfig& cfg) {
    std::vector<mc::Rational> coords;
    if (!cfg.alpha_csv.empty()) coords = mc::parse_rational_list(cfg.alpha_csv);
    if (static_cast<long>(coords.size()) != cfg.N)
        throw CLI::ValidationError("--alpha must list exactly N weights");
    return mc::Weight(std::move(coords));
}

// Builds the requested motive; parabolic spaces need a generic weight.
mc::MotiveExpr build_motive(const RunConfig& cfg, const mc::CurveContext& ctx) {
    const std::string& s = cfg.space;
    const bool fixed = cfg.fixed_det || s.ends_with("_fixed") || s == "NL";
    if (s == "N" || s == "NL") {
        if (cfg.d % 2 == 0) throw CLI::ValidationError("space " + s + " needs odd d");
        return fixed ? mc::MotiveExpr::atom(mc::MotiveAtom::moduli_nl(cfg.d))
                     : mc::MotiveExpr::atom(mc::MotiveAtom::moduli_n(cfg.d));
    }
    if (s == "higgs" || s == "higgs_fixed") {
        if (cfg.d % 2 == 0) throw CLI::ValidationError("space " + s + " needs odd d");
        return fixed ? mc::motive_higgs_fixed_det(ctx, cfg.d)
                     : mc::motive_higgs(ctx, cfg.d);
    }
    if (s == "par_higgs" || s == "par_higgs_fixed") {
        if (cfg.d % 2 == 0) throw CLI::ValidationError("space " + s + " needs odd d");
        return mc::motive_par_higgs(ctx, cfg.d, fixed);
    }
    if (s == "parabolic" || s == "parabolic_fixed") {
        mc::Weight alpha = parse_alpha(cfg);
        if (cfg.d % 2 == 0) return mc::motive_parabolic_even(ctx, cfg.d, alpha, fixed);
        return mc::closed_formula_parabolic(alpha, ctx, cfg.d, fixed);
    }
    throw CLI::ValidationError("unknown space: " + s);
}

void emit_motive(const RunConfig& cfg, const mc::MotiveExpr& m) {
    if (cfg.output == "json") {
        std::cout << mc::motive_to_json(m).dump(2) << "\n";
    } else if (cfg.output == "csv") {
        std::cout << "atoms,twist,coeff\n";
        for (const auto& t : m.terms()) {
            std::string atoms;
            for (std::size_t i = 0; i < t.atoms.size(); ++i) {
                if (i) atoms += "*";
                atoms += t.atoms[i].to_string();
            }
            if (atoms.empty()) atoms = "Q";
            std::cout << atoms << "," << t.twist << "," << t.coeff << "\n";
        }
    } else {
        std::cout << m.to_string() << "\n";
    }
}

int cmd_walls(const RunConfig& cfg) {
    if (cfg.g < 0 || cfg.N < 0)
        throw CLI::ValidationError("--g and --N must be nonnegative");
    const auto walls = mc::enumerate_walls(cfg.N, mc::parity_of_degree(cfg.d));
    const bool odd = cfg.d % 2 != 0;
    mc::Json arr = mc::Json::array();
    if (cfg.output == "csv") std::cout << "s,I,n_minus,n_plus,is_flop,canonical_l\n";
    for (const auto& w : walls) {
        long n_minus = 0, n_plus = 0, canonical_l = -1;
        bool is_flop = false;
        if (odd) {  // flip data for even d goes through the Hecke reduction
            mc::FlipData fd = mc::flip_type(w, cfg.g, cfg.N, cfg.fixed_det);
            n_minus = fd.n_minus;
            n_plus = fd.n_plus;
            is_flop = fd.is_flop;
            canonical_l = mc::canonical_wall(w, cfg.N).first;
        }
        if (cfg.output == "json") {
            mc::Json rec{{"wall", mc::wall_to_json(w, cfg.N)}};
            if (odd) {
                rec["n_minus"] = n_minus;
                rec["n_plus"] = n_plus;
                rec["is_flop"] = is_flop;
                rec["canonical_l"] = canonical_l;
            }
            arr.push_back(std::move(rec));
        } else if (cfg.output == "csv") {
            std::string members;
            for (int i : w.members(cfg.N)) {
                if (!members.empty()) members += " ";
                members += std::to_string(i);
            }
            std::cout << w.s << "," << members << "," << n_minus << "," << n_plus << ","
                      << (is_flop ? 1 : 0) << "," << canonical_l << "\n";
        } else {
            std::cout << w.to_string(cfg.N);
            if (odd)
                std::cout << "  type (" << n_minus << "," << n_plus << ")"
                          << (is_flop ? " flop" : "") << "  -> W(" << canonical_l << ")";
            std::cout << "\n";
        }
    }
    if (cfg.output == "json") std::cout << arr.dump(2) << "\n";
    if (cfg.output == "plain" && walls.empty()) std::cout << "no walls\n";
    return kExitOk;
}

int cmd_motive(const RunConfig& cfg) {
    mc::CurveContext ctx = make_context(cfg);
    if (cfg.show_exponents) {
        mc::Weight alpha = parse_alpha(cfg);
        if (cfg.d % 2 == 0) alpha = mc::hecke_modify(cfg.d, alpha, 1).second;
        std::cout << mc::exponent_table_to_json(mc::exponents(alpha, cfg.N)).dump()
                  << "\n";
        return kExitOk;
    }
    if (cfg.path_log) {
        mc::Weight alpha = parse_alpha(cfg);
        auto crossings = mc::segment_crossings(mc::near_origin_weight(cfg.N), alpha,
                                               cfg.N, mc::Parity::Odd);
        std::cout
            << mc::crossings_to_json(crossings, cfg.g, cfg.N, cfg.fixed_det).dump(2)
            << "\n";
        return kExitOk;
    }
    mc::MotiveExpr m = build_motive(cfg, ctx);
    if (cfg.expand) m = mc::expand_rational(m, ctx);
    emit_motive(cfg, m);
    return kExitOk;
}

int cmd_poincare(const RunConfig& cfg) {
    mc::CurveContext ctx = make_context(cfg);
    mc::MotiveExpr m = mc::expand_rational(build_motive(cfg, ctx), ctx);
    mc::IntPoly p = mc::poincare(m, ctx);
    if (cfg.output == "json") {
        std::cout << mc::poly_to_json(p).dump() << "\n";
    } else if (cfg.output == "csv" || cfg.betti_rows) {
        std::cout << "k,b_k\n";
        for (int k = 0; k <= p.degree(); ++k)
            std::cout << k << "," << p.coeff(static_cast<std::size_t>(k)).get_str() << "\n";
    } else {
        std::cout << p.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    mc::VerifyOptions opts;
    opts.seed = cfg.seed;
    opts.trials = cfg.trials;
    opts.g = cfg.suite_g;
    opts.N = cfg.suite_N;
    std::vector<mc::SuiteResult> results;
    if (cfg.suite.empty()) {
        results = mc::run_all_suites(opts);
    } else {
        results.push_back(mc::run_suite(cfg.suite, opts));
    }
    bool all_ok = true;
    mc::Json arr = mc::Json::array();
    if (cfg.output == "csv") std::cout << "suite,passed,checks,detail\n";
    for (const auto& r : results) {
        if (cfg.output == "json") {
            arr.push_back(mc::Json{{"suite", r.name},
                                   {"passed", r.passed},
                                   {"checks", r.checks},
                                   {"detail", r.detail}});
        } else if (cfg.output == "csv") {
            std::cout << r.name << "," << (r.passed ? 1 : 0) << "," << r.checks
                      << "," << r.detail << "\n";
        } else {
            std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  ("
                      << r.checks << " checks)";
            if (!r.detail.empty()) std::cout << "  " << r.detail;
            std::cout << "\n";
        }
        all_ok = all_ok && r.passed;
    }
    if (cfg.output == "json") std::cout << arr.dump(2) << "\n";
    return all_ok ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"motivecalc: symbolic Chow-motive calculator for rank-2 moduli "
                 "of (parabolic, Higgs) bundles on a curve"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.seed = env_seed();

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--g", cfg.g, "genus");
        sub->add_option("--N", cfg.N, "number of marked points");
        sub->add_option("--d", cfg.d, "degree");
        sub->add_option("--alpha", cfg.alpha_csv, "weights p/q,p/q,...");
        sub->add_flag("--fixed-det", cfg.fixed_det, "fixed determinant");
        sub->add_flag("--collapse-pic", cfg.collapse_pic, "treat Pic^a as Jac");
        sub->add_option("--output", cfg.output, "json|csv|plain")
            ->check(CLI::IsMember({"json", "csv", "plain"}));
        sub->add_option("--seed", cfg.seed, "perturbation seed");
        sub->add_option("--tilde-betti", cfg.tilde_betti_path,
                        "JSON file with ~Sym Betti rows");
    };

    CLI::App* walls = app.add_subcommand("walls", "list walls with flip types");
    add_common(walls);

    CLI::App* motive = app.add_subcommand("motive", "motive of a moduli space");
    add_common(motive);
    motive->add_option("--space", cfg.space,
                       "N|NL|parabolic|parabolic_fixed|higgs|higgs_fixed|"
                       "par_higgs|par_higgs_fixed");
    motive->add_flag("--expand", cfg.expand, "expand moduli atoms");
    motive->add_flag("--exponents", cfg.show_exponents,
                     "print the d/c/b exponent table for the weight");
    motive->add_flag("--path-log", cfg.path_log,
                     "print the wall crossings from the reference minimal chamber");

    CLI::App* poincare = app.add_subcommand("poincare", "Poincare polynomial");
    add_common(poincare);
    poincare->add_option("--space", cfg.space, "as for motive");
    poincare->add_flag("--betti", cfg.betti_rows, "print b_k rows");

    CLI::App* verify = app.add_subcommand("verify", "run property suites");
    verify->add_option("--g", cfg.suite_g, "override suite genus range");
    verify->add_option("--N", cfg.suite_N, "override suite N range");
    verify->add_option("--suite", cfg.suite, "suite name (default: all)");
    verify->add_option("--trials", cfg.trials, "per-suite trial count");
    verify->add_option("--seed", cfg.seed, "suite randomness seed");
    verify->add_option("--output", cfg.output, "json|csv|plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(walls)) return cmd_walls(cfg);
        if (app.got_subcommand(motive)) return cmd_motive(cfg);
        if (app.got_subcommand(poincare)) return cmd_poincare(cfg);
        if (app.got_subcommand(verify)) return cmd_verify(cfg);
    } catch (const mc::NotGenericError& e) {
        std::cerr << "not generic: " << e.what() << "\n";
        return kExitNotGeneric;
    } catch (const mc::DegeneratePathError& e) {
        std::cerr << "degenerate path: " << e.what() << " (try --seed)\n";
        return kExitNotGeneric;
    } catch (const mc::MissingBettiTableError& e) {
        std::cerr << "missing data: " << e.what() << " (supply --tilde-betti)\n";
        return kExitMissingData;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitUsage;
}

// dkglab: batch runner for the experiment suites.
//
//   dkglab <command> [key=value ...] [--config FILE] [--out DIR] [--label NAME] [--seed N]
//
// Exit codes: 0 pass, 1 scientific check failed, 2 usage or config error,
// 3 numerical abort.

#include "dkg/experiments.hpp"
#include "dkg/report.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdio>
#include <iostream>

namespace fs = std::filesystem;
using namespace dkg;

namespace {

struct Common {
    std::vector<std::string> params;
    std::string config;
    std::string out = "runs";
    std::string label;
    std::uint64_t seed = 1;
    bool seed_given = false;
};

struct Run {
    Params p;
    fs::path dir;
    std::uint64_t seed;
};

using Defaults = std::map<std::string, std::string>;

Run start(const std::string& command, const Defaults& defaults, const Common& c, std::uint64_t default_seed,
          const std::function<std::string(const Params&)>& grid) {
    Run r{Params::load(defaults, c.config, c.params), {}, c.seed_given ? c.seed : default_seed};
    r.dir = make_run_dir(c.out, command, c.label);
    write_manifest(r.dir, command, r.p, r.seed, grid(r.p));
    return r;
}

const std::string kTwoPi = "6.283185307179586";

int verdict(bool pass, const fs::path& dir) {
    std::printf("%s  (output in %s)\n", pass ? "PASS" : "FAIL", dir.string().c_str());
    return pass ? 0 : 1;
}

int cmd_verify_algebra(const Common& c) {
    const Run r = start("verify-algebra", {{"samples", "1000000"}, {"rep", "pauli"}, {"weights", "true"}}, c, 20240601,
                        [](const Params&) { return std::string("none"); });
    const AlgebraReport a = verify_algebra(parse_rep(r.p.str("rep")), r.p.integer("samples"), r.seed);
    write_algebra_csv(r.dir / "algebra.csv", a);
    for (const auto& k : a.checks)
        std::printf("%-16s max violation %.3e  violations %ld\n", k.name.c_str(), k.max_violation, k.violations);
    bool ok = a.ok;
    if (!a.ok) std::printf("first failing identity: %s\n", a.first_failure.c_str());
    if (r.p.flag("weights")) {
        const WeightReport w = verify_weight_relations(r.p.integer("samples"), r.seed + 1);
        write_weights_csv(r.dir / "weights.csv", w);
        std::printf("weights: rho violations %ld, theta+ [%.4f, %.4f], theta- [%.4f, %.4f]\n", w.rho_violations,
                    w.theta_plus_min, w.theta_plus_max, w.theta_minus_min, w.theta_minus_max);
        ok = ok && w.ok;
    }
    return verdict(ok, r.dir);
}

int cmd_sharpness(const Common& c) {
    const Run r = start("sharpness",
                        {{"family", "R1"}, {"s", "0"}, {"r", "3/4"}, {"L", "8,16,32,64"}, {"tol", "0.15"},
                         {"delta0", "1"}, {"serial", "false"}},
                        c, 0, [](const Params& p) { return "family " + p.str("family") + ", L = " + p.str("L"); });
    CounterexampleConfig cfg;
    cfg.delta0 = r.p.num("delta0");
    const ScalingReport rep = fit_scaling(parse_family(r.p.str("family")), r.p.num("s"), r.p.num("r"), r.p.list("L"),
                                          cfg, r.p.num("tol"), r.p.flag("serial") ? Exec::Serial : Exec::Parallel);
    write_scaling_csv(r.dir / "scaling.csv", {rep});
    for (const auto& pt : rep.points)
        std::printf("L=%-6g lhs=%.6e rhs=%.6e ratio=%.6e\n", pt.L, pt.lhs, pt.rhs, pt.ratio);
    std::printf("fitted slope %.4f, predicted %.4f\n", rep.fitted_slope, rep.predicted_slope);
    return verdict(rep.pass, r.dir);
}

void print_scan(const ScanReport& s) {
    std::printf("%s\n", s.label.c_str());
    for (const auto& row : s.rows) std::printf("  %-8g lhs=%.6e rhs=%.6e ratio=%.6e\n", row.param, row.lhs, row.rhs, row.ratio);
    std::printf("  statistic %.4f (limit %g): %s\n", s.statistic, s.limit, s.pass ? "pass" : "fail");
}

int cmd_strichartz(const Common& c) {
    const Run r = start("strichartz",
                        {{"mode", "dilation"}, {"q", "4"}, {"s1", "3/8"}, {"s2", "3/8"}, {"s3", "0"}, {"sign1", "1"},
                         {"sign2", "1"}, {"lambdas", ""}, {"n", "0"}, {"n_t", "0"}, {"T", "1"}, {"lambda", "32"},
                         {"mus", "2,4,8,16,32"}},
                        c, 0, [](const Params& p) { return "mode " + p.str("mode") + ", n = " + p.str("n"); });
    const std::string mode = r.p.str("mode");
    const BilinearCase bc{r.p.num("q"), r.p.num("s1"), r.p.num("s2"), r.p.num("s3"), int(r.p.integer("sign1")),
                          int(r.p.integer("sign2"))};
    ScanReport s;
    if (mode == "dilation") {
        DilationConfig cfg;
        cfg.c = bc;
        cfg.T = r.p.num("T");
        if (!r.p.str("lambdas").empty()) cfg.lambdas = r.p.list("lambdas");
        if (r.p.integer("n") > 0) cfg.n = int(r.p.integer("n"));
        s = dilation_scan(cfg);
    } else if (mode == "concentration") {
        ConcentrationConfig cfg;
        cfg.c = bc;
        cfg.T = r.p.num("T");
        if (!r.p.str("lambdas").empty()) cfg.lambdas = r.p.list("lambdas");
        if (r.p.integer("n") > 0) cfg.n = int(r.p.integer("n"));
        if (r.p.integer("n_t") > 0) cfg.n_t = int(r.p.integer("n_t"));
        s = concentration_scan(cfg);
    } else if (mode == "square") {
        SquareConfig cfg;
        cfg.q = r.p.num("q");
        cfg.lambda = r.p.num("lambda");
        cfg.mus = r.p.list("mus");
        cfg.T = r.p.num("T");
        if (r.p.integer("n") > 0) cfg.n = int(r.p.integer("n"));
        if (r.p.integer("n_t") > 0) cfg.n_t = int(r.p.integer("n_t"));
        s = square_scan(cfg);
    } else {
        throw ContractError("mode must be dilation, concentration or square");
    }
    write_scan_csv(r.dir / "scan.csv", {s});
    print_scan(s);
    return verdict(s.pass, r.dir);
}

int cmd_hh_scan(const Common& c) {
    const Run r = start("hh-scan",
                        {{"sign1", "1"}, {"sign2", "1"}, {"s1", "1/8"}, {"s2", "1/8"}, {"s3", "1/4"}, {"c", "1/4"},
                         {"lambdas", "4,8,16,32,64"}, {"n", "256"}, {"box_scale", "256"}, {"half_angle", "1/16"},
                         {"T", "1"}, {"serial", "false"}},
                        c, 0, [](const Params& p) { return "n = " + p.str("n") + ", box = " + p.str("box_scale") + "/lambda"; });
    HHScanConfig cfg;
    cfg.c = {int(r.p.integer("sign1")), int(r.p.integer("sign2")), r.p.num("s1"), r.p.num("s2"), r.p.num("s3"),
             r.p.num("c")};
    cfg.lambdas = r.p.list("lambdas");
    cfg.n = int(r.p.integer("n"));
    cfg.box_scale = r.p.num("box_scale");
    cfg.half_angle = r.p.num("half_angle");
    cfg.T = r.p.num("T");
    const ScanReport s = hh_scan(cfg, r.p.flag("serial") ? Exec::Serial : Exec::Parallel);
    write_scan_csv(r.dir / "scan.csv", {s});
    print_scan(s);
    return verdict(s.pass, r.dir);
}

DKGState make_state(const Params& p, std::uint64_t seed) {
    const GridSpec2 g(int(p.integer("n")), p.num("box"));
    const std::string data = p.str("data");
    if (data == "smooth") return smooth_state(g, p.num("amplitude"));
    if (data == "rough") return rough_state(g, p.num("s"), p.num("r"), p.num("amplitude"), seed);
    if (data == "snapshot") return read_snapshot(p.str("snapshot_in"));
    throw ContractError("data must be smooth, rough or snapshot");
}

int cmd_solve(const Common& c) {
    const Run r = start("solve",
                        {{"n", "32"}, {"box", kTwoPi}, {"dt", "1/32"}, {"T", "1"}, {"data", "smooth"}, {"amplitude", "0.5"},
                         {"s", "0"}, {"r", "1/2"}, {"dealias", "true"}, {"record_every", "1"}, {"check", "true"},
                         {"charge_tol", "1e-6"}, {"snapshot_in", ""}, {"snapshot", "false"}},
                        c, 11, [](const Params& p) { return "n = " + p.str("n") + ", box = " + p.str("box"); });
    const DKGState s0 = make_state(r.p, r.seed);
    SolverConfig cfg;
    cfg.grid = s0.grid();
    cfg.dt = r.p.num("dt");
    cfg.T = r.p.num("T");
    cfg.dealias = r.p.flag("dealias");
    cfg.record_every = int(r.p.integer("record_every"));
    bool ok;
    Trajectory tr;
    if (r.p.flag("check")) {
        SolverCheck chk = solver_check(s0, cfg);
        std::printf("charge drift %.3e, Richardson ratio %.3f, projection defect %.3e, max |Im phi| %.3e\n",
                    chk.charge_drift, chk.richardson, chk.projection_defect, chk.phi_imag);
        ok = chk.charge_drift <= r.p.num("charge_tol") && chk.pass;
        tr = std::move(chk.trajectory);
    } else {
        tr = solve(s0, cfg, r.p.num("s"), r.p.num("r"));
        const double q0 = tr.rows.front().charge;
        double drift = 0.0;
        for (const auto& row : tr.rows) drift = std::max(drift, std::abs(row.charge - q0) / q0);
        std::printf("charge drift %.3e\n", drift);
        ok = drift <= r.p.num("charge_tol");
    }
    for (const auto& n : tr.notes.items) std::printf("note: %s\n", n.c_str());
    write_trajectory_csv(r.dir / "trajectory.csv", tr);
    if (r.p.flag("snapshot")) write_snapshot((r.dir / "final.dkgs").string(), tr.states.back());
    return verdict(ok, r.dir);
}

int cmd_picard(const Common& c) {
    const Run r = start("picard",
                        {{"n", "32"}, {"box", kTwoPi}, {"s", "0"}, {"r", "1/2"}, {"amplitude", "2"}, {"T", "1/4"},
                         {"intervals", "64"}, {"depth", "6"}, {"dealias", "true"}},
                        c, 11, [](const Params& p) { return "n = " + p.str("n") + ", box = " + p.str("box"); });
    const GridSpec2 g(int(r.p.integer("n")), r.p.num("box"));
    PicardConfig cfg;
    cfg.s = r.p.num("s");
    cfg.r = r.p.num("r");
    cfg.T = r.p.num("T");
    cfg.intervals = int(r.p.integer("intervals"));
    cfg.depth = int(r.p.integer("depth"));
    cfg.dealias = r.p.flag("dealias");
    const PicardCheck chk = picard_check(rough_state(g, cfg.s, cfg.r, r.p.num("amplitude"), r.seed), cfg);
    write_picard_csv(r.dir / "picard.csv", {chk});
    const RegionReport reg = region_check(cfg.s, cfg.r);
    std::printf("(s, r) = (%g, %g) is %s the well-posedness region\n", cfg.s, cfg.r,
                reg.status == RegionStatus::Inside ? "inside" : (reg.status == RegionStatus::Boundary ? "on the boundary of" : "outside"));
    for (size_t j = 0; j < chk.result.diffs.size(); ++j)
        std::printf("d_%zu = %.6e%s\n", j + 1, chk.result.diffs[j],
                    j + 1 < chk.result.diffs.size() ? ("  ratio " + fmt(chk.result.ratios[j])).c_str() : "");
    if (chk.result.diverged_at) std::printf("diverged at iterate %d\n", *chk.result.diverged_at);
    return verdict(chk.pass, r.dir);
}

int cmd_first_iterate(const Common& c) {
    const Run r = start("first-iterate",
                        {{"ns", "32,64,128"}, {"sigmas", "0.5,0.7,0.9"}, {"data_s", "0"}, {"box", kTwoPi}, {"t", "1"},
                         {"samples", "0"}, {"stable_tol", "0.10"}, {"growth_min", "0.25"}},
                        c, 7, [](const Params& p) { return "levels " + p.str("ns") + ", box = " + p.str("box"); });
    IterateRunConfig cfg;
    cfg.ns.clear();
    for (double n : r.p.list("ns")) cfg.ns.push_back(int(n));
    cfg.sigmas = r.p.list("sigmas");
    cfg.data_s = r.p.num("data_s");
    cfg.seed = r.seed;
    cfg.box = r.p.num("box");
    cfg.t = r.p.num("t");
    cfg.solver.samples = int(r.p.integer("samples"));
    cfg.stable_tol = r.p.num("stable_tol");
    cfg.growth_min = r.p.num("growth_min");
    const IterateReport z = iterate_refinement(cfg);
    write_iterate_csv(r.dir / "first_iterate.csv", z);
    std::printf("%-6s", "n");
    for (double s : z.sigmas) std::printf("  H^%-10g", s);
    std::printf("\n");
    for (size_t l = 0; l < z.ns.size(); ++l) {
        std::printf("%-6d", z.ns[l]);
        for (double v : z.norms[l]) std::printf("  %-12.6e", v);
        std::printf("\n");
    }
    std::printf("%-6s", "rel");
    for (double v : z.rel_change) std::printf("  %-12.4f", v);
    std::printf("\n");
    return verdict(z.pass, r.dir);
}

int cmd_region(const Common& c) {
    const Run r = start("region", {{"s", "0"}, {"r", "1/2"}}, c, 0, [](const Params&) { return std::string("none"); });
    const RegionReport rep = region_check(r.p.num("s"), r.p.num("r"));
    CsvWriter w(r.dir / "region.csv", {"s", "r", "status", "violated"});
    std::string v;
    for (const auto& s : rep.violated) v += (v.empty() ? "" : ";") + s;
    w.row({fmt(r.p.num("s")), fmt(r.p.num("r")), region_name(rep.status), v});
    std::printf("%s%s%s\n", region_name(rep.status).c_str(), v.empty() ? "" : ": ", v.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* t = std::getenv("DKGLAB_THREADS")) {
        const int n = std::atoi(t);
        if (n < 1) {
            std::fprintf(stderr, "DKGLAB_THREADS must be a positive integer\n");
            return 2;
        }
        omp_set_num_threads(n);
    }

    CLI::App app{"Numerical laboratory for the massless Dirac-Klein-Gordon system"};
    app.require_subcommand(1);
    Common common;
    std::map<std::string, std::function<int(const Common&)>> handlers{
        {"verify-algebra", cmd_verify_algebra}, {"sharpness", cmd_sharpness}, {"strichartz", cmd_strichartz},
        {"hh-scan", cmd_hh_scan},               {"solve", cmd_solve},         {"picard", cmd_picard},
        {"first-iterate", cmd_first_iterate},                   {"region", cmd_region}};
    const std::map<std::string, std::string> help{
        {"verify-algebra", "Dirac algebra identities and weight inequalities on random samples"},
        {"sharpness", "Counterexample family scaling fit"},
        {"strichartz", "Bilinear and square Strichartz ratio scans"},
        {"hh-scan", "High-high to low ratio scan over dyadic lambda"},
        {"solve", "Integrate the system and record charge and norms"},
        {"picard", "Picard iterate differences on [0, T]"},
        {"first-iterate", "Refinement study of the first wave iterate"},
        {"region", "Classify (s, r) against the well-posedness region"}};
    std::string chosen;
    for (const auto& [name, text] : help) {
        CLI::App* sub = app.add_subcommand(name, text);
        sub->add_option("params", common.params, "key=value parameter overrides");
        sub->add_option("--config", common.config, "key = value config file");
        sub->add_option("--out", common.out, "output root directory");
        sub->add_option("--label", common.label, "run directory name (default: UTC timestamp)");
        sub->add_option("--seed", common.seed, "random seed")->each([&](const std::string&) { common.seed_given = true; });
        sub->callback([&chosen, name = name] { chosen = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return handlers.at(chosen)(common);
    } catch (const ContractError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "numerical abort: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

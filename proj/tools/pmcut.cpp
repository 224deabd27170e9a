#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pmcut/generate.hpp"
#include "pmcut/json_io.hpp"

using namespace pmcut;

namespace {

GenSpec::Kind parse_kind(const std::string& s) {
    if (s == "grid") return GenSpec::Kind::grid;
    if (s == "triangulation") return GenSpec::Kind::triangulation;
    if (s == "layered-dag") return GenSpec::Kind::layered_dag;
    throw InvalidSpec("unknown generator kind " + s);
}

SeparatorMode parse_mode(const std::string& s) {
    if (s == "half") return SeparatorMode::exact_half;
    if (s == "cycle") return SeparatorMode::fundamental_cycle;
    throw InvalidSpec("unknown separator mode " + s);
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path == "-")
        std::cout << text << "\n";
    else
        write_text_file(out_path, text + "\n");
}

// corpus entry used by bench and audit: deterministic function of (seed, i)
GenSpec corpus_spec(std::uint64_t seed, int i, int n_min, int n_max, int k_min, int k_max) {
    detail::Rng rng(seed * 1000003ULL + static_cast<std::uint64_t>(i));
    GenSpec spec;
    int kind = rng.uniform_int(0, 2);
    spec.kind = kind == 0   ? GenSpec::Kind::grid
                : kind == 1 ? GenSpec::Kind::triangulation
                            : GenSpec::Kind::layered_dag;
    spec.n = rng.uniform_int(n_min, n_max);
    spec.k = rng.uniform_int(k_min, k_max);
    spec.cost_max = 100;
    spec.seed = rng.next();
    return spec;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"node-weighted multicut in planar digraphs"};
    app.require_subcommand(1);

    // shared options
    double delta = 1.0 / 12.0;
    std::string mode_name = "cycle";
    int threads = 1;
    bool audit_flag = false;

    auto add_pipeline_flags = [&](CLI::App* cmd) {
        cmd->add_option("--delta", delta, "layer diameter parameter (6*delta < 1)")
            ->envname("PMCUT_DELTA");
        cmd->add_option("--separator-mode", mode_name, "half | cycle")
            ->check(CLI::IsMember({"half", "cycle"}))
            ->envname("PMCUT_SEPARATOR_MODE");
        cmd->add_flag("--audit", audit_flag, "run per-lemma audits during rounding")
            ->envname("PMCUT_AUDIT");
        cmd->add_option("--threads", threads, "worker threads for independent components")
            ->envname("PMCUT_THREADS");
    };

    // --- gen ---------------------------------------------------------------
    auto* gen_cmd = app.add_subcommand("gen", "generate a seeded planar instance");
    std::string gen_kind = "grid";
    int gen_n = 25, gen_k = 2, gen_cost_max = 100;
    std::uint64_t gen_seed = 0;
    std::string gen_out = "-";
    gen_cmd->add_option("--kind", gen_kind, "grid | triangulation | layered-dag")
        ->check(CLI::IsMember({"grid", "triangulation", "layered-dag"}))
        ->envname("PMCUT_KIND");
    gen_cmd->add_option("--n", gen_n, "vertex count target");
    gen_cmd->add_option("--k", gen_k, "terminal pair count");
    gen_cmd->add_option("--cost-max", gen_cost_max, "uniform integer costs in [1, C]");
    gen_cmd->add_option("--seed", gen_seed, "generator seed")->envname("PMCUT_SEED");
    gen_cmd->add_option("--out", gen_out, "output file, - for stdout");

    // --- lp ------------------------------------------------------------------
    auto* lp_cmd = app.add_subcommand("lp", "solve the path-covering LP relaxation");
    std::string lp_in, lp_out = "-";
    lp_cmd->add_option("instance", lp_in, "instance file")->required();
    lp_cmd->add_option("--out", lp_out, "output file, - for stdout");

    // --- solve ---------------------------------------------------------------
    auto* solve_cmd = app.add_subcommand("solve", "LP plus rounding, end to end");
    std::string solve_in, solve_out = "-";
    solve_cmd->add_option("instance", solve_in, "instance file")->required();
    solve_cmd->add_option("--out", solve_out, "output file, - for stdout");
    add_pipeline_flags(solve_cmd);

    // --- layers ----------------------------------------------------------------
    auto* layers_cmd = app.add_subcommand("layers", "emit the layering for debugging");
    std::string layers_in, layers_out = "-";
    layers_cmd->add_option("instance", layers_in, "instance file")->required();
    layers_cmd->add_option("--out", layers_out, "output file, - for stdout");
    layers_cmd->add_option("--delta", delta, "layer diameter parameter")
        ->envname("PMCUT_DELTA");

    // --- verify -----------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "check a cut file against an instance");
    std::string verify_in, verify_cut;
    verify_cmd->add_option("instance", verify_in, "instance file")->required();
    verify_cmd->add_option("cut", verify_cut, "cut file")->required();

    // --- audit ---------------------------------------------------------------
    auto* audit_cmd = app.add_subcommand("audit", "per-lemma audits over a seeded corpus");
    int audit_count = 20, audit_nmin = 10, audit_nmax = 40, audit_kmin = 1, audit_kmax = 4;
    std::uint64_t audit_seed = 1;
    std::string audit_which = "all";
    audit_cmd->add_option("--count", audit_count, "instances to audit");
    audit_cmd->add_option("--n-min", audit_nmin);
    audit_cmd->add_option("--n-max", audit_nmax);
    audit_cmd->add_option("--k-min", audit_kmin);
    audit_cmd->add_option("--k-max", audit_kmax);
    audit_cmd->add_option("--seed", audit_seed)->envname("PMCUT_SEED");
    audit_cmd->add_option("--delta", delta)->envname("PMCUT_DELTA");
    audit_cmd->add_option("--which", audit_which,
                          "all | region-growing | layering | layer-paths | "
                          "path-cutting-balls | path-cutting-3delta | separator-3delta");
    audit_cmd->add_option("--separator-mode", mode_name)
        ->check(CLI::IsMember({"half", "cycle"}))
        ->envname("PMCUT_SEPARATOR_MODE");

    // --- bench -----------------------------------------------------------------
    auto* bench_cmd = app.add_subcommand("bench", "solve a corpus and tabulate ratios");
    int bench_count = 10, bench_nmin = 16, bench_nmax = 100, bench_kmin = 1, bench_kmax = 6;
    std::uint64_t bench_seed = 1;
    bool bench_exact = false;
    bench_cmd->add_option("--count", bench_count, "instances to run");
    bench_cmd->add_option("--n-min", bench_nmin);
    bench_cmd->add_option("--n-max", bench_nmax);
    bench_cmd->add_option("--k-min", bench_kmin);
    bench_cmd->add_option("--k-max", bench_kmax);
    bench_cmd->add_option("--seed", bench_seed)->envname("PMCUT_SEED");
    bench_cmd->add_flag("--exact", bench_exact, "add the exhaustive OPT column")
        ->envname("PMCUT_EXACT");
    bool bench_times = false;
    bench_cmd->add_flag("--times", bench_times,
                        "append a wall-clock column (breaks byte reproducibility)");
    add_pipeline_flags(bench_cmd);

    // --- reduce-edges ------------------------------------------------------------
    auto* reduce_cmd =
        app.add_subcommand("reduce-edges", "edge-weighted to node-weighted reduction");
    std::string reduce_in, reduce_out = "-";
    reduce_cmd->add_option("instance", reduce_in, "edge-weighted instance file")->required();
    reduce_cmd->add_option("--out", reduce_out, "output file, - for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_cmd->parsed()) {
            GenSpec spec;
            spec.kind = parse_kind(gen_kind);
            spec.n = gen_n;
            spec.k = gen_k;
            spec.cost_max = gen_cost_max;
            spec.seed = gen_seed;
            emit(gen_out, instance_to_json(generate(spec)).dump(2));
            return 0;
        }
        if (lp_cmd->parsed()) {
            Instance g = load_instance(lp_in);
            emit(lp_out, lp_result_to_json(solve_lp(g)).dump(2));
            return 0;
        }
        if (solve_cmd->parsed()) {
            Instance g = load_instance(solve_in);
            RoundingOptions opt;
            opt.delta = delta;
            opt.mode = parse_mode(mode_name);
            opt.audit = audit_flag;
            opt.threads = threads;
            RoundingReport report = solve(g, opt);
            emit(solve_out, report_to_json(report).dump(2));
            for (const auto& a : report.audits)
                if (a.violations > 0) return 1;
            return 0;
        }
        if (layers_cmd->parsed()) {
            Instance g = load_instance(layers_in);
            LpResult lp = solve_lp(g);
            GrowthParams params = GrowthParams::for_instance(g.alive_count(), delta);
            std::vector<VertexId> heavy;
            for (VertexId v : g.alive_vertices())
                if (lp.assignment.x[v] >= params.step() - kTol) heavy.push_back(v);
            Instance light = heavy.empty() ? g : g.delete_vertices(heavy);
            json out;
            out["heavy"] = heavy;
            json layers = json::array(), cut = json::array(), parities = json::array();
            for (const auto& comp : light.weak_components()) {
                if (comp.size() <= 1) continue;
                Layering lay = build_layers(light.induced(comp), lp.assignment.x, params);
                for (size_t i = 0; i < lay.layers.size(); ++i) {
                    layers.push_back(lay.layers[i]);
                    parities.push_back(i % 2 == 0 ? "out" : "in");
                }
                for (VertexId v : lay.cut) cut.push_back(v);
            }
            out["layers"] = layers;
            out["cut"] = cut;
            out["parities"] = parities;
            emit(layers_out, out.dump(2));
            return 0;
        }
        if (verify_cmd->parsed()) {
            Instance g = load_instance(verify_in);
            CutSet cut = cut_from_json(g, json::parse(read_text_file(verify_cut)));
            auto res = check_feasible(g, cut.members);
            if (res.feasible) {
                std::cout << "feasible cost=" << cut.cost << "\n";
                return 0;
            }
            std::cout << "infeasible pair=" << res.violated_pair << " witness=[";
            for (size_t i = 0; i < res.witness.size(); ++i)
                std::cout << (i ? "," : "") << res.witness[i];
            std::cout << "]\n";
            return 1;
        }
        if (audit_cmd->parsed()) {
            RoundingOptions opt;
            opt.delta = delta;
            opt.mode = parse_mode(mode_name);
            opt.audit = true;
            std::vector<AuditResult> totals;
            auto merge = [&](const AuditResult& a) {
                if (audit_which != "all" && audit_which != a.lemma) return;
                for (auto& t : totals)
                    if (t.lemma == a.lemma) { t.absorb(a); return; }
                totals.push_back(a);
            };
            for (int i = 0; i < audit_count; ++i) {
                GenSpec spec = corpus_spec(audit_seed, i, audit_nmin, audit_nmax,
                                           audit_kmin, audit_kmax);
                Instance g = generate(spec);
                RoundingReport rep = solve(g, opt);
                for (const auto& a : rep.audits) merge(a);

                // standalone region-growing and path-cutting audits on seeded
                // assignments that meet the short-vertex precondition
                GrowthParams params = GrowthParams::for_instance(g.alive_count(), delta);
                detail::Rng rng(spec.seed ^ 0x9e3779b97f4a7c15ULL);
                std::vector<double> x(g.n());
                for (auto& v : x) v = rng.uniform01() * params.step();
                for (VertexId v = 0; v < g.n(); ++v)
                    if (g.is_terminal(v)) x[v] = 0.0;
                for (int call = 0; call < 3; ++call) {
                    VertexId center = rng.uniform_int(0, g.n() - 1);
                    Direction dir = rng.coin() ? Direction::out : Direction::in;
                    Region r = region_grow(g, x, center, params, dir);
                    merge(audit_region_call(g, x, r, params));
                }
                if (g.alive_count() <= 40) {
                    std::vector<VertexId> spine;
                    for (VertexId root : g.alive_vertices()) {
                        auto tree = dijkstra(g, x, root, Direction::out);
                        for (VertexId v : g.alive_vertices()) {
                            if (tree.dist[v] > params.delta) continue;
                            auto path = tree_path(tree, v);
                            if (path.size() > spine.size()) spine = std::move(path);
                        }
                    }
                    if (spine.size() >= 2) {
                        auto res = path_cutting(g, x, spine, params);
                        merge(audit_path_cut_structure(g, spine, res));
                        merge(audit_path_cut_distance(g, x, spine, res, params));
                    }
                }
            }
            int bad = 0;
            for (const auto& a : totals) {
                std::cout << a.lemma << "\tchecks=" << a.instances
                          << "\tviolations=" << a.violations
                          << "\tworst_slack=" << a.worst_slack << "\n";
                bad += a.violations;
            }
            return bad == 0 ? 0 : 1;
        }
        if (bench_cmd->parsed()) {
            RoundingOptions opt;
            opt.delta = delta;
            opt.mode = parse_mode(mode_name);
            opt.threads = threads;
            std::cout << "id\tn\tk\tlp\tcost\tratio\tL2" << (bench_exact ? "\topt" : "")
                      << (bench_times ? "\tms" : "") << "\n";
            double max_ratio = 0.0, sum_ratio = 0.0;
            int rows = 0;
            for (int i = 0; i < bench_count; ++i) {
                GenSpec spec = corpus_spec(bench_seed, i, bench_nmin, bench_nmax,
                                           bench_kmin, bench_kmax);
                Instance g = generate(spec);
                auto t0 = std::chrono::steady_clock::now();
                RoundingReport rep = solve(g, opt);
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
                std::cout << i << "\t" << rep.n << "\t" << rep.k << "\t" << rep.lp_value
                          << "\t" << rep.cut.cost << "\t" << rep.ratio_vs_lp << "\t"
                          << rep.L * rep.L;
                if (bench_exact) {
                    CutSet opt_cut = exact_multicut(g, 20);
                    std::cout << "\t" << opt_cut.cost;
                }
                if (bench_times) std::cout << "\t" << ms;
                std::cout << "\n";
                max_ratio = std::max(max_ratio, rep.ratio_vs_lp);
                sum_ratio += rep.ratio_vs_lp;
                ++rows;
            }
            std::cout << "# max_ratio=" << max_ratio
                      << " mean_ratio=" << (rows ? sum_ratio / rows : 0.0) << "\n";
            return 0;
        }
        if (reduce_cmd->parsed()) {
            auto [g, weights] = edge_weighted_from_json(json::parse(read_text_file(reduce_in)));
            emit(reduce_out, instance_to_json(edge_to_node_reduction(g, weights)).dump(2));
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

#pragma once

#include <cmath>
#include <future>
#include <vector>

#include "pmcut/verify.hpp"

namespace pmcut {

struct RoundingOptions {
    double delta = 1.0 / 12.0;
    SeparatorMode mode = SeparatorMode::fundamental_cycle;
    bool audit = false;
    int threads = 1;
};

struct RoundingReport {
    CutSet cut;
    double lp_value = 0.0;
    double cost_heavy = 0.0;       // S_L
    double cost_layer_cut = 0.0;   // S'
    std::vector<double> cost_separators;  // one entry per layer minor, in order
    double sum_parts = 0.0;
    int n = 0;
    int k = 0;
    int L = 0;
    double delta = 0.0;
    double ratio_vs_lp = 0.0;
    int max_recursion_depth = 0;
    int lp_iterations = 0;
    bool feasible = false;
    std::vector<AuditResult> audits;            // populated when options.audit is set
    std::vector<SeparatorEvent> separator_events;  // likewise
};

// Documented approximation constant: heavy vertices pay 6L/δ·vol, the
// layering cut 24L/δ·vol, and each recursion level of each layer at most
// 36L/δ·vol per separator path, over ≤ log_{3/2} n + 2 levels. Dividing the
// level count by L (≥ log₂ n ≥ 1) gives a ratio of K·L² with
//   K = (30 + 36·p·(1/log₂ 1.5) + 72·p) / δ   (p = 2 paths, cycle mode)
//   K = (30 + 36·p + 72·p) / δ                (p = 3 paths, half mode)
// See docs/approximation_constant.md for the assembly.
inline double approx_constant(SeparatorMode mode, double delta) {
    double p = (mode == SeparatorMode::fundamental_cycle) ? 2.0 : 3.0;
    double depth_per_l = (mode == SeparatorMode::fundamental_cycle) ? 1.0 / std::log2(1.5) : 1.0;
    return (30.0 + 36.0 * p * depth_per_l + 72.0 * p) / delta;
}

namespace detail {

struct ComponentOutcome {
    std::vector<VertexId> cut;
    double layer_cut_cost = 0.0;
    std::vector<double> separator_costs;
    int max_depth = 0;
    std::vector<AuditResult> audits;
    std::vector<SeparatorEvent> events;
};

inline ComponentOutcome round_component(const Instance& comp, const std::vector<double>& x,
                                        const GrowthParams& params,
                                        const RoundingOptions& opt) {
    ComponentOutcome out;
    if (comp.alive_count() <= 1) return out;

    Layering lay = build_layers(comp, x, params);
    out.cut.insert(out.cut.end(), lay.cut.begin(), lay.cut.end());
    out.layer_cut_cost = set_cost(comp, lay.cut).value;

    if (opt.audit) {
        out.audits.push_back(audit_layering_claims(comp, x, lay, params));
        if (comp.alive_count() <= 10)
            out.audits.push_back(audit_layering_paths(comp, lay));
    }

    for (const auto& minor : lay.minors) {
        CutLayerResult cl = cut_layer(minor.graph, minor.x, minor.root, minor.dir,
                                      minor.root_is_contracted, params, opt.mode);
        out.separator_costs.push_back(set_cost(minor.graph, cl.cut).value);
        out.max_depth = std::max(out.max_depth, cl.max_depth);
        if (opt.audit) {
            out.events.insert(out.events.end(), cl.events.begin(), cl.events.end());
            if (minor.graph.alive_count() <= 40)
                out.audits.push_back(audit_cut_layer(minor, cl, params));
        }
        out.cut.insert(out.cut.end(), cl.cut.begin(), cl.cut.end());
    }
    return out;
}

} // namespace detail

// Round an LP-feasible assignment: remove heavy vertices, layer each weakly
// connected component, cut every δ-bounded layer minor, and certify the
// union. Deterministic for a fixed instance regardless of thread count.
inline RoundingReport round(const Instance& g, const LengthAssignment& assignment,
                            const RoundingOptions& opt = {}) {
    if (!(6.0 * opt.delta < 1.0))
        throw InvalidSpec("delta must satisfy 6*delta < 1");
    const auto& x = assignment.x;

    RoundingReport report;
    report.n = g.alive_count();
    report.k = static_cast<int>(g.pairs().size());
    report.delta = opt.delta;
    report.lp_value = assignment.value;

    GrowthParams params = GrowthParams::for_instance(std::max(1, g.alive_count()), opt.delta);
    report.L = params.L;

    for (auto [s, t] : g.pairs()) {
        if (!g.is_alive(s) || !g.is_alive(t)) continue;
        if (distance(g, x, s, t) < 1.0 - 10 * kTol)
            throw InvalidInstance("assignment is not LP-feasible for rounding");
    }

    std::vector<VertexId> heavy;
    for (VertexId v : g.alive_vertices())
        if (x[v] >= params.step() - kTol) heavy.push_back(v);
    report.cost_heavy = set_cost(g, heavy).value;

    Instance light = heavy.empty() ? g : g.delete_vertices(heavy);
    auto comps = light.weak_components();

    std::vector<detail::ComponentOutcome> outcomes(comps.size());
    auto run = [&](size_t c) {
        outcomes[c] = detail::round_component(light.induced(comps[c]), x, params, opt);
    };
    if (opt.threads > 1 && comps.size() > 1) {
        std::vector<std::future<void>> futs;
        for (size_t c = 0; c < comps.size(); ++c)
            futs.push_back(std::async(std::launch::async, run, c));
        for (auto& f : futs) f.get();
    } else {
        for (size_t c = 0; c < comps.size(); ++c) run(c);
    }

    std::vector<VertexId> members = heavy;
    for (auto& oc : outcomes) {
        members.insert(members.end(), oc.cut.begin(), oc.cut.end());
        report.cost_layer_cut += oc.layer_cut_cost;
        report.cost_separators.insert(report.cost_separators.end(),
                                      oc.separator_costs.begin(), oc.separator_costs.end());
        report.max_recursion_depth = std::max(report.max_recursion_depth, oc.max_depth);
        report.separator_events.insert(report.separator_events.end(), oc.events.begin(),
                                       oc.events.end());
        for (auto& a : oc.audits) {
            bool merged = false;
            for (auto& existing : report.audits)
                if (existing.lemma == a.lemma) { existing.absorb(a); merged = true; break; }
            if (!merged) report.audits.push_back(a);
        }
    }
    report.cut = make_cut_set(g, std::move(members));

    for (VertexId v : report.cut.members)
        if (g.is_terminal(v))
            throw FeasibilityCheckFailed("terminal landed in the cut");

    report.sum_parts = report.cost_heavy + report.cost_layer_cut;
    for (double c : report.cost_separators) report.sum_parts += c;
    report.ratio_vs_lp =
        report.lp_value > kTol ? report.cut.cost / report.lp_value : 0.0;

    auto feas = check_feasible(g, report.cut.members);
    if (!feas.feasible)
        throw FeasibilityCheckFailed("pair " + std::to_string(feas.violated_pair) +
                                     " survives the rounded cut");
    report.feasible = true;
    return report;
}

inline RoundingReport solve(const Instance& g, const RoundingOptions& opt = {}) {
    LpResult lp = solve_lp(g);
    RoundingReport report = round(g, lp.assignment, opt);
    report.lp_iterations = lp.iterations;
    return report;
}

} // namespace pmcut

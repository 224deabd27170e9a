#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pmcut/layering.hpp"
#include "pmcut/lp.hpp"
#include "pmcut/path_cutting.hpp"
#include "pmcut/separator.hpp"

namespace pmcut {

struct FeasibilityResult {
    bool feasible = true;
    int violated_pair = -1;
    std::vector<VertexId> witness;  // a surviving s_i→t_i path when infeasible
};

// Directed BFS per pair in G \ S; the witness is a concrete surviving path.
inline FeasibilityResult check_feasible(const Instance& g,
                                        const std::vector<VertexId>& cut) {
    std::vector<char> removed(g.n(), 0);
    for (VertexId v : cut) removed[v] = 1;
    for (int i = 0; i < static_cast<int>(g.pairs().size()); ++i) {
        auto [s, t] = g.pairs()[i];
        if (!g.is_alive(s) || !g.is_alive(t) || removed[s] || removed[t]) continue;
        std::vector<VertexId> parent(g.n(), -2);
        std::vector<VertexId> queue{s};
        parent[s] = -1;
        bool found = false;
        for (size_t qi = 0; qi < queue.size() && !found; ++qi) {
            VertexId v = queue[qi];
            for (VertexId w : g.out_neighbors(v)) {
                if (removed[w] || parent[w] != -2) continue;
                parent[w] = v;
                if (w == t) { found = true; break; }
                queue.push_back(w);
            }
        }
        if (found) {
            FeasibilityResult r;
            r.feasible = false;
            r.violated_pair = i;
            for (VertexId v = t; v >= 0; v = parent[v]) r.witness.push_back(v);
            std::reverse(r.witness.begin(), r.witness.end());
            return r;
        }
    }
    return {};
}

// Exhaustive minimum multicut over subsets of finite-cost vertices; ties go
// to the lexicographically smallest id set. Oracle for OPT on desk-size
// instances.
inline CutSet exact_multicut(const Instance& g, int limit = 20) {
    std::vector<VertexId> finite;
    for (VertexId v : g.alive_vertices())
        if (!g.cost(v).infinite) finite.push_back(v);
    int m = static_cast<int>(finite.size());
    if (m > limit)
        throw TooLarge("exact multicut limited to " + std::to_string(limit) +
                       " finite-cost vertices");

    std::vector<VertexId> best_members;
    double best_cost = kInfDist;
    bool have = false;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        double cost = 0.0;
        std::vector<VertexId> members;
        for (int b = 0; b < m; ++b)
            if (mask >> b & 1) {
                cost += g.cost(finite[b]).value;
                members.push_back(finite[b]);
            }
        if (have && cost > best_cost + kTol) continue;
        if (!check_feasible(g, members).feasible) continue;
        bool better = !have || cost < best_cost - kTol ||
                      (cost < best_cost + kTol && members < best_members);
        if (better) {
            have = true;
            best_cost = cost;
            best_members = std::move(members);
        }
    }
    if (!have) throw Infeasible("no finite multicut exists");
    return make_cut_set(g, best_members);
}

struct AuditResult {
    std::string lemma;
    int instances = 0;
    int violations = 0;
    double worst_slack = 0.0;  // most negative margin observed (0 when clean)

    void absorb(const AuditResult& other) {
        instances += other.instances;
        violations += other.violations;
        worst_slack = std::min(worst_slack, other.worst_slack);
    }
    void count(bool ok, double slack = 0.0) {
        ++instances;
        if (!ok) ++violations;
        worst_slack = std::min(worst_slack, slack);
    }
};

namespace detail {

inline std::vector<char> reachable_set(const Instance& g, const std::vector<VertexId>& from,
                                       const std::vector<char>& removed, Direction dir) {
    std::vector<char> seen(g.n(), 0);
    std::vector<VertexId> queue;
    for (VertexId v : from)
        if (g.is_alive(v) && !removed[v] && !seen[v]) { seen[v] = 1; queue.push_back(v); }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        VertexId v = queue[qi];
        const auto& next = (dir == Direction::out) ? g.out_neighbors(v) : g.in_neighbors(v);
        for (VertexId w : next)
            if (!removed[w] && !seen[w]) { seen[w] = 1; queue.push_back(w); }
    }
    return seen;
}

} // namespace detail

// Region-growing guarantee: r lands in [δ/(6L), δ) and the boundary obeys
// the explicit bound.
inline AuditResult audit_region_call(const Instance& g, const std::vector<double>& x,
                                     const Region& region, const GrowthParams& params) {
    AuditResult a{"region-growing"};
    double vol = volume_alive(g, x);
    bool in_range = region.radius >= params.step() - kTol &&
                    region.radius < params.delta - kTol;
    Cost c = set_cost(g, region.boundary);
    double bound = region_boundary_bound(params, volume(g, x, region.ball), vol);
    double slack = c.infinite ? -kInfDist : bound + kTol * (1.0 + bound) - c.value;
    a.count(in_range && !c.infinite && slack >= 0, std::min(slack, 0.0));
    return a;
}

// Claim-style checks over one layering of a weakly connected component.
inline AuditResult audit_layering_claims(const Instance& comp, const std::vector<double>& x,
                                         const Layering& lay, const GrowthParams& params) {
    AuditResult a{"layering"};
    int n = comp.alive_count();
    a.count(lay.iterations <= 2 * n);

    double vol = volume_alive(comp, x);
    Cost cut_cost = set_cost(comp, lay.cut);
    double bound = layering_cut_bound(params, vol);
    double slack = cut_cost.infinite ? -kInfDist : bound + kTol * (1.0 + bound) - cut_cost.value;
    a.count(!cut_cost.infinite && slack >= 0, std::min(slack, 0.0));

    // layers partition the component
    {
        std::vector<char> seen(comp.n(), 0);
        bool ok = true;
        for (const auto& layer : lay.layers)
            for (VertexId v : layer) {
                if (seen[v]) ok = false;
                seen[v] = 1;
            }
        for (VertexId v : comp.alive_vertices())
            if (!seen[v]) ok = false;
        a.count(ok);
    }

    // directed separation between layers in comp \ S'
    std::vector<char> removed(comp.n(), 0);
    for (VertexId v : lay.cut) removed[v] = 1;
    for (int i = 0; i < static_cast<int>(lay.layers.size()); ++i) {
        std::vector<VertexId> inside;
        for (VertexId v : lay.layers[i])
            if (!removed[v]) inside.push_back(v);
        Direction dir = (i % 2 == 0) ? Direction::out : Direction::in;
        auto seen = detail::reachable_set(comp, inside, removed, dir);
        std::vector<char> in_layer(comp.n(), 0);
        for (VertexId v : lay.layers[i]) in_layer[v] = 1;
        bool ok = true;
        for (VertexId v : comp.alive_vertices())
            if (seen[v] && !in_layer[v]) ok = false;
        a.count(ok);
    }
    return a;
}

// Every surviving path must split into a prefix inside an odd layer and a
// suffix inside the adjacent even layer (either one possibly empty).
// Exhaustive over simple paths, so callers keep components small.
inline AuditResult audit_layering_paths(const Instance& comp, const Layering& lay) {
    AuditResult a{"layer-paths"};
    std::vector<char> removed(comp.n(), 0);
    for (VertexId v : lay.cut) removed[v] = 1;

    std::vector<int> layer_of(comp.n(), -1);
    for (int i = 0; i < static_cast<int>(lay.layers.size()); ++i)
        for (VertexId v : lay.layers[i]) layer_of[v] = i;

    auto splits_ok = [&](const std::vector<VertexId>& path) {
        int t = static_cast<int>(lay.layers.size());
        for (int i = 0; i < t; ++i) {
            // single layer
            bool whole = true;
            for (VertexId v : path)
                if (layer_of[v] != i) { whole = false; break; }
            if (whole) return true;
            if (i + 1 >= t) continue;
            int odd = (i % 2 == 1) ? i : i + 1;
            int even = (odd == i) ? i + 1 : i;
            for (size_t s = 0; s <= path.size(); ++s) {
                bool ok = true;
                for (size_t p = 0; p < s && ok; ++p)
                    if (layer_of[path[p]] != odd) ok = false;
                for (size_t p = s; p < path.size() && ok; ++p)
                    if (layer_of[path[p]] != even) ok = false;
                if (ok) return true;
            }
        }
        return false;
    };

    std::vector<VertexId> path;
    std::vector<char> on_path(comp.n(), 0);
    std::function<void(VertexId)> dfs = [&](VertexId v) {
        path.push_back(v);
        on_path[v] = 1;
        if (path.size() >= 2) a.count(splits_ok(path));
        for (VertexId w : comp.out_neighbors(v))
            if (!removed[w] && !on_path[w]) dfs(w);
        on_path[v] = 0;
        path.pop_back();
    };
    for (VertexId v : comp.alive_vertices())
        if (!removed[v]) dfs(v);
    return a;
}

// Ball structure of one PathCutting run: per-sweep disjointness, coverage of
// P, and the no-re-entry property (nothing outside the first i balls reaches
// ball i in G \ S, in the sweep's direction).
inline AuditResult audit_path_cut_structure(const Instance& g,
                                            const std::vector<VertexId>& path,
                                            const PathCutResult& res) {
    AuditResult a{"path-cutting-balls"};
    std::vector<char> removed(g.n(), 0);
    for (VertexId v : res.cut) removed[v] = 1;

    for (const auto* seq : {&res.out_balls, &res.in_balls}) {
        std::vector<char> in_any(g.n(), 0);
        bool disjoint = true;
        for (const auto& region : seq->balls)
            for (VertexId v : region.ball) {
                if (in_any[v]) disjoint = false;
                in_any[v] = 1;
            }
        bool covered = true;
        for (VertexId v : path)
            if (!in_any[v]) covered = false;
        a.count(disjoint);
        a.count(covered);

        // centers move monotonically along the path
        bool ordered = true;
        for (size_t i = 1; i < seq->center_positions.size(); ++i) {
            if (seq->dir == Direction::out &&
                seq->center_positions[i] >= seq->center_positions[i - 1])
                ordered = false;
            if (seq->dir == Direction::in &&
                seq->center_positions[i] <= seq->center_positions[i - 1])
                ordered = false;
        }
        a.count(ordered);

        // no re-entry (the sweep's own direction): reaching ball i from
        // outside balls 1..i is impossible in G \ S
        std::vector<char> prefix(g.n(), 0);
        for (const auto& region : seq->balls) {
            for (VertexId v : region.ball) prefix[v] = 1;
            std::vector<VertexId> members;
            for (VertexId v : region.ball)
                if (!removed[v]) members.push_back(v);
            // who can reach the ball (in-sweep) / be reached from it (out-sweep)
            auto seen = detail::reachable_set(g, members, removed, seq->dir);
            bool ok = true;
            for (VertexId v : g.alive_vertices())
                if (seen[v] && !prefix[v]) ok = false;
            a.count(ok);
        }
    }

    // center-order chain: surviving connections only move toward later ball
    // centers — reaching a path vertex p means your in-ball center sits no
    // later than p's; being reached from p means your out-ball center sits
    // no earlier than p's
    std::vector<int> in_pos(g.n(), -1), out_pos(g.n(), -1);
    for (size_t i = 0; i < res.in_balls.balls.size(); ++i)
        for (VertexId v : res.in_balls.balls[i].ball)
            in_pos[v] = res.in_balls.center_positions[i];
    for (size_t i = 0; i < res.out_balls.balls.size(); ++i)
        for (VertexId v : res.out_balls.balls[i].ball)
            out_pos[v] = res.out_balls.center_positions[i];
    for (VertexId p : path) {
        if (removed[p]) continue;
        auto reaches_p = detail::reachable_set(g, {p}, removed, Direction::in);
        auto from_p = detail::reachable_set(g, {p}, removed, Direction::out);
        bool ok = true;
        for (VertexId v : g.alive_vertices()) {
            if (reaches_p[v] && (in_pos[v] < 0 || in_pos[v] > in_pos[p])) ok = false;
            if (from_p[v] && (out_pos[v] < 0 || out_pos[v] < out_pos[p])) ok = false;
        }
        a.count(ok);
    }
    return a;
}

// Surviving connections through P certify a 3δ distance bound in the graph
// PathCutting ran on.
inline AuditResult audit_path_cut_distance(const Instance& g, const std::vector<double>& x,
                                           const std::vector<VertexId>& path,
                                           const PathCutResult& res,
                                           const GrowthParams& params) {
    AuditResult a{"path-cutting-3delta"};
    std::vector<char> removed(g.n(), 0);
    for (VertexId v : res.cut) removed[v] = 1;

    std::vector<std::vector<double>> dist_from(g.n());
    for (VertexId v : g.alive_vertices())
        dist_from[v] = dijkstra(g, x, v, Direction::out).dist;

    for (VertexId p : path) {
        if (removed[p]) continue;
        auto reaches_p = detail::reachable_set(g, {p}, removed, Direction::in);
        auto from_p = detail::reachable_set(g, {p}, removed, Direction::out);
        for (VertexId u : g.alive_vertices()) {
            if (!reaches_p[u]) continue;
            for (VertexId w : g.alive_vertices()) {
                if (!from_p[w]) continue;
                double d = dist_from[u][w];
                a.count(d <= 3.0 * params.delta + kTol, 3.0 * params.delta + kTol - d);
            }
        }
    }
    return a;
}

// The per-layer guarantee: any pair of non-root vertices still connected
// after the separator cut is within 3δ among the layer's own vertices.
inline AuditResult audit_cut_layer(const LayerMinor& minor, const CutLayerResult& res,
                                   const GrowthParams& params) {
    AuditResult a{"separator-3delta"};
    const Instance* ambient = &minor.graph;
    Instance stripped;
    if (minor.root_is_contracted) {
        stripped = minor.graph.delete_vertices({minor.root});
        ambient = &stripped;
    }
    std::vector<char> removed(ambient->n(), 0);
    for (VertexId v : res.cut) removed[v] = 1;

    auto alive = ambient->alive_vertices();
    for (VertexId u : alive) {
        if (removed[u]) continue;
        auto tree = dijkstra(*ambient, minor.x, u, Direction::out);
        auto seen = detail::reachable_set(*ambient, {u}, removed, Direction::out);
        for (VertexId w : alive) {
            if (!seen[w]) continue;
            a.count(tree.dist[w] <= 3.0 * params.delta + kTol,
                    3.0 * params.delta + kTol - tree.dist[w]);
        }
    }
    return a;
}

} // namespace pmcut

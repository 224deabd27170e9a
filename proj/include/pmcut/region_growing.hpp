#pragma once

#include <vector>

#include "pmcut/metric.hpp"

namespace pmcut {

// δ and the log-n stand-in, frozen against the original instance size for a
// whole pipeline run so every per-call bound stays monotone under
// contraction. Requires 6δ < 1 when used for rounding.
struct GrowthParams {
    double delta = 1.0 / 12.0;
    int L = 1;
    int n_original = 1;

    double step() const { return delta / (6.0 * L); }

    static GrowthParams for_instance(int n, double delta = 1.0 / 12.0) {
        GrowthParams p;
        if (n < 1) throw InvalidSpec("instance size must be positive");
        if (!(delta > 0))
            throw InvalidSpec("delta must be positive");
        p.delta = delta;
        p.n_original = n;
        int L = 0;
        while ((1LL << L) < n) ++L;
        p.L = std::max(1, L);
        return p;
    }
};

// The grid has 3 + 2L radii, all inside [δ/(6L), δ) since 3 + 2L < 6L for
// L ≥ 1.
inline int radius_grid_size(const GrowthParams& p) { return 3 + 2 * p.L; }

inline double region_boundary_bound(const GrowthParams& p, double ball_volume,
                                    double graph_volume) {
    return (6.0 * p.L / p.delta) * (2.0 * ball_volume + graph_volume / p.n_original);
}

// Deterministic region growing: pick r in [δ/(6L), δ) whose ball boundary
// costs at most (6L/δ)(2·vol(B_r) + vol(V)/n). Existence comes from the
// doubling index: some i ≤ 1+2L has vol(B_{i+2}) ≤ 2·vol(B_i) + vol(V)/n,
// and within [r_i, r_{i+1}) the ball only changes at distance values, so
// scanning those radii and keeping the cheapest boundary beats the averaging
// argument. Ties go to the smaller radius.
inline Region region_grow(const Instance& g, const std::vector<double>& x,
                          VertexId center, const GrowthParams& params, Direction dir) {
    if (!g.is_alive(center)) throw InvalidInstance("region center is dead");
    const double step = params.step();
    for (VertexId u : g.alive_vertices())
        if (x[u] > step + kTol)
            throw PreconditionLongVertex("vertex " + std::to_string(u) +
                                         " longer than delta/(6L)");

    auto tree = dijkstra(g, x, center, dir);
    const double vol_graph = volume_alive(g, x);

    // prefix volumes over vertices sorted by distance
    std::vector<VertexId> order;
    for (VertexId v : g.alive_vertices())
        if (tree.dist[v] < kInfDist) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        if (tree.dist[a] != tree.dist[b]) return tree.dist[a] < tree.dist[b];
        return a < b;
    });
    auto ball_volume_at = [&](double r) {
        double vol = 0.0;
        for (VertexId v : order) {
            if (tree.dist[v] > r + kTol) break;
            if (!g.cost(v).infinite) vol += g.cost(v).value * x[v];
        }
        return vol;
    };

    int grid = radius_grid_size(params);
    int doubling = -1;
    for (int i = 1; i + 2 <= grid; ++i) {
        double lo = ball_volume_at(i * step);
        double hi = ball_volume_at((i + 2) * step);
        if (hi <= 2.0 * lo + vol_graph / params.n_original + kTol) {
            doubling = i;
            break;
        }
    }
    if (doubling < 0)
        throw Error("region growing: doubling index does not exist");

    const double r_lo = doubling * step;
    const double r_hi = (doubling + 1) * step;
    std::vector<double> candidates{r_lo};
    for (VertexId v : order)
        if (tree.dist[v] > r_lo && tree.dist[v] < r_hi) candidates.push_back(tree.dist[v]);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](double a, double b) { return b - a <= kTol; }),
                     candidates.end());

    Region best;
    double best_cost = kInfDist;
    for (double r : candidates) {
        std::vector<VertexId> ball;
        for (VertexId v : order) {
            if (tree.dist[v] > r + kTol) break;
            ball.push_back(v);
        }
        std::sort(ball.begin(), ball.end());
        auto bd = boundary(g, ball, dir);
        Cost c = set_cost(g, bd);
        double cost_value = c.infinite ? kInfDist : c.value;
        if (cost_value < best_cost - kTol) {
            best_cost = cost_value;
            best = Region{center, dir, r, std::move(ball), std::move(bd)};
        }
    }
    return best;
}

// The explicit per-call guarantee, checked by audits and tests.
inline bool region_bound_holds(const Instance& g, const std::vector<double>& x,
                               const Region& region, const GrowthParams& params,
                               double graph_volume) {
    Cost c = set_cost(g, region.boundary);
    if (c.infinite) return false;
    double ball_vol = volume(g, x, region.ball);
    double bound = region_boundary_bound(params, ball_vol, graph_volume);
    return c.value <= bound + kTol * (1.0 + bound);
}

} // namespace pmcut

#pragma once

#include <limits>
#include <queue>
#include <vector>

#include "pmcut/graph.hpp"

namespace pmcut {

constexpr double kInfDist = std::numeric_limits<double>::infinity();

enum class Direction { out, in };

inline Direction reversed(Direction d) {
    return d == Direction::out ? Direction::in : Direction::out;
}

// Fractional LP values reinterpreted as node lengths. A path's length sums x
// over all its vertices, both endpoints included, so d(v, v) = x_v.
struct LengthAssignment {
    std::vector<double> x;
    double value = 0.0;
};

inline double assignment_value(const Instance& g, const std::vector<double>& x) {
    double total = 0.0;
    for (VertexId v = 0; v < g.n(); ++v) {
        if (!g.is_alive(v) || g.cost(v).infinite) continue;
        total += g.cost(v).value * x[v];
    }
    return total;
}

struct ShortestPathTree {
    VertexId source = -1;
    Direction dir = Direction::out;
    std::vector<double> dist;      // kInfDist when unreachable or dead
    std::vector<VertexId> parent;  // toward the source; -1 at source/unreached
};

// Dijkstra with node lengths; ties broken by smaller vertex id so trees and
// paths are deterministic. For Direction::in the roles of the adjacency
// lists swap, which equals running on the edge-reversed graph.
inline ShortestPathTree dijkstra(const Instance& g, const std::vector<double>& x,
                                 VertexId source, Direction dir) {
    ShortestPathTree t;
    t.source = source;
    t.dir = dir;
    t.dist.assign(g.n(), kInfDist);
    t.parent.assign(g.n(), -1);
    if (!g.is_alive(source)) return t;

    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    t.dist[source] = x[source];
    pq.emplace(t.dist[source], source);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > t.dist[v]) continue;  // stale entry
        const auto& next = (dir == Direction::out) ? g.out_neighbors(v) : g.in_neighbors(v);
        for (VertexId w : next) {
            if (!g.is_alive(w)) continue;
            double cand = d + x[w];
            if (cand < t.dist[w]) {
                t.dist[w] = cand;
                t.parent[w] = v;
                pq.emplace(cand, w);
            }
        }
    }
    return t;
}

inline double distance(const Instance& g, const std::vector<double>& x,
                       VertexId u, VertexId v, Direction dir = Direction::out) {
    return dijkstra(g, x, u, dir).dist[v];
}

// Path from the source of `t` to v (for out-trees) or from v to the source
// (for in-trees); empty when unreachable.
inline std::vector<VertexId> tree_path(const ShortestPathTree& t, VertexId v) {
    if (t.dist[v] == kInfDist) return {};
    std::vector<VertexId> path;
    for (VertexId w = v; w >= 0; w = t.parent[w]) path.push_back(w);
    if (t.dir == Direction::out) std::reverse(path.begin(), path.end());
    return path;
}

struct Region {
    VertexId center = -1;
    Direction dir = Direction::out;
    double radius = 0.0;
    std::vector<VertexId> ball;      // sorted
    std::vector<VertexId> boundary;  // sorted
};

inline std::vector<VertexId> ball_from_dist(const std::vector<double>& dist, double r) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<int>(dist.size()); ++v)
        if (dist[v] <= r + kTol) out.push_back(v);
    return out;
}

inline std::vector<VertexId> ball(const Instance& g, const std::vector<double>& x,
                                  VertexId v, double r, Direction dir) {
    return ball_from_dist(dijkstra(g, x, v, dir).dist, r);
}

// Out-boundary: heads of edges leaving S; in-boundary: tails of edges
// entering S. Members are alive vertices outside S.
inline std::vector<VertexId> boundary(const Instance& g, const std::vector<VertexId>& s,
                                      Direction dir) {
    std::vector<char> in_s(g.n(), 0);
    for (VertexId v : s) in_s[v] = 1;
    std::vector<VertexId> out;
    for (VertexId v : s) {
        if (!g.is_alive(v)) continue;
        const auto& next = (dir == Direction::out) ? g.out_neighbors(v) : g.in_neighbors(v);
        for (VertexId w : next)
            if (!in_s[w]) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// vol(S) = Σ c(v)·x_v. Terminals contribute nothing because any LP-produced
// assignment pins x to 0 there; a positive x on an infinite-cost vertex has
// no usable volume.
inline double volume(const Instance& g, const std::vector<double>& x,
                     const std::vector<VertexId>& s) {
    double total = 0.0;
    for (VertexId v : s) {
        if (g.cost(v).infinite) {
            if (x[v] > 0.0)
                throw InfiniteVolume("infinite-cost vertex with positive length in volume");
            continue;
        }
        total += g.cost(v).value * x[v];
    }
    return total;
}

inline double volume_alive(const Instance& g, const std::vector<double>& x) {
    return volume(g, x, g.alive_vertices());
}

} // namespace pmcut

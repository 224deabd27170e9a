#pragma once

#include <vector>

#include "pmcut/region_growing.hpp"

namespace pmcut {

// Balls carved along a path during one sweep, in cut order. Balls are
// pairwise disjoint because each one is grown in the graph with its
// predecessors removed; together they cover every path vertex.
struct BallSequence {
    Direction dir = Direction::out;
    std::vector<Region> balls;
    std::vector<int> center_positions;  // index into the path, per ball
};

struct PathCutResult {
    std::vector<VertexId> cut;  // sorted union of both sweeps' boundaries
    BallSequence out_balls;
    BallSequence in_balls;
    double graph_volume = 0.0;  // volume of the ambient graph at entry
};

inline double path_length(const std::vector<double>& x, const std::vector<VertexId>& path) {
    double len = 0.0;
    for (VertexId v : path) len += x[v];
    return len;
}

inline void check_shortest_path(const Instance& g, const std::vector<double>& x,
                                const std::vector<VertexId>& path) {
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        const auto& next = g.out_neighbors(path[i]);
        if (!std::binary_search(next.begin(), next.end(), path[i + 1]))
            throw NotShortestPath("consecutive path vertices are not joined by an edge");
    }
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        auto tree = dijkstra(g, x, path[i], Direction::out);
        double sub = x[path[i]];
        for (size_t j = i + 1; j < path.size(); ++j) {
            sub += x[path[j]];
            if (tree.dist[path[j]] < sub - kTol)
                throw NotShortestPath("path is not a shortest path under x");
        }
    }
}

namespace detail {

inline BallSequence sweep(const Instance& g, const std::vector<double>& x,
                          const std::vector<VertexId>& path, const GrowthParams& params,
                          Direction dir) {
    BallSequence seq;
    seq.dir = dir;
    Instance residual = g;
    std::vector<char> covered(path.size(), 0);
    const bool downward = (dir == Direction::out);  // out-balls start at the path's end
    int curr = downward ? static_cast<int>(path.size()) - 1 : 0;

    for (;;) {
        Region region = region_grow(residual, x, path[curr], params, dir);
        for (size_t j = 0; j < path.size(); ++j)
            if (!covered[j] &&
                std::binary_search(region.ball.begin(), region.ball.end(), path[j]))
                covered[j] = 1;
        if (!covered[curr])
            throw Error("ball does not cover its own center");
        residual = residual.delete_vertices(region.ball);
        seq.center_positions.push_back(curr);
        seq.balls.push_back(std::move(region));

        int next = -1;
        if (downward) {
            for (int j = curr - 1; j >= 0; --j)
                if (!covered[j]) { next = j; break; }
        } else {
            for (int j = curr + 1; j < static_cast<int>(path.size()); ++j)
                if (!covered[j]) { next = j; break; }
        }
        if (next < 0) break;
        curr = next;
    }
    return seq;
}

} // namespace detail

// PathCutting: carve out-balls along P from its end downward, then in-balls
// from its start upward, each sweep removing its own balls as it goes and
// recording their boundaries in the residual graph. Any surviving u→v
// connection that touches P then certifies d(u, v) ≤ 3δ. The in-sweep runs
// on the original graph, not the out-sweep's residue: the sweeps are
// independent and their boundary unions add.
inline PathCutResult path_cutting(const Instance& g, const std::vector<double>& x,
                                  const std::vector<VertexId>& path,
                                  const GrowthParams& params) {
    if (path.empty()) throw InvalidInstance("path cutting needs a non-empty path");
    for (VertexId v : path)
        if (!g.is_alive(v)) throw InvalidInstance("path vertex is dead");
    if (path_length(x, path) > params.delta + kTol)
        throw PathTooLong("path longer than delta");
    check_shortest_path(g, x, path);

    PathCutResult result;
    result.graph_volume = volume_alive(g, x);
    result.out_balls = detail::sweep(g, x, path, params, Direction::out);
    result.in_balls = detail::sweep(g, x, path, params, Direction::in);

    for (const auto* seq : {&result.out_balls, &result.in_balls})
        for (const auto& region : seq->balls)
            result.cut.insert(result.cut.end(), region.boundary.begin(),
                              region.boundary.end());
    std::sort(result.cut.begin(), result.cut.end());
    result.cut.erase(std::unique(result.cut.begin(), result.cut.end()), result.cut.end());
    return result;
}

// Explicit form of the path-cutting cost bound: each sweep pays at most
// (6L/δ)(2·vol(V) + vol(V)) because its balls are disjoint and there are at
// most n of them.
inline double path_cutting_cost_bound(const GrowthParams& p, double graph_volume) {
    return 2.0 * (6.0 * p.L / p.delta) * 3.0 * graph_volume;
}

} // namespace pmcut

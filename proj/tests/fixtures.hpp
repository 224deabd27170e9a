#pragma once

// Shared regression fixture: a vertex u that sits one step from the end of a
// directed path but 3δ away from its start, via a long detour that rejoins
// v_0. Carving in-balls from the start cuts the detour; carving them from
// the end first absorbs u and the whole detour into one ball and the detour
// survives. Everything lies on a convex parabola below the path, so straight
// lines embed it.

#include "oracles.hpp"
#include "pmcut/path_cutting.hpp"

namespace fixtures {

using namespace pmcut;

struct SweepOrderFixture {
    Instance graph;
    GrowthParams params;
    std::vector<double> x;
    std::vector<VertexId> path;  // v_0 .. v_m
    VertexId u = -1;
};

inline SweepOrderFixture sweep_order_fixture() {
    const int m = 3;
    const int q = 360;
    const int n = (m + 1) + 1 + q;
    SweepOrderFixture f;
    f.params.delta = 1.0 / 12.0;
    f.params.n_original = n;
    {
        int L = 0;
        while ((1 << L) < n) ++L;
        f.params.L = L;
    }
    const double eps = f.params.step() / 2;

    std::vector<std::pair<double, double>> coords;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int j = 0; j <= m; ++j) coords.push_back({10.0 * j, 0.0});
    for (int j = 0; j < m; ++j) edges.emplace_back(j, j + 1);
    const VertexId u = m + 1;
    const VertexId w0 = m + 2;
    const double width = 10.0 * m;
    for (int i = 0; i <= q; ++i) {
        double t = static_cast<double>(i) / q;
        double xx = (width - 0.5) * (1.0 - t) + 0.5 * t;
        coords.push_back(
            {xx, ((xx - width / 2) * (xx - width / 2)) / (width * width) - 2.0});
    }
    edges.emplace_back(u, w0);
    for (int i = 0; i + 1 < q; ++i) edges.emplace_back(w0 + i, w0 + i + 1);
    edges.emplace_back(w0 + q - 1, 0);
    edges.emplace_back(u, m);
    for (int i = 0; i < q; ++i) edges.emplace_back(w0 + i, m);

    f.graph = oracles::coords_instance(n, coords, edges);
    f.x.assign(n, eps);
    for (int j = 0; j <= m; ++j) f.path.push_back(j);
    f.u = u;
    return f;
}

// The reversed in-sweep the remarked construction defeats; lives only in
// test code.
inline std::vector<VertexId> reversed_order_cut(const SweepOrderFixture& f) {
    Instance residual = f.graph;
    std::vector<char> covered(f.path.size(), 0);
    std::vector<VertexId> cut;
    int curr = static_cast<int>(f.path.size()) - 1;
    for (;;) {
        Region region = region_grow(residual, f.x, f.path[curr], f.params, Direction::in);
        for (size_t j = 0; j < f.path.size(); ++j)
            if (!covered[j] &&
                std::binary_search(region.ball.begin(), region.ball.end(), f.path[j]))
                covered[j] = 1;
        cut.insert(cut.end(), region.boundary.begin(), region.boundary.end());
        residual = residual.delete_vertices(region.ball);
        int next = -1;
        for (int j = curr - 1; j >= 0; --j)
            if (!covered[j]) { next = j; break; }
        if (next < 0) break;
        curr = next;
    }
    auto out = path_cutting(f.graph, f.x, f.path, f.params).out_balls;
    for (const auto& region : out.balls)
        cut.insert(cut.end(), region.boundary.begin(), region.boundary.end());
    std::sort(cut.begin(), cut.end());
    cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
    return cut;
}

} // namespace fixtures

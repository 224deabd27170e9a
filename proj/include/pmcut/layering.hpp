#pragma once

#include <vector>

#include "pmcut/region_growing.hpp"

namespace pmcut {

// One δ-bounded minor G_i: everything before layer i contracted into the
// root, everything after deleted. For i ≥ 1 the root is a zero-cost,
// zero-length contraction artifact and can never be cut; the very first
// minor's root is the layering root itself, a real vertex that keeps its
// cost and length.
struct LayerMinor {
    Instance graph;
    std::vector<double> x;
    VertexId root = -1;
    Direction dir = Direction::out;
    bool root_is_contracted = false;
};

struct Layering {
    VertexId root = -1;
    std::vector<std::vector<VertexId>> layers;      // layers[0] contains the root
    std::vector<std::vector<VertexId>> boundaries;  // S_i per layer
    std::vector<VertexId> cut;                      // S' = ∪ S_i, sorted
    std::vector<LayerMinor> minors;
    int iterations = 0;
};

// Alternate out-/in- region growing around a running super-vertex. Layer i
// is grown at radius < δ, its boundary recorded, and the whole ball
// contracted into the root for the next round; parity flips each time. Every
// vertex of the component ends up in exactly one layer and the recorded
// boundaries cost at most 24·L·vol(V)/δ in total.
inline Layering build_layers(const Instance& g, const std::vector<double>& x,
                             const GrowthParams& params) {
    if (!g.weakly_connected())
        throw NotWeaklyConnected("layering needs a weakly connected graph");

    Layering result;
    auto alive = g.alive_vertices();
    if (alive.empty()) return result;
    result.root = alive.front();

    Instance working = g;
    std::vector<double> xw = x;
    const int cap = 2 * g.alive_count() + 2;

    while (working.alive_count() > 1) {
        int i = result.iterations;
        if (i >= cap) throw Error("layering exceeded its 2n iteration bound");
        Direction dir = (i % 2 == 0) ? Direction::out : Direction::in;

        Region region = region_grow(working, xw, result.root, params, dir);

        std::vector<VertexId> layer = region.ball;
        if (i > 0)
            layer.erase(std::remove(layer.begin(), layer.end(), result.root), layer.end());

        std::vector<VertexId> bd = boundary(working, layer, dir);
        bd.erase(std::remove(bd.begin(), bd.end(), result.root), bd.end());

        std::vector<VertexId> absorb = region.ball;
        absorb.erase(std::remove(absorb.begin(), absorb.end(), result.root), absorb.end());
        if (!absorb.empty()) {
            auto [contracted, map] = working.contract_connected(absorb, result.root);
            working = std::move(contracted);
            (void)map;
        }
        xw[result.root] = 0.0;

        result.layers.push_back(std::move(layer));
        result.boundaries.push_back(std::move(bd));
        ++result.iterations;
    }

    for (const auto& bd : result.boundaries)
        result.cut.insert(result.cut.end(), bd.begin(), bd.end());
    std::sort(result.cut.begin(), result.cut.end());
    result.cut.erase(std::unique(result.cut.begin(), result.cut.end()), result.cut.end());

    // materialize the minors from the untouched component graph
    int t = static_cast<int>(result.layers.size());
    for (int i = 0; i < t; ++i) {
        std::vector<VertexId> later;
        for (int j = i + 1; j < t; ++j)
            later.insert(later.end(), result.layers[j].begin(), result.layers[j].end());
        Instance minor = later.empty() ? g : g.delete_vertices(later);

        std::vector<VertexId> prior;
        for (int j = 0; j < i; ++j)
            prior.insert(prior.end(), result.layers[j].begin(), result.layers[j].end());
        prior.erase(std::remove(prior.begin(), prior.end(), result.root), prior.end());
        if (!prior.empty()) {
            auto [contracted, map] = minor.contract_connected(prior, result.root);
            minor = std::move(contracted);
            (void)map;
        }

        LayerMinor lm;
        lm.root = result.root;
        lm.dir = (i % 2 == 0) ? Direction::out : Direction::in;
        lm.root_is_contracted = (i > 0);
        lm.x.assign(g.n(), 0.0);
        for (VertexId v : minor.alive_vertices()) lm.x[v] = x[v];
        if (lm.root_is_contracted) lm.x[result.root] = 0.0;
        lm.graph = std::move(minor);
        result.minors.push_back(std::move(lm));
    }
    return result;
}

// Explicit form of the layering cost bound.
inline double layering_cut_bound(const GrowthParams& p, double total_volume) {
    return 24.0 * p.L * total_volume / p.delta;
}

} // namespace pmcut

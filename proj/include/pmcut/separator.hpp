#pragma once

#include <set>
#include <vector>

#include "pmcut/path_cutting.hpp"

namespace pmcut {

enum class SeparatorMode { exact_half, fundamental_cycle };

struct SeparatorPaths {
    std::vector<std::vector<VertexId>> paths;  // 1-3 directed root paths
    double balance = 0.0;                      // max component fraction afterwards
    int max_component = 0;
};

// Chords that make every face walk of the embedded multigraph have length
// ≤ 3: simple faces are fanned from their minimum-id vertex; faces that
// revisit a vertex (cut vertices, bridges) are ear-clipped instead, since a
// fan from a repeated anchor degenerates into self-chords. Chords are
// separator-selection artifacts; they never enter the instance.
inline std::vector<std::pair<VertexId, VertexId>> triangulate(const Instance& g) {
    std::set<std::pair<VertexId, VertexId>> seen;
    std::vector<std::pair<VertexId, VertexId>> chords;
    auto add = [&](VertexId a, VertexId b) {
        if (a == b) return;
        auto key = std::minmax(a, b);
        if (seen.insert({key.first, key.second}).second)
            chords.emplace_back(key.first, key.second);
    };
    for (const auto& face : g.faces()) {
        std::vector<VertexId> walk;
        walk.reserve(face.size());
        for (int h : face) walk.push_back(g.own_vertex(h));
        int k = static_cast<int>(walk.size());
        if (k <= 3) continue;

        std::set<VertexId> distinct(walk.begin(), walk.end());
        if (static_cast<int>(distinct.size()) == k) {
            int anchor = static_cast<int>(
                std::min_element(walk.begin(), walk.end()) - walk.begin());
            for (int step = 2; step <= k - 2; ++step)
                add(walk[anchor], walk[(anchor + step) % k]);
            continue;
        }

        while (walk.size() > 3) {
            k = static_cast<int>(walk.size());
            int clip = -1;
            for (int j = 0; j < k; ++j) {
                VertexId a = walk[(j + k - 1) % k], b = walk[(j + 1) % k];
                if (a != b) { clip = j; break; }
            }
            if (clip < 0) break;  // walk alternates between two vertices
            add(walk[(clip + k - 1) % k], walk[(clip + 1) % k]);
            walk.erase(walk.begin() + clip);
        }
    }
    return chords;
}

namespace detail {

inline std::vector<int> component_sizes_without(const Instance& g,
                                                const std::vector<char>& removed) {
    std::vector<int> sizes;
    std::vector<char> seen(g.n(), 0);
    for (VertexId s = 0; s < g.n(); ++s) {
        if (!g.is_alive(s) || removed[s] || seen[s]) continue;
        int size = 0;
        std::vector<VertexId> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            ++size;
            for (const auto* adj : {&g.out_neighbors(v), &g.in_neighbors(v)})
                for (VertexId w : *adj)
                    if (!removed[w] && !seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
        sizes.push_back(size);
    }
    return sizes;
}

inline int max_component_after(const Instance& g, const std::vector<VertexId>& removal) {
    std::vector<char> removed(g.n(), 0);
    for (VertexId v : removal) removed[v] = 1;
    int best = 0;
    for (int s : component_sizes_without(g, removed)) best = std::max(best, s);
    return best;
}

} // namespace detail

// Root-path separator on a δ-bounded graph: build the shortest-path tree at
// the root (out-tree for even parity, in-tree for odd), then either search
// vertex triples whose three root paths halve the graph (the exact
// statement, brute force), or pick the non-tree link of the triangulated
// embedding whose fundamental cycle leaves components of at most 2n/3
// (classical, scalable). Every returned path is a shortest path, so its
// length is at most the root's eccentricity ≤ δ.
inline SeparatorPaths root_path_separator(const Instance& g, const std::vector<double>& x,
                                          VertexId root, Direction dir, SeparatorMode mode) {
    const int n = g.alive_count();
    auto tree = dijkstra(g, x, root, dir);
    for (VertexId v : g.alive_vertices())
        if (tree.dist[v] == kInfDist)
            throw NotWeaklyConnected("separator root does not span the graph");

    // a single root path that covers everything separates trivially
    {
        std::vector<int> child_count(g.n(), 0);
        VertexId leaf = -1;
        int leaves = 0;
        for (VertexId v : g.alive_vertices())
            if (tree.parent[v] >= 0) child_count[tree.parent[v]]++;
        for (VertexId v : g.alive_vertices())
            if (child_count[v] == 0) { ++leaves; leaf = v; }
        bool chain = (leaves == 1);
        for (VertexId v : g.alive_vertices())
            if (child_count[v] > 1) chain = false;
        if (chain) {
            SeparatorPaths sp;
            sp.paths.push_back(tree_path(tree, leaf));
            sp.balance = 0.0;
            return sp;
        }
    }

    if (mode == SeparatorMode::exact_half) {
        auto alive = g.alive_vertices();
        SeparatorPaths best;
        int best_max = -1;
        auto search = [&]() {
            for (size_t ia = 0; ia < alive.size(); ++ia) {
                auto pa = tree_path(tree, alive[ia]);
                for (size_t ib = ia; ib < alive.size(); ++ib) {
                    auto pb = tree_path(tree, alive[ib]);
                    for (size_t ic = ib; ic < alive.size(); ++ic) {
                        std::vector<VertexId> removal = pa;
                        removal.insert(removal.end(), pb.begin(), pb.end());
                        auto pc = tree_path(tree, alive[ic]);
                        removal.insert(removal.end(), pc.begin(), pc.end());
                        int worst = detail::max_component_after(g, removal);
                        if (best_max < 0 || worst < best_max) {
                            best_max = worst;
                            best.paths = {pa, pb, std::move(pc)};
                        }
                        if (2 * best_max <= n) return;  // first halving triple wins
                    }
                }
            }
        };
        search();
        if (best_max < 0 || best_max > (n + 1) / 2)
            throw NoBalancedCycle("no halving triple of root paths exists");
        best.balance = n > 0 ? static_cast<double>(best_max) / n : 0.0;
        best.max_component = best_max;
        return best;
    }

    // fundamental-cycle mode
    std::set<std::pair<VertexId, VertexId>> candidates;
    auto add_candidate = [&](VertexId a, VertexId b) {
        if (a == b) return;
        auto key = std::minmax(a, b);
        candidates.insert({key.first, key.second});
    };
    for (const auto& e : g.edges())
        if (e.alive) add_candidate(e.tail, e.head);
    for (auto [a, b] : triangulate(g)) add_candidate(a, b);

    SeparatorPaths best;
    int best_max = -1;
    for (auto [a, b] : candidates) {
        auto pa = tree_path(tree, a);
        auto pb = tree_path(tree, b);
        std::vector<VertexId> removal = pa;
        removal.insert(removal.end(), pb.begin(), pb.end());
        int worst = detail::max_component_after(g, removal);
        if (best_max < 0 || worst < best_max) {
            best_max = worst;
            best.paths = {std::move(pa), std::move(pb)};
        }
        if (best_max == 0) break;
    }
    if (best_max < 0 || 3 * best_max > 2 * n + 2)
        throw NoBalancedCycle("no fundamental cycle is 2/3-balanced");
    best.balance = n > 0 ? static_cast<double>(best_max) / n : 0.0;
    best.max_component = best_max;
    return best;
}

struct SeparatorEvent {
    int level = 0;
    int graph_size = 0;
    int max_component = 0;
    std::vector<double> path_lengths;
};

struct CutLayerResult {
    std::vector<VertexId> cut;  // sorted, never contains a contracted root
    int max_depth = 0;
    std::vector<SeparatorEvent> events;
};

namespace detail {

inline void cut_layer_recurse(const Instance& g, const std::vector<double>& x,
                              VertexId root, Direction dir, bool root_contracted,
                              const GrowthParams& params, SeparatorMode mode, int depth,
                              CutLayerResult& out) {
    int real = g.alive_count() - (root_contracted ? 1 : 0);
    if (real <= 1) return;
    out.max_depth = std::max(out.max_depth, depth);

    SeparatorPaths sep = root_path_separator(g, x, root, dir, mode);

    SeparatorEvent ev;
    ev.level = depth;
    ev.graph_size = g.alive_count();
    ev.max_component = sep.max_component;
    std::vector<VertexId> path_union{root};
    for (const auto& path : sep.paths) {
        ev.path_lengths.push_back(path_length(x, path));
        path_union.insert(path_union.end(), path.begin(), path.end());

        std::vector<VertexId> stripped = path;
        if (root_contracted)
            stripped.erase(std::remove(stripped.begin(), stripped.end(), root),
                           stripped.end());
        if (stripped.empty()) continue;
        auto res = path_cutting(g, x, stripped, params);
        for (VertexId v : res.cut)
            if (v != root || !root_contracted) out.cut.push_back(v);
    }
    out.events.push_back(std::move(ev));

    std::sort(path_union.begin(), path_union.end());
    path_union.erase(std::unique(path_union.begin(), path_union.end()), path_union.end());
    std::vector<VertexId> w_set = path_union;
    w_set.erase(std::remove(w_set.begin(), w_set.end(), root), w_set.end());

    Instance contracted = g;
    if (!w_set.empty()) {
        auto [h, map] = g.contract_connected(w_set, root);
        contracted = std::move(h);
        (void)map;
    }
    std::vector<double> xc = x;
    xc[root] = 0.0;

    std::vector<char> removed(contracted.n(), 0);
    removed[root] = 1;
    std::vector<char> seen(contracted.n(), 0);
    for (VertexId s = 0; s < contracted.n(); ++s) {
        if (!contracted.is_alive(s) || s == root || seen[s]) continue;
        std::vector<VertexId> comp;
        std::vector<VertexId> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const auto* adj : {&contracted.out_neighbors(v), &contracted.in_neighbors(v)})
                for (VertexId w : *adj)
                    if (w != root && !seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
        comp.push_back(root);
        Instance sub = contracted.induced(comp);
        cut_layer_recurse(sub, xc, root, dir, true, params, mode, depth + 1, out);
    }
}

} // namespace detail

// Recursive separator process on one δ-bounded minor: separate with root
// paths, cut regions around each path, contract the separator into the root
// and recurse per weakly connected component. Contracted roots are stripped
// from the paths handed to path cutting and never enter the cut.
inline CutLayerResult cut_layer(const Instance& g, const std::vector<double>& x,
                                VertexId root, Direction dir, bool root_contracted,
                                const GrowthParams& params, SeparatorMode mode) {
    CutLayerResult out;
    detail::cut_layer_recurse(g, x, root, dir, root_contracted, params, mode, 1, out);
    std::sort(out.cut.begin(), out.cut.end());
    out.cut.erase(std::unique(out.cut.begin(), out.cut.end()), out.cut.end());
    return out;
}

} // namespace pmcut

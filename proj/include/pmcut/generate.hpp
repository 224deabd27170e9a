#pragma once

#include <random>
#include <set>
#include <vector>

#include "pmcut/graph.hpp"

namespace pmcut {

struct GenSpec {
    enum class Kind { grid, triangulation, layered_dag };
    Kind kind = Kind::grid;
    int n = 9;
    int k = 1;
    int cost_max = 100;
    std::uint64_t seed = 0;
};

namespace detail {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t next() { return eng(); }
    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    double uniform01() { return (next() >> 11) * (1.0 / 9007199254740992.0); }
    bool coin() { return next() & 1; }
};

inline double cross(std::pair<double, double> o, std::pair<double, double> a,
                    std::pair<double, double> b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

} // namespace detail

// Planar triangulation of random points: insert points in sorted order and
// connect each to the visible arc of the convex hull. Coordinates come along
// so the embedding is the angular order.
inline std::pair<std::vector<std::pair<double, double>>,
                 std::vector<std::pair<VertexId, VertexId>>>
random_triangulation(int n, detail::Rng& rng) {
    if (n < 3) throw InvalidSpec("triangulation needs at least 3 points");
    std::vector<std::pair<double, double>> pts(n);
    for (auto& p : pts) p = {rng.uniform01(), rng.uniform01()};
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return pts[a] < pts[b]; });

    std::set<std::pair<int, int>> edge_set;
    auto link = [&](int a, int b) {
        if (a == b) return;
        edge_set.insert(std::minmax(a, b));
    };

    // hull kept in ccw order
    std::vector<int> hull{order[0], order[1]};
    link(order[0], order[1]);
    size_t start = 2;
    // fold in leading collinear points as a chain
    while (start < order.size() &&
           std::abs(detail::cross(pts[hull[0]], pts[hull.back()], pts[order[start]])) < 1e-15) {
        link(hull.back(), order[start]);
        hull.push_back(order[start]);
        ++start;
    }
    if (start >= order.size()) throw InvalidSpec("all points are collinear");
    if (detail::cross(pts[hull[0]], pts[hull[1]], pts[order[start]]) < 0)
        std::reverse(hull.begin(), hull.end());
    {
        int p = order[start];
        for (int v : hull) link(p, v);
        hull.push_back(p);
        ++start;
    }

    for (size_t oi = start; oi < order.size(); ++oi) {
        int p = order[oi];
        int h = static_cast<int>(hull.size());
        std::vector<char> visible(h, 0);  // visible[i]: hull edge i -> i+1
        for (int i = 0; i < h; ++i)
            visible[i] = detail::cross(pts[hull[i]], pts[hull[(i + 1) % h]], pts[p]) < 0;
        // the visible edges form one contiguous arc; connect p across it
        int first = -1;
        for (int i = 0; i < h; ++i)
            if (visible[i] && !visible[(i + h - 1) % h]) { first = i; break; }
        if (first < 0) throw InvalidSpec("degenerate point set");
        std::vector<int> arc{hull[first]};
        int i = first;
        for (int guard = 0; visible[i]; ++guard) {
            if (guard > h) throw InvalidSpec("degenerate hull update");
            arc.push_back(hull[(i + 1) % h]);
            i = (i + 1) % h;
        }
        for (int v : arc) link(p, v);
        // new hull: keep everything outside the arc interior, insert p
        std::vector<int> next_hull;
        for (int j = (i) % h; j != first; j = (j + 1) % h) next_hull.push_back(hull[j]);
        next_hull.push_back(hull[first]);
        next_hull.push_back(p);
        hull = std::move(next_hull);
    }

    std::vector<std::pair<VertexId, VertexId>> edges(edge_set.begin(), edge_set.end());
    return {std::move(pts), std::move(edges)};
}

inline Instance generate(const GenSpec& spec) {
    if (spec.n < 2 || spec.k < 1 || spec.cost_max < 1)
        throw InvalidSpec("generator needs n >= 2, k >= 1, cost_max >= 1");
    detail::Rng rng(spec.seed);

    std::vector<std::pair<double, double>> coords;
    std::vector<std::pair<VertexId, VertexId>> undirected;

    if (spec.kind == GenSpec::Kind::grid || spec.kind == GenSpec::Kind::layered_dag) {
        int rows = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(spec.n))));
        int cols = (spec.n + rows - 1) / rows;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                coords.emplace_back(static_cast<double>(j), static_cast<double>(i));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                int v = i * cols + j;
                if (j + 1 < cols) undirected.emplace_back(v, v + 1);
                if (i + 1 < rows) undirected.emplace_back(v, v + cols);
            }
    } else {
        auto [pts, eds] = random_triangulation(spec.n, rng);
        coords = std::move(pts);
        undirected = std::move(eds);
    }

    int n = static_cast<int>(coords.size());
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(undirected.size());
    for (auto [a, b] : undirected) {
        if (spec.kind == GenSpec::Kind::layered_dag) {
            edges.emplace_back(std::min(a, b), std::max(a, b));  // rightward/downward
        } else {
            bool flip = rng.coin();
            edges.emplace_back(flip ? b : a, flip ? a : b);
        }
    }

    // reachability scratch for terminal sampling
    std::vector<std::vector<VertexId>> adj(n);
    for (auto [a, b] : edges) adj[a].push_back(b);
    auto reachable = [&](VertexId s) {
        std::vector<char> seen(n, 0);
        std::vector<VertexId> queue{s};
        seen[s] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (VertexId w : adj[queue[qi]])
                if (!seen[w]) { seen[w] = 1; queue.push_back(w); }
        return seen;
    };
    // a pair is only separable if every s→t path passes a cuttable vertex
    auto terminal_only_path = [&](const std::vector<char>& term, VertexId s, VertexId t) {
        std::vector<char> seen(n, 0);
        std::vector<VertexId> queue{s};
        seen[s] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (VertexId w : adj[queue[qi]]) {
                if (seen[w] || !term[w]) continue;
                if (w == t) return true;
                seen[w] = 1;
                queue.push_back(w);
            }
        return false;
    };

    std::set<std::pair<VertexId, VertexId>> chosen;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::vector<char> term(n, 0);
    auto admissible = [&](VertexId s, VertexId t) {
        if (s == t || chosen.count({s, t}) || !reachable(s)[t]) return false;
        std::vector<char> next_term = term;
        next_term[s] = next_term[t] = 1;
        if (terminal_only_path(next_term, s, t)) return false;
        for (auto [ps, pt] : pairs)
            if (terminal_only_path(next_term, ps, pt)) return false;
        return true;
    };
    auto accept = [&](VertexId s, VertexId t) {
        chosen.insert({s, t});
        pairs.emplace_back(s, t);
        term[s] = term[t] = 1;
    };
    for (int i = 0; i < spec.k; ++i) {
        bool found = false;
        for (int attempt = 0; attempt < 500 && !found; ++attempt) {
            VertexId s = rng.uniform_int(0, n - 1);
            VertexId t = rng.uniform_int(0, n - 1);
            if (!admissible(s, t)) continue;
            accept(s, t);
            found = true;
        }
        if (!found) {
            for (VertexId s = 0; s < n && !found; ++s)
                for (VertexId t = 0; t < n && !found; ++t)
                    if (admissible(s, t)) {
                        accept(s, t);
                        found = true;
                    }
        }
        if (!found) throw InvalidSpec("cannot place the requested number of pairs");
    }

    std::vector<Cost> costs(n);
    for (int v = 0; v < n; ++v)
        costs[v] = Cost::finite(static_cast<double>(rng.uniform_int(1, spec.cost_max)));
    for (auto [s, t] : pairs) {
        costs[s] = Cost::inf();
        costs[t] = Cost::inf();
    }

    return Instance::from_coords(n, std::move(costs), std::move(edges), coords,
                                 std::move(pairs));
}

} // namespace pmcut

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pmcut/errors.hpp"

namespace pmcut {

constexpr double kTol = 1e-9;

using VertexId = int;

// Vertex cost: finite non-negative value or infinity. Infinite costs are a
// flag, never an operand; summing a set containing an infinite vertex keeps
// the flag set.
struct Cost {
    bool infinite = false;
    double value = 0.0;

    static Cost inf() { return Cost{true, 0.0}; }
    static Cost finite(double v) { return Cost{false, v}; }
};

struct DirectedEdge {
    VertexId tail = -1;
    VertexId head = -1;
    bool alive = false;
};

// One contraction step: forward maps every id of the input graph to its
// representative in the output graph; provenance lists, per surviving id,
// the input ids it stands for.
struct ContractionMap {
    std::vector<VertexId> forward;
    std::vector<std::vector<VertexId>> provenance;

    static ContractionMap identity(int n) {
        ContractionMap m;
        m.forward.resize(n);
        m.provenance.resize(n);
        for (int v = 0; v < n; ++v) {
            m.forward[v] = v;
            m.provenance[v] = {v};
        }
        return m;
    }

    // this := other applied after this.
    void compose(const ContractionMap& other) {
        for (auto& f : forward)
            if (f >= 0) f = other.forward[f];
        std::vector<std::vector<VertexId>> prov(other.provenance.size());
        for (size_t cur = 0; cur < other.provenance.size(); ++cur) {
            for (VertexId mid : other.provenance[cur]) {
                const auto& orig = provenance[mid];
                prov[cur].insert(prov[cur].end(), orig.begin(), orig.end());
            }
            std::sort(prov[cur].begin(), prov[cur].end());
        }
        provenance = std::move(prov);
    }
};

struct CutSet {
    std::vector<VertexId> members;  // sorted
    double cost = 0.0;
};

// Planar directed multigraph with a rotation-system embedding.
//
// Vertices and edges keep their ids for the lifetime of a pipeline; minors
// are represented by dead (inactive) entries rather than renumbering, so
// layer and cut sets always speak original ids. Half-edge 2e sits in the
// rotation of tail(e), half-edge 2e+1 in the rotation of head(e).
class Instance {
public:
    Instance() = default;

    static Instance from_rotation(int n, std::vector<Cost> costs,
                                  std::vector<std::pair<VertexId, VertexId>> edge_list,
                                  const std::vector<std::vector<int>>& rotation_edges,
                                  std::vector<std::pair<VertexId, VertexId>> pairs) {
        Instance g = skeleton(n, std::move(costs), std::move(edge_list), std::move(pairs));
        if (static_cast<int>(rotation_edges.size()) != n)
            throw InvalidInstance("rotation table must list every vertex");
        g.rotation_.assign(n, {});
        std::vector<char> seen_half(2 * g.edges_.size(), 0);
        for (VertexId v = 0; v < n; ++v) {
            for (int e : rotation_edges[v]) {
                if (e < 0 || e >= static_cast<int>(g.edges_.size()))
                    throw InvalidInstance("rotation refers to unknown edge " + std::to_string(e));
                const auto& ed = g.edges_[e];
                int h;
                if (ed.tail == v)
                    h = 2 * e;
                else if (ed.head == v)
                    h = 2 * e + 1;
                else
                    throw InvalidInstance("rotation lists edge not incident to vertex");
                if (seen_half[h])
                    throw InvalidInstance("edge " + std::to_string(e) + " listed twice at one endpoint");
                seen_half[h] = 1;
                g.rotation_[v].push_back(h);
            }
        }
        for (size_t h = 0; h < seen_half.size(); ++h)
            if (!seen_half[h])
                throw InvalidInstance("edge " + std::to_string(h >> 1) + " missing from a rotation");
        g.finish_build();
        return g;
    }

    static Instance from_coords(int n, std::vector<Cost> costs,
                                std::vector<std::pair<VertexId, VertexId>> edge_list,
                                const std::vector<std::pair<double, double>>& coords,
                                std::vector<std::pair<VertexId, VertexId>> pairs) {
        Instance g = skeleton(n, std::move(costs), std::move(edge_list), std::move(pairs));
        if (static_cast<int>(coords.size()) != n)
            throw InvalidInstance("coords must list every vertex");
        g.rotation_.assign(n, {});
        for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
            g.rotation_[g.edges_[e].tail].push_back(2 * e);
            g.rotation_[g.edges_[e].head].push_back(2 * e + 1);
        }
        for (VertexId v = 0; v < n; ++v) {
            auto& rot = g.rotation_[v];
            std::sort(rot.begin(), rot.end(), [&](int ha, int hb) {
                VertexId a = g.far_vertex(ha), b = g.far_vertex(hb);
                double anga = std::atan2(coords[a].second - coords[v].second,
                                         coords[a].first - coords[v].first);
                double angb = std::atan2(coords[b].second - coords[v].second,
                                         coords[b].first - coords[v].first);
                if (anga != angb) return anga < angb;
                return ha < hb;
            });
        }
        g.finish_build();
        return g;
    }

    // --- basic accessors -------------------------------------------------

    int n() const { return static_cast<int>(cost_.size()); }
    bool is_alive(VertexId v) const { return v >= 0 && v < n() && alive_[v]; }
    int alive_count() const { return alive_count_; }

    std::vector<VertexId> alive_vertices() const {
        std::vector<VertexId> out;
        out.reserve(alive_count_);
        for (VertexId v = 0; v < n(); ++v)
            if (alive_[v]) out.push_back(v);
        return out;
    }

    const Cost& cost(VertexId v) const { return cost_[v]; }
    void set_cost(VertexId v, Cost c) { cost_[v] = c; }

    const std::vector<DirectedEdge>& edges() const { return edges_; }
    const std::vector<std::pair<VertexId, VertexId>>& pairs() const { return pairs_; }
    const std::vector<std::vector<int>>& rotations() const { return rotation_; }

    bool is_terminal(VertexId v) const { return terminal_[v]; }

    int alive_edge_count() const {
        int m = 0;
        for (const auto& e : edges_)
            if (e.alive) ++m;
        return m;
    }

    // Deduplicated adjacency used by all distance computations; parallel
    // edges stay in the embedding only.
    const std::vector<VertexId>& out_neighbors(VertexId v) const { return out_[v]; }
    const std::vector<VertexId>& in_neighbors(VertexId v) const { return in_[v]; }

    // --- faces and the Euler identity ------------------------------------

    int twin(int h) const { return h ^ 1; }
    VertexId own_vertex(int h) const {
        return (h & 1) ? edges_[h >> 1].head : edges_[h >> 1].tail;
    }
    VertexId far_vertex(int h) const { return own_vertex(h ^ 1); }

    // Orbits of the next-half-edge permutation; every alive half-edge lies in
    // exactly one face walk.
    std::vector<std::vector<int>> faces() const {
        std::vector<std::vector<int>> result;
        std::vector<char> used(2 * edges_.size(), 0);
        for (int h0 = 0; h0 < 2 * static_cast<int>(edges_.size()); ++h0) {
            if (used[h0] || !edges_[h0 >> 1].alive) continue;
            std::vector<int> face;
            int h = h0;
            do {
                used[h] = 1;
                face.push_back(h);
                VertexId w = far_vertex(h);
                const auto& rot = rotation_[w];
                int pos = -1;
                for (int i = 0; i < static_cast<int>(rot.size()); ++i)
                    if (rot[i] == twin(h)) { pos = i; break; }
                if (pos < 0) throw EmbeddingInvalid("half-edge missing from rotation");
                h = rot[(pos + 1) % rot.size()];
            } while (h != h0);
            result.push_back(std::move(face));
        }
        return result;
    }

    // V - E + F = 2 on every component with at least one edge.
    bool euler_ok() const {
        auto comps = weak_components();
        std::vector<int> comp_of(n(), -1);
        for (int c = 0; c < static_cast<int>(comps.size()); ++c)
            for (VertexId v : comps[c]) comp_of[v] = c;
        std::vector<int> verts(comps.size(), 0), eds(comps.size(), 0), fcs(comps.size(), 0);
        for (int c = 0; c < static_cast<int>(comps.size()); ++c)
            verts[c] = static_cast<int>(comps[c].size());
        for (const auto& e : edges_)
            if (e.alive) eds[comp_of[e.tail]]++;
        for (const auto& f : faces())
            fcs[comp_of[own_vertex(f[0])]]++;
        for (size_t c = 0; c < comps.size(); ++c) {
            if (eds[c] == 0) continue;  // isolated vertex
            if (verts[c] - eds[c] + fcs[c] != 2) return false;
        }
        return true;
    }

    // --- connectivity -----------------------------------------------------

    std::vector<std::vector<VertexId>> weak_components() const {
        std::vector<std::vector<VertexId>> comps;
        std::vector<char> seen(n(), 0);
        for (VertexId s = 0; s < n(); ++s) {
            if (!alive_[s] || seen[s]) continue;
            std::vector<VertexId> comp;
            std::vector<VertexId> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                comp.push_back(v);
                for (VertexId w : out_[v])
                    if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
                for (VertexId w : in_[v])
                    if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;  // ordered by minimum id because seeds scan upward
    }

    bool weakly_connected() const { return weak_components().size() <= 1; }

    // --- minors -----------------------------------------------------------

    Instance delete_vertices(const std::vector<VertexId>& victims) const {
        Instance g = *this;
        std::vector<char> gone(g.n(), 0);
        for (VertexId v : victims) {
            if (!g.is_alive(v)) throw InvalidInstance("deleting dead vertex");
            gone[v] = 1;
        }
        for (int e = 0; e < static_cast<int>(g.edges_.size()); ++e) {
            auto& ed = g.edges_[e];
            if (!ed.alive) continue;
            if (gone[ed.tail] || gone[ed.head]) {
                if (!gone[ed.tail]) g.erase_from_rotation(ed.tail, 2 * e);
                if (!gone[ed.head]) g.erase_from_rotation(ed.head, 2 * e + 1);
                ed.alive = false;
            }
        }
        for (VertexId v = 0; v < g.n(); ++v) {
            if (gone[v]) {
                g.rotation_[v].clear();
                g.alive_[v] = 0;
            }
        }
        g.alive_count_ = static_cast<int>(std::count(g.alive_.begin(), g.alive_.end(), 1));
        g.rebuild_adjacency();
        return g;
    }

    Instance induced(const std::vector<VertexId>& keep) const {
        std::vector<char> keep_mask(n(), 0);
        for (VertexId v : keep) keep_mask[v] = 1;
        std::vector<VertexId> victims;
        for (VertexId v = 0; v < n(); ++v)
            if (alive_[v] && !keep_mask[v]) victims.push_back(v);
        return delete_vertices(victims);
    }

    // Contract W ∪ {into} to the single vertex `into`, splicing rotations
    // edge by edge so the embedding survives. The super-vertex gets cost 0;
    // self-loops vanish, parallel edges stay embedded.
    std::pair<Instance, ContractionMap>
    contract_connected(const std::vector<VertexId>& w_set, VertexId into) const {
        Instance g = *this;
        std::vector<char> member(g.n(), 0);
        if (!g.is_alive(into)) throw InvalidInstance("contraction target dead");
        member[into] = 1;
        for (VertexId v : w_set) {
            if (!g.is_alive(v)) throw InvalidInstance("contracting dead vertex");
            member[v] = 1;
        }

        // undirected BFS from `into` restricted to the member set
        std::vector<std::pair<int, VertexId>> absorb;  // (edge id, new vertex)
        {
            std::vector<char> seen(g.n(), 0);
            seen[into] = 1;
            std::vector<VertexId> queue{into};
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                VertexId v = queue[qi];
                for (int h : g.rotation_[v]) {
                    VertexId w = g.far_vertex(h);
                    if (member[w] && !seen[w]) {
                        seen[w] = 1;
                        absorb.emplace_back(h >> 1, w);
                        queue.push_back(w);
                    }
                }
            }
            for (VertexId v = 0; v < g.n(); ++v)
                if (member[v] && !seen[v])
                    throw NotConnected("contraction set is not weakly connected");
        }

        for (auto [e, w] : absorb) g.contract_edge_into(e, into);
        g.set_cost(into, Cost::finite(0.0));
        g.alive_count_ = static_cast<int>(std::count(g.alive_.begin(), g.alive_.end(), 1));
        g.rebuild_adjacency();

        ContractionMap map = ContractionMap::identity(n());
        std::vector<VertexId> members;
        for (VertexId v = 0; v < n(); ++v)
            if (member[v]) {
                map.forward[v] = into;
                members.push_back(v);
            }
        for (VertexId v : members) map.provenance[v].clear();
        map.provenance[into] = members;
        for (VertexId v = 0; v < n(); ++v)
            if (!alive_[v]) {
                map.forward[v] = -1;
                map.provenance[v].clear();
            }
        return {std::move(g), std::move(map)};
    }

    // --- validation used by builders --------------------------------------

    void check_costs_and_pairs() const {
        for (VertexId v = 0; v < n(); ++v) {
            if (!cost_[v].infinite && (cost_[v].value < 0 || !std::isfinite(cost_[v].value)))
                throw NegativeCost("vertex " + std::to_string(v) + " has negative cost");
        }
        for (auto [s, t] : pairs_) {
            if (s < 0 || s >= n() || t < 0 || t >= n())
                throw InvalidInstance("terminal id out of range");
            if (s == t) throw InvalidInstance("terminal pair with s == t");
            if (!cost_[s].infinite || !cost_[t].infinite)
                throw TerminalFiniteCost("terminals must have infinite cost");
        }
    }

private:
    static Instance skeleton(int n, std::vector<Cost> costs,
                             std::vector<std::pair<VertexId, VertexId>> edge_list,
                             std::vector<std::pair<VertexId, VertexId>> pairs) {
        if (n < 0 || static_cast<int>(costs.size()) != n)
            throw InvalidInstance("cost table must list every vertex");
        Instance g;
        g.cost_ = std::move(costs);
        g.alive_.assign(n, 1);
        g.alive_count_ = n;
        g.pairs_ = std::move(pairs);
        g.edges_.reserve(edge_list.size());
        for (auto [t, h] : edge_list) {
            if (t < 0 || t >= n || h < 0 || h >= n)
                throw InvalidInstance("edge endpoint out of range");
            if (t == h) throw EmbeddingInvalid("self-loops are not allowed");
            g.edges_.push_back(DirectedEdge{t, h, true});
        }
        g.terminal_.assign(n, 0);
        for (auto [s, t] : g.pairs_) {
            if (s >= 0 && s < n) g.terminal_[s] = 1;
            if (t >= 0 && t < n) g.terminal_[t] = 1;
        }
        return g;
    }

    void finish_build() {
        check_costs_and_pairs();
        rebuild_adjacency();
        if (!euler_ok())
            throw EmbeddingInvalid("rotation system fails the Euler identity");
    }

    void erase_from_rotation(VertexId v, int h) {
        auto& rot = rotation_[v];
        rot.erase(std::remove(rot.begin(), rot.end(), h), rot.end());
    }

    // Merge vertex b into a along edge e (which joins them): open b's
    // rotation at e and splice it into a's rotation in place of e.
    void contract_edge_into(int e, VertexId a) {
        auto& ed = edges_[e];
        if (!ed.alive) throw InvalidInstance("contracting dead edge");
        VertexId b = (ed.tail == a) ? ed.head : ed.tail;
        if (b == a || !(ed.tail == a || ed.head == a))
            throw InvalidInstance("edge does not join contraction target");
        int ha = (edges_[e].tail == a) ? 2 * e : 2 * e + 1;
        int hb = twin(ha);

        const auto& ra = rotation_[a];
        const auto& rb = rotation_[b];
        auto pos_a = std::find(ra.begin(), ra.end(), ha) - ra.begin();
        auto pos_b = std::find(rb.begin(), rb.end(), hb) - rb.begin();
        if (pos_a == static_cast<long>(ra.size()) || pos_b == static_cast<long>(rb.size()))
            throw InvalidInstance("rotation system out of sync with edge list");

        std::vector<int> merged;
        merged.reserve(ra.size() + rb.size() - 2);
        merged.insert(merged.end(), ra.begin(), ra.begin() + pos_a);
        for (size_t i = 1; i < rb.size(); ++i)
            merged.push_back(rb[(pos_b + i) % rb.size()]);
        merged.insert(merged.end(), ra.begin() + pos_a + 1, ra.end());

        ed.alive = false;
        rotation_[a] = std::move(merged);
        rotation_[b].clear();
        alive_[b] = 0;

        for (int h : rotation_[a]) {
            auto& other = edges_[h >> 1];
            if (h & 1) {
                if (other.head == b) other.head = a;
            } else {
                if (other.tail == b) other.tail = a;
            }
        }
        // parallels between a and b are now self-loops; drop them
        std::vector<int> cleaned;
        cleaned.reserve(rotation_[a].size());
        for (int h : rotation_[a]) {
            auto& other = edges_[h >> 1];
            if (other.tail == a && other.head == a) {
                other.alive = false;
            } else {
                cleaned.push_back(h);
            }
        }
        rotation_[a] = std::move(cleaned);
    }

    void rebuild_adjacency() {
        out_.assign(n(), {});
        in_.assign(n(), {});
        for (const auto& e : edges_) {
            if (!e.alive) continue;
            out_[e.tail].push_back(e.head);
            in_[e.head].push_back(e.tail);
        }
        auto dedupe = [](std::vector<VertexId>& v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        };
        for (VertexId v = 0; v < n(); ++v) {
            dedupe(out_[v]);
            dedupe(in_[v]);
        }
    }

    std::vector<Cost> cost_;
    std::vector<char> alive_;
    std::vector<char> terminal_;
    int alive_count_ = 0;
    std::vector<DirectedEdge> edges_;
    std::vector<std::vector<int>> rotation_;
    std::vector<std::pair<VertexId, VertexId>> pairs_;
    std::vector<std::vector<VertexId>> out_, in_;
};

// Cost of a vertex set; infinite members flag the sum as infinite.
inline Cost set_cost(const Instance& g, const std::vector<VertexId>& members) {
    Cost total = Cost::finite(0.0);
    for (VertexId v : members) {
        if (g.cost(v).infinite)
            total.infinite = true;
        else
            total.value += g.cost(v).value;
    }
    return total;
}

inline CutSet make_cut_set(const Instance& g, std::vector<VertexId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Cost c = set_cost(g, members);
    if (c.infinite) throw InvalidInstance("cut set contains an infinite-cost vertex");
    return CutSet{std::move(members), c.value};
}

// Subdivide every edge with a cost-carrying middle vertex; original vertices
// become uncuttable. Node multicut on the result equals edge multicut on the
// input.
inline Instance edge_to_node_reduction(const Instance& g, const std::vector<double>& edge_cost) {
    if (edge_cost.size() != g.edges().size())
        throw InvalidInstance("edge cost table size mismatch");
    int n0 = g.n();
    int m = static_cast<int>(g.edges().size());
    std::vector<Cost> costs(n0 + m, Cost::inf());
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(2 * m);
    for (int e = 0; e < m; ++e) {
        if (edge_cost[e] < 0) throw NegativeCost("edge cost must be non-negative");
        costs[n0 + e] = Cost::finite(edge_cost[e]);
        edges.emplace_back(g.edges()[e].tail, n0 + e);   // edge 2e
        edges.emplace_back(n0 + e, g.edges()[e].head);   // edge 2e+1
    }
    std::vector<std::vector<int>> rot(n0 + m);
    for (VertexId v = 0; v < n0; ++v) {
        for (int h : g.rotations()[v]) {
            int e = h >> 1;
            rot[v].push_back((h & 1) ? 2 * e + 1 : 2 * e);
        }
    }
    for (int e = 0; e < m; ++e) rot[n0 + e] = {2 * e, 2 * e + 1};
    return Instance::from_rotation(n0 + m, std::move(costs), std::move(edges), rot, g.pairs());
}

} // namespace pmcut

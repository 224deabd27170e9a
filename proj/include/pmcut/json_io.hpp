#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pmcut/lp.hpp"
#include "pmcut/rounding.hpp"

namespace pmcut {

using json = nlohmann::ordered_json;

inline json cost_to_json(const Cost& c) {
    if (c.infinite) return json("inf");
    return json(c.value);
}

inline Cost cost_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return Cost::inf();
        throw InvalidInstance("cost must be a number or \"inf\"");
    }
    return Cost::finite(j.get<double>());
}

inline json instance_to_json(const Instance& g) {
    json j;
    j["n"] = g.n();
    json verts = json::array();
    for (VertexId v = 0; v < g.n(); ++v) {
        json jv;
        jv["id"] = v;
        jv["cost"] = cost_to_json(g.cost(v));
        verts.push_back(jv);
    }
    j["vertices"] = verts;
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back(json::array({e.tail, e.head}));
    j["edges"] = edges;
    json rot = json::object();
    for (VertexId v = 0; v < g.n(); ++v) {
        json order = json::array();
        for (int h : g.rotations()[v]) order.push_back(h >> 1);
        rot[std::to_string(v)] = order;
    }
    j["rotation"] = rot;
    json pairs = json::array();
    for (auto [s, t] : g.pairs()) pairs.push_back(json::array({s, t}));
    j["pairs"] = pairs;
    return j;
}

inline Instance instance_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Cost> costs(n);
    std::vector<char> seen(n, 0);
    for (const auto& jv : j.at("vertices")) {
        int id = jv.at("id").get<int>();
        if (id < 0 || id >= n) throw InvalidInstance("vertex id out of range");
        if (seen[id]) throw DuplicateId("vertex id " + std::to_string(id) + " repeats");
        seen[id] = 1;
        costs[id] = cost_from_json(jv.at("cost"));
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw InvalidInstance("vertex ids must be dense in [0, n)");

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& je : j.at("edges"))
        edges.emplace_back(je.at(0).get<int>(), je.at(1).get<int>());

    std::vector<std::pair<VertexId, VertexId>> pairs;
    if (j.contains("pairs"))
        for (const auto& jp : j.at("pairs"))
            pairs.emplace_back(jp.at(0).get<int>(), jp.at(1).get<int>());

    if (j.contains("rotation")) {
        std::vector<std::vector<int>> rot(n);
        for (auto it = j.at("rotation").begin(); it != j.at("rotation").end(); ++it) {
            int v = std::stoi(it.key());
            if (v < 0 || v >= n) throw InvalidInstance("rotation key out of range");
            for (const auto& e : it.value()) rot[v].push_back(e.get<int>());
        }
        return Instance::from_rotation(n, std::move(costs), std::move(edges), rot,
                                       std::move(pairs));
    }
    if (j.contains("coords")) {
        std::vector<std::pair<double, double>> coords;
        for (const auto& jc : j.at("coords"))
            coords.emplace_back(jc.at(0).get<double>(), jc.at(1).get<double>());
        return Instance::from_coords(n, std::move(costs), std::move(edges), coords,
                                     std::move(pairs));
    }
    throw EmbeddingInvalid("instance carries neither a rotation system nor coordinates");
}

// Edge-weighted input for the reduction: edges carry [tail, head, cost] and
// every vertex is uncuttable.
inline std::pair<Instance, std::vector<double>> edge_weighted_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<Cost> costs(n, Cost::inf());
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<double> weights;
    for (const auto& je : j.at("edges")) {
        edges.emplace_back(je.at(0).get<int>(), je.at(1).get<int>());
        weights.push_back(je.size() > 2 ? je.at(2).get<double>() : 1.0);
    }
    std::vector<std::pair<VertexId, VertexId>> pairs;
    if (j.contains("pairs"))
        for (const auto& jp : j.at("pairs"))
            pairs.emplace_back(jp.at(0).get<int>(), jp.at(1).get<int>());

    Instance g = [&] {
        if (j.contains("rotation")) {
            std::vector<std::vector<int>> rot(n);
            for (auto it = j.at("rotation").begin(); it != j.at("rotation").end(); ++it)
                for (const auto& e : it.value()) rot[std::stoi(it.key())].push_back(e.get<int>());
            return Instance::from_rotation(n, std::move(costs), std::move(edges), rot, pairs);
        }
        if (j.contains("coords")) {
            std::vector<std::pair<double, double>> coords;
            for (const auto& jc : j.at("coords"))
                coords.emplace_back(jc.at(0).get<double>(), jc.at(1).get<double>());
            return Instance::from_coords(n, std::move(costs), std::move(edges), coords, pairs);
        }
        throw EmbeddingInvalid("instance carries neither a rotation system nor coordinates");
    }();
    return {std::move(g), std::move(weights)};
}

inline json cut_to_json(const CutSet& cut) {
    json j;
    j["cut"] = cut.members;
    j["cost"] = cut.cost;
    return j;
}

inline CutSet cut_from_json(const Instance& g, const json& j) {
    std::vector<VertexId> members;
    for (const auto& v : j.at("cut")) members.push_back(v.get<int>());
    return make_cut_set(g, std::move(members));
}

inline json lp_result_to_json(const LpResult& lp) {
    json j;
    j["value"] = lp.value;
    json x = json::object();
    for (VertexId v = 0; v < static_cast<int>(lp.assignment.x.size()); ++v)
        if (lp.assignment.x[v] > 0.0) x[std::to_string(v)] = lp.assignment.x[v];
    j["x"] = x;
    j["iterations"] = lp.iterations;
    j["constraints"] = lp.constraints_generated;
    return j;
}

inline json report_to_json(const RoundingReport& r) {
    json j;
    j["cut"] = r.cut.members;
    j["cost"] = r.cut.cost;
    j["lp_value"] = r.lp_value;
    json parts;
    parts["heavy"] = r.cost_heavy;
    parts["layer_cut"] = r.cost_layer_cut;
    parts["separators"] = r.cost_separators;
    parts["sum"] = r.sum_parts;
    j["parts"] = parts;
    j["n"] = r.n;
    j["k"] = r.k;
    j["L"] = r.L;
    j["delta"] = r.delta;
    j["ratio_vs_lp"] = r.ratio_vs_lp;
    j["max_recursion_depth"] = r.max_recursion_depth;
    j["lp_iterations"] = r.lp_iterations;
    j["feasible"] = r.feasible;
    if (!r.audits.empty()) {
        json audits = json::array();
        for (const auto& a : r.audits) {
            json ja;
            ja["lemma"] = a.lemma;
            ja["instances"] = a.instances;
            ja["violations"] = a.violations;
            ja["worst_slack"] = a.worst_slack;
            audits.push_back(ja);
        }
        j["audits"] = audits;
    }
    return j;
}

inline json layering_to_json(const Layering& lay) {
    json j;
    j["layers"] = lay.layers;
    j["cut"] = lay.cut;
    json parities = json::array();
    for (int i = 0; i < static_cast<int>(lay.layers.size()); ++i)
        parities.push_back(i % 2 == 0 ? "out" : "in");
    j["parities"] = parities;
    return j;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidSpec("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidSpec("cannot write " + path);
    out << text;
}

inline Instance load_instance(const std::string& path) {
    return instance_from_json(json::parse(read_text_file(path)));
}

// FNV-1a, for determinism checks on serialized reports.
inline std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace pmcut

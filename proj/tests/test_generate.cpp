#include <doctest.h>

#include "oracles.hpp"
#include "pmcut/generate.hpp"
#include "pmcut/json_io.hpp"
#include "pmcut/lp.hpp"

using namespace pmcut;

TEST_CASE("3x3 grid: nine vertices, twelve oriented slots, Euler holds") {
    GenSpec spec;
    spec.kind = GenSpec::Kind::grid;
    spec.n = 9;
    spec.k = 1;
    spec.seed = 7;
    Instance g = generate(spec);
    CHECK(g.n() == 9);
    CHECK(g.alive_edge_count() == 12);
    CHECK(g.euler_ok());
}

TEST_CASE("generation is a pure function of the spec") {
    GenSpec spec;
    spec.kind = GenSpec::Kind::triangulation;
    spec.n = 30;
    spec.k = 3;
    spec.seed = 1234;
    std::string a = instance_to_json(generate(spec)).dump();
    std::string b = instance_to_json(generate(spec)).dump();
    CHECK(a == b);
    spec.seed = 1235;
    std::string c = instance_to_json(generate(spec)).dump();
    CHECK(a != c);
}

TEST_CASE("triangulation instances pass the face-walk audit at size 50") {
    GenSpec spec;
    spec.kind = GenSpec::Kind::triangulation;
    spec.n = 50;
    spec.k = 4;
    spec.seed = 99;
    Instance g = generate(spec);
    CHECK(g.euler_ok());
    size_t sides = 0;
    for (const auto& f : g.faces()) sides += f.size();
    CHECK(sides == 2 * static_cast<size_t>(g.alive_edge_count()));
}

TEST_CASE("every generated instance is solvable: pairs connected, never terminal-only") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GenSpec spec;
        spec.kind = seed % 3 == 0   ? GenSpec::Kind::grid
                    : seed % 3 == 1 ? GenSpec::Kind::triangulation
                                    : GenSpec::Kind::layered_dag;
        spec.n = 10 + static_cast<int>(seed);
        spec.k = 1 + static_cast<int>(seed % 4);
        spec.seed = seed * 333;
        Instance g = generate(spec);
        CHECK(static_cast<int>(g.pairs().size()) == spec.k);
        LpResult lp = solve_lp(g);  // throws if a pair is terminal-only joined
        CHECK(lp.value >= 0.0);
        for (auto [s, t] : g.pairs()) {
            CHECK(g.cost(s).infinite);
            CHECK(g.cost(t).infinite);
        }
    }
}

TEST_CASE("layered dag orientation is acyclic") {
    GenSpec spec;
    spec.kind = GenSpec::Kind::layered_dag;
    spec.n = 25;
    spec.k = 2;
    spec.seed = 17;
    Instance g = generate(spec);
    for (const auto& e : g.edges())
        if (e.alive) CHECK(e.tail < e.head);
}

TEST_CASE("invalid generator specs are rejected") {
    GenSpec spec;
    spec.n = 1;
    CHECK_THROWS_AS(generate(spec), InvalidSpec);
    spec.n = 10;
    spec.k = 0;
    CHECK_THROWS_AS(generate(spec), InvalidSpec);
}

TEST_CASE("instance json round trip preserves structure and distances") {
    GenSpec spec;
    spec.kind = GenSpec::Kind::triangulation;
    spec.n = 20;
    spec.k = 2;
    spec.seed = 5;
    Instance g = generate(spec);
    Instance back = instance_from_json(instance_to_json(g));
    CHECK(back.n() == g.n());
    CHECK(back.alive_edge_count() == g.alive_edge_count());
    CHECK(back.pairs() == g.pairs());
    CHECK(instance_to_json(back).dump() == instance_to_json(g).dump());
    for (VertexId v = 0; v < g.n(); ++v) {
        CHECK(back.cost(v).infinite == g.cost(v).infinite);
        if (!g.cost(v).infinite) CHECK(back.cost(v).value == g.cost(v).value);
    }
    std::vector<double> x(g.n(), 0.01);
    for (VertexId v : {0, 5, 11})
        for (VertexId w = 0; w < g.n(); ++w) {
            double a = distance(g, x, v, w), b = distance(back, x, v, w);
            CHECK(((a == kInfDist && b == kInfDist) || a == doctest::Approx(b)));
        }
}

TEST_CASE("json loader rejects malformed instances") {
    json base = instance_to_json(generate([] {
        GenSpec s;
        s.n = 9;
        s.k = 1;
        s.seed = 3;
        return s;
    }()));

    json dup = base;
    dup["vertices"][1]["id"] = 0;  // two vertices claim id 0
    CHECK_THROWS_AS(instance_from_json(dup), DuplicateId);

    json neg = base;
    for (auto& jv : neg["vertices"])
        if (!jv["cost"].is_string()) { jv["cost"] = -2.0; break; }
    CHECK_THROWS_AS(instance_from_json(neg), NegativeCost);

    json naked = base;
    naked.erase("rotation");
    CHECK_THROWS_AS(instance_from_json(naked), EmbeddingInvalid);

    json badcost = base;
    badcost["vertices"][0]["cost"] = "huge";
    CHECK_THROWS_AS(instance_from_json(badcost), InvalidInstance);
}

TEST_CASE("cut json round trip") {
    Instance g = oracles::line_instance({1, 4, 1}, {{0, 2}});
    CutSet cut = make_cut_set(g, {1});
    json j = cut_to_json(cut);
    CutSet back = cut_from_json(g, j);
    CHECK(back.members == cut.members);
    CHECK(back.cost == doctest::Approx(cut.cost));
}

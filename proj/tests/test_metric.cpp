#include <doctest.h>

#include "oracles.hpp"
#include "pmcut/generate.hpp"
#include "pmcut/metric.hpp"

using namespace pmcut;

TEST_CASE("distance sums node lengths over both endpoints") {
    Instance g = oracles::line_instance({1, 1, 1});
    std::vector<double> x = {0.1, 0.2, 0.3};
    CHECK(distance(g, x, 0, 2) == doctest::Approx(0.6));
    CHECK(distance(g, x, 1, 1) == doctest::Approx(0.2));
    CHECK(distance(g, x, 2, 0) == kInfDist);  // edges point forward only
}

TEST_CASE("diamond picks the lighter branch") {
    // 0 -> 1 -> 3 and 0 -> 2 -> 3
    Instance g = oracles::coords_instance(4, {{0, 0}, {1, 1}, {1, -1}, {2, 0}},
                                          {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
    std::vector<double> x = {0.0, 0.5, 0.1, 0.0};
    CHECK(distance(g, x, 0, 3) == doctest::Approx(0.1));
}

TEST_CASE("dijkstra matches the relaxation oracle on random instances") {
    for (std::uint64_t seed : {3, 14, 15, 92, 65}) {
        GenSpec spec;
        spec.kind = seed % 2 ? GenSpec::Kind::triangulation : GenSpec::Kind::grid;
        spec.n = 20;
        spec.k = 1;
        spec.seed = seed;
        Instance g = generate(spec);
        detail::Rng rng(seed * 7 + 1);
        std::vector<double> x(g.n());
        for (auto& v : x) v = rng.uniform01() * 0.2;
        for (VertexId s : {0, g.n() / 2, g.n() - 1}) {
            auto mine = dijkstra(g, x, s, Direction::out);
            auto ref = oracles::bf_distances(g, x, s);
            for (VertexId v = 0; v < g.n(); ++v) {
                if (ref[v] == kInfDist)
                    CHECK(mine.dist[v] == kInfDist);
                else
                    CHECK(mine.dist[v] == doctest::Approx(ref[v]).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("in-distance equals out-distance on the reversed instance") {
    GenSpec spec;
    spec.kind = GenSpec::Kind::triangulation;
    spec.n = 16;
    spec.k = 1;
    spec.seed = 4;
    Instance g = generate(spec);
    detail::Rng rng(5);
    std::vector<double> x(g.n());
    for (auto& v : x) v = rng.uniform01();
    auto in_tree = dijkstra(g, x, 3, Direction::in);
    for (VertexId v = 0; v < g.n(); ++v) {
        double fwd = distance(g, x, v, 3, Direction::out);
        CHECK(((in_tree.dist[v] == kInfDist && fwd == kInfDist) ||
               in_tree.dist[v] == doctest::Approx(fwd)));
    }
}

TEST_CASE("star balls at the two radii from the examples") {
    // center 0 with three out-leaves
    Instance g = oracles::coords_instance(4, {{0, 0}, {1, 0}, {0, 1}, {-1, 0}},
                                          {{0, 1}, {0, 2}, {0, 3}});
    std::vector<double> x = {0.0, 0.1, 0.1, 0.1};
    CHECK(ball(g, x, 0, 0.1, Direction::out) == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(ball(g, x, 0, 0.05, Direction::out) == std::vector<VertexId>{0});
}

TEST_CASE("two-hop chain: radius between the cumulative sums keeps the prefix") {
    Instance g = oracles::line_instance({1, 1, 1});
    std::vector<double> x = {0.0, 0.3, 0.4};
    // d(0,1) = 0.3, d(0,2) = 0.7
    auto b = ball(g, x, 0, 0.5, Direction::out);
    CHECK(b == std::vector<VertexId>{0, 1});
}

TEST_CASE("out-balls are closed under shortest-path prefixes") {
    GenSpec spec;
    spec.kind = GenSpec::Kind::grid;
    spec.n = 36;
    spec.k = 1;
    spec.seed = 21;
    Instance g = generate(spec);
    detail::Rng rng(22);
    std::vector<double> x(g.n());
    for (auto& v : x) v = rng.uniform01() * 0.1;
    auto tree = dijkstra(g, x, 0, Direction::out);
    for (double r : {0.05, 0.1, 0.2, 0.4}) {
        auto b = ball_from_dist(tree.dist, r);
        std::vector<char> inside(g.n(), 0);
        for (VertexId v : b) inside[v] = 1;
        for (VertexId v : b)
            if (tree.parent[v] >= 0) CHECK(inside[tree.parent[v]] == 1);
    }
}

TEST_CASE("boundary matches a direct edge scan on random sets") {
    GenSpec spec;
    spec.kind = GenSpec::Kind::triangulation;
    spec.n = 8;
    spec.k = 1;
    spec.seed = 77;
    Instance g = generate(spec);
    detail::Rng rng(78);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<VertexId> s;
        for (VertexId v = 0; v < g.n(); ++v)
            if (rng.coin()) s.push_back(v);
        auto mine = boundary(g, s, Direction::out);
        std::vector<char> in_s(g.n(), 0);
        for (VertexId v : s) in_s[v] = 1;
        std::vector<VertexId> ref;
        for (const auto& e : g.edges())
            if (e.alive && in_s[e.tail] && !in_s[e.head]) ref.push_back(e.head);
        std::sort(ref.begin(), ref.end());
        ref.erase(std::unique(ref.begin(), ref.end()), ref.end());
        CHECK(mine == ref);
    }
    CHECK(boundary(g, g.alive_vertices(), Direction::out).empty());
}

TEST_CASE("volume arithmetic and the infinite-cost convention") {
    Instance g = oracles::coords_instance(3, {{0, 0}, {1, 0}, {2, 0}}, {{0, 1}, {1, 2}},
                                          {{0, 2}}, {2.0, 3.0, 2.0});
    std::vector<double> x = {0.0, 0.1, 0.0};
    CHECK(volume(g, x, {1}) == doctest::Approx(0.3));
    CHECK(volume(g, x, {}) == 0.0);
    CHECK(volume(g, x, {0, 1, 2}) == doctest::Approx(0.3));  // terminals contribute 0
    std::vector<double> bad = {0.5, 0.1, 0.0};
    CHECK_THROWS_AS(volume(g, bad, {0}), InfiniteVolume);
}

TEST_CASE("volume example from the written contract") {
    Instance g = oracles::coords_instance(2, {{0, 0}, {1, 0}}, {{0, 1}}, {}, {2.0, 3.0});
    std::vector<double> x = {0.5, 0.1};
    CHECK(volume(g, x, {0, 1}) == doctest::Approx(1.3));
}

#include "doctest.h"

#include "coarsequot/slimness.hpp"
#include "coarsequot/reference.hpp"

using namespace coarsequot;

namespace {
MetricGraph random_tree(int n, unsigned seed) {
    std::vector<std::pair<Vertex, Vertex>> e;
    unsigned state = seed;
    auto next = [&state]() {
        state = state * 1664525u + 1013904223u;
        return state >> 8;
    };
    for (int v = 1; v < n; ++v) e.push_back({static_cast<Vertex>(next() % v), v});
    return MetricGraph(n, std::move(e));
}
} // namespace

TEST_CASE("trees are 0-hyperbolic") {
    auto t = random_tree(40, 7);
    CHECK(slim_constant(t, SamplingSpec::exhaustive()).value == 0);
    MetricGraph single(1, {});
    CHECK(slim_constant(single, SamplingSpec::exhaustive()).value == 0);
}

TEST_CASE("kernel matches brute-force oracle on small graphs") {
    // oracle enumerates every geodesic of every side explicitly
    for (int n : {4, 5, 6, 7}) {
        auto c = cycle_graph(n);
        CHECK(slim_constant(c, SamplingSpec::exhaustive()).value == reference::slim_constant(c));
    }
    auto g = grid_graph(3, 3);
    CHECK(slim_constant(g, SamplingSpec::exhaustive()).value == reference::slim_constant(g));
    MetricGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(slim_constant(k4, SamplingSpec::exhaustive()).value == reference::slim_constant(k4));
    // theta graph: two vertices joined by paths of length 2, 2, 4
    MetricGraph theta(6, {{0, 1}, {1, 5}, {0, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}});
    CHECK(slim_constant(theta, SamplingSpec::exhaustive()).value ==
          reference::slim_constant(theta));
}

TEST_CASE("sampled slimness is a lower bound") {
    auto c12 = cycle_graph(12);
    auto exact = slim_constant(c12, SamplingSpec::exhaustive());
    auto sampled = slim_constant(c12, SamplingSpec::random(200, 13));
    CHECK(exact.exact);
    CHECK_FALSE(sampled.exact);
    CHECK(sampled.value <= exact.value);
    // identical seed reproduces the measurement
    CHECK(slim_constant(c12, SamplingSpec::random(200, 13)).value == sampled.value);
}

TEST_CASE("exhaustive cap raises BudgetExceeded") {
    auto t = random_tree(50, 3);
    SamplingSpec spec = SamplingSpec::exhaustive(40);
    CHECK_THROWS_AS(slim_constant(t, spec), BudgetExceeded);
}

TEST_CASE("quasiconvexity of geodesic images and single vertices") {
    auto t = random_tree(30, 11);
    auto geo = geodesic(t, 0, 25);
    Subspace y(t, geo.vertices);
    CHECK(quasiconvexity_constant(t, y, SamplingSpec::exhaustive()).value == 0);
    Subspace single(t, {5});
    CHECK(quasiconvexity_constant(t, single, SamplingSpec::exhaustive()).value == 0);
}

TEST_CASE("quasiconvexity on C8 pair {0,4} is 2") {
    auto c8 = cycle_graph(8);
    Subspace y(c8, {0, 4});
    CHECK(quasiconvexity_constant(c8, y, SamplingSpec::exhaustive()).value == 2);
    CHECK(reference::quasiconvexity_constant(c8, y) == 2);
}

TEST_CASE("quasiconvexity kernel matches oracle") {
    auto g = grid_graph(4, 4);
    Subspace y(g, {0, 5, 15});
    CHECK(quasiconvexity_constant(g, y, SamplingSpec::exhaustive()).value ==
          reference::quasiconvexity_constant(g, y));
}

TEST_CASE("separation M0") {
    // two far-apart subtrees of a tree with K = delta = 0
    MetricGraph t(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
    Subspace a(t, {0, 1}), b(t, {6, 7});
    CHECK(separation_m0(t, {a, b}, 0, 0) == 0);
    CHECK_THROWS_AS(separation_m0(t, {a}, 0, 0), FamilyTooSmall);
    CHECK_THROWS_AS(separation_m0(t, {a, a}, 0, 0), FamilyTooSmall);

    // crossing geodesics in a grid: brute-force fattened intersection
    auto g = grid_graph(5, 5);
    auto row = geodesic(g, 10, 14);
    auto col = geodesic(g, 2, 22);
    Subspace yr(g, row.vertices), yc(g, col.vertices);
    int m0 = separation_m0(g, {yr, yc}, 0, 0);
    CHECK(m0 == fattened_intersection_diameter(g, yr, yc, 0));
    CHECK(m0 == 0); // they cross in exactly one vertex
    int m0_fat = separation_m0(g, {yr, yc}, 1, 0);
    CHECK(m0_fat == 4); // radius-2 fattening picks up two vertices each way
}

TEST_CASE("geometric separation propagation M(t)") {
    auto g = grid_graph(5, 5);
    auto d = slim_constant(g, SamplingSpec::exhaustive()).value;
    auto row = geodesic(g, 10, 14);
    auto col = geodesic(g, 2, 22);
    Subspace yr(g, row.vertices), yc(g, col.vertices);
    int k = std::max(quasiconvexity_constant(g, yr, SamplingSpec::exhaustive()).value,
                     quasiconvexity_constant(g, yc, SamplingSpec::exhaustive()).value);
    int m0 = separation_m0(g, {yr, yc}, d, k);
    for (int t = 0; t <= 6; ++t) {
        int measured = std::max(fattened_intersection_diameter(g, yr, yc, t),
                                fattened_intersection_diameter(g, yc, yr, t));
        CHECK(measured <= m0 + 2 * k + 2 * t + 4 * d + 2);
    }
}

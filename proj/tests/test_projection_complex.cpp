#include "doctest.h"

#include "coarsequot/constants.hpp"
#include "coarsequot/freetree.hpp"
#include "coarsequot/groups.hpp"
#include "coarsequot/projection_complex.hpp"

#include <memory>

using namespace coarsequot;

namespace {

// coned F2 ball with a family of axis segments, plus its measured constants
struct Fixture {
    std::unique_ptr<CayleyBall> ball; // heap-held so the cone's pointers stay valid
    ConeOff cone;
    BaseConstants base;
    Rational cover_r;
};

const Presentation& f2_presentation() {
    static Presentation p = Presentation::free_group(2);
    return p;
}

Fixture f2_fixture(int radius, const std::vector<std::string>& conjugators,
                   const std::string& core) {
    auto ball = std::make_unique<CayleyBall>(cayley_ball(f2_presentation(), radius));

    FreeTreeGeometry geo(2, parse_word(core, 2));
    std::vector<Subspace> family;
    for (const auto& cstr : conjugators) {
        auto line = geo.axis(parse_word(cstr, 2));
        std::vector<Vertex> members;
        for (auto& [w, off] : geo.segment_within(line, radius)) {
            auto v = ball->find(w);
            REQUIRE(v.has_value());
            members.push_back(*v);
        }
        family.emplace_back(ball->graph, members);
    }
    auto cone = build_cone_off(ball->graph, family);

    BaseConstants base;
    base.delta = Rational(slim_constant(ball->graph, SamplingSpec::exhaustive()).value);
    int k = 0;
    for (const auto& y : cone.family)
        k = std::max(k, quasiconvexity_constant(ball->graph, y, SamplingSpec::exhaustive()).value);
    base.k = Rational(k);
    base.m0 = Rational(separation_m0(ball->graph, cone.family,
                                     static_cast<int>(base.delta.num()), k));
    base.d = Rational(check_spriano(cone, SamplingSpec::exhaustive()).measured_d);

    int cover = 0;
    std::vector<int> best(ball->graph.vertex_count(), -1);
    for (const auto& y : cone.family) {
        auto dist = bfs_distances_multi(ball->graph, y.members);
        for (Vertex v = 0; v < ball->graph.vertex_count(); ++v)
            if (best[v] < 0 || dist[v] < best[v]) best[v] = dist[v];
    }
    for (int d : best) cover = std::max(cover, d);

    return Fixture{std::move(ball), std::move(cone), base, Rational(cover)};
}

} // namespace

TEST_CASE("far singletons in a tree satisfy all axioms with theta 0") {
    MetricGraph t(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}});
    auto cone = build_cone_off(
        t, {Subspace(t, {0}), Subspace(t, {4}), Subspace(t, {9})});
    auto fam = geometric_family(cone);
    auto rep = verify_projection_axioms(fam, Rational(0));
    CHECK(rep.passes());
    CHECK(rep.min_theta_bounded == Rational(0));
    CHECK(rep.strong_failures == 0);
}

TEST_CASE("geometric family from a coned F2 ball passes at the ledger theta") {
    auto fx = f2_fixture(3, {"", "b", "B", "ba"}, "ab");
    auto ledger = derive(fx.base);
    auto fam = geometric_family(fx.cone);
    auto rep = verify_projection_axioms(fam, ledger.theta);
    CHECK(rep.passes());
    // theta1 <= theta holds as quantified in the hyperbolic-family proof
    CHECK(rep.min_theta_behrstock <= ledger.theta1);
    CHECK(rep.min_theta_bounded <= ledger.b);
}

TEST_CASE("augmented family with points passes at the ledger Theta") {
    auto fx = f2_fixture(3, {"", "b", "B", "ba"}, "ab");
    fx.base.r = fx.cover_r;
    auto ledger = derive(fx.base);
    auto fam = augment_with_points(fx.cone, fx.cover_r);
    CHECK(fam.size == fx.cone.graph.vertex_count());
    // constant maps on base points
    CHECK(fam.dpi(0, 5, 9) == 0);
    auto rep = verify_projection_axioms(fam, ledger.theta_pts);
    CHECK(rep.passes());

    // coverage failure: shrink R to force an uncovered vertex
    CHECK_THROWS_AS(augment_with_points(fx.cone, Rational(0)), NotCoboundedlyCovered);
}

TEST_CASE("adversarial explicit table violating (IV)") {
    ProjectionFamily f;
    f.provenance = ProjectionFamily::EXPLICIT;
    f.size = 3;
    f.names = {"A", "B", "C"};
    f.table.assign(27, 0);
    // d_0(1,2) = d_2(1,0) = 9: the Behrstock minimum is 9 > theta
    f.set(0, 1, 2, 9);
    f.set(0, 2, 1, 9);
    f.set(2, 1, 0, 9);
    f.set(2, 0, 1, 9);
    auto rep = verify_projection_axioms(f, Rational(5));
    CHECK_FALSE(rep.behrstock_ok);
    CHECK(rep.behrstock_witness.value == Rational(9));
    CHECK(rep.min_theta_behrstock == Rational(9));
}

TEST_CASE("projection complex edge rule") {
    ProjectionFamily f;
    f.size = 4;
    f.names = {"0", "1", "2", "3"};
    f.table.assign(64, 1); // strictly positive everywhere
    // Zhe above the max: complete graph
    auto complete = build_projection_complex(f, Rational(2));
    CHECK(complete.edges.size() == 6);
    CHECK(complete.connected);
    // Zhe = 0 with a strictly positive table: no edges at all
    auto empty = build_projection_complex(f, Rational(0));
    CHECK(empty.edges.empty());
    CHECK_FALSE(empty.connected);
}

TEST_CASE("geometric complex edges cross-validated by direct rule evaluation") {
    auto fx = f2_fixture(3, {"", "b", "B", "ba"}, "ab");
    auto fam = geometric_family(fx.cone);
    auto ledger = derive(fx.base);
    auto p = build_projection_complex(fam, ledger.zhe);
    for (int u = 0; u < fam.size; ++u)
        for (int v = u + 1; v < fam.size; ++v) {
            bool expect = true;
            for (int y = 0; y < fam.size; ++y) {
                if (y == u || y == v) continue;
                if (Rational(fam.dpi(y, u, v)) > ledger.zhe) expect = false;
            }
            bool got = std::find(p.edges.begin(), p.edges.end(), std::make_pair(u, v)) !=
                       p.edges.end();
            CHECK(expect == got);
        }
}

TEST_CASE("bounded path image on the axis family") {
    auto fx = f2_fixture(3, {"", "b", "B", "ba", "aB"}, "ab");
    auto fam = geometric_family(fx.cone);
    auto ledger = derive(fx.base);
    auto p = build_projection_complex(fam, ledger.zhe);
    auto rep = bounded_path_image_check(p, fam, ledger.theta_pts);
    CHECK(rep.violations.empty());
    CHECK_THROWS_AS(bounded_path_image_check(p, fam, ledger.zhe),
                    PreconditionBroken);
}

TEST_CASE("bounded path image on an explicit chain family") {
    // elements along a line: the projection to y separates the two sides
    ProjectionFamily f;
    f.size = 8;
    for (int i = 0; i < 8; ++i) f.names.push_back(std::to_string(i));
    f.table.assign(8 * 8 * 8, 0);
    for (int y = 0; y < 8; ++y)
        for (int u = 0; u < 8; ++u)
            for (int v = 0; v < 8; ++v) {
                if (u == y || v == y) {
                    f.set(y, u, v, -1);
                    continue;
                }
                bool between = (std::min(u, v) < y && y < std::max(u, v));
                f.set(y, u, v, between ? 100 : (u == v ? 0 : 1));
            }
    Rational theta(1);
    auto rep_axioms = verify_projection_axioms(f, theta);
    CHECK(rep_axioms.symmetry_ok);
    CHECK(rep_axioms.triangle_ok);
    auto p = build_projection_complex(f, Rational(33));
    // consecutive elements only: the complex is a path
    CHECK(p.edges.size() == 7);
    CHECK(p.connected);
    auto rep = bounded_path_image_check(p, f, theta);
    CHECK(rep.pairs_checked > 0);
    CHECK(rep.violations.empty());
    CHECK(rep.max_path_gap <= 15);
}

TEST_CASE("two-vertex path with an edge stays within the edge rule bound") {
    ProjectionFamily f;
    f.size = 3;
    f.names = {"0", "1", "2"};
    f.table.assign(27, 2);
    auto p = build_projection_complex(f, Rational(100));
    REQUIRE(p.edges.size() == 3);
    auto rep = bounded_path_image_check(p, f, Rational(3));
    CHECK(rep.violations.empty());
    CHECK(rep.max_path_gap <= 2);
}

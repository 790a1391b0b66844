#include <doctest.h>

#include "mcq/quiver.hpp"

using namespace mcq;

namespace {

Quiver cycle_quiver(int n) {
    Quiver q;
    for (int i = 0; i < n; ++i) q.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) q.add_arrow(i, (i + 1) % n, "a" + std::to_string(i));
    return q;
}

}  // namespace

TEST_CASE("path basics and degrees") {
    Quiver q = cycle_quiver(4);
    Path p{{0, 1, 2}};
    CHECK(path_composable(q, p));
    CHECK(path_source(q, p) == 0);
    CHECK(path_target(q, p) == 3);
    CHECK_FALSE(path_composable(q, Path{{0, 2}}));

    Grading all1(q.num_arrows(), 1);
    CHECK(path_degree(all1, p) == 3);
    CHECK(path_degree(all1, Path{}) == 0);
    Grading g{0, 1, 0, 1};
    Path a{{0, 1}}, b{{2, 3}};
    Path ab{{0, 1, 2, 3}};
    CHECK(path_degree(g, ab) == path_degree(g, a) + path_degree(g, b));
}

TEST_CASE("path print/parse round trip uses the right-to-left product order") {
    Quiver q = cycle_quiver(3);
    Path p{{0, 1}};
    CHECK(print_path(q, p) == "a1 a0");
    CHECK(parse_path(q, "a1 a0") == p);
    CHECK_THROWS_AS(parse_path(q, "a0 a1"), std::invalid_argument);  // not composable
    CHECK_THROWS_AS(parse_path(q, "zz"), std::invalid_argument);
}

TEST_CASE("quotient by the trivial action is an isomorphic copy") {
    Quiver q = cycle_quiver(5);
    QuiverAutomorphismAction act;
    act.q = &q;
    act.order = 1;
    act.vertex_perm = {0, 1, 2, 3, 4};
    act.arrow_perm = {0, 1, 2, 3, 4};
    OrbitQuiver orb = quotient_by_action(q, act);
    CHECK(orb.quiver.num_vertices() == 5);
    CHECK(orb.quiver.num_arrows() == 5);
    for (size_t v = 0; v < 5; ++v) CHECK(orb.projection.vertex_map[v] == static_cast<int>(v));
}

TEST_CASE("quotient of a 6-cycle by rotation") {
    Quiver q = cycle_quiver(6);
    QuiverAutomorphismAction act;
    act.q = &q;
    act.order = 3;
    act.vertex_perm = {2, 3, 4, 5, 0, 1};
    act.arrow_perm = {2, 3, 4, 5, 0, 1};
    OrbitQuiver orb = quotient_by_action(q, act);
    CHECK(orb.quiver.num_vertices() == 2);
    CHECK(orb.quiver.num_arrows() == 2);
    CHECK(orb.projection.surjective_on_arrows());
    CHECK(orb.projection.commutes());
    // projection is constant on orbits
    for (size_t a = 0; a < q.num_arrows(); ++a)
        CHECK(orb.projection.arrow_map[a] == orb.projection.arrow_map[act.arrow_perm[a]]);
    CHECK(orb.vertex_members[0].size() == 3);
}

TEST_CASE("gradability, pushforward, pullback") {
    Quiver dom = cycle_quiver(6);
    Quiver cod = cycle_quiver(2);
    QuiverMorphism phi;
    phi.dom = &dom;
    phi.cod = &cod;
    phi.vertex_map = {0, 1, 0, 1, 0, 1};
    phi.arrow_map = {0, 1, 0, 1, 0, 1};
    REQUIRE(phi.commutes());
    REQUIRE(phi.surjective_on_arrows());

    Grading g{1, 0, 1, 0, 1, 0};
    CHECK(is_gradable(phi, g).ok);
    Grading push = pushforward_grading(phi, g);
    CHECK(push == Grading{1, 0});
    CHECK(pullback_grading(phi, push) == g);

    // phi_*(phi^* g') = g' for surjective phi
    Grading gp{3, -1};
    CHECK(pushforward_grading(phi, pullback_grading(phi, gp)) == gp);

    Grading bad{1, 0, 0, 0, 1, 0};
    GradabilityReport rep = is_gradable(phi, bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.offending_codomain_arrow == 0);
    CHECK(rep.offending_fiber == std::vector<int>{0, 2, 4});
    CHECK_THROWS_AS(pushforward_grading(phi, bad), verification_error);

    // injective-on-arrows morphisms are always gradable
    QuiverMorphism id;
    id.dom = &dom;
    id.cod = &dom;
    id.vertex_map = {0, 1, 2, 3, 4, 5};
    id.arrow_map = {0, 1, 2, 3, 4, 5};
    CHECK(is_gradable(id, bad).ok);
    CHECK(pushforward_grading(id, bad) == bad);
    // constant gradings are always gradable
    CHECK(is_gradable(phi, Grading(6, 7)).ok);
}

TEST_CASE("non-surjective pushforward is rejected") {
    Quiver dom = cycle_quiver(2);
    Quiver cod = cycle_quiver(2);
    QuiverMorphism phi;
    phi.dom = &dom;
    phi.cod = &cod;
    phi.vertex_map = {0, 1};
    phi.arrow_map = {0, 1};
    // drop arrow 1 from the image by mapping both arrows to 0: not a
    // morphism; instead restrict the domain
    Quiver small;
    small.add_vertex("x");
    small.add_vertex("y");
    small.add_arrow(0, 1, "a");
    QuiverMorphism inc;
    inc.dom = &small;
    inc.cod = &cod;
    inc.vertex_map = {0, 1};
    inc.arrow_map = {0};
    REQUIRE(inc.commutes());
    CHECK_FALSE(inc.surjective_on_arrows());
    CHECK_THROWS_AS(pushforward_grading(inc, Grading{1}), verification_error);
}

TEST_CASE("for_each_path enumerates deterministically") {
    Quiver q = cycle_quiver(3);
    std::vector<Path> seen;
    for_each_path(q, 2, [&](const Path& p) { seen.push_back(p); });
    CHECK(seen.size() == 3);
    CHECK(seen[0] == Path{{0, 1}});
    CHECK(seen[1] == Path{{1, 2}});
    CHECK(seen[2] == Path{{2, 0}});
}

TEST_CASE("dot export is deterministic and carries degrees") {
    Quiver q = cycle_quiver(2);
    Grading g{1, 0};
    std::string d1 = to_dot(q, &g), d2 = to_dot(q, &g);
    CHECK(d1 == d2);
    CHECK(d1.find("v0 -> v1 [label=\"a0\", degree=1, style=bold]") != std::string::npos);
    CHECK(d1.find("v1 -> v0 [label=\"a1\", degree=0]") != std::string::npos);
    CHECK(to_tikz(q, &g).find("very thick") != std::string::npos);
}

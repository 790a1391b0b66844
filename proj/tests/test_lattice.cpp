#include <doctest.h>

#include <set>

#include "mcq/grading_algebra.hpp"
#include "mcq/lattice.hpp"
#include "oracles.hpp"

using namespace mcq;

namespace {

RepSystem reference_m21() {
    return rep_system_with(MetacyclicParams::create(21, 4, 3, 0),
                           {0, 4, 7, 8, 9, 12, 13, 14, 17});
}

}  // namespace

TEST_CASE("eta and the kernel lattice") {
    MetacyclicParams p21 = MetacyclicParams::create(21, 4, 3, 0);
    LatticeModel lat(p21, false);
    CHECK(lat.N() == 3);
    CHECK(lat.eta({0, 0}) == 0);
    CHECK(lat.eta({1, 0}) == 20);  // eta(alpha_1) = -1
    CHECK(lat.eta({0, 1}) == 17);  // eta(alpha_2) = -4
    CHECK(lat.eta({21, 0}) == 0);  // m alpha_1 in B
    CHECK(lat.B_membership({1, 5}));  // -1 - 20 = -21 = 0

    // eta is onto: the transversal hits every residue once
    std::set<long> seen;
    for (const LatticePoint& v : lat.transversal()) seen.insert(lat.eta(v));
    CHECK(seen.size() == 21);

    // index [L : B] = m as the determinant of the basis matrix (N-1 = 2)
    const auto& B = lat.B_basis();
    REQUIRE(B.size() == 2);
    long det = B[0][0] * B[1][1] - B[0][1] * B[1][0];
    CHECK((det == 21 || det == -21));
    for (const LatticePoint& b : B) CHECK(lat.eta(b) == 0);

    // eta . phi = r . eta
    for (const LatticePoint& v : {LatticePoint{1, 0}, {0, 1}, {3, -2}, {7, 5}})
        CHECK(lat.eta(lat.phi(v)) == p21.mod_m(p21.r * lat.eta(v)));

    // embedded variant: eta(alpha_0) = c
    MetacyclicParams p12 = MetacyclicParams::create(12, 5, 2, 6);
    LatticeModel lat12(p12, true);
    CHECK(lat12.N() == 3);
    LatticePoint origin{0, 0};
    CHECK(lat12.eta(lat12.step(origin, 0)) == 6);
    for (const LatticePoint& v : {LatticePoint{1, 0}, {0, 1}, {2, 3}})
        CHECK(lat12.eta(lat12.phi(v)) == p12.mod_m(p12.r * lat12.eta(v)));
    // phi(B) = B on basis vectors
    for (const LatticePoint& b : lat12.B_basis()) CHECK(lat12.eta(lat12.phi(b)) == 0);
}

TEST_CASE("canonical cuts: verification and invariance") {
    MetacyclicParams p21 = MetacyclicParams::create(21, 4, 3, 0);
    LatticeModel lat(p21, false);
    Cut c11 = cut_Ck(lat, 1, 1);
    CHECK(is_B_invariant(lat, c11));
    CHECK(is_GA_invariant(lat, c11));
    CHECK(verify_cut(lat, c11).ok);

    CHECK_THROWS_AS(cut_Ck(lat, 1, 2), std::invalid_argument);

    // GL boundary k = l: B-invariant but not a cut
    MetacyclicParams p12 = MetacyclicParams::create(12, 5, 2, 6);
    LatticeModel lat12(p12, true);
    Cut c22 = cut_Ck(lat12, 2, 2);
    CHECK(c22.gl_boundary_warning);
    CHECK(is_B_invariant(lat12, c22));
    CutCheck chk = verify_cut(lat12, c22);
    CHECK_FALSE(chk.ok);
    CHECK_FALSE(chk.witness.empty());

    Cut c12 = cut_Ck(lat12, 2, 1);
    CHECK_FALSE(c12.gl_boundary_warning);
    CHECK(is_B_invariant(lat12, c12));
    CHECK(is_GA_invariant(lat12, c12));
    CHECK(verify_cut(lat12, c12).ok);

    // empty and full explicit sets are not cuts
    Cut empty = explicit_cut(lat, {});
    CutCheck e = verify_cut(lat, empty);
    CHECK_FALSE(e.ok);
    std::vector<std::pair<LatticePoint, int>> all;
    for (long i = 0; i < p21.m; ++i)
        for (int dir = 0; dir < lat.N(); ++dir) all.emplace_back(lat.point_with_eta(i), dir);
    CutCheck f = verify_cut(lat, explicit_cut(lat, all));
    CHECK_FALSE(f.ok);
}

TEST_CASE("induced grading on Q_G matches the reference picture") {
    RepSystem reps = reference_m21();
    auto model = build_model(reps);
    LatticeModel lat(reps.params, false);
    Grading g = induce_grading(lat, cut_Ck(lat, 1, 1), *model);

    // degree-1 arrows: exactly those leaving a vertex whose label is
    // 1 mod 3 (the out-arrows of 13, 4 and the split copies of 7)
    for (size_t a = 0; a < model->QG.quiver.num_arrows(); ++a) {
        const ArrowInfo& ai = model->QG.info[a];
        CHECK(g[a] == ((ai.i % 3) == 1 ? 1 : 0));
    }

    Superpotential wG = superpotential(model->QG);
    HomogeneityResult h = homogeneity_degree(wG, g);
    REQUIRE(h.homogeneous());
    CHECK(*h.degree == 1);

    ZeroPathBound zb = zero_path_bound(*model, g, 1);
    CHECK(zb.bound == 3);
    CHECK(zb.ok);
    // negative control: the all-zero grading has long degree-0 paths
    Grading zero(model->QG.quiver.num_arrows(), 0);
    CHECK_FALSE(zero_path_bound(*model, zero, 1).ok);
}

TEST_CASE("non-invariant cut is rejected with a witness") {
    RepSystem reps = reference_m21();
    auto model = build_model(reps);
    LatticeModel lat(reps.params, false);
    // break G/A-invariance: take the canonical cut arrows over the
    // transversal and swap membership of a single orbit representative
    std::vector<std::pair<LatticePoint, int>> arrows;
    Cut c11 = cut_Ck(lat, 1, 1);
    for (long i = 0; i < reps.params.m; ++i)
        for (int dir = 0; dir < lat.N(); ++dir) {
            bool in = cut_contains(lat, c11, lat.point_with_eta(i), dir);
            if (i == 1 && dir == 1) in = !in;    // drop one arrow
            if (i == 1 && dir == 2) in = !in;    // add a wrong one
            if (in) arrows.emplace_back(lat.point_with_eta(i), dir);
        }
    Cut broken = explicit_cut(lat, arrows);
    CHECK_FALSE(is_GA_invariant(lat, broken));
    CHECK_THROWS_AS(induce_grading(lat, broken, *model), verification_error);
}

TEST_CASE("no G/A-invariant cut exists for (7,2,3,0)") {
    MetacyclicParams p7 = MetacyclicParams::create_basic(7, 2, 3, 0);
    RepSystem reps = choose_representatives(p7);
    McKayQuiver QA = mckay_abelian(reps);

    // the obstructing 3-cycle 2 -> 1 -> 4 -> 2 is a single phi-orbit
    QuiverAutomorphismAction act = ga_action(QA);
    int a1 = *QA.quiver.arrow_by_label("x^2_0");
    int a2 = *QA.quiver.arrow_by_label("x^1_2");
    int a3 = *QA.quiver.arrow_by_label("x^4_1");
    CHECK(QA.quiver.arrow(a1).tgt == 1);
    CHECK(QA.quiver.arrow(a2).tgt == 4);
    CHECK(QA.quiver.arrow(a3).tgt == 2);
    CHECK(act.arrow_perm[a1] == a3);
    CHECK(act.arrow_perm[a3] == a2);
    CHECK(act.arrow_perm[a2] == a1);

    InvariantCutSearch res = search_ga_invariant_cut(QA);
    CHECK(res.orbit_count == 7);
    CHECK_FALSE(res.exists);

    // positive control: M(2,1) does carry an invariant cut
    RepSystem r4 = choose_representatives(MetacyclicParams::create(4, 3, 2, 2));
    InvariantCutSearch ok = search_ga_invariant_cut(mckay_abelian(r4));
    CHECK(ok.exists);

    // m = 21 has 21 orbits, beyond the exhaustion guard
    CHECK_THROWS_AS(search_ga_invariant_cut(mckay_abelian(reference_m21())),
                    std::invalid_argument);
}

TEST_CASE("a non-canonical invariant cut for the binary dihedral group") {
    MetacyclicParams p12 = MetacyclicParams::create(12, 5, 2, 6);
    RepSystem reps = choose_representatives(p12);
    LatticeModel lat(p12, true);

    // a_1 arrows from labels {0,5,10}, a_2 from {0,1,2},
    // a_0 from {0,1,2,3,5,10}
    std::vector<std::pair<LatticePoint, int>> arrows;
    for (long i : {0L, 5L, 10L}) arrows.emplace_back(lat.point_with_eta(i), 1);
    for (long i : {0L, 1L, 2L}) arrows.emplace_back(lat.point_with_eta(i), 2);
    for (long i : {0L, 1L, 2L, 3L, 5L, 10L}) arrows.emplace_back(lat.point_with_eta(i), 0);
    Cut cut = explicit_cut(lat, arrows);

    CHECK(is_B_invariant(lat, cut));
    CHECK(is_GA_invariant(lat, cut));
    CHECK(verify_cut(lat, cut).ok);

    auto model = build_model(reps, true);
    Grading g = induce_grading(lat, cut, *model);
    Superpotential w = superpotential(model->QG);
    HomogeneityResult h = homogeneity_degree(w, g);
    REQUIRE(h.homogeneous());
    CHECK(*h.degree == 1);
    GradedPresentation pres = make_presentation(w, g);
    CHECK(is_finite_dimensional(pres, 6));

    // this cut is not any canonical C_k^(l): compare memberships against
    // every l dividing gcd(n, b) = 2
    for (long l = 1; l <= 2; ++l)
        for (long k = 1; k <= l; ++k) {
            bool same = true;
            for (long i = 0; i < p12.m && same; ++i)
                for (int dir = 0; dir < lat.N() && same; ++dir)
                    if (cut_contains(lat, cut, lat.point_with_eta(i), dir) !=
                        cut_contains(lat, cut_Ck(lat, l, k), lat.point_with_eta(i), dir))
                        same = false;
            CHECK_FALSE(same);
        }
}

TEST_CASE("swap moves") {
    RepSystem reps = choose_representatives(MetacyclicParams::create(4, 3, 2, 2));
    auto model = build_model(reps);
    LatticeModel lat(reps.params, false);
    Grading g = induce_grading(lat, cut_Ck(lat, 1, 1), *model);
    Superpotential w = superpotential(model->QG);
    REQUIRE(homogeneity_degree(w, g).homogeneous());

    // double swap = identity
    Grading g1 = swap_move(w, g, 0, 0);
    CHECK(g1 != g);
    CHECK(swap_move(w, g1, 0, 0) == g);

    // iterated swaps at the four split vertices reach all 16 degree
    // patterns, every one an acyclic orientation of the star D~_4
    std::set<Grading> orbit{g};
    std::vector<Grading> frontier{g};
    while (!frontier.empty()) {
        Grading cur = frontier.back();
        frontier.pop_back();
        for (long j : reps.F)
            for (int ell = 0; ell < 2; ++ell) {
                Grading nxt = swap_move(w, cur, j, ell);
                if (orbit.insert(nxt).second) frontier.push_back(nxt);
            }
    }
    CHECK(orbit.size() == 16);
    for (const Grading& cand : orbit) {
        HomogeneityResult h = homogeneity_degree(w, cand);
        REQUIRE(h.homogeneous());
        CHECK(*h.degree == 1);
        GradedPresentation pres = make_presentation(w, cand);
        DegreeZeroQuiver dz = degree_zero_quiver(pres);
        CHECK(is_acyclic(dz.quiver));
        CHECK(recognize_extended_dynkin_D(dz.quiver) == 4);
    }
}

TEST_CASE("zero path bound across the s=2 family") {
    for (long b : {1L, 2L, 3L}) {
        RepSystem reps = choose_representatives(family_M(2, b));
        auto model = build_model(reps);
        LatticeModel lat(reps.params, false);
        Grading g = induce_grading(lat, cut_Ck(lat, 1, 1), *model);
        ZeroPathBound zb = zero_path_bound(*model, g, 1);
        CHECK(zb.bound == 2);
        CHECK(zb.ok);
    }
}

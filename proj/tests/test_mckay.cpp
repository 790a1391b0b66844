#include <doctest.h>

#include <map>

#include "mcq/mckay.hpp"
#include "oracles.hpp"

using namespace mcq;

namespace {

RepSystem reference_m21() {
    return rep_system_with(MetacyclicParams::create(21, 4, 3, 0),
                           {0, 4, 7, 8, 9, 12, 13, 14, 17});
}

}  // namespace

TEST_CASE("abelian McKay quiver shapes") {
    RepSystem r21 = reference_m21();
    McKayQuiver QA = mckay_abelian(r21);
    CHECK(QA.quiver.num_vertices() == 21);
    CHECK(QA.quiver.num_arrows() == 63);
    // arrows i -> i-1, i-4, i-16
    for (long i = 0; i < 21; ++i) {
        auto outs = QA.quiver.out_arrows(static_cast<int>(i));
        REQUIRE(outs.size() == 3);
        CHECK(QA.quiver.arrow(outs[0]).tgt == (i + 21 - 1) % 21);
        CHECK(QA.quiver.arrow(outs[1]).tgt == (i + 21 - 4) % 21);
        CHECK(QA.quiver.arrow(outs[2]).tgt == (i + 21 - 16) % 21);
    }

    // m=4, r=3, s=2: doubled 4-cycle
    RepSystem r4 = choose_representatives(MetacyclicParams::create(4, 3, 2, 2));
    McKayQuiver Q4 = mckay_abelian(r4);
    CHECK(Q4.quiver.num_vertices() == 4);
    CHECK(Q4.quiver.num_arrows() == 8);
    for (long i = 0; i < 4; ++i) {
        auto outs = Q4.quiver.out_arrows(static_cast<int>(i));
        CHECK(Q4.quiver.arrow(outs[0]).tgt == (i + 3) % 4);
        CHECK(Q4.quiver.arrow(outs[1]).tgt == (i + 1) % 4);
    }

    // embedded (12,5,2,6): extra arrows i -> i+6
    RepSystem r12 = choose_representatives(MetacyclicParams::create(12, 5, 2, 6));
    McKayQuiver QA12 = mckay_abelian(r12, true);
    CHECK(QA12.quiver.num_arrows() == 36);
    for (long i = 0; i < 12; ++i) {
        auto outs = QA12.quiver.out_arrows(static_cast<int>(i));
        REQUIRE(outs.size() == 3);
        CHECK(QA12.quiver.arrow(outs[2]).tgt == (i + 6) % 12);
    }
}

TEST_CASE("metacyclic McKay quiver for m=21 matches the worked example") {
    RepSystem reps = reference_m21();
    McKayQuiver QG = mckay_metacyclic(reps);
    CHECK(QG.quiver.num_vertices() == 15);  // 6 induced + 9 split

    auto arrow = [&](const std::string& label) {
        auto id = QG.quiver.arrow_by_label(label);
        REQUIRE_MESSAGE(id.has_value(), label);
        return *id;
    };
    auto vertex_label = [&](int v) { return QG.quiver.vertex_label(v); };

    // reference arrows of the m = 21 quiver
    CHECK(vertex_label(QG.quiver.arrow(arrow("x^17_{0,1}")).tgt) == "4");
    CHECK(vertex_label(QG.quiver.arrow(arrow("x^17_{2,2}")).tgt) == "4");
    CHECK(vertex_label(QG.quiver.arrow(arrow("x^17_{1,0}")).tgt) == "13");
    CHECK(vertex_label(QG.quiver.arrow(arrow("x^12_{2,0}")).tgt) == "17");
    CHECK(vertex_label(QG.quiver.arrow(arrow("x^12_{0,1}")).tgt) == "8");
    CHECK(vertex_label(QG.quiver.arrow(arrow("x^12_{1,0}")).tgt) == "8");
    for (int ell = 0; ell < 3; ++ell) {
        std::string l = std::to_string(ell);
        CHECK(vertex_label(QG.quiver.arrow(arrow("x^{8(" + l + ")}_{0,0}")).tgt) ==
              "7^(" + l + ")");
        CHECK(vertex_label(QG.quiver.arrow(arrow("x^{(" + l + ")7}_{2,0}")).tgt) == "12");
        CHECK(vertex_label(QG.quiver.arrow(arrow("x^{(" + l + ")0}_{1,0}")).tgt) == "17");
        CHECK(vertex_label(QG.quiver.arrow(arrow("x^{4(" + l + ")}_{1,0}")).tgt) ==
              "0^(" + l + ")");
    }
    // no arrows between split vertices
    for (size_t a = 0; a < QG.quiver.num_arrows(); ++a) {
        const Arrow& ar = QG.quiver.arrow(static_cast<int>(a));
        bool src_split = QG.vertex_ell[ar.src] >= 0;
        bool tgt_split = QG.vertex_ell[ar.tgt] >= 0;
        CHECK_FALSE((src_split && tgt_split));
    }
    // every (p,a) datum satisfies r^a j = i - r^p (mod m)
    const MetacyclicParams& p = reps.params;
    for (const ArrowInfo& ai : QG.info) {
        if (ai.kind == ArrowInfo::Kind::Embed) continue;
        long lhs = p.mod_m(p.pow_r(ai.a) * (ai.kind == ArrowInfo::Kind::Case2
                                                ? ai.j  // literal fixed target
                                                : ai.j));
        long rhs = p.mod_m(ai.i - p.pow_r(ai.p));
        if (ai.kind == ArrowInfo::Kind::Case3)
            rhs = p.mod_m(ai.i - p.pow_r(ai.p));  // normalized a = 0 form
        CHECK(lhs == rhs);
    }
}

TEST_CASE("metacyclic quiver requires the closure assumption") {
    MetacyclicParams p = MetacyclicParams::create(12, 5, 2, 6);
    RepSystem open = rep_system_with(p, {0, 3, 6, 9, 1, 2, 4, 7});  // transversal, not closed
    CHECK_FALSE(open.closed_under_c);
    CHECK_THROWS_AS(mckay_metacyclic(open), condition_error);
}

TEST_CASE("arrow multiplicities equal the character oracle") {
    for (auto setup : {std::pair<RepSystem, bool>{reference_m21(), false},
                       {choose_representatives(MetacyclicParams::create(12, 5, 2, 6)), false},
                       {choose_representatives(MetacyclicParams::create(12, 5, 2, 6)), true}}) {
        const RepSystem& reps = setup.first;
        bool embedded = setup.second;
        McKayQuiver QG = mckay_metacyclic(reps, embedded);
        std::vector<Irrep> irr = irreps(reps, embedded);
        auto irrep_at = [&](int v) -> const Irrep& {
            for (const Irrep& ir : irr)
                if (ir.i == QG.vertex_i[v] &&
                    (QG.vertex_ell[v] < 0 ? ir.kind == Irrep::Kind::Induced
                                          : (ir.kind == Irrep::Kind::Split &&
                                             ir.ell == QG.vertex_ell[v])))
                    return ir;
            throw std::logic_error("missing irrep");
        };
        size_t nv = QG.quiver.num_vertices();
        std::map<std::pair<int, int>, long> counts;
        for (size_t a = 0; a < QG.quiver.num_arrows(); ++a) {
            const Arrow& ar = QG.quiver.arrow(static_cast<int>(a));
            counts[{ar.src, ar.tgt}]++;
        }
        long s_eff = reps.params.s + (embedded ? 1 : 0);
        for (size_t v = 0; v < nv; ++v) {
            long out_dim = 0, in_dim = 0;
            for (size_t w = 0; w < nv; ++w) {
                long got = counts.count({static_cast<int>(v), static_cast<int>(w)})
                               ? counts[{static_cast<int>(v), static_cast<int>(w)}]
                               : 0;
                long want = character_inner_product(reps, irrep_at(static_cast<int>(v)),
                                                    irrep_at(static_cast<int>(w)),
                                                    TensorFactor::Natural, embedded);
                CHECK_MESSAGE(got == want, "arrows ", QG.quiver.vertex_label(v), " -> ",
                              QG.quiver.vertex_label(w));
                out_dim += got * QG.vertex_dim[w];
                long got_in = counts.count({static_cast<int>(w), static_cast<int>(v)})
                                  ? counts[{static_cast<int>(w), static_cast<int>(v)}]
                                  : 0;
                in_dim += got_in * QG.vertex_dim[w];
            }
            // dimension count of V (x) T_v
            CHECK(out_dim == s_eff * QG.vertex_dim[v]);
            CHECK(in_dim == s_eff * QG.vertex_dim[v]);
        }
    }
}

TEST_CASE("twist automorphism") {
    // c = 0, s = 3: identity twist
    McKayQuiver QG21 = mckay_metacyclic(reference_m21());
    CHECK(QG21.twist_order == 1);

    // (12,5,2,6): tau'(i^(l)) = (i+6)^(l+1 mod 2)
    RepSystem r12 = choose_representatives(MetacyclicParams::create(12, 5, 2, 6));
    McKayQuiver QG12 = mckay_metacyclic(r12);
    for (long i : r12.F)
        for (int ell = 0; ell < 2; ++ell) {
            int v = QG12.vertex_index(i, ell);
            int tv = QG12.twist_vertex[v];
            CHECK(QG12.vertex_i[tv] == (i + 6) % 12);
            CHECK(QG12.vertex_ell[tv] == (ell + 1) % 2);
        }
    for (long i : r12.D)
        if (!r12.in_F(i)) {
            int v = QG12.vertex_index(i, -1);
            CHECK(QG12.vertex_i[QG12.twist_vertex[v]] == (i + 6) % 12);
        }
    // order divides lcm(u, s)
    long l = std::lcm(r12.params.u, r12.params.s);
    CHECK(l % QG12.twist_order == 0);

    McKayQuiver QA12 = mckay_abelian(r12);
    CHECK(QA12.twist_order == 2);  // +6 on Z/12
    CHECK(mckay_abelian(r12, true).twist_order == 1);  // embedded twist trivial
}

TEST_CASE("tilde quiver and the comparison morphisms for m=21") {
    RepSystem reps = reference_m21();
    McKayQuiver QA = mckay_abelian(reps);
    McKayQuiver QG = mckay_metacyclic(reps);
    McKayQuiver Qt = tilde_quiver(reps);

    CHECK(Qt.quiver.num_vertices() == 9);
    // 63 arrows in orbits of size 3
    CHECK(Qt.quiver.num_arrows() == 21);
    // no arrows between fixed points
    for (size_t a = 0; a < Qt.quiver.num_arrows(); ++a) {
        const Arrow& ar = Qt.quiver.arrow(static_cast<int>(a));
        bool both_fixed = reps.in_F(Qt.vertex_i[ar.src]) && reps.in_F(Qt.vertex_i[ar.tgt]);
        CHECK_FALSE(both_fixed);
    }

    QuiverMorphism Phi = phi_morphism(QA, Qt);
    QuiverMorphism Psi = psi_morphism(QG, Qt);
    CHECK(Phi.commutes());
    CHECK(Psi.commutes());
    CHECK(Phi.surjective_on_arrows());

    // Phi(1) = Phi(4) = Phi(16) = 4
    for (long i : {1L, 4L, 16L})
        CHECK(Qt.vertex_i[Phi.vertex_map[QA.vertex_index(i)]] == 4);

    // reference arrow images
    auto phi_of = [&](const std::string& lbl) {
        return Qt.quiver.arrow(Phi.arrow_map[*QA.quiver.arrow_by_label(lbl)]).label;
    };
    CHECK(phi_of("x^17_0") == "x^17_{0,1}");
    CHECK(phi_of("x^5_1") == "x^17_{0,1}");
    CHECK(phi_of("x^20_2") == "x^17_{0,1}");
    CHECK(phi_of("x^5_0") == "x^17_{2,2}");
    CHECK(phi_of("x^20_1") == "x^17_{2,2}");
    CHECK(phi_of("x^17_2") == "x^17_{2,2}");
    CHECK(phi_of("x^0_0") == "x^0_{1,0}");
    CHECK(phi_of("x^0_1") == "x^0_{1,0}");
    CHECK(phi_of("x^0_2") == "x^0_{1,0}");

    // Phi factors through the G/A action
    QuiverAutomorphismAction phi_act = ga_action(QA);
    for (size_t a = 0; a < QA.quiver.num_arrows(); ++a)
        CHECK(Phi.arrow_map[a] == Phi.arrow_map[phi_act.arrow_perm[a]]);

    // Psi restricted off the fixed points is injective, fibers over arrows
    // touching a fixed point have size s
    std::map<int, int> fiber;
    for (size_t a = 0; a < QG.quiver.num_arrows(); ++a) fiber[Psi.arrow_map[a]]++;
    for (size_t a = 0; a < Qt.quiver.num_arrows(); ++a) {
        const ArrowInfo& ai = Qt.info[a];
        if (ai.kind == ArrowInfo::Kind::Case1)
            CHECK(fiber[static_cast<int>(a)] == 1);
        else
            CHECK(fiber[static_cast<int>(a)] == 3);
    }

    // tau Psi = Psi tau'
    for (size_t v = 0; v < QG.quiver.num_vertices(); ++v)
        CHECK(Qt.twist_vertex[Psi.vertex_map[v]] == Psi.vertex_map[QG.twist_vertex[v]]);
    for (size_t a = 0; a < QG.quiver.num_arrows(); ++a)
        CHECK(Qt.twist_arrow[Psi.arrow_map[a]] == Psi.arrow_map[QG.twist_arrow[a]]);

    CHECK(verify_orbit_iso(QA, Qt).ok);
}

TEST_CASE("orbit isomorphism for the binary dihedral example, embedded and not") {
    RepSystem reps = choose_representatives(MetacyclicParams::create(12, 5, 2, 6));
    for (bool emb : {false, true}) {
        McKayQuiver QA = mckay_abelian(reps, emb);
        McKayQuiver Qt = tilde_quiver(reps, emb);
        CHECK(verify_orbit_iso(QA, Qt).ok);
        McKayQuiver QG = mckay_metacyclic(reps, emb);
        QuiverMorphism Psi = psi_morphism(QG, Qt);
        CHECK(Psi.commutes());
    }
}

TEST_CASE("embedded comparison square commutes") {
    RepSystem reps = choose_representatives(MetacyclicParams::create(12, 5, 2, 6));
    auto model = build_model(reps, true);
    // the embedding arrows of Q_G' map onto the embedding arrows of Q~_G'
    for (size_t a = 0; a < model->QG.quiver.num_arrows(); ++a)
        if (model->QG.info[a].kind == ArrowInfo::Kind::Embed)
            CHECK(model->Qt.info[model->Psi.arrow_map[a]].kind == ArrowInfo::Kind::Embed);
    for (size_t a = 0; a < model->QA.quiver.num_arrows(); ++a)
        if (model->QA.info[a].p == model->QA.reps.params.s)
            CHECK(model->Qt.info[model->Phi.arrow_map[a]].kind == ArrowInfo::Kind::Embed);
}

TEST_CASE("path vertex congruence from the composition lemma") {
    // r^{a_1+...+a_u} i_{u+1} = i_1 - r^{p_1} - r^{a_1+p_2} - ... (mod m)
    for (const RepSystem& reps :
         {reference_m21(), choose_representatives(MetacyclicParams::create(12, 5, 2, 6))}) {
        const MetacyclicParams& p = reps.params;
        McKayQuiver QG = mckay_metacyclic(reps);
        for (long len = 1; len <= p.s; ++len)
            for_each_path(QG.quiver, static_cast<size_t>(len), [&](const Path& path) {
                long asum = 0, rhs = QG.vertex_i[path_source(QG.quiver, path)];
                for (int a : path.arrows) {
                    const ArrowInfo& ai = QG.info[a];
                    rhs = p.mod_m(rhs - p.pow_r(asum + ai.p));
                    asum += ai.a;
                }
                long lhs = p.mod_m(p.pow_r(asum) * QG.vertex_i[path_target(QG.quiver, path)]);
                CHECK(lhs == rhs);
            });
    }
}

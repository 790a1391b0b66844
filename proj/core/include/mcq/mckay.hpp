#pragma once

#include <memory>
#include <optional>
#include <string>

#include "mcq/groups.hpp"
#include "mcq/quiver.hpp"

namespace mcq {

enum class McKayKind { Abelian, Metacyclic, Tilde };

// Per-arrow semantic data. p, a are the basis exponents of the chosen arrow
// morphisms (r^a j = i - r^p mod m); abelian arrows use p as the direction
// index q (p = s marks the added arrow of the embedded quiver).
struct ArrowInfo {
    enum class Kind { Abelian, Case1, Case2, Case3, Embed };
    Kind kind = Kind::Abelian;
    long i = 0;        // source label
    long j = 0;        // target label
    int p = 0, a = 0;
    int ell_src = -1;  // split index at the source, when the source splits
    int ell_tgt = -1;  // split index at the target, when the target splits
};

// A McKay quiver together with its semantic arrow data and the quiver-level
// twist tau' (vertex/arrow permutation plus the dropped scalar factors,
// recorded separately for coefficient-level cyclicity checks).
struct McKayQuiver {
    McKayKind kind = McKayKind::Abelian;
    bool embedded = false;
    RepSystem reps;
    Quiver quiver;
    std::vector<ArrowInfo> info;
    std::vector<long> vertex_i;   // underlying integer label per vertex
    std::vector<int> vertex_ell;  // split index, -1 otherwise
    std::vector<int> vertex_dim;  // dim of the vertex representation

    std::vector<int> twist_vertex;
    std::vector<int> twist_arrow;
    std::vector<CycNum> twist_scalar;  // tau(a) = twist_scalar[a] * twist_arrow[a]
    int twist_order = 1;

    int vertex_index(long i, int ell = -1) const;
    int twist_vertex_inv(int v) const;
    int twist_arrow_inv(int a) const;

    QuiverAutomorphismAction twist_action() const;
};

// Q_A (or Q_A' when embedded): m vertices, arrows i -> i - r^k, plus
// i -> i + c when embedded.
McKayQuiver mckay_abelian(const RepSystem& reps, bool embedded = false);

// Q_G (or Q_G'): vertices D \ F and i^(ell), arrows the pinned bases
// (cases 1-3), plus v -> tau'(v) when embedded. Requires D closed under +c.
McKayQuiver mckay_metacyclic(const RepSystem& reps, bool embedded = false);

// Q~_G (or Q~_G'): vertices D, the common codomain of Phi and Psi.
McKayQuiver tilde_quiver(const RepSystem& reps, bool embedded = false);

// The G/A action phi on Q_A: i -> r i, x^i_q -> x^{ri}_{q+1}.
QuiverAutomorphismAction ga_action(const McKayQuiver& QA);

QuiverMorphism phi_morphism(const McKayQuiver& QA, const McKayQuiver& Qt);
QuiverMorphism psi_morphism(const McKayQuiver& QG, const McKayQuiver& Qt);

struct OrbitIsoReport {
    bool ok = true;
    std::string witness;
};

// Checks that Phi factors through Q_A/(G/A) and the induced map is an
// isomorphism onto the tilde quiver.
OrbitIsoReport verify_orbit_iso(const McKayQuiver& QA, const McKayQuiver& Qt);

// The full comparison diagram for one group: Q_A --Phi--> Q~ <--Psi-- Q_G.
struct Model {
    RepSystem reps;
    bool embedded = false;
    McKayQuiver QA, QG, Qt;
    QuiverMorphism Phi, Psi;

    Model() = default;
    Model(const Model&) = delete;
    Model& operator=(const Model&) = delete;
};

std::unique_ptr<Model> build_model(const RepSystem& reps, bool embedded = false);

}  // namespace mcq

#pragma once

#include <set>
#include <string>

#include "mcq/superpotential.hpp"

namespace mcq {

// Integer coordinates in the simple-root basis alpha_1 .. alpha_{N-1}.
using LatticePoint = std::vector<long>;

// The type-A root-lattice quiver Q^(N) for one group: weights r_1..r_N, the
// homomorphism eta, the kernel lattice B, a transversal of L/B and the G/A
// action. The infinite quiver is never materialized; every check runs on
// the transversal plus basis translations.
class LatticeModel {
public:
    LatticeModel(const MetacyclicParams& p, bool embedded);

    const MetacyclicParams& params() const { return params_; }
    bool embedded() const { return embedded_; }
    int N() const { return N_; }

    long eta(const LatticePoint& v) const;          // in Z/m
    long eta_step(int dir) const;                   // eta(alpha_dir)
    LatticePoint step(LatticePoint v, int dir) const;

    const std::vector<LatticePoint>& B_basis() const { return basis_; }
    bool B_membership(const LatticePoint& v) const { return eta(v) == 0; }

    LatticePoint phi(const LatticePoint& v) const;  // G/A generator on L
    int phi_dir(int dir) const;

    // {a alpha_1 : 0 <= a < m}; eta(a alpha_1) = -a
    std::vector<LatticePoint> transversal() const;
    LatticePoint point_with_eta(long i) const;

    int dir_to_abelian_q(int dir) const;
    int abelian_q_to_dir(int q) const;

private:
    MetacyclicParams params_;
    bool embedded_;
    int N_;
    std::vector<long> weights_;  // r_1..r_N mod m
    std::vector<LatticePoint> basis_;
};

// A cut: either the canonical family C_k^(l) (predicate through gamma_k) or
// an explicit B-invariant arrow set given by (eta residue, direction) pairs.
struct Cut {
    enum class Kind { Canonical, Explicit };
    Kind kind = Kind::Canonical;
    long l = 1, k = 1;
    std::set<std::pair<long, int>> arrows;  // explicit: (eta(v), direction)
    bool gl_boundary_warning = false;       // k = l in the GL case, recorded
};

Cut cut_Ck(const LatticeModel& lat, long l, long k);
Cut explicit_cut(const LatticeModel& lat,
                 const std::vector<std::pair<LatticePoint, int>>& arrows);

bool cut_contains(const LatticeModel& lat, const Cut& c, const LatticePoint& v, int dir);

struct CutCheck {
    bool ok = true;
    std::string witness;
};

// Every unit N-cycle at a transversal vertex contains exactly one cut
// arrow. Requires (and checks first) B-invariance.
CutCheck verify_cut(const LatticeModel& lat, const Cut& c);

bool is_B_invariant(const LatticeModel& lat, const Cut& c);
bool is_GA_invariant(const LatticeModel& lat, const Cut& c);

// The grading g_C^A on Q_A (or Q_A') induced by a B-invariant cut.
Grading abelian_grading_from_cut(const LatticeModel& lat, const Cut& c, const McKayQuiver& QA);

// The full chain g_G = Psi^* Phi_* g_C^A; throws verification_error with a
// witness when invariance or gradability fails.
Grading induce_grading(const LatticeModel& lat, const Cut& c, const Model& model);

// Swap the degrees of the two splitting arrows at the split vertex
// j^(ell); the homogeneity degree is re-verified.
Grading swap_move(const Superpotential& wG, const Grading& g, long j, int ell);

struct ZeroPathBound {
    long bound = 0;
    bool ok = false;  // no degree-0 path of length `bound` exists
};

// Verifies that every path of length s*l in Q_G has degree >= 1.
ZeroPathBound zero_path_bound(const Model& model, const Grading& g, long l);

struct InvariantCutSearch {
    bool exists = false;
    size_t orbit_count = 0;
    std::set<int> cut_arrows;  // a G/A-invariant cut of Q_A when one exists
};

// Exhaustive search over unions of G/A-orbits of Q_A arrows for an
// invariant cut (every projected unit N-cycle meets the set exactly once).
// Desk scale: the number of orbits must stay small.
InvariantCutSearch search_ga_invariant_cut(const McKayQuiver& QA);

}  // namespace mcq

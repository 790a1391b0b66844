#pragma once

#include <optional>
#include <vector>

#include "mcq/errors.hpp"
#include "mcq/linalg.hpp"

namespace mcq {

enum class GroupCase { SL, GL };

// Result of checking the defining conditions on (m, r, s, t). A value, not
// an exception, so callers can sweep parameter space.
struct ConditionReport {
    long m = 0, r = 0, s = 0, t = 0;
    bool m1 = false;  // gcd(m, r) = 1
    bool m2 = false;  // r^s = 1 (mod m)
    bool m3 = false;  // (r-1) t = 0 (mod m)
    bool m4 = false;  // s prime
    bool m5 = false;  // r != 1 (mod m)
    bool m6 = false;  // s | m
    bool m7 = false;  // s | r-1
    long c = 0;                         // sum_{k<s} r^k mod m
    long u = 0;                         // m / gcd(c, m)
    std::optional<long> n;              // m / s, when m6 holds
    std::optional<long> b;              // (r-1) / s, when m7 holds
    std::optional<GroupCase> group_case;

    bool all() const { return m1 && m2 && m3 && m4 && m5 && m6 && m7; }
};

ConditionReport check_conditions(long m, long r, long s, long t);

struct MetacyclicParams {
    long m = 0, r = 0, s = 0, t = 0;
    long c = 0, n = 0, b = 0, u = 0;
    GroupCase group_case = GroupCase::SL;

    // Validates M1-M7; throws condition_error listing the failures.
    static MetacyclicParams create(long m, long r, long s, long t);

    // Validates only M1-M5 (enough for the abelian quiver, the G/A action
    // and the invariant-cut search); n and b stay 0 when undefined.
    static MetacyclicParams create_basic(long m, long r, long s, long t);

    unsigned field_order() const { return static_cast<unsigned>(s * m); }
    long mod_m(long x) const { long v = x % m; return v < 0 ? v + m : v; }
    long pow_r(long k) const;  // r^k mod m, k may be negative (r invertible)
};

// The defining families: M(s,b) lands in SL(s), Mhat(s,b) (b >= 2) does not.
MetacyclicParams family_M(long s, long b);
MetacyclicParams family_Mhat(long s, long b);

std::vector<long> fixed_points(const MetacyclicParams& p);

// Representative data for the <r>-action on Z/m: the set D (one vertex label
// per orbit), fixed points F, the representative map ul, and kappa with
// r^kappa(i) * ul(i) = i.
struct RepSystem {
    MetacyclicParams params;
    std::vector<long> F;       // sorted
    std::vector<long> D;       // sorted
    std::vector<long> ul;      // size m
    std::vector<int> kappa;    // size m, in [0, s)
    bool closed_under_c = false;
    int d_split = 0;           // ell with det_V = T_c^(d_split)

    bool in_F(long i) const;
    bool in_D(long i) const;
    unsigned field_order() const { return params.field_order(); }

    // zeta_{sm}^(s e) = eps_m^e and friends, all in the single working field
    CycNum eps_m(long e) const;
    CycNum eps_s(long e) const;
    CycNum lambda(long i, int ell) const;  // eta_i eps_s^ell = zeta^(t i + m ell)
    long lambda_exp(long i, long ell) const;
};

// Deterministic default representative set: orbit minima in the SL case;
// otherwise chains i, i+c, ... built per twist-orbit of classes, searching
// start elements exhaustively. Throws condition_error when no +c-closed set
// exists for some orbit (records the obstruction).
RepSystem choose_representatives(const MetacyclicParams& p);

// Same validation pipeline with a caller-supplied D (must be a transversal
// containing F; +c-closure is recorded, not required).
RepSystem rep_system_with(const MetacyclicParams& p, std::vector<long> D);

int kappa(const RepSystem& reps, long i);

// Generator matrices alpha, beta of the group; s x s, or (s+1) x (s+1)
// with bottom-right entry det^{-1} when embedded.
std::pair<QMatrix, QMatrix> generator_matrices(const MetacyclicParams& p, bool embedded);

struct Irrep {
    enum class Kind { Induced, Split };
    Kind kind = Kind::Induced;
    long i = 0;
    int ell = 0;  // Split only
    int dim = 1;
    QMatrix alpha, beta;
    std::string label;
};

// One induced irrep per i in D \ F, s split irreps per i in F. The embedded
// flag additionally records the det^{-1} scalar action of the generators
// (the extra coordinate of the natural representation).
std::vector<Irrep> irreps(const RepSystem& reps, bool embedded = false);

struct EmbedScalars {
    CycNum alpha, beta;  // det^{-1}(alpha), det^{-1}(beta)
};
EmbedScalars detinv_action(const MetacyclicParams& p);

enum class TensorFactor { Natural, Trivial };

// dim Hom_G(S, V (x) T) computed as (1/|G|) sum_g conj(chi_S) chi_V chi_T,
// enumerating all s*m group elements exactly. Throws on a non-integer
// result (which would signal a representation bug).
long character_inner_product(const RepSystem& reps, const Irrep& S, const Irrep& T,
                             TensorFactor V, bool embedded = false);

// Order of the matrix group generated by alpha, beta, by closure
// enumeration. Desk scale only.
size_t group_order_by_closure(const MetacyclicParams& p, bool embedded = false);

}  // namespace mcq

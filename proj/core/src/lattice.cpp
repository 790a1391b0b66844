#include "mcq/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mcq {

namespace {

long mod(long x, long m) {
    long v = x % m;
    return v < 0 ? v + m : v;
}

}  // namespace

LatticeModel::LatticeModel(const MetacyclicParams& p, bool embedded)
    : params_(p), embedded_(embedded), N_(static_cast<int>(p.s) + (embedded ? 1 : 0)) {
    weights_.resize(N_);
    for (int j = 1; j <= static_cast<int>(p.s); ++j) weights_[j - 1] = p.pow_r(j - 1);
    if (embedded) weights_[N_ - 1] = mod(-p.c, p.m);  // r_{s+1} = -c
    // ker(eta) basis: m alpha_1 and alpha_j - r_j alpha_1 (r_1 = 1)
    basis_.clear();
    LatticePoint b0(N_ - 1, 0);
    b0[0] = p.m;
    basis_.push_back(b0);
    for (int j = 2; j <= N_ - 1; ++j) {
        LatticePoint b(N_ - 1, 0);
        b[j - 1] = 1;
        b[0] = -weights_[j - 1];
        basis_.push_back(b);
    }
}

long LatticeModel::eta_step(int dir) const {
    if (dir == 0) return mod(-weights_[N_ - 1], params_.m);  // alpha_0 = alpha_N
    return mod(-weights_[dir - 1], params_.m);
}

long LatticeModel::eta(const LatticePoint& v) const {
    if (static_cast<int>(v.size()) != N_ - 1)
        throw std::invalid_argument("LatticeModel::eta: coordinate length mismatch");
    long acc = 0;
    for (int j = 1; j <= N_ - 1; ++j) acc = mod(acc - v[j - 1] % params_.m * weights_[j - 1], params_.m);
    return acc;
}

LatticePoint LatticeModel::step(LatticePoint v, int dir) const {
    if (static_cast<int>(v.size()) != N_ - 1)
        throw std::invalid_argument("LatticeModel::step: coordinate length mismatch");
    if (dir == 0) {
        for (auto& x : v) x -= 1;  // alpha_0 = -sum alpha_i
    } else {
        v[dir - 1] += 1;
    }
    return v;
}

LatticePoint LatticeModel::phi(const LatticePoint& v) const {
    LatticePoint out(N_ - 1, 0);
    const long s = params_.s;
    if (!embedded_) {
        // alpha_j -> alpha_{j+1}, alpha_{s-1} -> alpha_0 = -sum
        for (int j = 1; j <= N_ - 2; ++j) out[j] += v[j - 1];
        long last = v[N_ - 2];
        for (auto& x : out) x -= last;
    } else {
        // alpha_j -> alpha_{j+1} (j < s), alpha_s -> alpha_1, alpha_0 fixed
        for (int j = 1; j <= static_cast<int>(s) - 1; ++j) out[j] += v[j - 1];
        out[0] += v[s - 1];
    }
    return out;
}

int LatticeModel::phi_dir(int dir) const {
    if (!embedded_) return (dir + 1) % N_;
    if (dir == 0) return 0;
    return dir % (N_ - 1) + 1;
}

std::vector<LatticePoint> LatticeModel::transversal() const {
    std::vector<LatticePoint> out;
    for (long a = 0; a < params_.m; ++a) {
        LatticePoint v(N_ - 1, 0);
        v[0] = a;
        out.push_back(std::move(v));
    }
    return out;
}

LatticePoint LatticeModel::point_with_eta(long i) const {
    LatticePoint v(N_ - 1, 0);
    v[0] = mod(-i, params_.m);
    return v;
}

int LatticeModel::dir_to_abelian_q(int dir) const {
    if (dir == 0) return N_ - 1;  // x_{s-1}, or the added arrow when embedded
    return dir - 1;
}

int LatticeModel::abelian_q_to_dir(int q) const {
    if (q == N_ - 1) return 0;
    return q + 1;
}

Cut cut_Ck(const LatticeModel& lat, long l, long k) {
    if (l < 1 || k < 1 || k > l) throw std::invalid_argument("cut_Ck: require 1 <= k <= l");
    Cut c;
    c.kind = Cut::Kind::Canonical;
    c.l = l;
    c.k = k;
    if (lat.embedded() && k == l) c.gl_boundary_warning = true;
    return c;
}

Cut explicit_cut(const LatticeModel& lat,
                 const std::vector<std::pair<LatticePoint, int>>& arrows) {
    Cut c;
    c.kind = Cut::Kind::Explicit;
    for (const auto& [v, dir] : arrows) {
        if (dir < 0 || dir >= lat.N()) throw std::invalid_argument("explicit_cut: bad direction");
        c.arrows.emplace(lat.eta(v), dir);
    }
    return c;
}

bool cut_contains(const LatticeModel& lat, const Cut& c, const LatticePoint& v, int dir) {
    if (c.kind == Cut::Kind::Explicit) return c.arrows.count({lat.eta(v), dir}) > 0;
    long sl = lat.params().s * c.l;
    long coord_sum = std::accumulate(v.begin(), v.end(), 0L);
    long gv = mod(c.k * coord_sum, sl);
    long gw = dir == 0 ? mod(gv - (lat.N() - 1) * c.k, sl) : mod(gv + c.k, sl);
    return gv >= gw;
}

bool is_B_invariant(const LatticeModel& lat, const Cut& c) {
    if (c.kind == Cut::Kind::Explicit) return true;  // residue classes by construction
    for (const LatticePoint& t : lat.transversal())
        for (const LatticePoint& b : lat.B_basis()) {
            LatticePoint tb(t.size());
            for (size_t i = 0; i < t.size(); ++i) tb[i] = t[i] + b[i];
            for (int dir = 0; dir < lat.N(); ++dir)
                if (cut_contains(lat, c, t, dir) != cut_contains(lat, c, tb, dir)) return false;
        }
    return true;
}

bool is_GA_invariant(const LatticeModel& lat, const Cut& c) {
    for (const LatticePoint& t : lat.transversal()) {
        LatticePoint ft = lat.phi(t);
        for (int dir = 0; dir < lat.N(); ++dir)
            if (cut_contains(lat, c, t, dir) != cut_contains(lat, c, ft, lat.phi_dir(dir)))
                return false;
    }
    return true;
}

CutCheck verify_cut(const LatticeModel& lat, const Cut& c) {
    if (!is_B_invariant(lat, c))
        throw verification_error("verify_cut: cut is not B-invariant");
    CutCheck out;
    int N = lat.N();
    std::vector<int> dirs(N);
    std::iota(dirs.begin(), dirs.end(), 0);
    for (const LatticePoint& t : lat.transversal()) {
        std::vector<int> sigma = dirs;
        do {
            int hits = 0;
            LatticePoint cur = t;
            for (int h = 0; h < N; ++h) {
                if (cut_contains(lat, c, cur, sigma[h])) ++hits;
                cur = lat.step(cur, sigma[h]);
            }
            if (hits != 1) {
                out.ok = false;
                std::ostringstream os;
                os << "cycle at eta=" << lat.eta(t) << " through directions (";
                for (int h = 0; h < N; ++h) os << sigma[h] << (h + 1 < N ? " " : ")");
                os << " contains " << hits << " cut arrows";
                out.witness = os.str();
                return out;
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return out;
}

Grading abelian_grading_from_cut(const LatticeModel& lat, const Cut& c, const McKayQuiver& QA) {
    if (QA.kind != McKayKind::Abelian)
        throw std::invalid_argument("abelian_grading_from_cut: abelian quiver expected");
    if (!is_B_invariant(lat, c))
        throw verification_error("abelian_grading_from_cut: cut is not B-invariant");
    Grading g(QA.quiver.num_arrows(), 0);
    for (size_t a = 0; a < QA.quiver.num_arrows(); ++a) {
        const ArrowInfo& ai = QA.info[a];
        LatticePoint v = lat.point_with_eta(ai.i);
        int dir = lat.abelian_q_to_dir(ai.p);
        g[a] = cut_contains(lat, c, v, dir) ? 1 : 0;
    }
    return g;
}

Grading induce_grading(const LatticeModel& lat, const Cut& c, const Model& model) {
    Grading gA = abelian_grading_from_cut(lat, c, model.QA);
    GradabilityReport rep = is_gradable(model.Phi, gA);
    if (!rep.ok) {
        std::ostringstream os;
        os << "induce_grading: Phi not gradable; fiber over "
           << model.Qt.quiver.arrow(rep.offending_codomain_arrow).label << " mixes degrees {";
        for (int a : rep.offending_fiber)
            os << model.QA.quiver.arrow(a).label << ":" << gA[a] << " ";
        os << "}";
        throw verification_error(os.str());
    }
    Grading gt = pushforward_grading(model.Phi, gA);
    return pullback_grading(model.Psi, gt);
}

Grading swap_move(const Superpotential& wG, const Grading& g, long j, int ell) {
    const McKayQuiver& data = *wG.data;
    if (data.kind != McKayKind::Metacyclic)
        throw std::invalid_argument("swap_move: metacyclic quiver expected");
    int v = data.vertex_index(j, ell);

    int in_arrow = -1, out_arrow = -1;
    for (int a : data.quiver.in_arrows(v))
        if (data.info[a].kind == ArrowInfo::Kind::Case2) {
            if (in_arrow != -1) throw std::logic_error("swap_move: several splitting in-arrows");
            in_arrow = a;
        }
    for (int a : data.quiver.out_arrows(v))
        if (data.info[a].kind == ArrowInfo::Kind::Case3) {
            if (out_arrow != -1) throw std::logic_error("swap_move: several splitting out-arrows");
            out_arrow = a;
        }
    if (in_arrow < 0 || out_arrow < 0)
        throw std::invalid_argument("swap_move: vertex is not a split vertex");

    // Every incident superpotential term must see exactly one degree-1
    // arrow in its in/out pair at the vertex.
    for (const PathTerm& term : wG.terms) {
        const auto& arr = term.path.arrows;
        for (size_t h = 0; h + 1 < arr.size(); ++h)
            if (data.quiver.arrow(arr[h]).tgt == v)
                if (g[arr[h]] + g[arr[h + 1]] != 1)
                    throw verification_error("swap_move: term " + print_path(data.quiver, term.path) +
                                             " lacks a unique degree-1 arrow at the vertex");
        if (path_target(data.quiver, term.path) == v) {
            int wrap = data.twist_arrow_inv(arr.front());
            if (g[arr.back()] + g[wrap] != 1)
                throw verification_error("swap_move: seam term " + print_path(data.quiver, term.path) +
                                         " lacks a unique degree-1 arrow at the vertex");
        }
    }

    HomogeneityResult before = homogeneity_degree(wG, g);
    Grading out = g;
    std::swap(out[in_arrow], out[out_arrow]);
    HomogeneityResult after = homogeneity_degree(wG, out);
    if (before.homogeneous() && (!after.homogeneous() || *after.degree != *before.degree))
        throw verification_error("swap_move: homogeneity degree not preserved");
    return out;
}

ZeroPathBound zero_path_bound(const Model& model, const Grading& g, long l) {
    ZeroPathBound out;
    out.bound = model.reps.params.s * l;
    out.ok = true;
    const Quiver& q = model.QG.quiver;
    // DFS along degree-0 arrows only
    std::function<bool(int, long)> dfs = [&](int v, long remaining) -> bool {
        if (remaining == 0) return true;  // found a degree-0 path of full length
        for (int a : q.out_arrows(v))
            if (g[a] == 0 && dfs(q.arrow(a).tgt, remaining - 1)) return true;
        return false;
    };
    for (size_t v = 0; v < q.num_vertices() && out.ok; ++v)
        if (dfs(static_cast<int>(v), out.bound)) out.ok = false;
    return out;
}

InvariantCutSearch search_ga_invariant_cut(const McKayQuiver& QA) {
    if (QA.kind != McKayKind::Abelian)
        throw std::invalid_argument("search_ga_invariant_cut: abelian quiver expected");
    InvariantCutSearch res;
    QuiverAutomorphismAction act = ga_action(QA);

    // arrow orbits under phi
    std::vector<int> orbit_of(QA.quiver.num_arrows(), -1);
    std::vector<std::vector<int>> orbits;
    for (size_t a = 0; a < QA.quiver.num_arrows(); ++a) {
        if (orbit_of[a] != -1) continue;
        int id = static_cast<int>(orbits.size());
        orbits.emplace_back();
        int cur = static_cast<int>(a);
        while (orbit_of[cur] == -1) {
            orbit_of[cur] = id;
            orbits[id].push_back(cur);
            cur = act.arrow_perm[cur];
        }
    }
    res.orbit_count = orbits.size();
    if (orbits.size() > 20)
        throw std::invalid_argument("search_ga_invariant_cut: too many orbits for exhaustion");

    // projected unit N-cycles: from every vertex, every direction order
    LatticeModel lat(QA.reps.params, QA.embedded);
    int N = lat.N();
    std::vector<std::vector<int>> cycles;
    std::vector<int> dirs(N);
    std::iota(dirs.begin(), dirs.end(), 0);
    long per = N;  // arrows per abelian vertex
    for (long i = 0; i < QA.reps.params.m; ++i) {
        std::vector<int> sigma = dirs;
        do {
            std::vector<int> cyc;
            long cur = i;
            for (int h = 0; h < N; ++h) {
                int q = lat.dir_to_abelian_q(sigma[h]);
                int arrow = static_cast<int>(cur * per + q);
                cyc.push_back(arrow);
                cur = QA.quiver.arrow(arrow).tgt;
            }
            cycles.push_back(std::move(cyc));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }

    for (unsigned mask = 0; mask < (1u << orbits.size()); ++mask) {
        bool good = true;
        for (const auto& cyc : cycles) {
            int hits = 0;
            for (int a : cyc)
                if (mask & (1u << orbit_of[a])) ++hits;
            if (hits != 1) {
                good = false;
                break;
            }
        }
        if (good) {
            res.exists = true;
            for (size_t o = 0; o < orbits.size(); ++o)
                if (mask & (1u << o))
                    for (int a : orbits[o]) res.cut_arrows.insert(a);
            return res;
        }
    }
    return res;
}

}  // namespace mcq

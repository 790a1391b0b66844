#include "mcq/superpotential.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace mcq {

namespace {

long mod(long x, long m) {
    long v = x % m;
    return v < 0 ? v + m : v;
}

// One summand of the image of a basis vector under a partial composition:
// (q * zeta^e) (x) w_1 (x) ... (x) w_k (x) (basis vector `vec` of the
// current target representation). Letters w_j index the pinned basis of the
// natural representation: 0..s-1 are beta^k v_1, letter s is the extra
// coordinate of the embedded representation.
struct Term {
    Rational q;
    long e = 0;
    std::vector<int> word;
    int vec = 0;
};

struct Engine {
    const McKayQuiver* data;
    long m, s, t, c, M;
    int d;

    explicit Engine(const McKayQuiver& dq)
        : data(&dq),
          m(dq.reps.params.m),
          s(dq.reps.params.s),
          t(dq.reps.params.t),
          c(dq.reps.params.c),
          M(static_cast<long>(dq.reps.field_order())),
          d(dq.reps.d_split) {}

    long eps_m_exp(long x) const { return mod(s * x, M); }
    long lam_exp(long i, long ell) const { return mod(t * i + m * ell, M); }

    // beta^k v_1 for 0 <= k < 2s: letter k mod s, wrap factor eps_m^t.
    void push_letter(Term& tm, long k) const {
        if (k >= s) {
            k -= s;
            tm.e = mod(tm.e + eps_m_exp(t), M);
        }
        tm.word.push_back(static_cast<int>(k));
    }

    void apply(const ArrowInfo& ai, std::vector<Term>& terms) const {
        std::vector<Term> out;
        out.reserve(terms.size());
        for (Term& tm : terms) {
            switch (ai.kind) {
                case ArrowInfo::Kind::Abelian: {
                    // v_i -> v_{r^p} (x) v_{i-r^p}, or w (x) v_{i+c}
                    tm.word.push_back(ai.p);
                    out.push_back(std::move(tm));
                    break;
                }
                case ArrowInfo::Kind::Case1: {
                    long k = tm.vec;
                    push_letter(tm, k + ai.p);
                    long v2 = k + ai.a;
                    if (v2 >= s) {
                        v2 -= s;
                        tm.e = mod(tm.e + eps_m_exp(mod(t * ai.j, m)), M);
                    }
                    tm.vec = static_cast<int>(v2);
                    out.push_back(std::move(tm));
                    break;
                }
                case ArrowInfo::Kind::Case2: {
                    long k = tm.vec;
                    tm.q /= s;
                    tm.e = mod(tm.e + (k + 1) * lam_exp(ai.j, ai.ell_tgt) - eps_m_exp(mod(t * ai.j, m)),
                               M);
                    push_letter(tm, k + ai.p);
                    tm.vec = 0;
                    out.push_back(std::move(tm));
                    break;
                }
                case ArrowInfo::Kind::Case3: {
                    for (long kk = 0; kk < s; ++kk) {
                        Term nt = tm;
                        nt.e = mod(nt.e + (s - 1 - kk) * lam_exp(ai.i, ai.ell_src), M);
                        push_letter(nt, kk + ai.p);
                        nt.vec = static_cast<int>(kk);
                        out.push_back(std::move(nt));
                    }
                    break;
                }
                case ArrowInfo::Kind::Embed: {
                    if (ai.ell_src < 0) {
                        long k = tm.vec;
                        tm.e = mod(tm.e - k * lam_exp(c, d), M);
                    }
                    tm.word.push_back(static_cast<int>(s));
                    out.push_back(std::move(tm));
                    break;
                }
            }
        }
        terms = std::move(out);
    }
};

int wedge_sign(const std::vector<int>& word, size_t n) {
    // sign of the permutation sorting `word`, 0 if letters repeat or escape
    unsigned seen = 0;
    int inversions = 0;
    for (size_t i = 0; i < word.size(); ++i) {
        if (word[i] < 0 || word[i] >= static_cast<int>(n)) return 0;
        if (seen & (1u << word[i])) return 0;
        seen |= 1u << word[i];
        for (size_t j = 0; j < i; ++j)
            if (word[j] > word[i]) ++inversions;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

// gamma[b]: component of the antisymmetrized composition on target basis b.
std::map<int, CycNum> compose_and_antisymmetrize(const McKayQuiver& data, const Path& p,
                                                 int start_basis) {
    Engine eng(data);
    size_t n = p.arrows.size();
    std::vector<Term> terms(1);
    terms[0].q = 1;
    terms[0].e = 0;
    terms[0].vec = start_basis;
    for (int a : p.arrows) eng.apply(data.info[a], terms);

    std::map<int, CycNum> gamma;
    unsigned M = data.reps.field_order();
    for (const Term& tm : terms) {
        int sg = wedge_sign(tm.word, n);
        if (sg == 0) continue;
        CycNum mono = CycNum::monomial(M, sg > 0 ? tm.q : -tm.q, tm.e);
        auto [it, inserted] = gamma.emplace(tm.vec, mono);
        if (!inserted) it->second += mono;
    }
    for (auto it = gamma.begin(); it != gamma.end();) {
        if (it->second.is_zero())
            it = gamma.erase(it);
        else
            ++it;
    }
    return gamma;
}

CycNum coefficient_from_basis(const McKayQuiver& data, const Path& p, int k0) {
    unsigned M = data.reps.field_order();
    std::map<int, CycNum> gamma = compose_and_antisymmetrize(data, p, k0);
    for (const auto& [b, val] : gamma)
        if (b != k0)
            throw verification_error("coefficient: composite is not scalar on basis " +
                                     std::to_string(k0) + " of " + print_path(data.quiver, p));
    CycNum out = CycNum::zero(M);
    if (auto it = gamma.find(k0); it != gamma.end()) out = it->second;
    if (k0 > 0 && !data.embedded) {
        // identification u (x) beta^k v_j -> lambda_{c,d}^{-k} beta^k v_{j+c}
        Engine eng(data);
        out *= CycNum::monomial(M, Rational(1), mod(-k0 * eng.lam_exp(eng.c, eng.d), eng.M));
    }
    return out;
}

}  // namespace

CycNum Superpotential::coeff_of(const Path& p) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), p,
                               [](const PathTerm& t, const Path& q) { return t.path < q; });
    if (it != terms.end() && it->path == p) return it->coeff;
    return CycNum::zero(data->reps.field_order());
}

bool Superpotential::in_support(const Path& p) const { return !coeff_of(p).is_zero(); }

std::set<Path> Superpotential::support() const {
    std::set<Path> out;
    for (const auto& t : terms) out.insert(t.path);
    return out;
}

QMatrix arrow_matrix(const McKayQuiver& data, int arrow) {
    if (data.kind == McKayKind::Tilde)
        throw std::invalid_argument("arrow_matrix: tilde quiver arrows carry no morphism");
    const Arrow& ar = data.quiver.arrow(arrow);
    unsigned M = data.reps.field_order();
    long s = data.reps.params.s;
    long natural_dim = s + (data.embedded ? 1 : 0);
    int dim_src = data.vertex_dim[ar.src];
    int dim_tgt = data.vertex_dim[ar.tgt];

    QMatrix out(M, static_cast<size_t>(natural_dim * dim_tgt), static_cast<size_t>(dim_src));
    Engine eng(data);
    for (int k = 0; k < dim_src; ++k) {
        std::vector<Term> terms(1);
        terms[0].q = 1;
        terms[0].e = 0;
        terms[0].vec = k;
        eng.apply(data.info[arrow], terms);
        for (const Term& tm : terms) {
            size_t row = static_cast<size_t>(tm.word.at(0)) * dim_tgt + tm.vec;
            out.at(row, k) += CycNum::monomial(M, tm.q, tm.e);
        }
    }
    return out;
}

CycNum coefficient(const McKayQuiver& data, const Path& p) {
    if (data.kind == McKayKind::Tilde)
        throw std::invalid_argument("coefficient: tilde quiver paths carry no morphism");
    if (!path_composable(data.quiver, p))
        throw std::invalid_argument("coefficient: path not composable");
    unsigned M = data.reps.field_order();
    if (data.twist_vertex[path_target(data.quiver, p)] != path_source(data.quiver, p))
        return CycNum::zero(M);
    return coefficient_from_basis(data, p, 0);
}

CycNum coefficient_checked(const McKayQuiver& data, const Path& p) {
    CycNum c0 = coefficient(data, p);
    int dim = data.vertex_dim[path_source(data.quiver, p)];
    for (int k = 1; k < dim; ++k) {
        CycNum ck = coefficient_from_basis(data, p, k);
        if (ck != c0)
            throw verification_error("coefficient_checked: scalar differs across basis of " +
                                     print_path(data.quiver, p));
    }
    return c0;
}

Superpotential superpotential(const McKayQuiver& data, int jobs) {
    if (data.kind == McKayKind::Tilde)
        throw std::invalid_argument("superpotential: tilde quiver has no superpotential");
    const MetacyclicParams& par = data.reps.params;
    int n = static_cast<int>(par.s) + (data.embedded ? 1 : 0);

    size_t nv = data.quiver.num_vertices();
    std::vector<std::vector<PathTerm>> buckets(nv);
    auto run_vertex = [&](size_t v) {
        Path p;
        p.arrows.reserve(n);
        std::function<void(int, int)> dfs = [&](int cur, int remaining) {
            if (remaining == 0) {
                if (data.twist_vertex[cur] != static_cast<int>(v)) return;
                CycNum c = coefficient_from_basis(data, p, 0);
                if (c.is_zero()) return;
                c *= Rational(data.vertex_dim[cur]);
                buckets[v].push_back(PathTerm{p, c});
                return;
            }
            for (int a : data.quiver.out_arrows(cur)) {
                p.arrows.push_back(a);
                dfs(data.quiver.arrow(a).tgt, remaining - 1);
                p.arrows.pop_back();
            }
        };
        dfs(static_cast<int>(v), n);
    };

    if (jobs <= 1) {
        for (size_t v = 0; v < nv; ++v) run_vertex(v);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (size_t v = next.fetch_add(1); v < nv; v = next.fetch_add(1)) run_vertex(v);
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    Superpotential w;
    w.data = &data;
    w.degree = n;
    for (auto& b : buckets)
        for (auto& t : b) w.terms.push_back(std::move(t));
    std::sort(w.terms.begin(), w.terms.end(),
              [](const PathTerm& a, const PathTerm& b) { return a.path < b.path; });
    return w;
}

Superpotential superpotential_abelian_closed_form(const McKayQuiver& data) {
    if (data.kind != McKayKind::Abelian)
        throw std::invalid_argument("superpotential_abelian_closed_form: abelian quiver expected");
    const MetacyclicParams& par = data.reps.params;
    long m = par.m;
    int n = static_cast<int>(par.s) + (data.embedded ? 1 : 0);
    long per = n;  // arrows per vertex
    unsigned M = data.reps.field_order();

    Superpotential w;
    w.data = &data;
    w.degree = n;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (long i = 0; i < m; ++i) {
        std::vector<int> sigma = perm;
        do {
            Path p;
            long cur = i;
            for (int h = 0; h < n; ++h) {
                int a = static_cast<int>(cur * per + sigma[h]);
                p.arrows.push_back(a);
                cur = data.quiver.arrow(a).tgt;
            }
            int sg = wedge_sign(sigma, n);
            w.terms.push_back(PathTerm{p, CycNum::from_rational(M, Rational(sg))});
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    std::sort(w.terms.begin(), w.terms.end(),
              [](const PathTerm& a, const PathTerm& b) { return a.path < b.path; });
    return w;
}

CyclicityReport check_twisted_cyclicity(const Superpotential& w) {
    CyclicityReport rep;
    const McKayQuiver& data = *w.data;
    unsigned M = data.reps.field_order();
    Rational sign((w.degree - 1) % 2 == 0 ? 1 : -1);
    for (const PathTerm& term : w.terms) {
        int b1 = term.path.arrows.front();
        int x = data.twist_arrow_inv(b1);  // tau(x) = scalar * b1
        Path rot;
        rot.arrows.assign(term.path.arrows.begin() + 1, term.path.arrows.end());
        rot.arrows.push_back(x);
        if (!path_composable(data.quiver, rot)) {
            rep.ok = rep.support_closed = false;
            rep.witness = "rotation of " + print_path(data.quiver, term.path) + " not composable";
            return rep;
        }
        CycNum rhs = w.coeff_of(rot);
        if (rhs.is_zero()) {
            rep.support_closed = false;
            rep.ok = false;
            rep.witness = "support not closed under twisted rotation at " +
                          print_path(data.quiver, term.path);
            return rep;
        }
        CycNum lhs = term.coeff * data.twist_scalar[x].inverse();
        if (lhs != rhs * CycNum::from_rational(M, sign)) {
            rep.ok = false;
            rep.witness = "coefficient mismatch under twisted rotation at " +
                          print_path(data.quiver, term.path);
            return rep;
        }
    }
    return rep;
}

bool residue_criterion(const McKayQuiver& data, const Path& p) {
    const MetacyclicParams& par = data.reps.params;
    if (static_cast<long>(p.arrows.size()) != par.s)
        throw std::invalid_argument("residue_criterion: path length must be s");
    if (!path_composable(data.quiver, p))
        throw std::invalid_argument("residue_criterion: path not composable");
    long s = par.s;
    std::vector<char> hit(s, 0);
    long asum = 0;
    for (int a : p.arrows) {
        const ArrowInfo& ai = data.info[a];
        if (ai.kind != ArrowInfo::Kind::Case1)
            throw verification_error("residue_criterion: path passes through a fixed point");
        hit[mod(asum + ai.p, s)] = 1;
        asum += ai.a;
    }
    for (long k = 0; k < s; ++k)
        if (!hit[k]) return false;
    return true;
}

SupportReport support_correspondence(const Superpotential& wA, const Superpotential& wG,
                                     const QuiverMorphism& Phi, const QuiverMorphism& Psi) {
    std::set<Path> phi_img, psi_img;
    for (const auto& t : wA.terms) phi_img.insert(Phi.map_path(t.path));
    for (const auto& t : wG.terms) psi_img.insert(Psi.map_path(t.path));
    SupportReport rep;
    rep.subset = true;
    for (const Path& p : psi_img)
        if (!phi_img.count(p)) {
            rep.subset = false;
            if (rep.only_in_psi.size() < 5) rep.only_in_psi.push_back(p);
        }
    for (const Path& p : phi_img)
        if (!psi_img.count(p)) {
            if (rep.only_in_phi.size() < 5) rep.only_in_phi.push_back(p);
        }
    rep.equal = rep.subset && rep.only_in_phi.empty();
    return rep;
}

namespace {

bool travel_suffix_is(const Path& q, const Path& p) {
    size_t k = p.arrows.size();
    if (q.arrows.size() < k) return false;
    return std::equal(q.arrows.end() - k, q.arrows.end(), p.arrows.begin());
}

bool travel_prefix_is(const Path& q, const Path& p) {
    size_t k = p.arrows.size();
    if (q.arrows.size() < k) return false;
    return std::equal(q.arrows.begin(), q.arrows.begin() + k, p.arrows.begin());
}

void add_term(FormalSum& sum, const Path& p, const CycNum& c) {
    auto it = std::lower_bound(sum.begin(), sum.end(), p,
                               [](const PathTerm& t, const Path& q) { return t.path < q; });
    if (it != sum.end() && it->path == p)
        it->coeff += c;
    else
        sum.insert(it, PathTerm{p, c});
}

void prune_zeros(FormalSum& sum) {
    sum.erase(std::remove_if(sum.begin(), sum.end(),
                             [](const PathTerm& t) { return t.coeff.is_zero(); }),
              sum.end());
}

}  // namespace

FormalSum partial_derivative(const Superpotential& w, const Path& p, Side side) {
    if (static_cast<int>(p.arrows.size()) > w.degree)
        throw std::invalid_argument("partial_derivative: path longer than the superpotential");
    FormalSum out;
    size_t k = p.arrows.size();
    for (const PathTerm& term : w.terms) {
        if (side == Side::Left) {
            // d_p keeps q = p r; p is the last-traveled stretch
            if (!travel_suffix_is(term.path, p)) continue;
            Path r;
            r.arrows.assign(term.path.arrows.begin(), term.path.arrows.end() - k);
            add_term(out, r, term.coeff);
        } else {
            if (!travel_prefix_is(term.path, p)) continue;
            Path r;
            r.arrows.assign(term.path.arrows.begin() + k, term.path.arrows.end());
            add_term(out, r, term.coeff);
        }
    }
    prune_zeros(out);
    return out;
}

FormalSum partial_derivative_at_vertex(const Superpotential& w, int vertex) {
    FormalSum out;
    for (const PathTerm& term : w.terms)
        if (path_target(w.data->quiver, term.path) == vertex) add_term(out, term.path, term.coeff);
    prune_zeros(out);
    return out;
}

std::vector<Relation> relations(const Superpotential& w, const Grading* g) {
    const Quiver& q = w.data->quiver;
    std::vector<Relation> out;
    auto attach_degree = [&](Relation& rel) {
        if (!g || rel.value.empty()) return;
        long deg = path_degree(*g, rel.value.front().path);
        for (const auto& t : rel.value)
            if (path_degree(*g, t.path) != deg) return;  // left unset: inhomogeneous
        rel.degree = deg;
    };

    if (w.degree == 2) {
        for (size_t v = 0; v < q.num_vertices(); ++v) {
            Relation rel;
            rel.by_vertex = static_cast<int>(v);
            rel.value = partial_derivative_at_vertex(w, static_cast<int>(v));
            if (rel.value.empty()) continue;
            attach_degree(rel);
            out.push_back(std::move(rel));
        }
        return out;
    }

    // differentiating paths = travel suffixes of support paths of length n-2
    std::set<Path> suffixes;
    size_t k = static_cast<size_t>(w.degree - 2);
    for (const auto& term : w.terms) {
        Path s;
        s.arrows.assign(term.path.arrows.end() - k, term.path.arrows.end());
        suffixes.insert(std::move(s));
    }
    for (const Path& p : suffixes) {
        Relation rel;
        rel.by = p;
        rel.by_vertex = path_target(q, p);
        rel.value = partial_derivative(w, p, Side::Left);
        if (rel.value.empty()) continue;
        attach_degree(rel);
        out.push_back(std::move(rel));
    }
    return out;
}

namespace {

// Generators of W_j: vertex idempotents when the differentiating length
// n-j is 0, otherwise travel suffixes of support paths of length n-j.
struct WGenerators {
    std::vector<Path> paths;     // used when !vertex_gens
    std::vector<int> vertices;   // used when vertex_gens
    bool vertex_gens = false;
};

WGenerators w_generators(const Superpotential& w, int j) {
    const Quiver& q = w.data->quiver;
    int n = w.degree;
    WGenerators out;
    if (n - j == 0) {
        out.vertex_gens = true;
        std::set<int> verts;
        for (const auto& t : w.terms) verts.insert(path_target(q, t.path));
        out.vertices.assign(verts.begin(), verts.end());
    } else {
        std::set<Path> sufs;
        for (const auto& t : w.terms) {
            Path s;
            s.arrows.assign(t.path.arrows.end() - (n - j), t.path.arrows.end());
            sufs.insert(std::move(s));
        }
        out.paths.assign(sufs.begin(), sufs.end());
    }
    return out;
}

// Sparse vectors of the generators of W_j inside CQ_j. The ambient index
// runs over travel prefixes of support paths (vertices when j = 0).
std::vector<SparseVec> w_span(const Superpotential& w, int j, const WGenerators& gens) {
    const Quiver& q = w.data->quiver;
    std::map<Path, long> prefix_index;
    std::set<int> src_verts;
    for (const auto& t : w.terms) src_verts.insert(path_source(q, t.path));
    if (j > 0) {
        std::set<Path> prefs;
        for (const auto& t : w.terms) {
            Path s;
            s.arrows.assign(t.path.arrows.begin(), t.path.arrows.begin() + j);
            prefs.insert(std::move(s));
        }
        long idx = 0;
        for (const Path& p : prefs) prefix_index[p] = idx++;
    }
    std::vector<SparseVec> vecs;
    if (gens.vertex_gens) {
        for (int v : gens.vertices) {
            SparseVec vec;
            for (const auto& t : partial_derivative_at_vertex(w, v))
                vec[prefix_index.at(t.path)] = t.coeff;
            vecs.push_back(std::move(vec));
        }
        return vecs;
    }
    for (const Path& p : gens.paths) {
        SparseVec vec;
        if (j == 0) {
            // d_p w = c_p e_{s(p)} for |p| = n
            CycNum c = w.coeff_of(p);
            if (!c.is_zero()) vec[path_source(q, p)] = c;
        } else {
            for (const auto& t : partial_derivative(w, p, Side::Left))
                vec[prefix_index.at(t.path)] = t.coeff;
        }
        vecs.push_back(std::move(vec));
    }
    return vecs;
}

}  // namespace

PairingResult pairing_matrix(const Superpotential& w, int k) {
    if (k < 0 || k > w.degree) throw std::invalid_argument("pairing_matrix: k out of range");
    const Quiver& q = w.data->quiver;
    unsigned M = w.data->reps.field_order();
    int n = w.degree;

    WGenerators gk = w_generators(w, k);
    WGenerators gnk = w_generators(w, n - k);
    std::vector<size_t> rows = independent_rows(w_span(w, k, gk), M);
    std::vector<size_t> cols = independent_rows(w_span(w, n - k, gnk), M);

    PairingResult res;
    res.dim_low = rows.size();
    res.dim_high = cols.size();
    res.matrix = QMatrix(M, rows.size(), cols.size());

    // <d_p w, d_q w> = Tr(d_{qp} w): the coefficient of the support path
    // traveling the row generator p first, then the column generator q.
    auto entry = [&](size_t ri, size_t ci) -> CycNum {
        if (gk.vertex_gens) {  // k = n: rows are e_v, columns paths of length n
            const Path& full = gnk.paths[ci];
            return path_source(q, full) == gk.vertices[ri] ? w.coeff_of(full) : CycNum::zero(M);
        }
        if (gnk.vertex_gens) {  // k = 0: columns are e_v, rows paths of length n
            const Path& full = gk.paths[ri];
            return path_target(q, full) == gnk.vertices[ci] ? w.coeff_of(full) : CycNum::zero(M);
        }
        const Path& p = gk.paths[ri];
        const Path& qq = gnk.paths[ci];
        if (path_target(q, p) != path_source(q, qq)) return CycNum::zero(M);
        Path full;
        full.arrows = p.arrows;
        full.arrows.insert(full.arrows.end(), qq.arrows.begin(), qq.arrows.end());
        return w.coeff_of(full);
    };

    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) res.matrix.at(i, j) = entry(rows[i], cols[j]);

    res.nondegenerate =
        res.dim_low == res.dim_high && res.matrix.rank() == res.dim_low && res.dim_low > 0;
    return res;
}

HomogeneityResult homogeneity_degree(const Superpotential& w, const Grading& g) {
    HomogeneityResult res;
    if (w.terms.empty()) return res;
    long deg = path_degree(g, w.terms.front().path);
    for (const auto& t : w.terms) {
        long d = path_degree(g, t.path);
        if (d != deg) {
            res.witness = std::make_pair(w.terms.front().path, t.path);
            return res;
        }
    }
    res.degree = deg;
    return res;
}

}  // namespace mcq

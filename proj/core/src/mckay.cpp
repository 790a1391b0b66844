#include "mcq/mckay.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mcq {

namespace {

std::string case1_label(long i, int p, int a) {
    std::ostringstream os;
    os << "x^" << i << "_{" << p << "," << a << "}";
    return os.str();
}

std::string case2_label(long i, int ell, int p) {
    std::ostringstream os;
    os << "x^{" << i << "(" << ell << ")}_{" << p << ",0}";
    return os.str();
}

std::string case3_label(long i, int ell, int p) {
    std::ostringstream os;
    os << "x^{(" << ell << ")" << i << "}_{" << p << ",0}";
    return os.str();
}

std::string tilde_label(long i, int p) {
    std::ostringstream os;
    os << "x^" << i << "_{" << p << ",0}";
    return os.str();
}

std::string abelian_label(long i, int q) {
    std::ostringstream os;
    os << "x^" << i << "_" << q;
    return os.str();
}

}  // namespace

int McKayQuiver::vertex_index(long i, int ell) const {
    for (size_t v = 0; v < vertex_i.size(); ++v)
        if (vertex_i[v] == i && vertex_ell[v] == ell) return static_cast<int>(v);
    throw std::out_of_range("McKayQuiver::vertex_index: no vertex (" + std::to_string(i) + "," +
                            std::to_string(ell) + ")");
}

int McKayQuiver::twist_vertex_inv(int v) const {
    for (size_t w = 0; w < twist_vertex.size(); ++w)
        if (twist_vertex[w] == v) return static_cast<int>(w);
    throw std::out_of_range("twist_vertex_inv");
}

int McKayQuiver::twist_arrow_inv(int a) const {
    for (size_t b = 0; b < twist_arrow.size(); ++b)
        if (twist_arrow[b] == a) return static_cast<int>(b);
    throw std::out_of_range("twist_arrow_inv");
}

QuiverAutomorphismAction McKayQuiver::twist_action() const {
    QuiverAutomorphismAction act;
    act.q = &quiver;
    act.vertex_perm = twist_vertex;
    act.arrow_perm = twist_arrow;
    act.order = twist_order;
    act.validate();
    return act;
}

namespace {

int compute_twist_order(const std::vector<int>& vperm, const std::vector<int>& aperm, int bound) {
    std::vector<int> v(vperm.size()), a(aperm.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
    for (size_t i = 0; i < a.size(); ++i) a[i] = static_cast<int>(i);
    for (int k = 1; k <= bound; ++k) {
        for (auto& x : v) x = vperm[x];
        for (auto& y : a) y = aperm[y];
        bool id = true;
        for (size_t i = 0; i < v.size() && id; ++i) id = v[i] == static_cast<int>(i);
        for (size_t i = 0; i < a.size() && id; ++i) id = a[i] == static_cast<int>(i);
        if (id) return k;
    }
    throw std::logic_error("compute_twist_order: order exceeds bound");
}

}  // namespace

McKayQuiver mckay_abelian(const RepSystem& reps, bool embedded) {
    const MetacyclicParams& p = reps.params;
    unsigned M = reps.field_order();
    McKayQuiver out;
    out.kind = McKayKind::Abelian;
    out.embedded = embedded;
    out.reps = reps;

    for (long i = 0; i < p.m; ++i) {
        out.quiver.add_vertex(std::to_string(i));
        out.vertex_i.push_back(i);
        out.vertex_ell.push_back(-1);
        out.vertex_dim.push_back(1);
    }
    for (long i = 0; i < p.m; ++i) {
        for (long q = 0; q < p.s; ++q) {
            long j = p.mod_m(i - p.pow_r(q));
            out.quiver.add_arrow(static_cast<int>(i), static_cast<int>(j),
                                 abelian_label(i, static_cast<int>(q)));
            ArrowInfo ai;
            ai.kind = ArrowInfo::Kind::Abelian;
            ai.i = i;
            ai.j = j;
            ai.p = static_cast<int>(q);
            out.info.push_back(ai);
        }
        if (embedded) {
            long j = p.mod_m(i + p.c);
            out.quiver.add_arrow(static_cast<int>(i), static_cast<int>(j),
                                 abelian_label(i, static_cast<int>(p.s)));
            ArrowInfo ai;
            ai.kind = ArrowInfo::Kind::Abelian;
            ai.i = i;
            ai.j = j;
            ai.p = static_cast<int>(p.s);
            out.info.push_back(ai);
        }
    }

    // Twist: identity for the embedded quiver (det is trivial there),
    // i -> i+c with unit scalars otherwise.
    size_t na = out.quiver.num_arrows();
    out.twist_vertex.resize(p.m);
    out.twist_arrow.resize(na);
    out.twist_scalar.assign(na, CycNum::one(M));
    if (embedded) {
        for (long i = 0; i < p.m; ++i) out.twist_vertex[i] = static_cast<int>(i);
        for (size_t a = 0; a < na; ++a) out.twist_arrow[a] = static_cast<int>(a);
        out.twist_order = 1;
    } else {
        long per = p.s;  // arrows per vertex
        for (long i = 0; i < p.m; ++i) out.twist_vertex[i] = static_cast<int>(p.mod_m(i + p.c));
        for (long i = 0; i < p.m; ++i)
            for (long q = 0; q < per; ++q)
                out.twist_arrow[i * per + q] = static_cast<int>(p.mod_m(i + p.c) * per + q);
        out.twist_order = compute_twist_order(out.twist_vertex, out.twist_arrow,
                                              static_cast<int>(p.m));
    }
    out.twist_action();  // validate
    return out;
}

McKayQuiver mckay_metacyclic(const RepSystem& reps, bool embedded) {
    const MetacyclicParams& p = reps.params;
    unsigned M = reps.field_order();
    if (!reps.closed_under_c)
        throw condition_error("mckay_metacyclic: representative set is not closed under +c");

    McKayQuiver out;
    out.kind = McKayKind::Metacyclic;
    out.embedded = embedded;
    out.reps = reps;

    // Vertices: split vertices (F ascending, ell ascending), then induced
    // (D \ F ascending).
    for (long f : reps.F)
        for (int ell = 0; ell < p.s; ++ell) {
            out.quiver.add_vertex(std::to_string(f) + "^(" + std::to_string(ell) + ")");
            out.vertex_i.push_back(f);
            out.vertex_ell.push_back(ell);
            out.vertex_dim.push_back(1);
        }
    for (long d : reps.D) {
        if (reps.in_F(d)) continue;
        out.quiver.add_vertex(std::to_string(d));
        out.vertex_i.push_back(d);
        out.vertex_ell.push_back(-1);
        out.vertex_dim.push_back(static_cast<int>(p.s));
    }

    size_t nv = out.quiver.num_vertices();
    for (size_t v = 0; v < nv; ++v) {
        long i = out.vertex_i[v];
        int ell = out.vertex_ell[v];
        if (ell < 0) {
            // induced source
            for (int q = 0; q < p.s; ++q) {
                long j0 = p.mod_m(i - p.pow_r(q));
                if (reps.in_F(j0)) {
                    for (int l2 = 0; l2 < p.s; ++l2) {
                        int tv = out.vertex_index(j0, l2);
                        out.quiver.add_arrow(static_cast<int>(v), tv, case2_label(i, l2, q));
                        ArrowInfo ai;
                        ai.kind = ArrowInfo::Kind::Case2;
                        ai.i = i;
                        ai.j = j0;
                        ai.p = q;
                        ai.a = 0;
                        ai.ell_tgt = l2;
                        out.info.push_back(ai);
                    }
                } else {
                    long j = reps.ul[j0];
                    int a = reps.kappa[j0];
                    int tv = out.vertex_index(j, -1);
                    out.quiver.add_arrow(static_cast<int>(v), tv, case1_label(i, q, a));
                    ArrowInfo ai;
                    ai.kind = ArrowInfo::Kind::Case1;
                    ai.i = i;
                    ai.j = j;
                    ai.p = q;
                    ai.a = a;
                    out.info.push_back(ai);
                }
            }
        } else {
            // split source: distinct (target orbit, normalized p)
            std::map<int, std::pair<long, long>> seen;  // ptilde -> (target, literal j)
            for (int q = 0; q < p.s; ++q) {
                long j0 = p.mod_m(i - p.pow_r(q));
                if (reps.in_F(j0))
                    throw std::logic_error("mckay_metacyclic: arrow between fixed points");
                long j = reps.ul[j0];
                int ptilde = static_cast<int>(((q - reps.kappa[j0]) % p.s + p.s) % p.s);
                seen.emplace(ptilde, std::make_pair(j, j0));
            }
            for (const auto& [ptilde, tj] : seen) {
                int tv = out.vertex_index(tj.first, -1);
                out.quiver.add_arrow(static_cast<int>(v), tv, case3_label(i, ell, ptilde));
                ArrowInfo ai;
                ai.kind = ArrowInfo::Kind::Case3;
                ai.i = i;
                ai.j = tj.first;
                ai.p = ptilde;
                ai.a = 0;
                ai.ell_src = ell;
                out.info.push_back(ai);
            }
        }
    }

    // tau(i^(ell)) = (i+c)^(ell'): with the canonical-residue realization of
    // eta_i the split index picks up t*floor((i+c)/m) when the label wraps,
    // so that lambda_{i+c, ell'} = lambda_{i,ell} lambda_{c,d} holds exactly.
    int d = reps.d_split;
    auto tau_vertex = [&](size_t v) {
        long i = out.vertex_i[v];
        int ell = out.vertex_ell[v];
        long wrap = (i + p.c) / p.m;
        long ic = p.mod_m(i + p.c);
        int el2 = ell < 0 ? -1 : static_cast<int>(((ell + d + p.t * wrap) % p.s + p.s) % p.s);
        return out.vertex_index(ic, el2);
    };

    if (embedded) {
        for (size_t v = 0; v < nv; ++v) {
            int tv = tau_vertex(v);
            out.quiver.add_arrow(static_cast<int>(v), tv,
                                 "e^{" + out.quiver.vertex_label(static_cast<int>(v)) + "}");
            ArrowInfo ai;
            ai.kind = ArrowInfo::Kind::Embed;
            ai.i = out.vertex_i[v];
            ai.j = out.vertex_i[tv];
            ai.ell_src = out.vertex_ell[v];
            ai.ell_tgt = out.vertex_ell[tv];
            out.info.push_back(ai);
        }
    }

    // Twist tau' with the scalar factors of tau on the chosen bases:
    // case 1 arrows pick up lambda_{c,d}^{-a}, case 2 lambda_{c,d}^{s-1},
    // case 3 lambda_{c,d}^{1-s}. The embedded quiver has trivial twist.
    size_t na = out.quiver.num_arrows();
    out.twist_vertex.resize(nv);
    out.twist_arrow.resize(na);
    out.twist_scalar.assign(na, CycNum::one(M));
    if (embedded) {
        for (size_t v = 0; v < nv; ++v) out.twist_vertex[v] = static_cast<int>(v);
        for (size_t a = 0; a < na; ++a) out.twist_arrow[a] = static_cast<int>(a);
        out.twist_order = 1;
    } else {
        for (size_t v = 0; v < nv; ++v) out.twist_vertex[v] = tau_vertex(v);
        CycNum lam = reps.lambda(p.c, d);
        for (size_t a = 0; a < na; ++a) {
            const ArrowInfo& ai = out.info[a];
            const Arrow& ar = out.quiver.arrow(static_cast<int>(a));
            int sv = out.twist_vertex[ar.src];
            int tv = out.twist_vertex[ar.tgt];
            // image arrow: same (p,a) data at the shifted vertices
            int image = -1;
            for (int cand : out.quiver.out_arrows(sv)) {
                const ArrowInfo& ci = out.info[cand];
                if (out.quiver.arrow(cand).tgt == tv && ci.kind == ai.kind && ci.p == ai.p &&
                    ci.a == ai.a) {
                    image = cand;
                    break;
                }
            }
            if (image < 0) throw std::logic_error("mckay_metacyclic: twist misses an arrow");
            out.twist_arrow[a] = image;
            switch (ai.kind) {
                case ArrowInfo::Kind::Case1:
                    out.twist_scalar[a] = lam.pow(-ai.a);
                    break;
                case ArrowInfo::Kind::Case2:
                    out.twist_scalar[a] = lam.pow(p.s - 1);
                    break;
                case ArrowInfo::Kind::Case3:
                    out.twist_scalar[a] = lam.pow(1 - p.s);
                    break;
                default:
                    break;
            }
        }
        out.twist_order =
            compute_twist_order(out.twist_vertex, out.twist_arrow, static_cast<int>(p.m * p.s));
    }
    out.twist_action();  // validate
    return out;
}

McKayQuiver tilde_quiver(const RepSystem& reps, bool embedded) {
    const MetacyclicParams& p = reps.params;
    unsigned M = reps.field_order();
    McKayQuiver out;
    out.kind = McKayKind::Tilde;
    out.embedded = embedded;
    out.reps = reps;

    for (long d : reps.D) {
        out.quiver.add_vertex(std::to_string(d));
        out.vertex_i.push_back(d);
        out.vertex_ell.push_back(-1);
        out.vertex_dim.push_back(reps.in_F(d) ? 1 : static_cast<int>(p.s));
    }

    for (size_t v = 0; v < out.quiver.num_vertices(); ++v) {
        long i = out.vertex_i[v];
        if (!reps.in_F(i)) {
            for (int q = 0; q < p.s; ++q) {
                long j0 = p.mod_m(i - p.pow_r(q));
                if (reps.in_F(j0)) {
                    int tv = out.vertex_index(j0);
                    out.quiver.add_arrow(static_cast<int>(v), tv, tilde_label(i, q));
                    ArrowInfo ai;
                    ai.kind = ArrowInfo::Kind::Case2;
                    ai.i = i;
                    ai.j = j0;
                    ai.p = q;
                    out.info.push_back(ai);
                } else {
                    long j = reps.ul[j0];
                    int a = reps.kappa[j0];
                    int tv = out.vertex_index(j);
                    out.quiver.add_arrow(static_cast<int>(v), tv, case1_label(i, q, a));
                    ArrowInfo ai;
                    ai.kind = ArrowInfo::Kind::Case1;
                    ai.i = i;
                    ai.j = j;
                    ai.p = q;
                    ai.a = a;
                    out.info.push_back(ai);
                }
            }
        } else {
            std::map<int, long> seen;
            for (int q = 0; q < p.s; ++q) {
                long j0 = p.mod_m(i - p.pow_r(q));
                long j = reps.ul[j0];
                int ptilde = static_cast<int>(((q - reps.kappa[j0]) % p.s + p.s) % p.s);
                seen.emplace(ptilde, j);
            }
            for (const auto& [ptilde, j] : seen) {
                int tv = out.vertex_index(j);
                out.quiver.add_arrow(static_cast<int>(v), tv, tilde_label(i, ptilde));
                ArrowInfo ai;
                ai.kind = ArrowInfo::Kind::Case3;
                ai.i = i;
                ai.j = j;
                ai.p = ptilde;
                out.info.push_back(ai);
            }
        }
    }

    auto tau_vertex = [&](size_t v) {
        return out.vertex_index(p.mod_m(out.vertex_i[v] + p.c));
    };
    if (embedded) {
        for (size_t v = 0; v < out.vertex_i.size(); ++v) {
            int tv = tau_vertex(v);
            out.quiver.add_arrow(static_cast<int>(v), tv,
                                 "e^" + out.quiver.vertex_label(static_cast<int>(v)));
            ArrowInfo ai;
            ai.kind = ArrowInfo::Kind::Embed;
            ai.i = out.vertex_i[v];
            ai.j = out.vertex_i[tv];
            out.info.push_back(ai);
        }
    }

    size_t nv = out.quiver.num_vertices(), na = out.quiver.num_arrows();
    out.twist_vertex.resize(nv);
    out.twist_arrow.resize(na);
    out.twist_scalar.assign(na, CycNum::one(M));
    if (embedded) {
        for (size_t v = 0; v < nv; ++v) out.twist_vertex[v] = static_cast<int>(v);
        for (size_t a = 0; a < na; ++a) out.twist_arrow[a] = static_cast<int>(a);
        out.twist_order = 1;
    } else {
        for (size_t v = 0; v < nv; ++v) out.twist_vertex[v] = tau_vertex(v);
        for (size_t a = 0; a < na; ++a) {
            const ArrowInfo& ai = out.info[a];
            const Arrow& ar = out.quiver.arrow(static_cast<int>(a));
            int sv = out.twist_vertex[ar.src];
            int tv = out.twist_vertex[ar.tgt];
            int image = -1;
            for (int cand : out.quiver.out_arrows(sv)) {
                const ArrowInfo& ci = out.info[cand];
                if (out.quiver.arrow(cand).tgt == tv && ci.kind == ai.kind && ci.p == ai.p &&
                    ci.a == ai.a) {
                    image = cand;
                    break;
                }
            }
            if (image < 0) throw std::logic_error("tilde_quiver: twist misses an arrow");
            out.twist_arrow[a] = image;
        }
        out.twist_order =
            compute_twist_order(out.twist_vertex, out.twist_arrow, static_cast<int>(p.m * p.s));
    }
    out.twist_action();  // validate
    return out;
}

QuiverAutomorphismAction ga_action(const McKayQuiver& QA) {
    if (QA.kind != McKayKind::Abelian)
        throw std::invalid_argument("ga_action: abelian McKay quiver expected");
    const MetacyclicParams& p = QA.reps.params;
    QuiverAutomorphismAction act;
    act.q = &QA.quiver;
    act.order = static_cast<int>(p.s);
    act.vertex_perm.resize(QA.quiver.num_vertices());
    for (long i = 0; i < p.m; ++i) act.vertex_perm[i] = static_cast<int>(p.mod_m(p.r * i));
    long per = p.s + (QA.embedded ? 1 : 0);
    act.arrow_perm.resize(QA.quiver.num_arrows());
    for (long i = 0; i < p.m; ++i)
        for (long q = 0; q < per; ++q) {
            long qq = (q == p.s) ? q : (q + 1) % p.s;  // the added direction is fixed
            act.arrow_perm[i * per + q] = static_cast<int>(p.mod_m(p.r * i) * per + qq);
        }
    act.validate();
    return act;
}

QuiverMorphism phi_morphism(const McKayQuiver& QA, const McKayQuiver& Qt) {
    const RepSystem& reps = QA.reps;
    const MetacyclicParams& p = reps.params;
    QuiverMorphism phi;
    phi.dom = &QA.quiver;
    phi.cod = &Qt.quiver;
    phi.vertex_map.resize(QA.quiver.num_vertices());
    for (size_t v = 0; v < QA.quiver.num_vertices(); ++v)
        phi.vertex_map[v] = Qt.vertex_index(reps.ul[QA.vertex_i[v]]);
    phi.arrow_map.resize(QA.quiver.num_arrows());
    for (size_t a = 0; a < QA.quiver.num_arrows(); ++a) {
        const ArrowInfo& ai = QA.info[a];
        long i = ai.i;
        int src = phi.vertex_map[QA.quiver.arrow(static_cast<int>(a)).src];
        int image = -1;
        if (ai.p == p.s) {
            // added arrow i -> i+c maps to the added arrow at ul(i)
            for (int cand : Qt.quiver.out_arrows(src))
                if (Qt.info[cand].kind == ArrowInfo::Kind::Embed) image = cand;
        } else {
            long q = ai.p;
            long j0 = p.mod_m(i - p.pow_r(q));
            bool sf = reps.in_F(i), tf = reps.in_F(j0);
            ArrowInfo::Kind want;
            int pp, aa;
            if (!sf && !tf) {
                want = ArrowInfo::Kind::Case1;
                pp = static_cast<int>(((q - reps.kappa[i]) % p.s + p.s) % p.s);
                aa = static_cast<int>(((reps.kappa[j0] - reps.kappa[i]) % p.s + p.s) % p.s);
            } else if (!sf && tf) {
                want = ArrowInfo::Kind::Case2;
                pp = static_cast<int>(((q - reps.kappa[i]) % p.s + p.s) % p.s);
                aa = 0;
            } else if (sf && !tf) {
                want = ArrowInfo::Kind::Case3;
                pp = static_cast<int>(((q - reps.kappa[j0]) % p.s + p.s) % p.s);
                aa = 0;
            } else {
                throw std::logic_error("phi_morphism: arrow between fixed points");
            }
            for (int cand : Qt.quiver.out_arrows(src)) {
                const ArrowInfo& ci = Qt.info[cand];
                if (ci.kind == want && ci.p == pp && (want != ArrowInfo::Kind::Case1 || ci.a == aa)) {
                    image = cand;
                    break;
                }
            }
        }
        if (image < 0) throw std::logic_error("phi_morphism: no image for arrow " +
                                              QA.quiver.arrow(static_cast<int>(a)).label);
        phi.arrow_map[a] = image;
    }
    if (!phi.commutes()) throw std::logic_error("phi_morphism: does not commute with src/tgt");
    return phi;
}

QuiverMorphism psi_morphism(const McKayQuiver& QG, const McKayQuiver& Qt) {
    QuiverMorphism psi;
    psi.dom = &QG.quiver;
    psi.cod = &Qt.quiver;
    psi.vertex_map.resize(QG.quiver.num_vertices());
    for (size_t v = 0; v < QG.quiver.num_vertices(); ++v)
        psi.vertex_map[v] = Qt.vertex_index(QG.vertex_i[v]);
    psi.arrow_map.resize(QG.quiver.num_arrows());
    for (size_t a = 0; a < QG.quiver.num_arrows(); ++a) {
        const ArrowInfo& ai = QG.info[a];
        int src = psi.vertex_map[QG.quiver.arrow(static_cast<int>(a)).src];
        int image = -1;
        for (int cand : Qt.quiver.out_arrows(src)) {
            const ArrowInfo& ci = Qt.info[cand];
            bool match = false;
            switch (ai.kind) {
                case ArrowInfo::Kind::Case1:
                    match = ci.kind == ArrowInfo::Kind::Case1 && ci.p == ai.p && ci.a == ai.a;
                    break;
                case ArrowInfo::Kind::Case2:
                    match = ci.kind == ArrowInfo::Kind::Case2 && ci.p == ai.p;
                    break;
                case ArrowInfo::Kind::Case3:
                    match = ci.kind == ArrowInfo::Kind::Case3 && ci.p == ai.p;
                    break;
                case ArrowInfo::Kind::Embed:
                    match = ci.kind == ArrowInfo::Kind::Embed;
                    break;
                default:
                    throw std::logic_error("psi_morphism: unexpected arrow kind");
            }
            if (match) {
                image = cand;
                break;
            }
        }
        if (image < 0) throw std::logic_error("psi_morphism: no image for arrow " +
                                              QG.quiver.arrow(static_cast<int>(a)).label);
        psi.arrow_map[a] = image;
    }
    if (!psi.commutes()) throw std::logic_error("psi_morphism: does not commute with src/tgt");
    return psi;
}

OrbitIsoReport verify_orbit_iso(const McKayQuiver& QA, const McKayQuiver& Qt) {
    OrbitIsoReport rep;
    QuiverAutomorphismAction phi_act = ga_action(QA);
    QuiverMorphism Phi = phi_morphism(QA, Qt);

    // Phi must be constant on orbits.
    for (size_t a = 0; a < QA.quiver.num_arrows(); ++a)
        if (Phi.arrow_map[a] != Phi.arrow_map[phi_act.arrow_perm[a]]) {
            rep.ok = false;
            rep.witness = "Phi not constant on the orbit of " +
                          QA.quiver.arrow(static_cast<int>(a)).label;
            return rep;
        }

    OrbitQuiver orb = quotient_by_action(QA.quiver, phi_act);
    if (orb.quiver.num_vertices() != Qt.quiver.num_vertices() ||
        orb.quiver.num_arrows() != Qt.quiver.num_arrows()) {
        rep.ok = false;
        rep.witness = "orbit quiver and tilde quiver have different sizes";
        return rep;
    }
    // induced map orbit -> tilde must be bijective and structure preserving
    std::vector<int> vimg(orb.quiver.num_vertices(), -1), aimg(orb.quiver.num_arrows(), -1);
    for (size_t v = 0; v < QA.quiver.num_vertices(); ++v) {
        int& slot = vimg[orb.projection.vertex_map[v]];
        if (slot == -1) slot = Phi.vertex_map[v];
    }
    for (size_t a = 0; a < QA.quiver.num_arrows(); ++a) {
        int& slot = aimg[orb.projection.arrow_map[a]];
        if (slot == -1) slot = Phi.arrow_map[a];
    }
    std::vector<char> vseen(Qt.quiver.num_vertices(), 0), aseen(Qt.quiver.num_arrows(), 0);
    for (int v : vimg) {
        if (v < 0 || vseen[v]) {
            rep.ok = false;
            rep.witness = "induced vertex map not bijective";
            return rep;
        }
        vseen[v] = 1;
    }
    for (int a : aimg) {
        if (a < 0 || aseen[a]) {
            rep.ok = false;
            rep.witness = "induced arrow map not bijective";
            return rep;
        }
        aseen[a] = 1;
    }
    for (size_t a = 0; a < orb.quiver.num_arrows(); ++a) {
        const Arrow& oa = orb.quiver.arrow(static_cast<int>(a));
        const Arrow& ta = Qt.quiver.arrow(aimg[a]);
        if (ta.src != vimg[oa.src] || ta.tgt != vimg[oa.tgt]) {
            rep.ok = false;
            rep.witness = "induced map does not preserve incidences at " + oa.label;
            return rep;
        }
    }
    return rep;
}

std::unique_ptr<Model> build_model(const RepSystem& reps, bool embedded) {
    auto model = std::make_unique<Model>();
    model->reps = reps;
    model->embedded = embedded;
    model->QA = mckay_abelian(reps, embedded);
    model->QG = mckay_metacyclic(reps, embedded);
    model->Qt = tilde_quiver(reps, embedded);
    model->Phi = phi_morphism(model->QA, model->Qt);
    model->Psi = psi_morphism(model->QG, model->Qt);
    return model;
}

}  // namespace mcq

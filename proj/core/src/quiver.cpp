#include "mcq/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace mcq {

int Quiver::add_vertex(const std::string& label) {
    vertex_labels_.push_back(label);
    out_.emplace_back();
    in_.emplace_back();
    return static_cast<int>(vertex_labels_.size()) - 1;
}

int Quiver::add_arrow(int src, int tgt, const std::string& label) {
    if (src < 0 || tgt < 0 || src >= static_cast<int>(num_vertices()) ||
        tgt >= static_cast<int>(num_vertices()))
        throw std::out_of_range("Quiver::add_arrow: bad endpoint");
    if (arrow_by_label(label))
        throw std::invalid_argument("Quiver::add_arrow: duplicate label " + label);
    arrows_.push_back(Arrow{src, tgt, label});
    int id = static_cast<int>(arrows_.size()) - 1;
    out_[src].push_back(id);
    in_[tgt].push_back(id);
    return id;
}

std::optional<int> Quiver::vertex_by_label(const std::string& label) const {
    for (size_t i = 0; i < vertex_labels_.size(); ++i)
        if (vertex_labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> Quiver::arrow_by_label(const std::string& label) const {
    for (size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].label == label) return static_cast<int>(i);
    return std::nullopt;
}

bool path_composable(const Quiver& q, const Path& p) {
    for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (q.arrow(p.arrows[i]).tgt != q.arrow(p.arrows[i + 1]).src) return false;
    return true;
}

int path_source(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) throw std::invalid_argument("path_source: empty path");
    return q.arrow(p.arrows.front()).src;
}

int path_target(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) throw std::invalid_argument("path_target: empty path");
    return q.arrow(p.arrows.back()).tgt;
}

std::string print_path(const Quiver& q, const Path& p) {
    std::ostringstream os;
    for (size_t i = p.arrows.size(); i > 0; --i) {
        os << q.arrow(p.arrows[i - 1]).label;
        if (i > 1) os << " ";
    }
    return os.str();
}

Path parse_path(const Quiver& q, const std::string& text) {
    std::istringstream is(text);
    std::vector<int> rev;
    std::string tok;
    while (is >> tok) {
        auto id = q.arrow_by_label(tok);
        if (!id) throw std::invalid_argument("parse_path: unknown arrow " + tok);
        rev.push_back(*id);
    }
    Path p;
    p.arrows.assign(rev.rbegin(), rev.rend());
    if (!path_composable(q, p)) throw std::invalid_argument("parse_path: not composable");
    return p;
}

long path_degree(const Grading& g, const Path& p) {
    long d = 0;
    for (int a : p.arrows) d += g.at(a);
    return d;
}

bool QuiverMorphism::commutes() const {
    for (size_t a = 0; a < dom->num_arrows(); ++a) {
        const Arrow& ar = dom->arrow(static_cast<int>(a));
        const Arrow& im = cod->arrow(arrow_map.at(a));
        if (im.src != vertex_map.at(ar.src) || im.tgt != vertex_map.at(ar.tgt)) return false;
    }
    return true;
}

Path QuiverMorphism::map_path(const Path& p) const {
    Path out;
    out.arrows.reserve(p.arrows.size());
    for (int a : p.arrows) out.arrows.push_back(arrow_map.at(a));
    return out;
}

bool QuiverMorphism::surjective_on_arrows() const {
    std::vector<char> hit(cod->num_arrows(), 0);
    for (int a : arrow_map) hit.at(a) = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

void QuiverAutomorphismAction::validate() const {
    auto check_perm = [](const std::vector<int>& p, size_t n) {
        if (p.size() != n) return false;
        std::vector<char> seen(n, 0);
        for (int v : p) {
            if (v < 0 || v >= static_cast<int>(n) || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    };
    if (!check_perm(vertex_perm, q->num_vertices()) || !check_perm(arrow_perm, q->num_arrows()))
        throw std::invalid_argument("QuiverAutomorphismAction: not a permutation");
    for (size_t a = 0; a < q->num_arrows(); ++a) {
        const Arrow& ar = q->arrow(static_cast<int>(a));
        const Arrow& im = q->arrow(arrow_perm[a]);
        if (im.src != vertex_perm[ar.src] || im.tgt != vertex_perm[ar.tgt])
            throw std::invalid_argument("QuiverAutomorphismAction: not an automorphism");
    }
    std::vector<int> vp(q->num_vertices()), ap(q->num_arrows());
    std::iota(vp.begin(), vp.end(), 0);
    std::iota(ap.begin(), ap.end(), 0);
    for (int k = 0; k < order; ++k) {
        for (auto& v : vp) v = vertex_perm[v];
        for (auto& a : ap) a = arrow_perm[a];
    }
    for (size_t i = 0; i < vp.size(); ++i)
        if (vp[i] != static_cast<int>(i))
            throw std::invalid_argument("QuiverAutomorphismAction: generator^order != id");
    for (size_t i = 0; i < ap.size(); ++i)
        if (ap[i] != static_cast<int>(i))
            throw std::invalid_argument("QuiverAutomorphismAction: generator^order != id");
}

namespace {

std::vector<int> orbit_representatives(const std::vector<int>& perm, std::vector<int>& orbit_of,
                                       std::vector<std::vector<int>>& members) {
    size_t n = perm.size();
    orbit_of.assign(n, -1);
    std::vector<int> reps;
    for (size_t i = 0; i < n; ++i) {
        if (orbit_of[i] != -1) continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(static_cast<int>(i));
        members.emplace_back();
        int cur = static_cast<int>(i);
        while (orbit_of[cur] == -1) {
            orbit_of[cur] = id;
            members[id].push_back(cur);
            cur = perm[cur];
        }
    }
    return reps;
}

}  // namespace

OrbitQuiver quotient_by_action(const Quiver& q, const QuiverAutomorphismAction& action) {
    action.validate();
    OrbitQuiver out;
    std::vector<int> vorbit, aorbit;
    std::vector<int> vreps =
        orbit_representatives(action.vertex_perm, vorbit, out.vertex_members);
    for (int rep : vreps) out.quiver.add_vertex("[" + q.vertex_label(rep) + "]");
    std::vector<int> areps = orbit_representatives(action.arrow_perm, aorbit, out.arrow_members);
    for (int rep : areps) {
        const Arrow& ar = q.arrow(rep);
        out.quiver.add_arrow(vorbit[ar.src], vorbit[ar.tgt], "[" + ar.label + "]");
    }
    out.projection.dom = &q;
    out.projection.cod = &out.quiver;
    out.projection.vertex_map = vorbit;
    out.projection.arrow_map = aorbit;
    return out;
}

GradabilityReport is_gradable(const QuiverMorphism& phi, const Grading& g) {
    if (g.size() != phi.dom->num_arrows())
        throw std::invalid_argument("is_gradable: grading does not match domain");
    std::map<int, std::vector<int>> fibers;
    for (size_t a = 0; a < phi.dom->num_arrows(); ++a)
        fibers[phi.arrow_map[a]].push_back(static_cast<int>(a));
    for (const auto& [ca, fiber] : fibers) {
        for (int a : fiber)
            if (g[a] != g[fiber.front()]) {
                GradabilityReport r;
                r.ok = false;
                r.offending_codomain_arrow = ca;
                r.offending_fiber = fiber;
                return r;
            }
    }
    return {};
}

Grading pushforward_grading(const QuiverMorphism& phi, const Grading& g) {
    GradabilityReport rep = is_gradable(phi, g);
    if (!rep.ok)
        throw verification_error("pushforward_grading: morphism not gradable (fiber over arrow " +
                                 phi.cod->arrow(rep.offending_codomain_arrow).label + ")");
    if (!phi.surjective_on_arrows())
        throw verification_error("pushforward_grading: morphism not surjective on arrows");
    Grading out(phi.cod->num_arrows(), 0);
    for (size_t a = 0; a < phi.dom->num_arrows(); ++a) out[phi.arrow_map[a]] = g[a];
    return out;
}

Grading pullback_grading(const QuiverMorphism& phi, const Grading& g_cod) {
    if (g_cod.size() != phi.cod->num_arrows())
        throw std::invalid_argument("pullback_grading: grading does not match codomain");
    Grading out(phi.dom->num_arrows(), 0);
    for (size_t a = 0; a < phi.dom->num_arrows(); ++a) out[a] = g_cod[phi.arrow_map[a]];
    return out;
}

void for_each_path(const Quiver& q, size_t length,
                   const std::function<void(const Path&)>& fn) {
    Path p;
    p.arrows.reserve(length);
    std::function<void(int, size_t)> dfs = [&](int v, size_t remaining) {
        if (remaining == 0) {
            fn(p);
            return;
        }
        for (int a : q.out_arrows(v)) {
            p.arrows.push_back(a);
            dfs(q.arrow(a).tgt, remaining - 1);
            p.arrows.pop_back();
        }
    };
    for (size_t v = 0; v < q.num_vertices(); ++v) dfs(static_cast<int>(v), length);
}

std::string to_dot(const Quiver& q, const Grading* g) {
    std::ostringstream os;
    os << "digraph Q {\n";
    for (size_t v = 0; v < q.num_vertices(); ++v)
        os << "  v" << v << " [label=\"" << q.vertex_label(static_cast<int>(v)) << "\"];\n";
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(static_cast<int>(a));
        os << "  v" << ar.src << " -> v" << ar.tgt << " [label=\"" << ar.label << "\"";
        if (g) os << ", degree=" << (*g)[a] << (((*g)[a] != 0) ? ", style=bold" : "");
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_tikz(const Quiver& q, const Grading* g) {
    std::ostringstream os;
    size_t n = q.num_vertices();
    os << "\\begin{tikzpicture}[->,scale=1.0,inner sep=1.5mm,shape=circle]\n";
    for (size_t v = 0; v < n; ++v) {
        double ang = 360.0 * static_cast<double>(v) / static_cast<double>(n == 0 ? 1 : n);
        os << "  \\node (v" << v << ") at (" << ang << ":" << (n <= 1 ? 0.0 : 3.0) << ") {$"
           << q.vertex_label(static_cast<int>(v)) << "$};\n";
    }
    std::map<std::pair<int, int>, int> seen;
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(static_cast<int>(a));
        int bend = 10 + 12 * seen[{ar.src, ar.tgt}]++;
        os << "  \\draw";
        if (g && (*g)[a] != 0) os << "[very thick]";
        if (ar.src == ar.tgt)
            os << " (v" << ar.src << ") to[loop above]";
        else
            os << " (v" << ar.src << ") to[bend left=" << bend << "]";
        os << " node[midway,fill=white,inner sep=0.5] {\\scriptsize $" << ar.label << "$} (v"
           << ar.tgt << ");\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

}  // namespace mcq

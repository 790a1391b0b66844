#pragma once

#include <json.hpp>

#include "mcq/grading_algebra.hpp"
#include "mcq/lattice.hpp"

namespace mcq {

using ordered_json = nlohmann::ordered_json;

// {"order": M, "coeffs": [["num","den"], ...]} with decimal strings
inline ordered_json cyc_to_json(const CycNum& x) {
    ordered_json coeffs = ordered_json::array();
    for (const Rational& q : x.coeffs())
        coeffs.push_back({q.get_num().get_str(), q.get_den().get_str()});
    return ordered_json{{"order", x.order()}, {"coeffs", coeffs}};
}

inline CycNum cyc_from_json(const ordered_json& j) {
    unsigned M = j.at("order").get<unsigned>();
    std::vector<Rational> poly;
    for (const auto& pair : j.at("coeffs"))
        poly.push_back(rational_from_strings(pair.at(0).get<std::string>(),
                                             pair.at(1).get<std::string>()));
    return CycNum::from_polynomial(M, poly);
}

inline ordered_json group_to_json(const RepSystem& reps, bool embedded) {
    const MetacyclicParams& p = reps.params;
    return ordered_json{{"m", p.m},          {"r", p.r}, {"s", p.s}, {"t", p.t},
                        {"embedded", embedded}, {"D", reps.D}, {"F", reps.F}};
}

inline ordered_json quiver_to_json(const Quiver& q, const Grading* g = nullptr,
                                   const McKayQuiver* mk = nullptr) {
    ordered_json verts = ordered_json::array();
    for (size_t v = 0; v < q.num_vertices(); ++v)
        verts.push_back({{"id", v}, {"label", q.vertex_label(static_cast<int>(v))}});
    ordered_json arrows = ordered_json::array();
    for (size_t a = 0; a < q.num_arrows(); ++a) {
        const Arrow& ar = q.arrow(static_cast<int>(a));
        ordered_json ja{{"id", a}, {"src", ar.src}, {"tgt", ar.tgt}, {"label", ar.label}};
        if (g) ja["degree"] = (*g)[a];
        if (mk) {
            const ArrowInfo& ai = mk->info[a];
            ordered_json attr;
            switch (ai.kind) {
                case ArrowInfo::Kind::Abelian: attr["kind"] = "abelian"; break;
                case ArrowInfo::Kind::Case1: attr["kind"] = "case1"; break;
                case ArrowInfo::Kind::Case2: attr["kind"] = "case2"; break;
                case ArrowInfo::Kind::Case3: attr["kind"] = "case3"; break;
                case ArrowInfo::Kind::Embed: attr["kind"] = "embed"; break;
            }
            attr["i"] = ai.i;
            attr["j"] = ai.j;
            attr["p"] = ai.p;
            attr["a"] = ai.a;
            if (ai.ell_src >= 0) attr["ell_src"] = ai.ell_src;
            if (ai.ell_tgt >= 0) attr["ell_tgt"] = ai.ell_tgt;
            ja["mckay"] = attr;
        }
        arrows.push_back(std::move(ja));
    }
    return ordered_json{{"vertices", verts}, {"arrows", arrows}};
}

// {"degree": n, "terms": [{"path": [arrow ids], "coeff": CycNum}, ...]}
inline ordered_json superpotential_to_json(const Superpotential& w) {
    ordered_json terms = ordered_json::array();
    for (const PathTerm& t : w.terms)
        terms.push_back({{"path", t.path.arrows}, {"coeff", cyc_to_json(t.coeff)}});
    return ordered_json{{"degree", w.degree}, {"terms", terms}};
}

// {"kind":"canonical","l":..,"k":..} or {"kind":"explicit","arrows":
// [{"vertex":[coords],"direction":i}, ...]} where coords is a fundamental-
// domain representative of the B-orbit.
inline ordered_json cut_to_json(const LatticeModel& lat, const Cut& c) {
    if (c.kind == Cut::Kind::Canonical)
        return ordered_json{{"kind", "canonical"}, {"l", c.l}, {"k", c.k}};
    ordered_json arrows = ordered_json::array();
    for (const auto& [residue, dir] : c.arrows)
        arrows.push_back(
            {{"vertex", lat.point_with_eta(residue)}, {"direction", dir}});
    return ordered_json{{"kind", "explicit"}, {"arrows", arrows}};
}

inline Cut cut_from_json(const LatticeModel& lat, const ordered_json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "canonical") return cut_Ck(lat, j.at("l").get<long>(), j.at("k").get<long>());
    if (kind != "explicit") throw std::invalid_argument("cut_from_json: unknown kind " + kind);
    std::vector<std::pair<LatticePoint, int>> arrows;
    for (const auto& ja : j.at("arrows")) {
        LatticePoint v = ja.at("vertex").get<std::vector<long>>();
        if (static_cast<int>(v.size()) != lat.N() - 1)
            throw std::invalid_argument("cut_from_json: vertex coordinate length mismatch");
        arrows.emplace_back(v, ja.at("direction").get<int>());
    }
    return explicit_cut(lat, arrows);
}

// {"finite": bool, "dimension": int, "degree0_vertices": int,
//  "degree0_arrows": int, "dynkin": "D~k"?}
inline ordered_json report_to_json(const DegreeZeroReport& rep) {
    ordered_json j{{"finite", rep.finite},
                   {"dimension", rep.dim},
                   {"degree0_vertices", rep.degree0_vertices},
                   {"degree0_arrows", rep.degree0_arrows}};
    if (rep.dynkin) j["dynkin"] = "D~" + std::to_string(*rep.dynkin);
    return j;
}

}  // namespace mcq

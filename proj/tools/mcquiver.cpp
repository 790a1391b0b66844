// mcquiver: batch front end for McKay quivers of metacyclic groups with
// twisted superpotentials, lattice cuts and graded degree-0 algebras.
//
// Exit codes: 0 ok, 2 usage, 3 condition violation, 4 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mcq/grading_algebra.hpp"
#include "mcq/json_io.hpp"
#include "mcq/lattice.hpp"

using namespace mcq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCondition = 3;
constexpr int kExitVerification = 4;

struct GroupSpec {
    long m = 0, r = 0, s = 0, t = 0;
    bool embedded = false;
    std::vector<long> reps;  // optional representative set override
};

std::vector<long> parse_longs(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw CLI::ValidationError("empty integer in list: " + text);
        out.push_back(std::stol(tok));
    }
    return out;
}

GroupSpec parse_group(const std::string& text, bool embedded, const std::string& reps) {
    std::vector<long> v = parse_longs(text);
    if (v.size() != 4) throw CLI::ValidationError("--group expects m,r,s,t");
    GroupSpec g;
    g.m = v[0];
    g.r = v[1];
    g.s = v[2];
    g.t = v[3];
    g.embedded = embedded;
    if (!reps.empty()) g.reps = parse_longs(reps);
    return g;
}

RepSystem resolve_reps(const GroupSpec& g) {
    MetacyclicParams p = MetacyclicParams::create(g.m, g.r, g.s, g.t);
    return g.reps.empty() ? choose_representatives(p) : rep_system_with(p, g.reps);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text;
}

// ---------------------------------------------------------------- check --

int cmd_check(long m, long r, long s, long t, const std::string& format) {
    ConditionReport rep = check_conditions(m, r, s, t);
    if (format == "json") {
        ordered_json j{{"m", m},   {"r", r},   {"s", s},   {"t", t},
                       {"M1", rep.m1}, {"M2", rep.m2}, {"M3", rep.m3}, {"M4", rep.m4},
                       {"M5", rep.m5}, {"M6", rep.m6}, {"M7", rep.m7}, {"c", rep.c},
                       {"u", rep.u}};
        if (rep.n) j["n"] = *rep.n;
        if (rep.b) j["b"] = *rep.b;
        if (rep.group_case)
            j["case"] = *rep.group_case == GroupCase::SL ? "SL" : "GL";
        j["all"] = rep.all();
        std::cout << j.dump(2) << std::endl;
    } else {
        auto line = [](const std::string& name, bool ok, const std::string& what) {
            std::cout << "  " << name << "  " << (ok ? "ok  " : "FAIL") << "  " << what << "\n";
        };
        std::cout << "conditions for (m,r,s,t) = (" << m << "," << r << "," << s << "," << t
                  << "):\n";
        line("M1", rep.m1, "gcd(m, r) = 1");
        line("M2", rep.m2, "r^s = 1 (mod m)");
        line("M3", rep.m3, "(r-1) t = 0 (mod m)");
        line("M4", rep.m4, "s prime");
        line("M5", rep.m5, "r != 1 (mod m)");
        line("M6", rep.m6, "s | m");
        line("M7", rep.m7, "s | r-1");
        std::cout << "  derived: c = " << rep.c << ", u = " << rep.u;
        if (rep.n) std::cout << ", n = " << *rep.n;
        if (rep.b) std::cout << ", b = " << *rep.b;
        if (rep.group_case)
            std::cout << ", case " << (*rep.group_case == GroupCase::SL ? "SL" : "GL");
        std::cout << "\n";
    }
    return rep.all() ? kExitOk : kExitCondition;
}

// --------------------------------------------------------------- quiver --

int cmd_quiver(const GroupSpec& g, const std::string& which, const std::string& format,
               const std::string& cut_spec, const std::string& out_path) {
    RepSystem reps = resolve_reps(g);
    McKayQuiver data;
    if (which == "A")
        data = mckay_abelian(reps, g.embedded);
    else if (which == "G")
        data = mckay_metacyclic(reps, g.embedded);
    else if (which == "T")
        data = tilde_quiver(reps, g.embedded);
    else
        throw CLI::ValidationError("--which expects A, G or T");

    std::optional<Grading> grading;
    if (!cut_spec.empty()) {
        if (which != "G") throw CLI::ValidationError("--cut applies to the G quiver");
        auto model = build_model(reps, g.embedded);
        LatticeModel lat(reps.params, g.embedded);
        ordered_json cj = ordered_json::parse(cut_spec);
        grading = induce_grading(lat, cut_from_json(lat, cj), *model);
    }

    std::string text;
    if (format == "dot")
        text = to_dot(data.quiver, grading ? &*grading : nullptr);
    else if (format == "tikz")
        text = to_tikz(data.quiver, grading ? &*grading : nullptr);
    else if (format == "json") {
        ordered_json j;
        j["group"] = group_to_json(reps, g.embedded);
        j["quiver"] = quiver_to_json(data.quiver, grading ? &*grading : nullptr, &data);
        text = j.dump(2);
    } else {
        throw CLI::ValidationError("--format expects dot, json or tikz");
    }
    emit(text, out_path);
    return kExitOk;
}

// ------------------------------------------------------- superpotential --

int cmd_superpotential(const GroupSpec& g, const std::string& which, const std::string& format,
                       const std::string& verify, int jobs, const std::string& out_path) {
    RepSystem reps = resolve_reps(g);
    auto model = build_model(reps, g.embedded);
    const McKayQuiver& data = which == "A" ? model->QA : model->QG;
    if (which != "A" && which != "G") throw CLI::ValidationError("--which expects A or G");
    Superpotential w = superpotential(data, jobs);
    if (w.terms.empty()) throw verification_error("superpotential has empty support");

    int rc = kExitOk;
    std::ostringstream report;
    if (verify == "support" || verify == "all") {
        Superpotential wA = which == "A" ? w : superpotential(model->QA, jobs);
        Superpotential wG = which == "G" ? w : superpotential(model->QG, jobs);
        SupportReport rep = support_correspondence(wA, wG, model->Phi, model->Psi);
        report << "support: subset = " << (rep.subset ? "true" : "false")
               << ", equal = " << (rep.equal ? "true" : "false") << "\n";
        if (!rep.subset) rc = kExitVerification;
    }
    if (verify == "cyclicity" || verify == "all") {
        CyclicityReport rep = check_twisted_cyclicity(w);
        report << "cyclicity: " << (rep.ok ? "exact" : ("FAIL " + rep.witness)) << "\n";
        if (!rep.ok) rc = kExitVerification;
    }

    std::string text;
    if (format == "json") {
        ordered_json j;
        j["group"] = group_to_json(reps, g.embedded);
        j["which"] = which;
        j["superpotential"] = superpotential_to_json(w);
        text = j.dump(2);
    } else {
        std::ostringstream os;
        os << "superpotential of Q_" << which << (g.embedded ? "' " : " ") << "degree "
           << w.degree << ", " << w.terms.size() << " terms\n";
        for (const PathTerm& t : w.terms)
            os << "  " << print_path(data.quiver, t.path) << "  *  " << t.coeff.str() << "\n";
        text = os.str();
    }
    if (!report.str().empty()) text += report.str();
    emit(text, out_path);
    return rc;
}

// ---------------------------------------------------------------- grade --

int cmd_grade(const GroupSpec& g, const std::string& cut_spec,
              const std::vector<std::string>& swaps, const std::string& format, int jobs,
              const std::string& out_path) {
    RepSystem reps = resolve_reps(g);
    auto model = build_model(reps, g.embedded);
    LatticeModel lat(reps.params, g.embedded);
    ordered_json cj = ordered_json::parse(cut_spec);
    Cut cut = cut_from_json(lat, cj);

    bool binv = is_B_invariant(lat, cut);
    bool gainv = is_GA_invariant(lat, cut);
    CutCheck chk = verify_cut(lat, cut);
    if (!chk.ok) throw verification_error("not a cut: " + chk.witness);
    if (!gainv) throw verification_error("cut is not G/A-invariant");

    Grading grading = induce_grading(lat, cut, *model);
    Superpotential w = superpotential(model->QG, jobs);

    for (const std::string& swap : swaps) {
        std::vector<long> jl = parse_longs(swap);
        if (jl.size() != 2) throw CLI::ValidationError("--swap expects j,l");
        grading = swap_move(w, grading, jl[0], static_cast<int>(jl[1]));
    }

    HomogeneityResult hom = homogeneity_degree(w, grading);
    if (!hom.homogeneous())
        throw verification_error("superpotential inhomogeneous: degrees differ between " +
                                 print_path(model->QG.quiver, hom.witness->first) + " and " +
                                 print_path(model->QG.quiver, hom.witness->second));
    GradedPresentation pres = make_presentation(w, grading);

    long bound = cut.kind == Cut::Kind::Canonical ? reps.params.s * cut.l : reps.params.s;
    while (bound < 64 && !is_finite_dimensional(pres, bound)) bound *= 2;
    DegreeZeroReport rep = degree_zero_report(pres, bound);

    std::string text;
    if (format == "json") {
        ordered_json j;
        j["group"] = group_to_json(reps, g.embedded);
        j["cut"] = cut_to_json(lat, cut);
        j["B_invariant"] = binv;
        j["GA_invariant"] = gainv;
        j["homogeneity_degree"] = *hom.degree;
        j["zero_path_bound"] = bound;
        j["report"] = report_to_json(rep);
        j["quiver"] = quiver_to_json(model->QG.quiver, &grading, &model->QG);
        text = j.dump(2);
    } else {
        std::ostringstream os;
        os << "cut: B-invariant = " << (binv ? "true" : "false")
           << ", G/A-invariant = " << (gainv ? "true" : "false") << ", cut property ok\n";
        os << "superpotential homogeneous of degree " << *hom.degree << "\n";
        os << "degree-0 part: " << (rep.finite ? "finite" : "infinite")
           << " dimensional, dim = " << rep.dim << " (bound " << bound << ")\n";
        os << "degree-0 quiver: " << rep.degree0_vertices << " vertices, " << rep.degree0_arrows
           << " arrows";
        if (rep.dynkin) os << ", type D~" << *rep.dynkin;
        os << "\n";
        text = os.str();
    }
    emit(text, out_path);
    return kExitOk;
}

// ------------------------------------------------------------ reproduce --

struct Repro {
    int checks = 0, failures = 0;
    void expect(const std::string& what, bool ok) {
        ++checks;
        if (!ok) ++failures;
        std::cout << "  " << (ok ? "ok  " : "DIFF") << "  " << what << "\n";
    }
    template <typename T>
    void expect_eq(const std::string& what, const T& got, const T& want) {
        ++checks;
        bool ok = got == want;
        if (!ok) ++failures;
        std::cout << "  " << (ok ? "ok  " : "DIFF") << "  " << what;
        if (!ok) std::cout << " (got " << got << ", want " << want << ")";
        std::cout << "\n";
    }
};

int reproduce_s3_m21() {
    std::cout << "scenario s3-m21: M(3,1) = (21,4,3,0), D = {0,4,7,8,9,12,13,14,17}\n";
    Repro rp;
    MetacyclicParams p = MetacyclicParams::create(21, 4, 3, 0);
    RepSystem reps = rep_system_with(p, {0, 4, 7, 8, 9, 12, 13, 14, 17});
    rp.expect("conditions M1-M7 hold, case SL", check_conditions(21, 4, 3, 0).all() &&
                                                    p.group_case == GroupCase::SL);
    rp.expect_eq<long>("kappa_1", kappa(reps, 1), 2);
    rp.expect_eq<long>("kappa_16", kappa(reps, 16), 1);
    auto model = build_model(reps);
    rp.expect_eq<size_t>("Q_A vertices", model->QA.quiver.num_vertices(), 21);
    rp.expect_eq<size_t>("Q_A arrows", model->QA.quiver.num_arrows(), 63);
    rp.expect_eq<size_t>("Q_G vertices", model->QG.quiver.num_vertices(), 15);
    rp.expect_eq<size_t>("Q_G arrows", model->QG.quiver.num_arrows(), 33);
    rp.expect_eq<size_t>("tilde quiver vertices", model->Qt.quiver.num_vertices(), 9);
    rp.expect_eq<size_t>("tilde quiver arrows", model->Qt.quiver.num_arrows(), 21);
    rp.expect("orbit quiver isomorphism", verify_orbit_iso(model->QA, model->Qt).ok);

    unsigned M = reps.field_order();
    McKayQuiver& QG = model->QG;
    CycNum third = CycNum::from_rational(M, Rational(1, 3));
    for (int ell = 0; ell < 3; ++ell) {
        std::string l = std::to_string(ell);
        Path path = parse_path(QG.quiver,
                               "x^{(" + l + ")7}_{2,0} x^{8(" + l + ")}_{0,0} x^12_{0,1}");
        rp.expect("coefficient of 12 -> 8 -> 7^(" + l + ") -> 12 is (1/3) eps_3^" + l,
                  coefficient(QG, path) == third * reps.eps_s(ell));
    }
    Superpotential wG = superpotential(QG);
    Path in_supp = parse_path(QG.quiver, "x^4_{0,2} x^17_{0,1} x^12_{2,0}");
    Path off_supp = parse_path(QG.quiver, "x^4_{0,2} x^17_{2,2} x^12_{2,0}");
    rp.expect("path with residues {2,0,1} lies in supp(w_G)", wG.in_support(in_supp));
    rp.expect("path with residues {2,2,2} does not", !wG.in_support(off_supp));

    Superpotential wA = superpotential(model->QA);
    SupportReport sup = support_correspondence(wA, wG, model->Phi, model->Psi);
    rp.expect("Psi(supp w_G) = Phi(supp w_A)", sup.subset && sup.equal);
    rp.expect("twisted cyclicity of w_G", check_twisted_cyclicity(wG).ok);

    LatticeModel lat(p, false);
    Grading g = induce_grading(lat, cut_Ck(lat, 1, 1), *model);
    HomogeneityResult hom = homogeneity_degree(wG, g);
    rp.expect("C_1^(1) induces homogeneity degree 1", hom.homogeneous() && *hom.degree == 1);
    GradedPresentation pres = make_presentation(wG, g);
    rp.expect("finite dimensional with bound 3", is_finite_dimensional(pres, 3));
    rp.expect_eq<long>("dim (Pi_G)_0", dimension(pres, 3), 59);
    std::cout << (rp.failures == 0 ? "all fixture diffs empty" : "FIXTURE DIFFS PRESENT")
              << " (" << rp.checks - rp.failures << "/" << rp.checks << ")\n";
    return rp.failures == 0 ? kExitOk : kExitVerification;
}

int reproduce_bin_dih() {
    std::cout << "scenario bin-dih: Mhat(2,2) = (12,5,2,6) embedded in SL(3)\n";
    Repro rp;
    MetacyclicParams p = MetacyclicParams::create(12, 5, 2, 6);
    rp.expect("conditions hold, case GL",
              check_conditions(12, 5, 2, 6).all() && p.group_case == GroupCase::GL);
    RepSystem reps = choose_representatives(p);
    rp.expect("+c-closed D = {0,1,2,3,6,7,8,9} despite gcd(u,s) = 2",
              reps.closed_under_c &&
                  reps.D == std::vector<long>{0, 1, 2, 3, 6, 7, 8, 9});
    auto model = build_model(reps, true);
    rp.expect_eq<size_t>("Q_G' vertices", model->QG.quiver.num_vertices(), 12);
    rp.expect_eq<size_t>("Q_G' arrows", model->QG.quiver.num_arrows(), 32);
    Superpotential wA = superpotential(model->QA);
    Superpotential wG = superpotential(model->QG);
    SupportReport sup = support_correspondence(wA, wG, model->Phi, model->Psi);
    rp.expect("Psi'(supp w_G') = Phi'(supp w_A')", sup.subset && sup.equal);
    rp.expect("cyclicity of w_G'", check_twisted_cyclicity(wG).ok);
    rp.expect("cyclicity of the twisted w_G",
              check_twisted_cyclicity(superpotential(mckay_metacyclic(reps, false))).ok);

    LatticeModel lat(p, true);
    Cut c12 = cut_Ck(lat, 2, 1);
    rp.expect("C_1^(2) is a B- and G/A-invariant cut",
              verify_cut(lat, c12).ok && is_B_invariant(lat, c12) && is_GA_invariant(lat, c12));
    Grading g = induce_grading(lat, c12, *model);
    HomogeneityResult hom = homogeneity_degree(wG, g);
    rp.expect("w_G' homogeneous of degree 1", hom.homogeneous() && *hom.degree == 1);
    GradedPresentation pres = make_presentation(wG, g);
    rp.expect("finite dimensional with bound 4", is_finite_dimensional(pres, 4));
    rp.expect_eq<long>("dim (Pi_G')_0", dimension(pres, 4), 65);

    // a hand-picked cut outside the canonical family
    std::vector<std::pair<LatticePoint, int>> arrows;
    for (long i : {0L, 5L, 10L}) arrows.emplace_back(lat.point_with_eta(i), 1);
    for (long i : {0L, 1L, 2L}) arrows.emplace_back(lat.point_with_eta(i), 2);
    for (long i : {0L, 1L, 2L, 3L, 5L, 10L}) arrows.emplace_back(lat.point_with_eta(i), 0);
    Cut figure_cut = explicit_cut(lat, arrows);
    rp.expect("the hand-picked non-canonical cut verifies and is invariant",
              verify_cut(lat, figure_cut).ok && is_GA_invariant(lat, figure_cut));
    Grading g2 = induce_grading(lat, figure_cut, *model);
    HomogeneityResult hom2 = homogeneity_degree(wG, g2);
    rp.expect("it also gives homogeneity degree 1", hom2.homogeneous() && *hom2.degree == 1);
    std::cout << (rp.failures == 0 ? "all fixture diffs empty" : "FIXTURE DIFFS PRESENT")
              << " (" << rp.checks - rp.failures << "/" << rp.checks << ")\n";
    return rp.failures == 0 ? kExitOk : kExitVerification;
}

int reproduce_d_tilde() {
    std::cout << "scenario d-tilde: M(2,b) degree-0 parts are orientations of D~_{n+2}\n";
    Repro rp;
    for (long b : {1L, 2L, 3L}) {
        MetacyclicParams p = family_M(2, b);
        RepSystem reps = choose_representatives(p);
        auto model = build_model(reps);
        LatticeModel lat(p, false);
        Grading g = induce_grading(lat, cut_Ck(lat, 1, 1), *model);
        Superpotential w = superpotential(model->QG);
        GradedPresentation pres = make_presentation(w, g);
        DegreeZeroQuiver dz = degree_zero_quiver(pres);
        rp.expect("M(2," + std::to_string(b) + "): acyclic orientation of D~_" +
                      std::to_string(p.n + 2) + ", no degree-0 relations",
                  is_acyclic(dz.quiver) && degree_zero_relations(pres).empty() &&
                      recognize_extended_dynkin_D(dz.quiver) == static_cast<int>(p.n) + 2);
        rp.expect("M(2," + std::to_string(b) + "): dim = path count",
                  dimension(pres, 2) == count_paths_acyclic(dz.quiver));
    }
    std::cout << (rp.failures == 0 ? "all fixture diffs empty" : "FIXTURE DIFFS PRESENT")
              << " (" << rp.checks - rp.failures << "/" << rp.checks << ")\n";
    return rp.failures == 0 ? kExitOk : kExitVerification;
}

int reproduce_m7_no_cut() {
    std::cout << "scenario m7-no-cut: (7,2,3,0) admits no G/A-invariant cut\n";
    Repro rp;
    ConditionReport rep = check_conditions(7, 2, 3, 0);
    rp.expect("M1-M5 hold, M6 and M7 fail",
              rep.m1 && rep.m2 && rep.m3 && rep.m4 && rep.m5 && !rep.m6 && !rep.m7);
    RepSystem reps = choose_representatives(MetacyclicParams::create_basic(7, 2, 3, 0));
    InvariantCutSearch res = search_ga_invariant_cut(mckay_abelian(reps));
    rp.expect_eq<size_t>("arrow orbits", res.orbit_count, 7);
    rp.expect("exhaustive search finds no invariant cut", !res.exists);
    std::cout << (rp.failures == 0 ? "all fixture diffs empty" : "FIXTURE DIFFS PRESENT")
              << " (" << rp.checks - rp.failures << "/" << rp.checks << ")\n";
    return rp.failures == 0 ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "mcquiver: exact McKay quivers of metacyclic groups, twisted superpotentials,\n"
        "lattice cuts and graded degree-0 algebras.\n"
        "Exit codes: 0 ok, 2 usage error, 3 condition violation, 4 verification failure."};
    app.require_subcommand(1);

    // check
    long cm = 0, cr = 0, cs = 0, ct = 0;
    std::string check_format = "text";
    CLI::App* check = app.add_subcommand("check", "check the conditions M1-M7 on (m,r,s,t)");
    check->add_option("m", cm)->required();
    check->add_option("r", cr)->required();
    check->add_option("s", cs)->required();
    check->add_option("t", ct)->required();
    check->add_option("--format", check_format)->check(CLI::IsMember({"text", "json"}));

    // shared group options
    auto add_group_opts = [](CLI::App* cmd, std::string& group, bool& embedded,
                             std::string& reps) {
        cmd->add_option("--group", group, "group parameters m,r,s,t")->required();
        cmd->add_flag("--embedded", embedded, "embed into SL(s+1)");
        cmd->add_option("--reps", reps, "comma-separated representative set override");
    };

    // quiver
    std::string q_group, q_reps, q_which = "G", q_format = "dot", q_cut, q_out;
    bool q_embedded = false;
    CLI::App* quiver = app.add_subcommand("quiver", "export Q_A, Q_G or the tilde quiver");
    add_group_opts(quiver, q_group, q_embedded, q_reps);
    quiver->add_option("--which", q_which)->check(CLI::IsMember({"A", "G", "T"}));
    quiver->add_option("--format", q_format)->check(CLI::IsMember({"dot", "json", "tikz"}));
    quiver->add_option("--cut", q_cut, "cut JSON to attach degrees");
    quiver->add_option("--out", q_out, "output file (default stdout)");

    // superpotential
    std::string s_group, s_reps, s_which = "G", s_format = "text", s_verify, s_out;
    bool s_embedded = false;
    int s_jobs = 1;
    CLI::App* sp = app.add_subcommand("superpotential",
                                      "compute the (twisted) superpotential by brute force");
    add_group_opts(sp, s_group, s_embedded, s_reps);
    sp->add_option("--which", s_which)->check(CLI::IsMember({"A", "G"}));
    sp->add_option("--format", s_format)->check(CLI::IsMember({"text", "json"}));
    sp->add_option("--verify", s_verify)->check(CLI::IsMember({"support", "cyclicity", "all"}));
    sp->add_option("--jobs", s_jobs, "worker threads for coefficient evaluation")
        ->check(CLI::Range(1, 64));
    sp->add_option("--out", s_out);

    // grade
    std::string g_group, g_reps, g_cut, g_format = "text", g_out;
    bool g_embedded = false;
    int g_jobs = 1;
    std::vector<std::string> g_swaps;
    CLI::App* grade = app.add_subcommand(
        "grade", "induce a grading from a cut and analyze the degree-0 algebra");
    add_group_opts(grade, g_group, g_embedded, g_reps);
    grade->add_option("--cut", g_cut,
                      R"(cut JSON, e.g. {"kind":"canonical","l":1,"k":1})")
        ->required();
    grade->add_option("--swap", g_swaps, "swap move j,l at a split vertex (repeatable)");
    grade->add_option("--format", g_format)->check(CLI::IsMember({"text", "json"}));
    grade->add_option("--jobs", g_jobs)->check(CLI::Range(1, 64));
    grade->add_option("--out", g_out);

    // reproduce
    std::string scenario;
    CLI::App* repro = app.add_subcommand("reproduce", "run a pinned example scenario");
    repro->add_option("id", scenario, "one of: s3-m21, bin-dih, d-tilde, m7-no-cut")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(cm, cr, cs, ct, check_format);
        if (quiver->parsed())
            return cmd_quiver(parse_group(q_group, q_embedded, q_reps), q_which, q_format, q_cut,
                              q_out);
        if (sp->parsed())
            return cmd_superpotential(parse_group(s_group, s_embedded, s_reps), s_which,
                                      s_format, s_verify, s_jobs, s_out);
        if (grade->parsed())
            return cmd_grade(parse_group(g_group, g_embedded, g_reps), g_cut, g_swaps, g_format,
                             g_jobs, g_out);
        if (repro->parsed()) {
            if (scenario == "s3-m21") return reproduce_s3_m21();
            if (scenario == "bin-dih") return reproduce_bin_dih();
            if (scenario == "d-tilde") return reproduce_d_tilde();
            if (scenario == "m7-no-cut") return reproduce_m7_no_cut();
            std::cerr << "unknown scenario id: " << scenario << "\n";
            return kExitUsage;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const condition_error& e) {
        std::cerr << "condition violation: " << e.what() << "\n";
        return kExitCondition;
    } catch (const verification_error& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitUsage;
}

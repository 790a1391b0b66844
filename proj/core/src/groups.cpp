#include "mcq/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mcq {

namespace {

long mod(long x, long m) {
    long v = x % m;
    return v < 0 ? v + m : v;
}

long pow_mod(long base, long exp, long m) {
    long acc = 1 % m;
    long b = mod(base, m);
    while (exp > 0) {
        if (exp & 1) acc = (acc * b) % m;
        b = (b * b) % m;
        exp >>= 1;
    }
    return acc;
}

bool is_prime(long s) {
    if (s < 2) return false;
    for (long p = 2; p * p <= s; ++p)
        if (s % p == 0) return false;
    return true;
}

}  // namespace

ConditionReport check_conditions(long m, long r, long s, long t) {
    if (m < 1 || r < 1 || s < 1 || t < 0)
        throw std::invalid_argument("check_conditions: inputs must be positive (t >= 0)");
    ConditionReport rep;
    rep.m = m;
    rep.r = r;
    rep.s = s;
    rep.t = t;
    rep.m1 = std::gcd(m, r) == 1;
    rep.m2 = pow_mod(r, s, m) == 1 % m;
    rep.m3 = mod((r - 1) * t, m) == 0;
    rep.m4 = is_prime(s);
    rep.m5 = mod(r, m) != 1 % m;
    rep.m6 = m % s == 0;
    rep.m7 = (r - 1) % s == 0;

    long c = 0;
    for (long k = 0; k < s; ++k) c = mod(c + pow_mod(r, k, m), m);
    rep.c = c;
    rep.u = m / std::gcd(c == 0 ? m : c, m);
    if (rep.m6) rep.n = m / s;
    if (rep.m7) rep.b = (r - 1) / s;

    // SL iff det(alpha) = det(beta) = 1: c = 0 (mod m) and t = n (s = 2) or
    // t = 0 (s > 2) (mod m).
    if (s == 2) {
        if (rep.m6)
            rep.group_case = (c == 0 && mod(t - *rep.n, m) == 0) ? GroupCase::SL : GroupCase::GL;
    } else {
        rep.group_case = (c == 0 && mod(t, m) == 0) ? GroupCase::SL : GroupCase::GL;
    }
    return rep;
}

long MetacyclicParams::pow_r(long k) const {
    long kk = k % s;
    if (kk < 0) kk += s;  // r^s = 1 (mod m)
    return pow_mod(r, kk, m);
}

MetacyclicParams MetacyclicParams::create(long m, long r, long s, long t) {
    ConditionReport rep = check_conditions(m, r, s, t);
    if (!rep.all()) {
        std::ostringstream os;
        os << "metacyclic conditions violated for (" << m << "," << r << "," << s << "," << t
           << "):";
        if (!rep.m1) os << " M1";
        if (!rep.m2) os << " M2";
        if (!rep.m3) os << " M3";
        if (!rep.m4) os << " M4";
        if (!rep.m5) os << " M5";
        if (!rep.m6) os << " M6";
        if (!rep.m7) os << " M7";
        throw condition_error(os.str());
    }
    MetacyclicParams p;
    p.m = m;
    p.r = mod(r, m);
    p.s = s;
    p.t = mod(t, m);
    p.c = rep.c;
    p.n = *rep.n;
    p.b = *rep.b;
    p.u = rep.u;
    p.group_case = *rep.group_case;
    return p;
}

MetacyclicParams MetacyclicParams::create_basic(long m, long r, long s, long t) {
    ConditionReport rep = check_conditions(m, r, s, t);
    if (!(rep.m1 && rep.m2 && rep.m3 && rep.m4 && rep.m5)) {
        std::ostringstream os;
        os << "metacyclic base conditions violated for (" << m << "," << r << "," << s << ","
           << t << "):";
        if (!rep.m1) os << " M1";
        if (!rep.m2) os << " M2";
        if (!rep.m3) os << " M3";
        if (!rep.m4) os << " M4";
        if (!rep.m5) os << " M5";
        throw condition_error(os.str());
    }
    MetacyclicParams p;
    p.m = m;
    p.r = mod(r, m);
    p.s = s;
    p.t = mod(t, m);
    p.c = rep.c;
    p.n = rep.n.value_or(0);
    p.b = rep.b.value_or(0);
    p.u = rep.u;
    p.group_case = rep.group_case.value_or(GroupCase::GL);
    return p;
}

MetacyclicParams family_M(long s, long b) {
    if (b < 1) throw std::invalid_argument("family_M: b >= 1 required");
    long r = s * b + 1;
    long m = 0;
    for (long j = 0, pw = 1; j < s; ++j, pw *= r) m += pw;
    long t = (s == 2) ? m / s : 0;
    return MetacyclicParams::create(m, r, s, t);
}

MetacyclicParams family_Mhat(long s, long b) {
    if (b < 2) throw std::invalid_argument("family_Mhat: b >= 2 required");
    long r = s * b + 1;
    long m = 0;
    for (long j = 0, pw = 1; j < s; ++j, pw *= r) m += pw;
    m *= b;
    long t = (s == 2) ? m / s : 0;
    return MetacyclicParams::create(m, r, s, t);
}

std::vector<long> fixed_points(const MetacyclicParams& p) {
    std::vector<long> out;
    for (long i = 0; i < p.m; ++i)
        if (mod(p.r * i, p.m) == i) out.push_back(i);
    return out;
}

bool RepSystem::in_F(long i) const {
    return std::binary_search(F.begin(), F.end(), params.mod_m(i));
}

bool RepSystem::in_D(long i) const {
    return std::binary_search(D.begin(), D.end(), params.mod_m(i));
}

CycNum RepSystem::eps_m(long e) const {
    return root_of_unity(field_order(), params.s * e);
}

CycNum RepSystem::eps_s(long e) const {
    return root_of_unity(field_order(), params.m * e);
}

long RepSystem::lambda_exp(long i, long ell) const {
    long M = static_cast<long>(field_order());
    return mod(params.t * i + params.m * ell, M);
}

CycNum RepSystem::lambda(long i, int ell) const {
    return root_of_unity(field_order(), lambda_exp(i, ell));
}

namespace {

// ell with lambda_{c, ell} = det(beta) = (-1)^(s-1) eps_m^t; always exists.
int split_shift(const MetacyclicParams& p) {
    long M = p.s * p.m;
    long target = mod(p.s * p.t + (p.s % 2 == 0 ? M / 2 : 0), M);  // exponent of det(beta)
    long base = mod(p.t * p.c, M);                                 // exponent of eta_c
    long diff = mod(target - base, M);
    if (diff % p.m != 0)
        throw std::logic_error("split_shift: det(beta) is not an s-th-root shift of eta_c");
    return static_cast<int>((diff / p.m) % p.s);
}

RepSystem finish_rep_system(const MetacyclicParams& p, std::vector<long> D) {
    RepSystem rs;
    rs.params = p;
    rs.F = fixed_points(p);
    std::sort(D.begin(), D.end());
    rs.D = D;

    std::vector<char> inD(p.m, 0);
    for (long d : D) {
        if (d < 0 || d >= p.m) throw std::invalid_argument("rep system: D entry out of range");
        if (inD[d]) throw std::invalid_argument("rep system: duplicate D entry");
        inD[d] = 1;
    }
    for (long f : rs.F)
        if (!inD[f]) throw std::invalid_argument("rep system: D must contain the fixed points");

    rs.ul.assign(p.m, -1);
    rs.kappa.assign(p.m, 0);
    for (long d : D) {
        long cur = d;
        for (long k = 0; k < p.s; ++k) {
            // r^k * d, reached by kappa = k
            if (rs.ul[cur] == -1) {
                rs.ul[cur] = d;
                rs.kappa[cur] = static_cast<int>(k % p.s);
            }
            cur = mod(p.r * cur, p.m);
        }
    }
    for (long i = 0; i < p.m; ++i)
        if (rs.ul[i] == -1)
            throw std::invalid_argument("rep system: D misses the orbit of " + std::to_string(i));
    // D meets every orbit exactly once iff sizes add up
    size_t orbit_count = 0;
    {
        std::vector<char> seen(p.m, 0);
        for (long i = 0; i < p.m; ++i) {
            if (seen[i]) continue;
            ++orbit_count;
            long cur = i;
            while (!seen[cur]) {
                seen[cur] = 1;
                cur = mod(p.r * cur, p.m);
            }
        }
    }
    if (D.size() != orbit_count)
        throw std::invalid_argument("rep system: D is not a transversal");
    for (long f : rs.F) rs.kappa[f] = 0;

    rs.closed_under_c = true;
    for (long d : D)
        if (!inD[mod(d + p.c, p.m)]) rs.closed_under_c = false;

    rs.d_split = split_shift(p);
    return rs;
}

}  // namespace

RepSystem rep_system_with(const MetacyclicParams& p, std::vector<long> D) {
    return finish_rep_system(p, std::move(D));
}

RepSystem choose_representatives(const MetacyclicParams& p) {
    // Orbit classes of i -> r i, keyed by minimal element.
    std::vector<long> cls(p.m, -1);
    std::vector<long> cls_min;
    for (long i = 0; i < p.m; ++i) {
        if (cls[i] != -1) continue;
        long id = static_cast<long>(cls_min.size());
        cls_min.push_back(i);
        long cur = i;
        while (cls[cur] == -1) {
            cls[cur] = id;
            cur = mod(p.r * cur, p.m);
        }
    }
    std::vector<std::vector<long>> members(cls_min.size());
    for (long i = 0; i < p.m; ++i) members[cls[i]].push_back(i);

    if (p.c % p.m == 0) {
        // SL case: the twist is trivial on vertices, any transversal works.
        return finish_rep_system(p, cls_min);
    }

    // Group the classes into twist orbits [i] -> [i+c] and build each chain
    // x, x+c, ..., trying start elements of the lexicographically first
    // class until the chain closes up.
    std::vector<long> D;
    std::vector<char> done(cls_min.size(), 0);
    for (size_t c0 = 0; c0 < cls_min.size(); ++c0) {
        if (done[c0]) continue;
        // twist orbit of classes starting at c0
        std::vector<long> orbit_classes;
        long cur = cls_min[c0];
        while (true) {
            long cc = cls[cur];
            if (!orbit_classes.empty() && cc == orbit_classes.front()) break;
            orbit_classes.push_back(cc);
            cur = mod(cur + p.c, p.m);
        }
        for (long cc : orbit_classes) done[cc] = 1;
        long k = static_cast<long>(orbit_classes.size());

        if (members[c0].size() == 1) {
            // fixed points: chains are automatic (f + c stays fixed)
            for (long cc : orbit_classes) D.push_back(cls_min[cc]);
            continue;
        }
        bool found = false;
        for (long x : members[c0]) {
            if (mod(x + k * p.c, p.m) == x) {
                for (long j = 0; j < k; ++j) D.push_back(mod(x + j * p.c, p.m));
                found = true;
                break;
            }
        }
        if (!found)
            throw condition_error(
                "choose_representatives: no +c-closed representative chain through orbit of " +
                std::to_string(cls_min[c0]) + " (obstruction: chain wraps into a nontrivial r-power)");
    }
    return finish_rep_system(p, std::move(D));
}

int kappa(const RepSystem& reps, long i) {
    return reps.kappa.at(reps.params.mod_m(i));
}

std::pair<QMatrix, QMatrix> generator_matrices(const MetacyclicParams& p, bool embedded) {
    unsigned M = p.field_order();
    size_t dim = static_cast<size_t>(p.s) + (embedded ? 1 : 0);
    QMatrix alpha(M, dim, dim), beta(M, dim, dim);
    for (long k = 0; k < p.s; ++k)
        alpha.at(k, k) = root_of_unity(M, p.s * p.pow_r(k));
    for (long k = 0; k + 1 < p.s; ++k) beta.at(k + 1, k) = CycNum::one(M);
    beta.at(0, p.s - 1) = root_of_unity(M, p.s * p.t);
    if (embedded) {
        EmbedScalars e = detinv_action(p);
        alpha.at(dim - 1, dim - 1) = e.alpha;
        beta.at(dim - 1, dim - 1) = e.beta;
    }
    return {alpha, beta};
}

EmbedScalars detinv_action(const MetacyclicParams& p) {
    unsigned M = p.field_order();
    long Ml = static_cast<long>(M);
    CycNum da = root_of_unity(M, -p.s * p.c);  // det(alpha)^{-1} = eps_m^{-c}
    long beta_exp = mod(p.s * p.t + (p.s % 2 == 0 ? Ml / 2 : 0), Ml);
    CycNum db = root_of_unity(M, -beta_exp);   // det(beta)^{-1}
    return {da, db};
}

std::vector<Irrep> irreps(const RepSystem& reps, bool embedded) {
    (void)embedded;  // the abstract irreps do not change under the embedding
    const MetacyclicParams& p = reps.params;
    unsigned M = reps.field_order();
    std::vector<Irrep> out;
    for (long i : reps.F)
        for (int ell = 0; ell < p.s; ++ell) {
            Irrep ir;
            ir.kind = Irrep::Kind::Split;
            ir.i = i;
            ir.ell = ell;
            ir.dim = 1;
            ir.alpha = QMatrix(M, 1, 1);
            ir.alpha.at(0, 0) = root_of_unity(M, p.s * i);
            ir.beta = QMatrix(M, 1, 1);
            ir.beta.at(0, 0) = reps.lambda(i, ell);
            ir.label = std::to_string(i) + "^(" + std::to_string(ell) + ")";
            out.push_back(std::move(ir));
        }
    for (long i : reps.D) {
        if (reps.in_F(i)) continue;
        Irrep ir;
        ir.kind = Irrep::Kind::Induced;
        ir.i = i;
        ir.dim = static_cast<int>(p.s);
        ir.alpha = QMatrix(M, p.s, p.s);
        for (long k = 0; k < p.s; ++k)
            ir.alpha.at(k, k) = root_of_unity(M, p.s * reps.params.mod_m(p.pow_r(k) * i));
        ir.beta = QMatrix(M, p.s, p.s);
        for (long k = 0; k + 1 < p.s; ++k) ir.beta.at(k + 1, k) = CycNum::one(M);
        ir.beta.at(0, p.s - 1) = root_of_unity(M, p.s * reps.params.mod_m(p.t * i));
        ir.label = std::to_string(i);
        out.push_back(std::move(ir));
    }
    return out;
}

namespace {

// Character of an irrep at alpha^j beta^k as a list of zeta_{sm} exponents
// with unit coefficients.
void character_exponents(const RepSystem& reps, const Irrep& ir, long j, long k,
                         std::vector<long>& out) {
    out.clear();
    const MetacyclicParams& p = reps.params;
    long M = static_cast<long>(reps.field_order());
    if (ir.kind == Irrep::Kind::Split) {
        out.push_back(mod(p.s * ir.i * j + k * reps.lambda_exp(ir.i, ir.ell), M));
        return;
    }
    if (k % p.s != 0) return;  // trace of a fixed-point-free permutation part
    for (long l = 0; l < p.s; ++l)
        out.push_back(mod(p.s * p.mod_m(p.pow_r(l) * ir.i) * j, M));
}

}  // namespace

long character_inner_product(const RepSystem& reps, const Irrep& S, const Irrep& T,
                             TensorFactor V, bool embedded) {
    const MetacyclicParams& p = reps.params;
    long M = static_cast<long>(reps.field_order());
    std::vector<std::int64_t> counts(static_cast<size_t>(M), 0);

    Irrep nat;  // natural rep = T_1 (irreducible by M5)
    {
        nat.kind = Irrep::Kind::Induced;
        nat.i = 1;
        nat.dim = static_cast<int>(p.s);
    }
    long detinv_beta_exp = mod(-(p.s * p.t + (p.s % 2 == 0 ? M / 2 : 0)), M);
    long detinv_alpha_exp = mod(-p.s * p.c, M);

    std::vector<long> es, ev, et;
    for (long j = 0; j < p.m; ++j)
        for (long k = 0; k < p.s; ++k) {
            character_exponents(reps, S, j, k, es);
            if (es.empty()) continue;
            character_exponents(reps, T, j, k, et);
            if (et.empty()) continue;
            ev.clear();
            if (V == TensorFactor::Trivial) {
                ev.push_back(0);
            } else {
                character_exponents(reps, nat, j, k, ev);
                if (embedded) ev.push_back(mod(detinv_alpha_exp * j + detinv_beta_exp * k, M));
            }
            if (ev.empty()) continue;
            for (long a : es)
                for (long b : ev)
                    for (long c : et) ++counts[static_cast<size_t>(mod(-a + b + c, M))];
        }

    CycNum val = CycNum::from_power_counts(static_cast<unsigned>(M), counts,
                                           Rational(1, p.s * p.m));
    if (!val.is_rational())
        throw verification_error("character_inner_product: non-integer (irrational) result");
    Rational q = val.rational_value();
    if (q.get_den() != 1 || q < 0)
        throw verification_error("character_inner_product: non-integer result " + q.get_str());
    return q.get_num().get_si();
}

size_t group_order_by_closure(const MetacyclicParams& p, bool embedded) {
    auto [alpha, beta] = generator_matrices(p, embedded);
    std::vector<QMatrix> elems{QMatrix::identity(alpha.order(), alpha.rows())};
    auto contains = [&](const QMatrix& m) {
        return std::any_of(elems.begin(), elems.end(), [&](const QMatrix& e) { return e == m; });
    };
    size_t frontier = 0;
    while (frontier < elems.size()) {
        QMatrix cur = elems[frontier++];
        for (const QMatrix* g : {&alpha, &beta}) {
            QMatrix next = cur * (*g);
            if (!contains(next)) elems.push_back(next);
        }
        if (elems.size() > 4096)
            throw std::runtime_error("group_order_by_closure: group too large for closure check");
    }
    return elems.size();
}

}  // namespace mcq

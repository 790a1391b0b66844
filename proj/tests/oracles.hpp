#pragma once

// Independent oracles used by the unit and acceptance suites. Everything
// here is deliberately written against the definitions, not against the
// implementation paths it checks.

#include <map>
#include <numeric>
#include <vector>

#include "mcq/grading_algebra.hpp"
#include "mcq/groups.hpp"

namespace oracles {

using QPoly = std::vector<mcq::Rational>;

inline size_t qdeg(const QPoly& p) {
    size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
}

inline QPoly qmul(const QPoly& a, const QPoly& b) {
    QPoly out(a.size() + b.size() - 1, mcq::Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// exact division, remainder must vanish
inline QPoly qdiv_exact(QPoly num, const QPoly& den) {
    size_t dn = qdeg(num), dd = qdeg(den);
    QPoly q(dn - dd + 1, mcq::Rational(0));
    for (long k = static_cast<long>(dn - dd); k >= 0; --k) {
        mcq::Rational coef = num[k + dd] / den[dd];
        q[k] = coef;
        for (size_t j = 0; j <= dd; ++j) num[k + j] -= coef * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::runtime_error("qdiv_exact: inexact");
    return q;
}

inline QPoly qmod(QPoly num, const QPoly& den) {
    size_t dd = qdeg(den);
    while (true) {
        size_t dn = qdeg(num);
        bool zero = true;
        for (const auto& c : num)
            if (c != 0) zero = false;
        if (zero || dn < dd) break;
        mcq::Rational coef = num[dn] / den[dd];
        for (size_t j = 0; j <= dd; ++j) num[dn - dd + j] -= coef * den[j];
    }
    return num;
}

inline int mobius(unsigned n) {
    int mu = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

// Phi_M as the Moebius product prod_{d|M} (x^{M/d} - 1)^{mu(d)}
inline QPoly mobius_cyclotomic(unsigned M) {
    QPoly num{mcq::Rational(1)};
    QPoly den{mcq::Rational(1)};
    for (unsigned d = 1; d <= M; ++d) {
        if (M % d != 0) continue;
        int mu = mobius(d);
        if (mu == 0) continue;
        QPoly factor(M / d + 1, mcq::Rational(0));
        factor[0] = -1;
        factor[M / d] = 1;
        if (mu == 1)
            num = qmul(num, factor);
        else
            den = qmul(den, factor);
    }
    return qdiv_exact(num, den);
}

// Characters from explicit representation matrices, by brute-force matrix
// products over all group elements.
inline std::vector<mcq::CycNum> character_table_row(const mcq::Irrep& ir, long m, long s) {
    std::vector<mcq::CycNum> out;
    mcq::QMatrix aj = mcq::QMatrix::identity(ir.alpha.order(), ir.alpha.rows());
    for (long j = 0; j < m; ++j) {
        mcq::QMatrix cur = aj;
        for (long k = 0; k < s; ++k) {
            mcq::CycNum tr = mcq::CycNum::zero(ir.alpha.order());
            for (size_t d = 0; d < cur.rows(); ++d) tr += cur.at(d, d);
            out.push_back(tr);
            cur = cur * ir.beta;
        }
        aj = aj * ir.alpha;
    }
    return out;
}

// Dimension of the degree-0 algebra by building the full multiplication
// table on a normal-form basis (dense reduction per length stratum, then a
// closure check on all products). Intended for <= 200-dimensional inputs.
long dimension_by_multiplication_table(const mcq::GradedPresentation& pres, long bound);

}  // namespace oracles

#include "mcq/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mcq {

namespace {

using IPoly = std::vector<Integer>;  // low-degree first

unsigned long poly_deg(const IPoly& p) {
    unsigned long d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
}

void poly_trim(IPoly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

IPoly poly_mul(const IPoly& a, const IPoly& b) {
    IPoly out(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    poly_trim(out);
    return out;
}

// Exact division of integer polynomials; divisor must be monic-up-to-sign
// with invertible leading coefficient over Z here (we only divide by monic).
IPoly poly_div_exact(IPoly num, const IPoly& den) {
    unsigned long dn = poly_deg(num), dd = poly_deg(den);
    if (den[dd] != 1 && den[dd] != -1) throw std::domain_error("poly_div_exact: non-monic divisor");
    if (dn < dd) throw std::domain_error("poly_div_exact: degree underflow");
    IPoly q(dn - dd + 1, Integer(0));
    for (long k = static_cast<long>(dn - dd); k >= 0; --k) {
        Integer coef = num[k + dd] / den[dd];
        q[k] = coef;
        if (coef == 0) continue;
        for (unsigned long j = 0; j <= dd; ++j) num[k + j] -= coef * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::domain_error("poly_div_exact: inexact division");
    poly_trim(q);
    return q;
}

const IPoly& cyclotomic_int(unsigned M) {
    static std::map<unsigned, IPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;

    // Phi_M = (x^M - 1) / prod_{d | M, d < M} Phi_d, computed recursively
    // inside the same lock (recursion depth is the divisor chain length).
    std::vector<unsigned> pending{M};
    while (!pending.empty()) {
        unsigned n = pending.back();
        if (cache.count(n)) {
            pending.pop_back();
            continue;
        }
        bool ready = true;
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0 && !cache.count(d)) {
                pending.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        IPoly num(n + 1, Integer(0));
        num[0] = -1;
        num[n] = 1;
        IPoly den{Integer(1)};
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) den = poly_mul(den, cache.at(d));
        cache.emplace(n, poly_div_exact(std::move(num), den));
        pending.pop_back();
    }
    return cache.at(M);
}

using QPoly = std::vector<Rational>;

unsigned long qpoly_deg(const QPoly& p) {
    unsigned long d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d == 0 ? 0 : d - 1;
}

bool qpoly_is_zero(const QPoly& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c == 0; });
}

// num mod den over Q, den nonzero.
QPoly qpoly_mod(QPoly num, const QPoly& den) {
    unsigned long dd = qpoly_deg(den);
    while (!qpoly_is_zero(num) && qpoly_deg(num) >= dd) {
        unsigned long dn = qpoly_deg(num);
        Rational coef = num[dn] / den[dd];
        for (unsigned long j = 0; j <= dd; ++j) num[dn - dd + j] -= coef * den[j];
        num[dn] = 0;
    }
    num.resize(std::max<unsigned long>(dd, 1));
    return num;
}

}  // namespace

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

CycField::CycField(unsigned M) : order_(M) {
    if (M == 0) throw std::domain_error("CycField: order must be positive");
    const IPoly& phi = cyclotomic_int(M);
    phi_ = phi;
    degree_ = static_cast<unsigned>(poly_deg(phi));

    unsigned rows = std::max<unsigned>(M, 2 * degree_ > 0 ? 2 * degree_ - 1 : 1);
    rows_.resize(rows);
    for (unsigned e = 0; e < rows; ++e) {
        std::vector<Integer> row(degree_, Integer(0));
        if (e < degree_) {
            row[e] = 1;
        } else {
            // x^e = x * x^(e-1) reduced mod Phi
            const std::vector<Integer>& prev = rows_[e - 1];
            Integer top = prev[degree_ - 1];
            for (unsigned i = degree_ - 1; i > 0; --i) row[i] = prev[i - 1];
            row[0] = 0;
            if (top != 0)
                for (unsigned i = 0; i < degree_; ++i) row[i] -= top * phi_[i];
        }
        rows_[e] = std::move(row);
    }

    rows_fit_int64_ = true;
    for (const auto& row : rows_)
        for (const auto& v : row)
            if (!v.fits_slong_p()) rows_fit_int64_ = false;
    if (rows_fit_int64_) {
        rows_i64_.resize(rows_.size());
        for (size_t e = 0; e < rows_.size(); ++e) {
            rows_i64_[e].resize(degree_);
            for (unsigned i = 0; i < degree_; ++i) rows_i64_[e][i] = rows_[e][i].get_si();
        }
    }
}

const CycField& CycField::get(unsigned M) {
    static std::map<unsigned, std::unique_ptr<CycField>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it == cache.end())
        it = cache.emplace(M, std::unique_ptr<CycField>(new CycField(M))).first;
    return *it->second;
}

const std::vector<Integer>& CycField::power_row(unsigned e) const {
    return rows_.at(e);
}

const std::vector<std::int64_t>& CycField::power_row_i64(unsigned e) const {
    if (!rows_fit_int64_) throw std::domain_error("CycField: int64 rows unavailable");
    return rows_i64_.at(e);
}

std::vector<Rational> cyclotomic_polynomial(unsigned M) {
    if (M < 1) throw std::domain_error("cyclotomic_polynomial: M must be >= 1");
    const IPoly& phi = cyclotomic_int(M);
    std::vector<Rational> out;
    out.reserve(phi.size());
    for (const auto& c : phi) out.emplace_back(c);
    return out;
}

CycNum CycNum::zero(unsigned M) {
    const CycField& F = CycField::get(M);
    return CycNum(M, std::vector<Rational>(F.degree(), Rational(0)));
}

CycNum CycNum::one(unsigned M) {
    return from_rational(M, Rational(1));
}

CycNum CycNum::from_rational(unsigned M, const Rational& q) {
    CycNum x = zero(M);  // deg Phi_M >= 1 for every M >= 1
    x.coeffs_[0] = q;
    return x;
}

CycNum CycNum::monomial(unsigned M, const Rational& q, long e) {
    const CycField& F = CycField::get(M);
    long r = e % static_cast<long>(M);
    if (r < 0) r += M;
    CycNum x = zero(M);
    const std::vector<Integer>& row = F.power_row(static_cast<unsigned>(r));
    for (unsigned i = 0; i < F.degree(); ++i)
        if (row[i] != 0) x.coeffs_[i] = q * Rational(row[i]);
    return x;
}

CycNum CycNum::from_power_counts(unsigned M, const std::vector<std::int64_t>& counts,
                                 const Rational& scale) {
    const CycField& F = CycField::get(M);
    if (counts.size() != M) throw std::domain_error("from_power_counts: counts size != M");
    std::vector<Integer> acc(F.degree(), Integer(0));
    for (unsigned e = 0; e < M; ++e) {
        if (counts[e] == 0) continue;
        const std::vector<Integer>& row = F.power_row(e);
        Integer c(static_cast<long>(counts[e]));
        for (unsigned i = 0; i < F.degree(); ++i)
            if (row[i] != 0) acc[i] += c * row[i];
    }
    CycNum x = zero(M);
    for (unsigned i = 0; i < F.degree(); ++i)
        if (acc[i] != 0) x.coeffs_[i] = scale * Rational(acc[i]);
    return x;
}

CycNum CycNum::from_polynomial(unsigned M, const std::vector<Rational>& poly) {
    const CycField& F = CycField::get(M);
    std::vector<Rational> phi;
    phi.reserve(F.minimal_polynomial().size());
    for (const auto& c : F.minimal_polynomial()) phi.emplace_back(c);
    QPoly rem = qpoly_mod(poly, phi);
    rem.resize(F.degree(), Rational(0));
    return CycNum(M, std::move(rem));
}

bool CycNum::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycNum::rational_value() const {
    if (!is_rational()) throw std::domain_error("CycNum: not a rational value");
    return coeffs_[0];
}

void CycNum::check_same_order(const CycNum& rhs) const {
    if (order_ != rhs.order_) throw std::domain_error("CycNum: order mismatch");
}

CycNum CycNum::operator-() const {
    CycNum out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycNum& CycNum::operator+=(const CycNum& rhs) {
    check_same_order(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
    check_same_order(rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
    check_same_order(rhs);
    const CycField& F = CycField::get(order_);
    unsigned d = F.degree();
    std::vector<Rational> conv(2 * d - 1, Rational(0));
    for (unsigned i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (unsigned j = 0; j < d; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            conv[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    std::vector<Rational> out(conv.begin(), conv.begin() + d);
    for (unsigned e = d; e < 2 * d - 1; ++e) {
        if (conv[e] == 0) continue;
        const std::vector<Integer>& row = F.power_row(e);
        for (unsigned i = 0; i < d; ++i)
            if (row[i] != 0) out[i] += conv[e] * Rational(row[i]);
    }
    coeffs_ = std::move(out);
    return *this;
}

CycNum& CycNum::operator*=(const Rational& q) {
    for (auto& c : coeffs_) c *= q;
    return *this;
}

CycNum& CycNum::operator/=(const CycNum& rhs) {
    check_same_order(rhs);
    if (rhs.is_zero()) throw std::domain_error("CycNum: division by zero");
    return *this *= rhs.inverse();
}

bool CycNum::operator==(const CycNum& rhs) const {
    check_same_order(rhs);
    return coeffs_ == rhs.coeffs_;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycNum: inverse of zero");
    const CycField& F = CycField::get(order_);
    // Extended Euclid in Q[x]: u * this + v * Phi = gcd (a nonzero constant).
    QPoly r0;
    r0.reserve(F.minimal_polynomial().size());
    for (const auto& c : F.minimal_polynomial()) r0.emplace_back(c);
    QPoly r1(coeffs_.begin(), coeffs_.end());
    QPoly u0{Rational(0)}, u1{Rational(1)};
    while (!qpoly_is_zero(r1) && qpoly_deg(r1) > 0) {
        unsigned long d0 = qpoly_deg(r0), d1 = qpoly_deg(r1);
        if (d0 < d1) {
            std::swap(r0, r1);
            std::swap(u0, u1);
            continue;
        }
        Rational coef = r0[d0] / r1[d1];
        unsigned long shift = d0 - d1;
        for (unsigned long j = 0; j <= d1; ++j) r0[shift + j] -= coef * r1[j];
        r0[d0] = 0;
        if (u0.size() < u1.size() + shift) u0.resize(u1.size() + shift, Rational(0));
        for (size_t j = 0; j < u1.size(); ++j) u0[shift + j] -= coef * u1[j];
        if (qpoly_deg(r0) < qpoly_deg(r1) || qpoly_is_zero(r0)) {
            std::swap(r0, r1);
            std::swap(u0, u1);
        }
    }
    if (qpoly_is_zero(r1)) throw std::domain_error("CycNum: not invertible");
    Rational g = r1[0];
    QPoly inv = u1;
    for (auto& c : inv) c /= g;
    return from_polynomial(order_, inv);
}

CycNum CycNum::galois(long k) const {
    long M = static_cast<long>(order_);
    long kk = k % M;
    if (kk < 0) kk += M;
    long g = std::gcd(kk, M);
    if (g != 1) throw std::domain_error("CycNum::galois: k not coprime to order");
    CycNum out = zero(order_);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        out += monomial(order_, coeffs_[j], static_cast<long>(j) * kk);
    }
    return out;
}

Rational CycNum::abs_squared() const {
    CycNum n = *this * conj();
    return n.rational_value();
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum base = *this;
    CycNum acc = one(order_);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::complex<double> CycNum::approx() const {
    const double pi = 3.14159265358979323846;
    std::complex<double> out(0.0, 0.0);
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        double ang = 2.0 * pi * static_cast<double>(j) / static_cast<double>(order_);
        out += coeffs_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return out;
}

std::string CycNum::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[j].get_str();
        if (j > 0) os << "*z" << order_ << "^" << j;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycNum root_of_unity(unsigned M, long k) {
    return CycNum::monomial(M, Rational(1), k);
}

CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op) {
    switch (op) {
        case CycOp::add: return a + b;
        case CycOp::sub: return a - b;
        case CycOp::mul: return a * b;
        case CycOp::div: return a / b;
    }
    throw std::domain_error("cyc_arith: unknown op");
}

}  // namespace mcq

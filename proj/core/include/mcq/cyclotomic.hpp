#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "mcq/rational.hpp"

namespace mcq {

// Shared immutable data for the field Q(zeta_M): the minimal polynomial
// Phi_M and reduction rows for powers of zeta. Instances are cached per M
// and safe to share across threads once built.
class CycField {
public:
    static const CycField& get(unsigned M);

    unsigned order() const { return order_; }
    unsigned degree() const { return degree_; }

    // Monic minimal polynomial of zeta_M, low-degree coefficient first,
    // length degree()+1.
    const std::vector<Integer>& minimal_polynomial() const { return phi_; }

    // Canonical coordinates of x^e mod Phi_M. Defined for
    // 0 <= e < max(order, 2*degree-1).
    const std::vector<Integer>& power_row(unsigned e) const;

    // Same rows as int64, when every entry fits (checked at build time).
    bool rows_fit_int64() const { return rows_fit_int64_; }
    const std::vector<std::int64_t>& power_row_i64(unsigned e) const;

private:
    explicit CycField(unsigned M);

    unsigned order_ = 0;
    unsigned degree_ = 0;
    std::vector<Integer> phi_;
    std::vector<std::vector<Integer>> rows_;
    std::vector<std::vector<std::int64_t>> rows_i64_;
    bool rows_fit_int64_ = false;
};

// Exact element of Q(zeta_M), stored as the canonical residue mod Phi_M.
// Two elements of equal order are equal iff their coefficient vectors are.
class CycNum {
public:
    CycNum() : order_(1), coeffs_(1, Rational(0)) {}

    static CycNum zero(unsigned M);
    static CycNum one(unsigned M);
    static CycNum from_rational(unsigned M, const Rational& q);
    // q * zeta_M^e (e arbitrary, reduced mod M)
    static CycNum monomial(unsigned M, const Rational& q, long e);
    // scale * sum_e counts[e] * zeta_M^e  (counts indexed by exponent)
    static CycNum from_power_counts(unsigned M, const std::vector<std::int64_t>& counts,
                                    const Rational& scale);
    // from an arbitrary polynomial in zeta_M (any length), reduced to canonical form
    static CycNum from_polynomial(unsigned M, const std::vector<Rational>& poly);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    // The rational value; throws std::domain_error when not rational.
    Rational rational_value() const;

    CycNum operator-() const;
    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    CycNum& operator/=(const CycNum& rhs);
    CycNum& operator*=(const Rational& q);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend CycNum operator*(CycNum a, const Rational& q) { return a *= q; }
    friend CycNum operator*(const Rational& q, CycNum a) { return a *= q; }

    bool operator==(const CycNum& rhs) const;
    bool operator!=(const CycNum& rhs) const { return !(*this == rhs); }

    CycNum inverse() const;
    // Galois action zeta -> zeta^k, gcd(k, M) = 1.
    CycNum galois(long k) const;
    CycNum conj() const { return galois(-1); }
    // x * conj(x); throws when the product is not rational (it always is).
    Rational abs_squared() const;

    CycNum pow(long e) const;

    // Display helper only; the core never computes with floating point.
    std::complex<double> approx() const;
    std::string str() const;

private:
    CycNum(unsigned M, std::vector<Rational> c) : order_(M), coeffs_(std::move(c)) {}
    void check_same_order(const CycNum& rhs) const;

    unsigned order_;
    std::vector<Rational> coeffs_;
};

// Coefficients of the M-th cyclotomic polynomial, low-degree first,
// monic, length deg(Phi_M)+1.
std::vector<Rational> cyclotomic_polynomial(unsigned M);

// zeta_M^k in canonical form; k arbitrary (reduced mod M).
CycNum root_of_unity(unsigned M, long k);

enum class CycOp { add, sub, mul, div };
CycNum cyc_arith(const CycNum& a, const CycNum& b, CycOp op);

unsigned long euler_phi(unsigned long n);

}  // namespace mcq

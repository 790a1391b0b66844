#include <doctest.h>

#include <random>

#include "mcq/cyclotomic.hpp"
#include "mcq/json_io.hpp"
#include "oracles.hpp"

using mcq::CycNum;
using mcq::CycOp;
using mcq::Rational;

TEST_CASE("cyclotomic polynomials against the Moebius-product oracle") {
    for (unsigned M = 1; M <= 80; ++M) {
        auto got = mcq::cyclotomic_polynomial(M);
        auto want = oracles::mobius_cyclotomic(M);
        want.resize(got.size(), Rational(0));
        CHECK_MESSAGE(got == want, "Phi_", M);
    }
    CHECK(mcq::cyclotomic_polynomial(1) == std::vector<Rational>{Rational(-1), Rational(1)});
    CHECK(mcq::cyclotomic_polynomial(3) ==
          std::vector<Rational>{Rational(1), Rational(1), Rational(1)});
    CHECK(mcq::cyclotomic_polynomial(12) ==
          std::vector<Rational>{Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)});
}

TEST_CASE("roots of unity") {
    CHECK(mcq::root_of_unity(4, 2) == CycNum::from_rational(4, Rational(-1)));
    for (unsigned M : {1u, 2u, 5u, 12u, 63u}) {
        CHECK(mcq::root_of_unity(M, 0) == CycNum::one(M));
        CHECK(mcq::root_of_unity(M, 3).pow(M) == CycNum::one(M));
        CHECK(mcq::root_of_unity(M, -1) == mcq::root_of_unity(M, M - 1));
    }
    CHECK(mcq::root_of_unity(12, 4) * mcq::root_of_unity(12, 8) == CycNum::one(12));
    // sum of all M-th roots vanishes for M > 1
    for (unsigned M : {2u, 3u, 12u, 21u, 63u}) {
        CycNum acc = CycNum::zero(M);
        for (unsigned k = 0; k < M; ++k) acc += mcq::root_of_unity(M, k);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("cyc_arith examples") {
    // (1 + zeta_3) + zeta_3^2 = 0
    CycNum a = CycNum::one(3) + mcq::root_of_unity(3, 1);
    CHECK(mcq::cyc_arith(a, mcq::root_of_unity(3, 2), CycOp::add).is_zero());
    // zeta * zeta^{M-1} = 1
    for (unsigned M : {5u, 12u, 63u})
        CHECK(mcq::cyc_arith(mcq::root_of_unity(M, 1), mcq::root_of_unity(M, M - 1), CycOp::mul) ==
              CycNum::one(M));
    // 1/(1+i) = (1-i)/2
    CycNum one_plus_i = CycNum::one(4) + mcq::root_of_unity(4, 1);
    CycNum inv = mcq::cyc_arith(CycNum::one(4), one_plus_i, CycOp::div);
    CycNum expect = (CycNum::one(4) - mcq::root_of_unity(4, 1)) * Rational(1, 2);
    CHECK(inv == expect);
    CHECK(inv * one_plus_i == CycNum::one(4));

    CHECK_THROWS_AS(mcq::cyc_arith(CycNum::one(4), CycNum::zero(4), CycOp::div),
                    std::domain_error);
    CHECK_THROWS_AS(mcq::cyc_arith(CycNum::one(4), CycNum::one(8), CycOp::add),
                    std::domain_error);
}

namespace {

CycNum random_cyc(std::mt19937& rng, unsigned M) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
    unsigned deg = static_cast<unsigned>(mcq::euler_phi(M));
    std::vector<Rational> poly(deg, Rational(0));
    for (auto& c : poly) c = mcq::rational(num(rng), den(rng));
    return CycNum::from_polynomial(M, poly);
}

}  // namespace

TEST_CASE("field axioms on randomized triples, exact equality") {
    std::mt19937 rng(20240811);
    for (unsigned M : {12u, 63u}) {
        for (int it = 0; it < 25; ++it) {
            CycNum a = random_cyc(rng, M), b = random_cyc(rng, M), c = random_cyc(rng, M);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a - a).is_zero());
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == CycNum::one(M));
                CHECK(a / a == CycNum::one(M));
            }
        }
    }
}

TEST_CASE("is_zero agrees with divisibility by the minimal polynomial") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-3, 3);
    for (unsigned M : {12u, 21u}) {
        auto phi = mcq::cyclotomic_polynomial(M);
        for (int it = 0; it < 40; ++it) {
            std::vector<Rational> poly(2 * phi.size(), Rational(0));
            for (auto& c : poly) c = Rational(num(rng));
            CycNum x = CycNum::from_polynomial(M, poly);
            auto rem = oracles::qmod(poly, phi);
            bool divisible = true;
            for (const auto& c : rem)
                if (c != 0) divisible = false;
            CHECK(x.is_zero() == divisible);
        }
    }
}

TEST_CASE("galois conjugation and absolute values") {
    CycNum z = mcq::root_of_unity(12, 5);
    CHECK(z.conj() == mcq::root_of_unity(12, 7));
    CHECK(z.abs_squared() == Rational(1));
    CycNum x = CycNum::one(12) + mcq::root_of_unity(12, 3);  // 1 + i
    CHECK(x.abs_squared() == Rational(2));
    CHECK_THROWS_AS(CycNum::one(12).galois(4), std::domain_error);
}

TEST_CASE("json round trip") {
    std::mt19937 rng(99);
    for (unsigned M : {4u, 63u}) {
        CycNum x = random_cyc(rng, M);
        auto j = mcq::cyc_to_json(x);
        CHECK(mcq::cyc_from_json(j) == x);
    }
}

TEST_CASE("monomials and power counts") {
    unsigned M = 63;
    CHECK(CycNum::monomial(M, Rational(1, 3), 70) ==
          mcq::root_of_unity(M, 7) * Rational(1, 3));
    std::vector<std::int64_t> counts(M, 0);
    counts[5] = 2;
    counts[40] = -1;
    CycNum got = CycNum::from_power_counts(M, counts, Rational(1, 2));
    CycNum want = (mcq::root_of_unity(M, 5) * Rational(2) - mcq::root_of_unity(M, 40)) *
                  Rational(1, 2);
    CHECK(got == want);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "padictk/iwasawa.hpp"

using namespace padictk;

namespace {

IwasawaSeries random_series(std::mt19937_64& rng, long p, long N, long M) {
    std::vector<Int> c((size_t)M);
    Int pN = pow_ui(p, (unsigned long)N);
    for (auto& x : c) x = mod(Int((unsigned long)rng()), pN);
    return IwasawaSeries::from_coeffs(p, N, M, std::move(c));
}

}  // namespace

TEST_CASE("evaluate basics") {
    long p = 5, N = 6, M = 12;
    auto T = IwasawaSeries::monomial(p, N, M, 1);
    auto s = PadicNumber::from_integer(3, p, N);
    // F = T: value is u^s - 1
    auto v = T.evaluate(s);
    auto expect = u_pow_minus_one(s, p, std::min(N, M));
    CHECK((v - expect).is_zero());
    // F = 1 + T at s = 1: u
    auto F = IwasawaSeries::monomial(p, N, M, 0) + T;
    auto u = F.evaluate_int(1);
    CHECK((u - cyclotomic_u(p, u.abs_prec())).is_zero());
    // F = T^2 at s=1: (u-1)^2 = p^2
    auto T2 = IwasawaSeries::monomial(p, 3, 10, 2);
    auto w = T2.evaluate_int(1);
    CHECK(w.lift() == 25);
}

TEST_CASE("ring laws at truncation") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        auto a = random_series(rng, 5, 5, 10);
        auto b = random_series(rng, 5, 5, 10);
        auto c = random_series(rng, 5, 5, 10);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("evaluate is a ring homomorphism") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 15; ++i) {
        auto a = random_series(rng, 5, 6, 14);
        auto b = random_series(rng, 5, 6, 14);
        long s = (long)(rng() % 9) - 4;
        auto lhs = (a * b).evaluate_int(s);
        auto rhs = a.evaluate_int(s) * b.evaluate_int(s);
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("twist examples") {
    long p = 5, N = 6, M = 10;
    auto T = IwasawaSeries::monomial(p, N, M, 1);
    auto tw = T.twist();
    // T -> u(1+T) - 1 = (u-1) + uT
    CHECK(tw.coeff(0) == p);
    CHECK(tw.coeff(1) == 1 + p);
    CHECK(tw.coeff(2) == 0);
    auto one = IwasawaSeries::monomial(p, N, M, 0);
    CHECK(one.twist() == one);
}

TEST_CASE("twist shifts evaluation by one") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 12; ++i) {
        auto F = random_series(rng, 5, 6, 16);
        long s = (long)(rng() % 7) - 3;
        auto lhs = F.twist().evaluate_int(s);
        auto rhs = F.evaluate_int(s + 1);
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("involution") {
    long p = 5, N = 6, M = 8;
    auto T = IwasawaSeries::monomial(p, N, M, 1);
    auto iv = T.involution();
    // -T + T^2 - T^3 + ...
    for (long k = 1; k < M; ++k) {
        Int expect = (k % 2 == 1) ? Int(-1) : Int(1);
        CHECK(iv.coeff(k) == mod(expect, pow_ui(p, 6)));
    }
    CHECK(iv.coeff(0) == 0);

    std::mt19937_64 rng(8);
    for (int i = 0; i < 100; ++i) {
        auto F = random_series(rng, 5, 5, 9);
        CHECK(F.involution().involution() == F);
    }
    // evaluate(involution(F), s) = evaluate(F, -s)
    for (int i = 0; i < 12; ++i) {
        auto F = random_series(rng, 7, 5, 12);
        long s = (long)(rng() % 9) - 4;
        auto lhs = F.involution().evaluate_int(s);
        auto rhs = F.evaluate_int(-s);
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("twist and involution composite transport") {
    // evaluate(involution(twist(F)), s) = evaluate(F, 1-s)
    std::mt19937_64 rng(9);
    for (int i = 0; i < 20; ++i) {
        auto F = random_series(rng, 5, 5, 12);
        long s = (long)(rng() % 9) - 4;
        auto lhs = F.twist().involution().evaluate_int(s);
        auto rhs = F.evaluate_int(1 - s);
        CHECK((lhs - rhs).is_zero());
    }
}

TEST_CASE("mu and lambda") {
    long p = 5, N = 6, M = 10;
    // F = p + T^2
    auto F = IwasawaSeries::monomial(p, N, M, 0, Int(p)) +
             IwasawaSeries::monomial(p, N, M, 2);
    auto ml = F.mu_lambda();
    CHECK(ml.mu == 0);
    CHECK(ml.lambda == 2);
    // F = p (1 + T)
    auto G = IwasawaSeries::monomial(p, N, M, 0, Int(p)) +
             IwasawaSeries::monomial(p, N, M, 1, Int(p));
    auto ml2 = G.mu_lambda();
    CHECK(ml2.mu == 1);
    CHECK(ml2.lambda == 0);
    // F = 3 + 7T
    auto H = IwasawaSeries::monomial(p, N, M, 0, Int(3)) +
             IwasawaSeries::monomial(p, N, M, 1, Int(7));
    auto ml3 = H.mu_lambda();
    CHECK(ml3.mu == 0);
    CHECK(ml3.lambda == 0);
    CHECK_THROWS_AS(IwasawaSeries(p, N, M).mu_lambda(), ZeroAtPrecision);
}

TEST_CASE("mu/lambda additivity") {
    std::mt19937_64 rng(10);
    int done = 0;
    while (done < 40) {
        auto F = random_series(rng, 5, 7, 10);
        auto G = random_series(rng, 5, 7, 10);
        auto FG = F * G;
        IwasawaSeries::MuLambda mf{}, mg{}, mfg{};
        try {
            mf = F.mu_lambda();
            mg = G.mu_lambda();
            mfg = FG.mu_lambda();
        } catch (const ZeroAtPrecision&) {
            continue;
        }
        if (mf.lambda + mg.lambda >= 10 || mf.mu + mg.mu >= 7) continue;
        CHECK(mfg.mu == mf.mu + mg.mu);
        CHECK(mfg.lambda == mf.lambda + mg.lambda);
        ++done;
    }
}

TEST_CASE("series inverse") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        auto F = random_series(rng, 5, 6, 10);
        if (mod(F.coeff(0), 5) == 0) continue;
        auto G = F.inverse_unit();
        auto one = IwasawaSeries::monomial(5, 6, 10, 0);
        CHECK(F * G == one);
    }
}

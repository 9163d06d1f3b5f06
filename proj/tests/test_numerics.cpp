#include <doctest.h>

#include <thread>
#include <vector>

#include "stieltjeskit/numerics.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

using namespace sk;
using sk::test::near;

TEST_CASE("bernoulli numbers by recurrence") {
    BernoulliCache cache;
    CHECK(bernoulli(0, cache) == Rational(1));
    CHECK(bernoulli(1, cache) == Rational(-1, 2));
    CHECK(bernoulli(3, cache) == Rational(0));
    CHECK(bernoulli(7, cache) == Rational(0));
    CHECK(bernoulli(2, cache) == Rational(1, 6));
    CHECK(bernoulli(12, cache) == Rational(-691, 2730));

    SUBCASE("write-once: repeated reads are identical") {
        Rational first = bernoulli(20, cache);
        CHECK(bernoulli(20, cache) == first);
    }

    SUBCASE("concurrent access") {
        std::vector<std::thread> threads;
        std::vector<Rational> results(8);
        for (int t = 0; t < 8; ++t)
            threads.emplace_back([&cache, &results, t] { results[t] = cache.at(30); });
        for (auto& th : threads) th.join();
        for (int t = 1; t < 8; ++t) CHECK(results[t] == results[0]);
    }
}

TEST_CASE("bernoulli numbers agree with the even zeta identity") {
    // B_2k = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}, zeta from direct sums
    PrecisionScope scope(45);
    BernoulliCache cache;
    for (int k = 1; k <= 10; ++k) {
        BigReal z = oracle::zeta_direct(BigReal(2 * k), 10000, 45);
        BigReal expected =
            2 * BigReal(factorial(2 * k)) * z / pow(2 * const_pi(), 2 * k);
        if (k % 2 == 0) expected = -expected;
        CHECK(near(BigReal(bernoulli(2 * k, cache)), expected, 35));
    }
}

TEST_CASE("stabilize on elementary computations") {
    PrecisionContext ctx(30, 10);

    SUBCASE("log 2") {
        auto r = stabilize(
            [](int digits) {
                PrecisionScope scope(digits);
                return log(BigReal(2));
            },
            ctx);
        PrecisionScope scope(45);
        CHECK(near(r.value, BigReal("0.693147180559945309417232121458176568075500134"), 29));
        CHECK(r.error_estimate < pow10(-30));
    }

    SUBCASE("exact constant") {
        auto r = stabilize([](int) { return BigReal(1); }, ctx);
        CHECK(r.value == 1);
        CHECK(r.error_estimate == 0);
    }

    SUBCASE("harmonic sum to 10") {
        auto harmonic = [](int digits) {
            PrecisionScope scope(digits);
            BigReal acc(0);
            for (int m = 1; m <= 10; ++m) acc += BigReal(1) / m;
            return acc;
        };
        auto r = stabilize(harmonic, ctx);
        PrecisionScope scope(40);
        CHECK(near(r.value, BigReal(Rational(7381, 2520)), 29));
        CHECK(r.error_estimate < pow10(-25));
    }

    SUBCASE("idempotent") {
        auto computation = [](int digits) {
            PrecisionScope scope(digits);
            return exp(BigReal(1) / 3);
        };
        auto r1 = stabilize(computation, ctx);
        auto r2 = stabilize(computation, ctx);
        CHECK(r1.value == r2.value);
        CHECK(r1.error_estimate == r2.error_estimate);
    }

    SUBCASE("precision-dependent results are rejected") {
        auto flaky = [](int digits) { return BigReal(digits < 35 ? 1 : 2); };
        CHECK_THROWS_AS(stabilize(flaky, ctx), Error);
        try {
            stabilize(flaky, ctx);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NonConvergence);
        }
    }
}

TEST_CASE("precision context validation") {
    CHECK_THROWS_AS(PrecisionContext(9, 10), Error);
    CHECK_THROWS_AS(PrecisionContext(50, 4), Error);
    PrecisionContext ok(10, 5);
    CHECK(ok.total_digits() == 15);
}

TEST_CASE("complex arithmetic") {
    PrecisionScope scope(40);
    BigComplex a{BigReal(1), BigReal(2)};
    BigComplex b{BigReal(3), BigReal(4)};
    BigComplex p = a * b;
    CHECK(p.re == -5);
    CHECK(p.im == 10);
    BigComplex q = p / b;
    CHECK(near(q, a, 38));
    CHECK(abs_value(BigComplex{BigReal(3), BigReal(-4)}) == 5);

    SUBCASE("unit rotations are exact on quarter turns") {
        CHECK(unit_rotation(0, 1).re == 1);
        CHECK(unit_rotation(1, 2).re == -1);
        CHECK(unit_rotation(1, 2).im == 0);
        CHECK(unit_rotation(1, 4).im == 1);
        CHECK(unit_rotation(3, 4).im == -1);
        CHECK(near(unit_rotation(1, 3), BigComplex{BigReal(-1) / 2, sqrt(BigReal(3)) / 2}, 38));
    }

    SUBCASE("complex exp") {
        BigComplex e_ipi = complex_exp({BigReal(0), const_pi()});
        CHECK(near(e_ipi, BigComplex{BigReal(-1), BigReal(0)}, 38));
    }
}

TEST_CASE("rounding helpers") {
    PrecisionScope scope(50);
    BigReal third = BigReal(1) / 3;
    BigReal rounded = round_to(third, 20);
    CHECK(rounded.precision() == 20);
    CHECK(near(rounded, third, 19));
    CHECK(pow10(-3) == BigReal(Rational(1, 1000)));
}

#include <doctest.h>

#include "stieltjeskit/lfunc.hpp"
#include "support/oracles.hpp"
#include "support/test_util.hpp"

using namespace sk;
using sk::test::near;

namespace {
const PrecisionContext kCtx{40, 10};
const BigComplex kOne{BigReal(1), BigReal(0)};

BigComplex make_s(const char* re, const char* im = "0") {
    return {BigReal(re), BigReal(im)};
}
}  // namespace

TEST_CASE("hurwitz_zeta point values") {
    PrecisionScope scope(60);

    SUBCASE("zeta(2) = pi^2/6") {
        auto z = hurwitz_zeta(make_s("2"), 1, kCtx);
        CHECK(near(z.re, const_pi() * const_pi() / 6, 38));
        CHECK(z.im == 0);
    }

    SUBCASE("zeta(2, 1/2) = pi^2/2") {
        auto z = hurwitz_zeta(make_s("2"), Rational(1, 2), kCtx);
        CHECK(near(z.re, const_pi() * const_pi() / 2, 38));
    }

    SUBCASE("zeta(3) against the direct series") {
        auto z = hurwitz_zeta(make_s("3"), 1, kCtx);
        BigReal direct = oracle::zeta_direct(BigReal(3), 100000, 45);
        CHECK(near(z.re, direct, 25));
        CHECK(near(z.re, BigReal("1.20205690315959428539973816151144999076498629"), 38));
    }

    SUBCASE("independent alternating-series route") {
        for (const char* s : {"1.5", "0.75", "1.25"}) {
            auto em = hurwitz_zeta(make_s(s), 1, kCtx);
            BigReal eta = oracle::zeta_by_eta(BigReal(s), 50);
            CHECK(near(em.re, eta, 35));
        }
    }

    SUBCASE("pole and domain") {
        CHECK_THROWS_AS(hurwitz_zeta(kOne, 1, kCtx), Error);
        try {
            hurwitz_zeta(make_s("1", "0"), Rational(1, 2), kCtx);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::PoleAtOne);
        }
        // within the pole threshold
        CHECK_THROWS_AS(hurwitz_zeta(make_s("1.0000000000000000000000000000000000000000000001"),
                                     1, kCtx),
                        Error);
        CHECK_THROWS_AS(hurwitz_zeta(make_s("-2"), 1, kCtx), Error);
        CHECK_THROWS_AS(hurwitz_zeta(make_s("2"), Rational(5, 4), kCtx), Error);
    }
}

TEST_CASE("l_eval") {
    auto chi4 = character_by_index(4, 1);
    PrecisionScope scope(60);

    SUBCASE("L(1, chi_4) = pi/4 (Leibniz)") {
        auto v = l_eval(kOne, chi4, kCtx);
        CHECK(near(v.re, oracle::beta_series(BigReal(1), 50), 38));
        CHECK(near(v.re, const_pi() / 4, 38));
        CHECK(v.im == 0);
    }

    SUBCASE("L(2, chi_4) is Catalan's constant") {
        auto v = l_eval(make_s("2"), chi4, kCtx);
        CHECK(near(v.re, oracle::beta_series(BigReal(2), 50), 38));
    }

    SUBCASE("principal mod 1 goes through the zeta path") {
        auto v = l_eval(make_s("2"), character_by_index(1, 0), kCtx);
        CHECK(near(v.re, const_pi() * const_pi() / 6, 38));
        CHECK(v == hurwitz_zeta(make_s("2"), 1, kCtx));
        CHECK_THROWS_AS(l_eval(kOne, character_by_index(1, 0), kCtx), Error);
    }

    SUBCASE("principal mod q > 1 is unsupported") {
        try {
            l_eval(make_s("2"), character_by_index(5, 0), kCtx);
            FAIL("expected UnsupportedCharacter");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UnsupportedCharacter);
        }
    }

    SUBCASE("complex characters and complex s against the series oracle") {
        auto chi5 = character_by_index(5, 1);
        auto v = l_eval(make_s("1.002"), chi5, kCtx);
        auto ref = oracle::dirichlet_series_reference(BigReal("1.002"), chi5, 50);
        CHECK(near(v, ref, 35));
    }
}

TEST_CASE("operator== shim for complex") {
    // equality used above: same path must give identical numbers
    auto a = hurwitz_zeta(make_s("1.5"), 1, kCtx);
    auto b = hurwitz_zeta(make_s("1.5"), 1, kCtx);
    CHECK(a.re == b.re);
    CHECK(a.im == b.im);
}

TEST_CASE("zeta_laurent_eval") {
    auto table40 = StieltjesTable::zeta(40, kCtx);

    SUBCASE("s = 1.5 with N = 30 matches the direct value to 20+ digits") {
        auto lv = zeta_laurent_eval(make_s("1.5"), 30, table40, kCtx);
        auto dv = hurwitz_zeta(make_s("1.5"), 1, kCtx);
        CHECK(near(lv, dv, 20));
    }

    SUBCASE("close to the pole, N = 2 reproduces the direct value") {
        auto s = make_s("1.000001");
        auto lv = zeta_laurent_eval(s, 2, table40, kCtx);
        auto dv = hurwitz_zeta(s, 1, kCtx);
        CHECK(near(lv, dv, 17));
    }

    SUBCASE("pole") {
        CHECK_THROWS_AS(zeta_laurent_eval(kOne, 10, table40, kCtx), Error);
    }

    SUBCASE("table validation") {
        try {
            zeta_laurent_eval(make_s("1.5"), 50, table40, kCtx);
            FAIL("expected MissingGamma");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::MissingGamma);
        }
        auto hur = StieltjesTable::hurwitz(5, Rational(1, 2), kCtx);
        CHECK_THROWS_AS(zeta_laurent_eval(make_s("1.5"), 5, hur, kCtx), Error);
    }

    SUBCASE("agreement inside |s-1| <= 0.5 at 40 digits") {
        PrecisionScope scope(60);
        for (int j = 1; j <= 8; ++j) {
            BigReal r = BigReal(j) / 16;
            BigReal angle = 2 * const_pi() * j / 7;
            BigComplex s{1 + r * cos(angle), r * sin(angle)};
            auto lv = zeta_laurent_eval(s, 40, table40, kCtx);
            auto dv = hurwitz_zeta(s, 1, kCtx);
            CHECK(near(lv, dv, 20));
        }
    }
}

TEST_CASE("taylor_eval") {
    const PrecisionContext ctx{30, 10};
    auto chi4 = character_by_index(4, 1);
    PrecisionScope scope(50);
    BigReal radius = exp(BigReal(-1));
    auto plan = make_taylor_plan(chi4, 25, radius, ctx);

    SUBCASE("center collapses to gamma_0") {
        auto v = taylor_eval(kOne, plan, ctx);
        CHECK(v.re == plan.table.entry(0).re);
        CHECK(near(v.re, const_pi() / 4, 28));
    }

    SUBCASE("boundary point matches the direct evaluation to 12+ digits") {
        BigComplex s{1 + radius, BigReal(0)};
        auto tv = taylor_eval(s, plan, ctx);
        auto dv = l_eval(s, chi4, ctx);
        CHECK(near(tv, dv, 12));
    }

    SUBCASE("outside the disk") {
        try {
            taylor_eval(make_s("1.5"), plan, ctx);
            FAIL("expected OutsideDisk");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::OutsideDisk);
        }
    }

    SUBCASE("truncation error decreases in N (plateaus allowed)") {
        BigComplex s{1 + radius * cos(BigReal(1)), radius * sin(BigReal(1))};
        auto dv = l_eval(s, chi4, ctx);
        BigReal prev;
        bool first = true;
        for (int n_trunc : {5, 10, 15, 20, 25}) {
            auto p = make_taylor_plan(chi4, n_trunc, radius, ctx);
            BigReal err = abs_value(taylor_eval(s, p, ctx) - dv);
            if (!first) CHECK(err <= prev * BigReal("1.01") + pow10(-25));
            prev = err;
            first = false;
        }
    }

    SUBCASE("principal characters have no plan") {
        CHECK_THROWS_AS(make_taylor_plan(character_by_index(1, 0), 5, radius, ctx), Error);
    }
}

TEST_CASE("application_a_bound") {
    PrecisionScope scope(50);
    CHECK(near(application_a_bound(150, kCtx),
               BigReal("0.000117212620284291337143366334241481914015555709"), 38));
    CHECK(near(application_a_bound(151, kCtx),
               BigReal("0.000115281642113540853533940181784443577441650954"), 38));
    // power-law arithmetic: q = 10^4 gives exactly 32.3 * 10^{-10}
    CHECK(near(application_a_bound(10000, kCtx), BigReal("32.3e-10"), 45));
    try {
        application_a_bound(149, kCtx);
        FAIL("expected QTooSmall");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::QTooSmall);
    }
}

TEST_CASE("verify_application_a") {
    const PrecisionContext ctx{40, 10};

    SUBCASE("sample_count = 0 gives the empty list") {
        auto chi = character_by_index(151, 1);
        CHECK(verify_application_a(chi, 0, ctx).empty());
    }

    SUBCASE("q = 151, eight boundary samples") {
        auto chi = character_by_index(151, 1);
        auto reports = verify_application_a(chi, 8, ctx);
        REQUIRE(reports.size() == 8);
        PrecisionScope scope(50);
        // the anchor sample is s = 1 + 1/e on the real axis
        CHECK(reports[0].s.im == 0);
        CHECK(near(reports[0].s.re, 1 + exp(BigReal(-1)), 38));
        BigReal bound = application_a_bound(151, ctx);
        for (const auto& r : reports) {
            CHECK(r.within_bound());
            CHECK(r.certified_bound == bound);
            CHECK(r.measured_remainder == abs_value(r.direct_value - r.truncated_value));
            // remainders are far below the certified bound
            CHECK(r.measured_remainder < bound * pow10(-3));
        }
    }

    SUBCASE("hypotheses") {
        try {
            verify_application_a(character_by_index(100, 1), 4, ctx);
            FAIL("expected QTooSmall");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::QTooSmall);
        }
        try {
            verify_application_a(character_by_index(151, 0), 4, ctx);
            FAIL("expected UnsupportedCharacter");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UnsupportedCharacter);
        }
    }
}

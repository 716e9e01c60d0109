#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "merosin/catalog.hpp"
#include "merosin/orbit.hpp"
#include "support/frozen.hpp"
#include "support/oracles.hpp"

// Oracle equivalence: every derived expectation is (a) re-derived here by its
// brute-force oracle and pinned against the frozen literal, then (b) the
// implementation path is compared against the oracle at the example's stated
// tolerance. The solver code is never its own reference.

using namespace merosin;
using Catch::Matchers::WithinAbs;

TEST_CASE("frozen literals agree with a fresh oracle run") {
    CHECK_THAT(oracle::x0(), WithinAbs(frozen::x0, 1e-14));
    CHECK_THAT(oracle::x_star(), WithinAbs(frozen::x_star, 1e-14));
    CHECK_THAT(oracle::lambda_star(), WithinAbs(frozen::lambda_star, 1e-14));
    CHECK_THAT(oracle::p_2star(), WithinAbs(frozen::p_2star, 1e-14));
    CHECK_THAT(oracle::lambda_2star(), WithinAbs(frozen::lambda_2star, 1e-14));
    CHECK_THAT(oracle::t_hat(), WithinAbs(frozen::t_hat, 1e-14));
    CHECK_THAT(oracle::lambda_hat(), WithinAbs(frozen::lambda_hat, 1e-14));
    CHECK_THAT(oracle::y1(), WithinAbs(frozen::y1, 1e-13));
    CHECK_THAT(oracle::lambda_1(), WithinAbs(frozen::lambda_1, 1e-12));
    CHECK_THAT(oracle::y2(), WithinAbs(frozen::y2, 1e-13));
    CHECK_THAT(oracle::lambda_2(), WithinAbs(frozen::lambda_2, 1e-12));
    CHECK_THAT(oracle::x_fix(0.3), WithinAbs(frozen::x_fix_03, 1e-14));
    CHECK_THAT(oracle::x_fix(0.5), WithinAbs(frozen::x_fix_05, 1e-14));
    CHECK_THAT(oracle::x_fix(0.8), WithinAbs(frozen::x_fix_08, 1e-14));
    CHECK_THAT(oracle::r_fix(1.5), WithinAbs(frozen::r_fix_15, 1e-14));
    CHECK_THAT(oracle::r_fix(2.0), WithinAbs(frozen::r_fix_2, 1e-14));
    CHECK_THAT(oracle::r_fix(5.0), WithinAbs(frozen::r_fix_5, 1e-14));
    CHECK_THAT(oracle::r_fix(9.5), WithinAbs(frozen::r_fix_95, 1e-14));
    CHECK_THAT(oracle::r_fix(12.0), WithinAbs(frozen::r_fix_12, 1e-14));
    CHECK_THAT(oracle::a2(9.5), WithinAbs(frozen::a2_95, 1e-13));
    CHECK_THAT(oracle::r2(9.5), WithinAbs(frozen::r2_95, 1e-13));
    CHECK_THAT(oracle::neg_h_multiplier(oracle::a2(9.5)), WithinAbs(frozen::a2_95_neg_h_mult, 1e-12));
    CHECK_THAT(oracle::neg_h_multiplier(oracle::r2(9.5)), WithinAbs(frozen::r2_95_neg_h_mult, 1e-12));
    CHECK_THAT(oracle::c_crit(1.0), WithinAbs(frozen::c_crit_1, 1e-13));
    CHECK_THAT(oracle::c_crit(9.5), WithinAbs(frozen::c_crit_95, 1e-13));
    CHECK_THAT(oracle::p_crit(1.0), WithinAbs(frozen::p_crit_1, 1e-14));
    CHECK_THAT(oracle::p_crit(2.0), WithinAbs(frozen::p_crit_2, 1e-14));
}

TEST_CASE("display approximations are honest roundings of the oracle values") {
    CHECK_THAT(oracle::x0(), WithinAbs(0.9286, 5e-4));
    CHECK_THAT(oracle::x_star(), WithinAbs(0.872, 5e-4));
    CHECK_THAT(oracle::lambda_star(), WithinAbs(0.117, 5e-3));
    CHECK_THAT(oracle::lambda_2star(), WithinAbs(0.0251, 5e-4));
    CHECK_THAT(oracle::lambda_1(), WithinAbs(8.74, 5e-2));
    CHECK_THAT(oracle::lambda_2(), WithinAbs(10.40, 5e-2));
    CHECK_THAT(oracle::a2(9.5), WithinAbs(4.119, 1e-2));
    CHECK_THAT(oracle::r2(9.5), WithinAbs(5.23, 5e-2));
    CHECK_THAT(oracle::x_fix(0.5), WithinAbs(0.655, 5e-3));
    CHECK_THAT(oracle::p_crit(1.0), WithinAbs(0.798, 5e-4));
    CHECK_THAT(oracle::c_crit(1.0), WithinAbs(2.39, 5e-2));
}

TEST_CASE("solver paths match the oracles at the stated tolerances") {
    const BifurcationConstants c = compute_constants();

    SECTION("ladder constants") {
        CHECK_THAT(c.witness_x_star, WithinAbs(oracle::x_star(), 1e-4));
        CHECK_THAT(c.witness_p_2star, WithinAbs(oracle::p_2star(), 1e-6));
        CHECK_THAT(c.witness_y1, WithinAbs(oracle::y1(), 1e-3));
        CHECK_THAT(c.lambda_star, WithinAbs(oracle::lambda_star(), 1e-9));
        CHECK_THAT(c.lambda_2star, WithinAbs(oracle::lambda_2star(), 1e-9));
        CHECK_THAT(c.lambda_hat, WithinAbs(oracle::lambda_hat(), 1e-9));
        CHECK_THAT(c.lambda_1, WithinAbs(oracle::lambda_1(), 1e-6));
        CHECK_THAT(c.lambda_2, WithinAbs(oracle::lambda_2(), 1e-6));
    }
    SECTION("fixed-point ordinates") {
        CHECK_THAT(real_fixed_ordinate(ParamPoint(0.5)), WithinAbs(oracle::x_fix(0.5), 1e-9));
        CHECK_THAT(imag_fixed_ordinate(ParamPoint(2.0)), WithinAbs(oracle::r_fix(2.0), 1e-9));
        CHECK_THAT(invariant_disk_radius(ParamPoint(2.0)), WithinAbs(oracle::r_fix(2.0), 1e-9));
    }
    SECTION("2-cycle ordinates at lambda = 9.5") {
        const auto recs = imag_two_cycles(ParamPoint(9.5), c);
        REQUIRE(recs.size() == 2);
        CHECK_THAT(recs[0].ordinate, WithinAbs(oracle::a2(9.5), 1e-9));
        CHECK_THAT(recs[1].ordinate, WithinAbs(oracle::r2(9.5), 1e-9));
    }
    SECTION("critical ordinates") {
        CHECK_THAT(real_critical_ordinate(ParamPoint(1.0)), WithinAbs(oracle::p_crit(1.0), 1e-9));
        CHECK_THAT(imag_critical_ordinate(ParamPoint(1.0)), WithinAbs(oracle::c_crit(1.0), 1e-9));
        CHECK_THAT(imag_critical_ordinate(ParamPoint(9.5)), WithinAbs(oracle::c_crit(9.5), 1e-9));
    }
    SECTION("chaos certificate critical point against the psi_low oracle") {
        const ChaosCertificate cert = chaos_certificate(ParamPoint(1.0));
        const double po = oracle::bisect([](double x) { return oracle::psi_low(x) - 1.0; }, 0.1,
                                         oracle::pi / 2.0 - 1e-3);
        CHECK_THAT(cert.p_lambda, WithinAbs(po, 1e-9));
    }
}

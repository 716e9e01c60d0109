#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "merosin/orbit.hpp"
#include "support/frozen.hpp"

using namespace merosin;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double pi = std::numbers::pi;

const BifurcationConstants& constants() {
    static const BifurcationConstants c = compute_constants();
    return c;
}

OrbitOutcome run_orbit(cplx z0, double lam) {
    const ParamPoint p(lam);
    const AttractorInventory inv = attractor_inventory(p, constants());
    return iterate_orbit(z0, p, inv, default_orbit_options(p, inv.parabolic));
}
}  // namespace

TEST_CASE("complex orbit classification") {
    SECTION("real seed falls to the origin for lambda > 1") {
        const OrbitOutcome o = run_orbit(cplx{0.3, 0.0}, 2.0);
        CHECK(o.status == OrbitStatus::Converged);
        CHECK(o.attractor == AttractorId::Origin);
        CHECK(std::abs(o.final_value) < 1e-9);
    }
    SECTION("imaginary seed above r_lambda escapes past the fold") {
        const OrbitOutcome o = run_orbit(cplx{0.0, 6.0}, 12.0);
        CHECK(o.status == OrbitStatus::Escaped);
    }
    SECTION("exact pole is a pole hit") {
        const OrbitOutcome o = run_orbit(cplx{0.0, std::sqrt(3.0)}, 3.0);
        CHECK(o.status == OrbitStatus::PoleHit);
        CHECK(o.iterations == 0);
    }
    SECTION("the imaginary critical orbit lands on the 2-cycle") {
        const OrbitOutcome o = run_orbit(cplx{0.0, frozen::c_crit_95}, 9.5);
        CHECK(o.status == OrbitStatus::Converged);
        CHECK(o.attractor == AttractorId::ImagTwoCycle);
    }
    SECTION("preimages of zero converge in at most two steps") {
        for (double lam : {2.0, 9.5})
            for (int n = -20; n <= 20; ++n) {
                const OrbitOutcome o = run_orbit(cplx{n * pi, 0.0}, lam);
                CHECK(o.status == OrbitStatus::Converged);
                CHECK(o.attractor == AttractorId::Origin);
                CHECK(o.iterations <= 2);
            }
    }
}

TEST_CASE("real axis orbit classification") {
    const BifurcationConstants& c = constants();
    SECTION("sign of f picks the limit of the attracting pair") {
        const ParamPoint p(0.5);
        const AttractorInventory inv = attractor_inventory(p, c);
        const OrbitOptions opts = default_orbit_options(p);
        const OrbitOutcome plus = classify_real_orbit(1.0, p, inv, opts);
        CHECK(plus.status == OrbitStatus::Converged);
        CHECK(plus.attractor == AttractorId::RealFixedPlus);
        CHECK_THAT(plus.final_value.real(), WithinAbs(frozen::x_fix_05, 1e-8));
        const OrbitOutcome minus = classify_real_orbit(-1.0, p, inv, opts);
        CHECK(minus.status == OrbitStatus::Converged);
        CHECK(minus.attractor == AttractorId::RealFixedMinus);
        CHECK_THAT(minus.final_value.real(), WithinAbs(-frozen::x_fix_05, 1e-8));
    }
    SECTION("everything real decays to the origin for lambda > 1") {
        const ParamPoint p(1.5);
        const AttractorInventory inv = attractor_inventory(p, c);
        const OrbitOutcome o = classify_real_orbit(7.0, p, inv, default_orbit_options(p));
        CHECK(o.status == OrbitStatus::Converged);
        CHECK(o.attractor == AttractorId::Origin);
    }
}

TEST_CASE("imaginary axis orbit classification") {
    const BifurcationConstants& c = constants();
    SECTION("inside the 2-cycle trapping interval at lambda = 9.5") {
        const ParamPoint p(9.5);
        const AttractorInventory inv = attractor_inventory(p, c);
        const OrbitOptions opts = default_orbit_options(p);
        for (double y0 : {4.0, 4.5, 5.0}) {
            const OrbitOutcome o = classify_imag_orbit(y0, p, inv, opts);
            CHECK(o.status == OrbitStatus::Converged);
            CHECK(o.attractor == AttractorId::ImagTwoCycle);
            const double dist = std::min(std::abs(std::abs(o.final_value.imag()) - frozen::a2_95),
                                         std::abs(std::abs(o.final_value.imag()) + frozen::a2_95));
            CHECK(dist < 1e-8);
        }
        CHECK(classify_imag_orbit(5.5, p, inv, opts).status == OrbitStatus::Escaped);
        // seeds in (r', r2) sit strictly inside the unimodal interval
        CHECK(4.0 > frozen::r2_preimage_95);
        CHECK(5.0 < frozen::r2_95);
    }
    SECTION("inside the invariant disk at lambda = 2") {
        const ParamPoint p(2.0);
        const AttractorInventory inv = attractor_inventory(p, c);
        const OrbitOutcome o = classify_imag_orbit(0.5, p, inv, default_orbit_options(p));
        CHECK(o.status == OrbitStatus::Converged);
        CHECK(o.attractor == AttractorId::Origin);
    }
}

TEST_CASE("chaos certificate") {
    SECTION("covered below the threshold") {
        const ChaosCertificate cert = chaos_certificate(ParamPoint(0.02));
        CHECK(cert.covered);
        CHECK(cert.f_at_p >= pi);
        CHECK(cert.interval_j[0] == 0.0);
        CHECK(cert.interval_j[1] == cert.p_lambda);
        CHECK(cert.interval_k[1] == pi);
    }
    SECTION("exactly pi at the threshold") {
        const ChaosCertificate cert = chaos_certificate(ParamPoint(constants().lambda_2star));
        CHECK_THAT(cert.f_at_p, WithinAbs(pi, 1e-6));
    }
    SECTION("not covered at lambda = 1") {
        const ChaosCertificate cert = chaos_certificate(ParamPoint(1.0));
        CHECK(!cert.covered);
        CHECK(cert.f_at_p < 1.0);
    }
}

TEST_CASE("bifurcation scans") {
    const BifurcationConstants& c = constants();
    auto clusters = [](const std::vector<double>& v, double tol) {
        std::vector<double> s = v;
        std::sort(s.begin(), s.end());
        int n = s.empty() ? 0 : 1;
        for (size_t i = 1; i < s.size(); ++i)
            if (s[i] - s[i - 1] > tol) ++n;
        return n;
    };

    SECTION("real scan collapses from 2 clusters to 1 across lambda_star") {
        const BifurcationTable t = bifurcation_scan(ScanAxis::Real, 0.10, 0.13, 7, 6000, 64);
        REQUIRE(t.rows.size() == 7);
        for (const auto& row : t.rows) {
            if (std::abs(row.lambda - c.lambda_star) < 2.5e-3) continue;
            if (row.lambda < c.lambda_star)
                CHECK(clusters(row.ordinates, 1e-3) >= 2);
            else
                CHECK(clusters(row.ordinates, 1e-3) == 1);
        }
    }
    SECTION("imag scan loses the 2-cycle across lambda_2") {
        const BifurcationTable t = bifurcation_scan(ScanAxis::Imag, 10.2, 10.6, 9, 6000, 64);
        for (const auto& row : t.rows) {
            if (std::abs(row.lambda - c.lambda_2) < 2e-2) continue;
            if (row.lambda < c.lambda_2) {
                CHECK(row.status == OrbitStatus::Converged);
                CHECK(clusters(row.ordinates, 1e-3) == 2);
            } else {
                CHECK(row.status == OrbitStatus::Escaped);
                CHECK(row.ordinates.empty());
            }
        }
    }
    SECTION("real scan decays to the origin for lambda in (1.5, 2)") {
        const BifurcationTable t = bifurcation_scan(ScanAxis::Real, 1.5, 2.0, 6, 2000, 16);
        for (const auto& row : t.rows)
            for (double v : row.ordinates) CHECK(std::abs(v) < 1e-6);
    }
    SECTION("range validation") {
        CHECK_THROWS_AS(bifurcation_scan(ScanAxis::Real, 2.0, 1.0, 5, 10, 10),
                        std::invalid_argument);
        CHECK_THROWS_AS(bifurcation_scan(ScanAxis::Real, -1.0, 1.0, 5, 10, 10),
                        std::invalid_argument);
        CHECK_THROWS_AS(bifurcation_scan(ScanAxis::Real, 1.0, 2.0, 1, 10, 10),
                        std::invalid_argument);
    }
}

TEST_CASE("period-doubling probe") {
    const BifurcationConstants& c = constants();
    SECTION("2-cycle exists below lambda_star and straddles the fixed point") {
        const PeriodDoublingReport rep = period_doubling_probe(0.005, c);
        CHECK(rep.below.cycle_found);
        CHECK(rep.below.cycle_points[0] < rep.below.fixed_point);
        CHECK(rep.below.cycle_points[1] > rep.below.fixed_point);
        CHECK(!rep.above.cycle_found);
        // the newborn cycle is attracting, the fixed point repelling
        CHECK(std::abs(rep.below.cycle_multiplier) < 1.0);
        CHECK(rep.below.fixed_point_multiplier < -1.0);
        CHECK(rep.above.fixed_point_multiplier > -1.0);
    }
    SECTION("fixed point is repelling at lambda_star - 0.02") {
        const PeriodDoublingReport rep = period_doubling_probe(0.02, c);
        CHECK(rep.below.fixed_point_multiplier < -1.0);
    }
    SECTION("eps validation") {
        CHECK_THROWS_AS(period_doubling_probe(0.0, c), std::invalid_argument);
        CHECK_THROWS_AS(period_doubling_probe(c.lambda_star, c), std::invalid_argument);
    }
}

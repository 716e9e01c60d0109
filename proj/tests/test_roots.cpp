#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include "merosin/roots.hpp"
#include "support/frozen.hpp"

using namespace merosin;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("bisect on the worked examples") {
    SECTION("linear") {
        auto f = [](double x) { return x - 1.0; };
        const RootResult r = bisect(f, make_bracket(f, 0.0, 2.0), 1e-12);
        CHECK_THAT(r.root, WithinAbs(1.0, 1e-12));
    }
    SECTION("sin x = x^3") {
        auto f = [](double x) { return std::sin(x) - x * x * x; };
        const RootResult r = bisect(f, make_bracket(f, 0.5, 1.0), 1e-12);
        CHECK_THAT(r.root, WithinAbs(frozen::x0, 1e-6));
    }
    SECTION("cos p = 2 pi p") {
        auto f = [](double p) { return std::cos(p) - 2.0 * pi * p; };
        const RootResult r = bisect(f, make_bracket(f, 0.1, 0.2), 1e-12);
        CHECK_THAT(r.root, WithinAbs(frozen::p_2star, 1e-6));
    }
}

TEST_CASE("newton_hybrid on the worked examples") {
    SECTION("sqrt 2") {
        auto f = [](double x) { return x * x - 2.0; };
        auto df = [](double x) { return 2.0 * x; };
        const RootResult r = newton_hybrid(f, df, make_bracket(f, 1.0, 2.0));
        CHECK_THAT(r.root, WithinAbs(std::sqrt(2.0), 1e-12));
        CHECK(r.method == SolveMethod::NewtonBisectionHybrid);
    }
    SECTION("x cos x + sin x = 2 x^3") {
        auto f = [](double x) { return x * std::cos(x) + std::sin(x) - 2.0 * x * x * x; };
        auto df = [](double x) { return 2.0 * std::cos(x) - x * std::sin(x) - 6.0 * x * x; };
        const RootResult r = newton_hybrid(f, df, make_bracket(f, 0.8, 0.9));
        CHECK_THAT(r.root, WithinAbs(frozen::x_star, 1e-4));
    }
    SECTION("y cosh y + sinh y = 2 y^3") {
        auto f = [](double y) { return y * std::cosh(y) + std::sinh(y) - 2.0 * y * y * y; };
        auto df = [](double y) { return 2.0 * std::cosh(y) + y * std::sinh(y) - 6.0 * y * y; };
        const RootResult r = newton_hybrid(f, df, make_bracket(f, 3.5, 4.0), 1e-12, 1e-9);
        CHECK_THAT(r.root, WithinAbs(frozen::y1, 1e-3));
    }
}

TEST_CASE("solve2d on the worked examples") {
    SECTION("decoupled linear system") {
        const auto s = solve2d(
            [](double u, double v) -> std::array<double, 2> { return {u - 1.0, v - 2.0}; },
            {0.0, 0.0});
        CHECK_THAT(s[0], WithinAbs(1.0, 1e-9));
        CHECK_THAT(s[1], WithinAbs(2.0, 1e-9));
    }
    SECTION("fold point of the 2-cycle curve") {
        const auto s = solve2d(
            [](double y, double lam) -> std::array<double, 2> {
                return {std::sinh(y) - y * (y * y - lam),
                        y * std::cosh(y) - std::sinh(y) - 2.0 * y * y * y};
            },
            {4.7, 10.0});
        CHECK_THAT(s[0], WithinAbs(frozen::y2, 1e-2));
        CHECK_THAT(s[1], WithinAbs(frozen::lambda_2, 1e-2));
    }
    SECTION("tangency point of the 2-cycle curve") {
        const auto s = solve2d(
            [](double y, double lam) -> std::array<double, 2> {
                return {std::sinh(y) - y * (y * y - lam),
                        y * std::cosh(y) + std::sinh(y) - 2.0 * y * y * y};
            },
            {3.9, 9.0});
        CHECK_THAT(s[0], WithinAbs(frozen::y1, 1e-2));
        CHECK_THAT(s[1], WithinAbs(frozen::lambda_1, 1e-2));
    }
}

TEST_CASE("solver error paths") {
    auto same_sign = [](double x) { return x * x + 1.0; };
    CHECK_THROWS_AS(make_bracket(same_sign, -1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(make_bracket(same_sign, 1.0, -1.0), std::invalid_argument);

    auto poison = [](double x) { return x < 0.25 ? -1.0 : std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_AS(make_bracket(poison, 0.3, 1.0), std::runtime_error);
    {
        Bracket b{0.0, 1.0, -1.0, 1.0};  // hand-built so endpoints dodge the NaN region
        CHECK_THROWS_AS(bisect(poison, b, 1e-12), std::runtime_error);
    }
    {
        // Newton cannot reach |f| <= 1e-30 before the iteration cap on a
        // function whose floor is machine epsilon.
        auto f = [](double x) { return std::sin(x) - x * x * x; };
        auto df = [](double x) { return std::cos(x) - 3.0 * x * x; };
        CHECK_THROWS_AS(newton_hybrid(f, df, make_bracket(f, 0.5, 1.0), 0.0, 1e-300, 5),
                        NonConvergence);
    }
    CHECK_THROWS_AS(solve2d([](double, double) -> std::array<double, 2> { return {1.0, 1.0}; },
                            {0.0, 0.0}),
                    NonConvergence);  // constant residual: singular Jacobian
}

TEST_CASE("newton_hybrid keeps every iterate inside the initial bracket") {
    std::vector<double> visited;
    auto f = [&](double x) {
        visited.push_back(x);
        return x * std::cos(x) + std::sin(x) - 2.0 * x * x * x;
    };
    auto df = [](double x) { return 2.0 * std::cos(x) - x * std::sin(x) - 6.0 * x * x; };
    const Bracket b = make_bracket(f, 0.5, 0.9);
    newton_hybrid(f, df, b, 1e-15, 1e-14);
    for (double x : visited) {
        CHECK(x >= 0.5);
        CHECK(x <= 0.9);
    }
}

TEST_CASE("identical inputs give bit-identical results") {
    auto f = [](double x) { return std::sin(x) - x * x * x; };
    auto df = [](double x) { return std::cos(x) - 3.0 * x * x; };
    const RootResult a = newton_hybrid(f, df, make_bracket(f, 0.5, 1.0));
    const RootResult b = newton_hybrid(f, df, make_bracket(f, 0.5, 1.0));
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
}

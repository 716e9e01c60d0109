#pragma once

// Independent brute-force oracles for every derived quantity the suites
// assert. Deliberately minimal: a hand-rolled interval-halving loop on the
// cleared equation for each quantity, with no dependency on the library's
// own solvers. Used both to freeze the expected constants below and to
// re-derive them at test time.

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

template <class F>
double bisect(F f, double lo, double hi) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (!(flo * fhi < 0.0)) throw std::runtime_error("oracle::bisect: no sign change");
    for (int i = 0; i < 400; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// --- scalar balance functions, written out locally ---

inline double psi_cap(double x) { return std::sin(x) / x - x * x; }
inline double psi_low(double x) { return 2.0 * x * std::tan(x) - x * x; }
inline double phi_big(double y) { return std::sinh(y) / y + y * y; }
inline double two_cycle_lambda(double y) { return y * y - std::sinh(y) / y; }
inline double neg_h_multiplier(double y) {
    return (y * std::cosh(y) - 2.0 * y * y * y) / std::sinh(y);
}

// --- the named constants of the bifurcation ladder ---

/// sin x = x^3 on (0.5, 1).
inline double x0() {
    return bisect([](double x) { return std::sin(x) - x * x * x; }, 0.5, 1.0);
}

/// x cos x + sin x = 2 x^3 on (0.5, 0.9): multiplier -1 for the real pair.
inline double x_star() {
    return bisect([](double x) { return x * std::cos(x) + std::sin(x) - 2.0 * x * x * x; }, 0.5,
                  0.9);
}

inline double lambda_star() { return psi_cap(x_star()); }

/// cos p = 2 pi p on (0.1, 0.2): critical value equals pi.
inline double p_2star() {
    return bisect([](double p) { return std::cos(p) - 2.0 * pi * p; }, 0.1, 0.2);
}

inline double lambda_2star() { return psi_low(p_2star()); }

/// cos t = 2 t^2 on (0.5, 0.8): fixed point collides with the critical point.
inline double t_hat() {
    return bisect([](double t) { return std::cos(t) - 2.0 * t * t; }, 0.5, 0.8);
}

inline double lambda_hat() { return psi_cap(t_hat()); }

/// y cosh y + sinh y = 2 y^3 on (3.5, 4): -h multiplier equals -1.
inline double y1() {
    return bisect(
        [](double y) { return y * std::cosh(y) + std::sinh(y) - 2.0 * y * y * y; }, 3.5, 4.0);
}

inline double lambda_1() { return two_cycle_lambda(y1()); }

/// y cosh y - sinh y = 2 y^3 on (4, 5.5): the fold of the 2-cycle curve.
inline double y2() {
    return bisect(
        [](double y) { return y * std::cosh(y) - std::sinh(y) - 2.0 * y * y * y; }, 4.0, 5.5);
}

inline double lambda_2() { return two_cycle_lambda(y2()); }

// --- lambda-dependent catalog entries ---

/// Non-zero real fixed point: sin x = x (x^2 + lambda) on (0, 1), lambda < 1.
inline double x_fix(double lam) {
    return bisect([lam](double x) { return std::sin(x) - x * (x * x + lam); }, 1e-9, 1.0);
}

/// Non-zero imaginary fixed point: sinh y = y (lambda - y^2) on (0, sqrt(lambda)).
inline double r_fix(double lam) {
    return bisect([lam](double y) { return std::sinh(y) - y * (lam - y * y); }, 1e-9,
                  std::sqrt(lam));
}

/// Attracting-branch 2-cycle ordinate: y^2 - sinh(y)/y = lambda left of the fold.
inline double a2(double lam) {
    return bisect([lam](double y) { return two_cycle_lambda(y) - lam; }, 0.5, y2());
}

/// Repelling-branch 2-cycle ordinate: same curve right of the fold.
inline double r2(double lam) {
    return bisect([lam](double y) { return two_cycle_lambda(y) - lam; }, y2(), 30.0);
}

/// Imaginary critical point: (lambda - y^2) cosh y + 2 y sinh y = 0, y > sqrt(lambda).
inline double c_crit(double lam) {
    auto f = [lam](double y) { return (lam - y * y) * std::cosh(y) + 2.0 * y * std::sinh(y); };
    double hi = std::sqrt(lam + 2.0) + 1.0;
    while (f(hi) > 0.0) hi *= 1.5;
    return bisect(f, std::sqrt(lam) + 1e-12, hi);
}

/// Real critical point p_{lambda,n} in (n pi, (n+1) pi);
/// (x^2 + lambda) cos x = 2 x sin x. For n = 0 the root lies in (0, pi/2).
inline double p_crit(double lam, int n = 0) {
    auto f = [lam](double x) {
        return (x * x + lam) * std::cos(x) - 2.0 * x * std::sin(x);
    };
    if (n == 0) return bisect(f, 1e-9, pi / 2.0);
    return bisect(f, n * pi, (n + 1) * pi);
}

}  // namespace oracle

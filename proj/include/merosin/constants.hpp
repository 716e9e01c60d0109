#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "merosin/family.hpp"
#include "merosin/roots.hpp"

namespace merosin {

/// The parameter ladder of the family, lambda_2star <= lambda_star <
/// lambda_hat < 1 < lambda_1 < lambda_2, together with the scalar witnesses
/// each constant is solved from.
///
///   lambda_2star : largest lambda whose first critical value reaches pi
///                  (chaos on the real interval below it)
///   lambda_star  : real pair's multiplier crosses -1 (period doubling)
///   lambda_hat   : real fixed point collides with the critical point
///                  (superattracting parameter)
///   lambda_1     : imaginary 2-cycle's multiplier crosses -1
///   lambda_2     : fold of the imaginary 2-cycle curve (tangent bifurcation)
struct BifurcationConstants {
    double lambda_2star = 0.0;
    double lambda_star = 0.0;
    double lambda_hat = 0.0;
    double lambda_1 = 0.0;
    double lambda_2 = 0.0;

    double witness_x_star = 0.0;   // multiplier -1 ordinate, lambda_star = psi_cap(x_star)
    double witness_p_2star = 0.0;  // cos p = 2 pi p ordinate, lambda_2star = psi_low(p)
    double witness_y1 = 0.0;       // tangency ordinate at lambda_1
    double witness_y2 = 0.0;       // fold ordinate at lambda_2
};

namespace detail {

// Derivatives used by the hybrid solves.
inline double psi_cap_prime(double x) {
    return (x * std::cos(x) - std::sin(x)) / (x * x) - 2.0 * x;
}
inline double psi_low_prime(double x) {
    const double t = std::tan(x);
    return 2.0 * t + 2.0 * x * (1.0 + t * t) - 2.0 * x;
}
inline double phi_big_prime(double y) {
    return (y * std::cosh(y) - std::sinh(y)) / (y * y) + 2.0 * y;
}
/// lambda(y) = y^2 - sinh(y)/y, the parameter at which y is a 2-cycle ordinate.
inline double two_cycle_lambda(double y) { return y * y - std::sinh(y) / y; }
inline double two_cycle_lambda_prime(double y) {
    return 2.0 * y - (y * std::cosh(y) - std::sinh(y)) / (y * y);
}

/// Multiplier of -h at one of its fixed points y (uses the fixed-point
/// relation to eliminate lambda).
inline double neg_h_multiplier(double y) {
    return (y * std::cosh(y) - 2.0 * y * y * y) / std::sinh(y);
}

inline double solve_named(const char* name, double (*f)(double), double (*df)(double), double lo,
                          double hi, double tol_f) {
    try {
        return newton_hybrid(f, df, make_bracket(f, lo, hi), 1e-15, tol_f, 200).root;
    } catch (const std::exception& e) {
        throw NonConvergence(std::string("compute_constants: ") + name + ": " + e.what());
    }
}

}  // namespace detail

/// Solves every ladder constant to machine precision and validates the
/// ordering. Throws NonConvergence naming the offending constant if a
/// bracket or solve fails.
inline BifurcationConstants compute_constants() {
    using namespace detail;
    BifurcationConstants c;

    // x cos x + sin x = 2 x^3: clears phi_small(x) = -1.
    c.witness_x_star = solve_named(
        "x_star", [](double x) { return x * std::cos(x) + std::sin(x) - 2.0 * x * x * x; },
        [](double x) {
            return std::cos(x) - x * std::sin(x) + std::cos(x) - 6.0 * x * x;
        },
        0.5, 0.9, 1e-14);
    c.lambda_star = psi_cap(c.witness_x_star);

    // cos p = 2 pi p: the first critical value equals pi.
    c.witness_p_2star = solve_named(
        "p_2star", [](double p) { return std::cos(p) - 2.0 * std::numbers::pi * p; },
        [](double p) { return -std::sin(p) - 2.0 * std::numbers::pi; }, 0.1, 0.2, 1e-14);
    c.lambda_2star = psi_low(c.witness_p_2star);

    // cos t = 2 t^2: fixed point meets critical point.
    const double t_hat = solve_named(
        "lambda_hat", [](double t) { return std::cos(t) - 2.0 * t * t; },
        [](double t) { return -std::sin(t) - 4.0 * t; }, 0.5, 0.8, 1e-14);
    c.lambda_hat = psi_cap(t_hat);

    // y cosh y + sinh y = 2 y^3: -h multiplier -1. The equation has a second
    // root near y ~ 1.265 whose lambda ~ 0.31 < 1; the bracket pins the
    // branch with lambda > 1.
    c.witness_y1 = solve_named(
        "y1", [](double y) { return y * std::cosh(y) + std::sinh(y) - 2.0 * y * y * y; },
        [](double y) { return 2.0 * std::cosh(y) + y * std::sinh(y) - 6.0 * y * y; }, 3.5, 4.0,
        1e-12);
    c.lambda_1 = two_cycle_lambda(c.witness_y1);

    // y cosh y - sinh y = 2 y^3: the fold of lambda(y).
    c.witness_y2 = solve_named(
        "y2", [](double y) { return y * std::cosh(y) - std::sinh(y) - 2.0 * y * y * y; },
        [](double y) { return y * std::sinh(y) - 6.0 * y * y; }, 4.0, 5.5, 1e-12);
    c.lambda_2 = two_cycle_lambda(c.witness_y2);

    if (!(0.0 < c.lambda_2star && c.lambda_2star <= c.lambda_star && c.lambda_star < c.lambda_hat &&
          c.lambda_hat < 1.0 && 1.0 < c.lambda_1 && c.lambda_1 < c.lambda_2))
        throw NonConvergence("compute_constants: ladder ordering violated");
    return c;
}

}  // namespace merosin

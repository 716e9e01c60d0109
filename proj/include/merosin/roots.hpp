#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace merosin {

/// Thrown when a solver runs out of iterations or meets degenerate data
/// (singular Jacobian, non-finite residuals).
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sign-changing interval: lo < hi and f(lo) * f(hi) < 0.
struct Bracket {
    double lo = 0.0, hi = 0.0;
    double f_lo = 0.0, f_hi = 0.0;
};

template <class F>
Bracket make_bracket(F&& fn, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("make_bracket: requires lo < hi");
    const double flo = fn(lo);
    const double fhi = fn(hi);
    if (std::isnan(flo) || std::isnan(fhi))
        throw std::runtime_error("make_bracket: endpoint evaluation produced NaN");
    if (!(flo * fhi < 0.0))
        throw std::invalid_argument("make_bracket: no sign change on [" + std::to_string(lo) +
                                    ", " + std::to_string(hi) + "]");
    return {lo, hi, flo, fhi};
}

enum class SolveMethod { Bisection, NewtonBisectionHybrid };

struct RootResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
    SolveMethod method = SolveMethod::Bisection;
};

namespace detail {

inline void check_bracket(const Bracket& b) {
    if (!(b.lo < b.hi) || !(b.f_lo * b.f_hi < 0.0))
        throw std::invalid_argument("root solver: invalid bracket");
}

}  // namespace detail

/// Plain bisection. Runs until the bracket is narrower than tol_x or cannot
/// be split further; a midpoint that evaluates to exactly zero returns
/// immediately.
template <class F>
RootResult bisect(F&& fn, Bracket b, double tol_x = 1e-12) {
    detail::check_bracket(b);
    int iters = 0;
    while (b.hi - b.lo > tol_x) {
        const double mid = b.lo + 0.5 * (b.hi - b.lo);
        if (mid <= b.lo || mid >= b.hi) break;  // spacing floor reached
        const double fm = fn(mid);
        ++iters;
        if (std::isnan(fm)) throw std::runtime_error("bisect: function returned NaN");
        if (fm == 0.0) return {mid, 0.0, iters, SolveMethod::Bisection};
        if ((fm < 0.0) == (b.f_lo < 0.0)) {
            b.lo = mid;
            b.f_lo = fm;
        } else {
            b.hi = mid;
            b.f_hi = fm;
        }
    }
    const double root = b.lo + 0.5 * (b.hi - b.lo);
    return {root, fn(root), iters, SolveMethod::Bisection};
}

/// Safeguarded Newton: steps are accepted only while they stay strictly
/// inside the current bracket, otherwise the iteration falls back to the
/// midpoint. Every iterate therefore stays inside the initial bracket.
template <class F, class DF>
RootResult newton_hybrid(F&& fn, DF&& dfn, Bracket b, double tol_x = 1e-12, double tol_f = 1e-11,
                         int max_iter = 200) {
    detail::check_bracket(b);
    double x = b.lo + 0.5 * (b.hi - b.lo);
    double fx = fn(x);
    int iters = 1;
    while (iters <= max_iter) {
        if (std::isnan(fx)) throw std::runtime_error("newton_hybrid: function returned NaN");
        if (std::abs(fx) <= tol_f) {
            // One polishing step: quadratic convergence takes the iterate from
            // the residual tolerance to the rounding floor.
            const double d = dfn(x);
            const double polished = x - fx / d;
            if (std::isfinite(polished) && polished > b.lo && polished < b.hi) {
                const double fp = fn(polished);
                ++iters;
                if (std::abs(fp) <= std::abs(fx)) {
                    x = polished;
                    fx = fp;
                }
            }
            return {x, fx, iters, SolveMethod::NewtonBisectionHybrid};
        }
        if ((fx < 0.0) == (b.f_lo < 0.0)) {
            b.lo = x;
            b.f_lo = fx;
        } else {
            b.hi = x;
            b.f_hi = fx;
        }
        if (b.hi - b.lo <= tol_x) {
            const double root = b.lo + 0.5 * (b.hi - b.lo);
            return {root, fn(root), iters, SolveMethod::NewtonBisectionHybrid};
        }
        const double dfx = dfn(x);
        double next = x - fx / dfx;
        if (!std::isfinite(next) || !(next > b.lo && next < b.hi))
            next = b.lo + 0.5 * (b.hi - b.lo);
        if (next == x) {
            // Stuck at the resolution limit.
            return {x, fx, iters, SolveMethod::NewtonBisectionHybrid};
        }
        x = next;
        fx = fn(x);
        ++iters;
    }
    throw NonConvergence("newton_hybrid: no convergence within " + std::to_string(max_iter) +
                         " iterations (|f| = " + std::to_string(std::abs(fx)) + ")");
}

/// Two-dimensional Newton with a forward-difference Jacobian
/// (step 1e-7 * max(1, |coordinate|)) and Cramer solve.
template <class F2>
std::array<double, 2> solve2d(F2&& F, std::array<double, 2> seed, double tol = 1e-11,
                              int max_iter = 200) {
    double u = seed[0], v = seed[1];
    for (int it = 0; it < max_iter; ++it) {
        const std::array<double, 2> f = F(u, v);
        if (!std::isfinite(f[0]) || !std::isfinite(f[1]))
            throw NonConvergence("solve2d: non-finite residual");
        if (std::max(std::abs(f[0]), std::abs(f[1])) <= tol) return {u, v};
        const double hu = 1e-7 * std::max(1.0, std::abs(u));
        const double hv = 1e-7 * std::max(1.0, std::abs(v));
        const std::array<double, 2> fu = F(u + hu, v);
        const std::array<double, 2> fv = F(u, v + hv);
        const double j11 = (fu[0] - f[0]) / hu, j12 = (fv[0] - f[0]) / hv;
        const double j21 = (fu[1] - f[1]) / hu, j22 = (fv[1] - f[1]) / hv;
        const double det = j11 * j22 - j12 * j21;
        const double scale = std::max(std::abs(j11), std::abs(j21)) *
                                 std::max(std::abs(j12), std::abs(j22));
        if (!std::isfinite(det) || std::abs(det) <= 1e-14 * scale + 1e-300)
            throw NonConvergence("solve2d: singular Jacobian");
        u -= (f[0] * j22 - f[1] * j12) / det;
        v -= (j11 * f[1] - j21 * f[0]) / det;
        if (!std::isfinite(u) || !std::isfinite(v)) throw NonConvergence("solve2d: diverged");
    }
    throw NonConvergence("solve2d: no convergence within " + std::to_string(max_iter) +
                         " iterations");
}

}  // namespace merosin

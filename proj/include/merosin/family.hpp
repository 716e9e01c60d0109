#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "merosin/param.hpp"

namespace merosin {

using cplx = std::complex<double>;

/// Tagged evaluation result. PoleProximity and Overflow stand in for the
/// non-finite arithmetic that would otherwise leak out of the two poles and
/// the sinh-dominated range.
enum class EvalKind { Value, PoleProximity, Overflow };

struct EvalResult {
    EvalKind kind = EvalKind::Value;
    cplx value{0.0, 0.0};
    bool ok() const noexcept { return kind == EvalKind::Value; }
};

struct RealEvalResult {
    EvalKind kind = EvalKind::Value;
    double value = 0.0;
    bool ok() const noexcept { return kind == EvalKind::Value; }
};

/// Scale-free pole guard: an input z counts as pole-proximate when
/// |z^2 + lambda| < kPoleGuard * (1 + |z|^2).
inline constexpr double kPoleGuard = 1e-12;

/// |Im z| beyond this puts sinh/cosh past the double range; orbit logic
/// treats the resulting Overflow as escape evidence.
inline double overflow_ordinate() {
    static const double v = std::asinh(std::numeric_limits<double>::max()) / 2.0;
    return v;
}

namespace detail {

/// Complex division via Smith's algorithm. Works for denominators up to the
/// full double range and is exactly sign-symmetric in the numerator, which
/// keeps eval_f(-z) == -eval_f(z) bit-for-bit.
inline cplx div_smith(double nr, double ni, double dr, double di) {
    if (std::abs(dr) >= std::abs(di)) {
        const double t = di / dr;
        const double s = dr + di * t;
        return {(nr + ni * t) / s, (ni - nr * t) / s};
    }
    const double t = dr / di;
    const double s = dr * t + di;
    return {(nr * t + ni) / s, (ni * t - nr) / s};
}

/// z^2 + lambda with the true value carried as (re, im) * 2^log2_scale.
/// Three regimes:
///  - plain x^2 - y^2 + lambda when it is comfortably away from zero,
///  - factored (z - i s)(z + i s) near the poles, where the plain form loses
///    all accuracy to cancellation,
///  - exact power-of-two rescaling for astronomically large |x| whose square
///    would overflow (poles are nowhere near that regime).
struct Denom {
    double re = 0.0, im = 0.0;
    int log2_scale = 0;
    bool pole = false;
};

inline Denom denom(double x, double y, const ParamPoint& p) {
    Denom d;
    if (std::abs(x) > 1e150) {
        const int k = std::ilogb(x);
        const double sc = std::ldexp(1.0, -k);  // exact
        const double xs = x * sc, ys = y * sc;
        const double lam_scaled = p.lambda() * sc * sc;  // negligible vs xs^2 ~ 1
        d.re = xs * xs - ys * ys + lam_scaled;
        d.im = 2.0 * xs * ys;
        d.log2_scale = 2 * k;
        return d;
    }
    const double zz = x * x + y * y;
    double dr = x * x - y * y + p.lambda();
    double di = 2.0 * x * y;
    if (std::hypot(dr, di) < 1e-3 * (1.0 + zz)) {
        // Near a pole; factor through +/- i*sqrt(lambda) instead.
        const double s = p.pole_ordinate();
        const double um = y - s, up = y + s;
        dr = x * x - um * up;
        di = x * um + x * up;
    }
    if (std::hypot(dr, di) < kPoleGuard * (1.0 + zz)) d.pole = true;
    d.re = dr;
    d.im = di;
    return d;
}

/// num / denom with the scale folded back in (exact ldexp steps).
inline cplx div_by_denom(double nr, double ni, const Denom& d) {
    if (d.log2_scale != 0) {
        nr = std::ldexp(nr, -d.log2_scale);
        ni = std::ldexp(ni, -d.log2_scale);
    }
    return div_smith(nr, ni, d.re, d.im);
}

}  // namespace detail

/// f_lambda(z) = sin(z) / (z^2 + lambda).
///
/// Evaluated from real sin/cos/sinh/cosh so that the odd and conjugation
/// symmetries of the map hold exactly in floating point; orbit classification
/// relies on that.
inline EvalResult eval_f(cplx z, const ParamPoint& p) {
    const double x = z.real(), y = z.imag();
    if (!std::isfinite(x) || !std::isfinite(y) || std::abs(y) > overflow_ordinate())
        return {EvalKind::Overflow, {}};
    const detail::Denom d = detail::denom(x, y, p);
    if (d.pole) return {EvalKind::PoleProximity, {}};
    const double nr = std::sin(x) * std::cosh(y);
    const double ni = std::cos(x) * std::sinh(y);
    return {EvalKind::Value, detail::div_by_denom(nr, ni, d)};
}

/// f'_lambda(z) = [ (z^2 + lambda) cos(z) - 2 z sin(z) ] / (z^2 + lambda)^2,
/// computed in two staged divisions so no intermediate squares the
/// denominator.
inline EvalResult eval_f_prime(cplx z, const ParamPoint& p) {
    const double x = z.real(), y = z.imag();
    if (!std::isfinite(x) || !std::isfinite(y) || std::abs(y) > overflow_ordinate())
        return {EvalKind::Overflow, {}};
    const detail::Denom d = detail::denom(x, y, p);
    if (d.pole) return {EvalKind::PoleProximity, {}};
    const double snr = std::sin(x) * std::cosh(y);
    const double sni = std::cos(x) * std::sinh(y);
    const double cnr = std::cos(x) * std::cosh(y);
    const double cni = -std::sin(x) * std::sinh(y);
    const cplx q = detail::div_by_denom(snr, sni, d);  // sin z / (z^2 + lambda)
    const cplx w = cplx{cnr, cni} - 2.0 * z * q;
    return {EvalKind::Value, detail::div_by_denom(w.real(), w.imag(), d)};
}

/// h_lambda(y) = sinh(y) / (lambda - y^2): the restriction of the family to
/// the imaginary axis, f(iy) = i h(y).
inline RealEvalResult eval_h(double y, const ParamPoint& p) {
    if (!std::isfinite(y) || std::abs(y) > overflow_ordinate()) return {EvalKind::Overflow, 0.0};
    double den = p.lambda() - y * y;
    if (std::abs(den) < 1e-3 * (1.0 + y * y)) {
        const double s = p.pole_ordinate();
        den = (s - y) * (s + y);
    }
    if (std::abs(den) < kPoleGuard * (1.0 + y * y)) return {EvalKind::PoleProximity, 0.0};
    return {EvalKind::Value, std::sinh(y) / den};
}

/// h'_lambda(y) = [ (lambda - y^2) cosh(y) + 2 y sinh(y) ] / (lambda - y^2)^2.
inline RealEvalResult eval_h_prime(double y, const ParamPoint& p) {
    if (!std::isfinite(y) || std::abs(y) > overflow_ordinate()) return {EvalKind::Overflow, 0.0};
    double den = p.lambda() - y * y;
    if (std::abs(den) < 1e-3 * (1.0 + y * y)) {
        const double s = p.pole_ordinate();
        den = (s - y) * (s + y);
    }
    if (std::abs(den) < kPoleGuard * (1.0 + y * y)) return {EvalKind::PoleProximity, 0.0};
    const double num = den * std::cosh(y) + 2.0 * y * std::sinh(y);
    return {EvalKind::Value, (num / den) / den};
}

// ---------------------------------------------------------------------------
// The four scalar balance functions behind the bifurcation analysis.
// ---------------------------------------------------------------------------

/// sin(x)/x - x^2. Strictly decreasing on (0, inf); the non-zero real fixed
/// points of the family solve psi_cap(x) = lambda.
inline double psi_cap(double x) { return std::sin(x) / x - x * x; }

/// (x cos x - 2 x^3) / sin x: the multiplier of the real fixed point at x
/// when lambda = psi_cap(x). The textbook composite form divides by
/// sin(x)/x, which cancels catastrophically near its zero; this form does not.
inline double phi_small(double x) { return (x * std::cos(x) - 2.0 * x * x * x) / std::sin(x); }

/// 2 x tan x - x^2. Strictly increasing on (0, pi/2); the first positive
/// critical point of the family solves psi_low(p) = lambda.
inline double psi_low(double x) { return 2.0 * x * std::tan(x) - x * x; }

/// sinh(y)/y + y^2. Strictly increasing with infimum 1; the non-zero
/// imaginary fixed points solve phi_big(y) = lambda (lambda > 1 only).
inline double phi_big(double y) { return std::sinh(y) / y + y * y; }

namespace detail {

/// Positive zero of x * psi_cap(x), i.e. the solution of sin x = x^3 in
/// (0, 1). Upper end of phi_small's natural domain.
inline double x0_crossing() {
    static const double v = [] {
        double lo = 0.5, hi = 1.0;
        double flo = std::sin(lo) - lo * lo * lo;
        for (int i = 0; i < 200; ++i) {
            const double mid = lo + 0.5 * (hi - lo);
            if (mid <= lo || mid >= hi) break;
            const double fm = std::sin(mid) - mid * mid * mid;
            if (fm == 0.0) return mid;
            if ((fm < 0.0) == (flo < 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return lo + 0.5 * (hi - lo);
    }();
    return v;
}

}  // namespace detail

enum class AuxFn { PsiCap, PhiSmall, PsiLow, PhiBig };

/// Dispatch wrapper over the four balance functions with their natural
/// domains enforced.
inline double aux(AuxFn fn, double t) {
    if (!std::isfinite(t)) throw std::domain_error("aux: non-finite argument");
    switch (fn) {
        case AuxFn::PsiCap:
            if (!(t > 0.0)) throw std::domain_error("aux(PsiCap): requires t > 0");
            return psi_cap(t);
        case AuxFn::PhiSmall:
            if (!(t > 0.0 && t < detail::x0_crossing()))
                throw std::domain_error("aux(PhiSmall): requires 0 < t < x0");
            return phi_small(t);
        case AuxFn::PsiLow:
            if (!(t > 0.0 && t < std::numbers::pi / 2.0))
                throw std::domain_error("aux(PsiLow): requires 0 < t < pi/2");
            return psi_low(t);
        case AuxFn::PhiBig:
            if (!(t > 0.0)) throw std::domain_error("aux(PhiBig): requires t > 0");
            return phi_big(t);
    }
    throw std::domain_error("aux: unknown function id");
}

}  // namespace merosin

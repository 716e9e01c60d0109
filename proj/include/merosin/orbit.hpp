#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "merosin/catalog.hpp"
#include "merosin/family.hpp"

namespace merosin {

enum class OrbitStatus { Converged, Escaped, PoleHit, Undecided };

inline const char* to_string(OrbitStatus s) {
    switch (s) {
        case OrbitStatus::Converged: return "converged";
        case OrbitStatus::Escaped: return "escaped";
        case OrbitStatus::PoleHit: return "pole_hit";
        case OrbitStatus::Undecided: return "undecided";
    }
    return "?";
}

struct OrbitOutcome {
    OrbitStatus status = OrbitStatus::Undecided;
    AttractorId attractor = AttractorId::Origin;  // valid only when Converged
    int iterations = 0;
    cplx final_value{0.0, 0.0};
};

/// Escape fires on |z| > escape_radius together with escape_growth_steps
/// consecutive strict modulus increases, or on evaluation Overflow. A bare
/// threshold misclassifies along the real direction, where large |z| maps
/// straight back to the asymptotic value 0; sustained growth only happens in
/// the sinh-dominated imaginary direction.
struct OrbitOptions {
    int max_iter = 10000;
    double eps_attr = 1e-9;
    double escape_radius = 0.0;  // <= 0: use max(1e3, 10 sqrt(lambda))
    int escape_growth_steps = 3;
};

/// Parabolic parameters converge polynomially, not geometrically; the ladder
/// boundaries get a far larger budget and a looser capture radius.
inline OrbitOptions default_orbit_options(const ParamPoint& p, bool parabolic = false) {
    OrbitOptions o;
    o.escape_radius = std::max(1e3, 10.0 * p.pole_ordinate());
    if (parabolic) {
        o.max_iter = 1000000;
        o.eps_attr = 1e-5;
    }
    return o;
}

namespace detail {

/// Rolling nearest-cycle-point history for the alternation test: a 2-cycle is
/// only accepted after the last four iterates all sat within eps of the cycle
/// and hopped sides every step, which a slow spiral does not do.
struct CycleHistory {
    std::array<int, 4> side{-1, -1, -1, -1};
    int filled = 0;

    void push(int s) {
        side = {side[1], side[2], side[3], s};
        if (filled < 4) ++filled;
    }
    void reset() {
        filled = 0;
        side = {-1, -1, -1, -1};
    }
    bool alternating() const {
        if (filled < 4) return false;
        return side[0] != side[1] && side[1] != side[2] && side[2] != side[3];
    }
};

}  // namespace detail

/// Iterate z0 under the family map and classify against the attractor
/// inventory. Pure: identical inputs give identical outcomes regardless of
/// the calling thread.
inline OrbitOutcome iterate_orbit(cplx z0, const ParamPoint& p, const AttractorInventory& inv,
                                  OrbitOptions opts) {
    if (opts.escape_radius <= 0.0) opts.escape_radius = std::max(1e3, 10.0 * p.pole_ordinate());
    cplx z = z0;
    int growth = 0;
    std::vector<detail::CycleHistory> hist(inv.items.size());

    for (int n = 0; n <= opts.max_iter; ++n) {
        for (size_t k = 0; k < inv.items.size(); ++k) {
            const Attractor& a = inv.items[k];
            if (a.points.size() == 1) {
                if (std::abs(z - a.points[0]) < opts.eps_attr)
                    return {OrbitStatus::Converged, a.id, n, z};
            } else {
                const double d0 = std::abs(z - a.points[0]);
                const double d1 = std::abs(z - a.points[1]);
                if (std::min(d0, d1) < opts.eps_attr) {
                    hist[k].push(d0 <= d1 ? 0 : 1);
                    if (hist[k].alternating()) return {OrbitStatus::Converged, a.id, n, z};
                } else {
                    hist[k].reset();
                }
            }
        }
        if (n == opts.max_iter) break;
        const EvalResult r = eval_f(z, p);
        if (r.kind == EvalKind::PoleProximity) return {OrbitStatus::PoleHit, {}, n, z};
        if (r.kind == EvalKind::Overflow) return {OrbitStatus::Escaped, {}, n, z};
        const cplx next = r.value;
        growth = std::abs(next) > std::abs(z) ? growth + 1 : 0;
        z = next;
        if (std::abs(z) > opts.escape_radius && growth >= opts.escape_growth_steps)
            return {OrbitStatus::Escaped, {}, n + 1, z};
    }
    return {OrbitStatus::Undecided, {}, opts.max_iter, z};
}

namespace detail {

/// Shared scalar orbit engine for the two invariant axes. Map is either
/// f restricted to the reals or h; attractor targets are scalar ordinates.
template <class Map>
OrbitOutcome iterate_axis_orbit(double v0, Map map, const std::vector<Attractor>& targets,
                                const OrbitOptions& opts, bool imag_axis) {
    double v = v0;
    int growth = 0;
    std::vector<CycleHistory> hist(targets.size());
    auto embed = [imag_axis](double t) { return imag_axis ? cplx{0.0, t} : cplx{t, 0.0}; };
    auto ordinate_of = [imag_axis](const cplx& pt) { return imag_axis ? pt.imag() : pt.real(); };

    for (int n = 0; n <= opts.max_iter; ++n) {
        for (size_t k = 0; k < targets.size(); ++k) {
            const Attractor& a = targets[k];
            if (a.points.size() == 1) {
                if (std::abs(v - ordinate_of(a.points[0])) < opts.eps_attr)
                    return {OrbitStatus::Converged, a.id, n, embed(v)};
            } else {
                const double d0 = std::abs(v - ordinate_of(a.points[0]));
                const double d1 = std::abs(v - ordinate_of(a.points[1]));
                if (std::min(d0, d1) < opts.eps_attr) {
                    hist[k].push(d0 <= d1 ? 0 : 1);
                    if (hist[k].alternating())
                        return {OrbitStatus::Converged, a.id, n, embed(v)};
                } else {
                    hist[k].reset();
                }
            }
        }
        if (n == opts.max_iter) break;
        const RealEvalResult r = map(v);
        if (r.kind == EvalKind::PoleProximity) return {OrbitStatus::PoleHit, {}, n, embed(v)};
        if (r.kind == EvalKind::Overflow) return {OrbitStatus::Escaped, {}, n, embed(v)};
        growth = std::abs(r.value) > std::abs(v) ? growth + 1 : 0;
        v = r.value;
        if (std::abs(v) > opts.escape_radius && growth >= opts.escape_growth_steps)
            return {OrbitStatus::Escaped, {}, n + 1, embed(v)};
    }
    return {OrbitStatus::Undecided, {}, opts.max_iter, embed(v)};
}

}  // namespace detail

/// Orbit of a real seed under f restricted to the real axis (which is
/// forward-invariant). Classified against the real members of the inventory.
inline OrbitOutcome classify_real_orbit(double x0, const ParamPoint& p,
                                        const AttractorInventory& inv, OrbitOptions opts) {
    if (opts.escape_radius <= 0.0) opts.escape_radius = std::max(1e3, 10.0 * p.pole_ordinate());
    std::vector<Attractor> targets;
    for (const auto& a : inv.items)
        if (a.id != AttractorId::ImagTwoCycle) targets.push_back(a);
    auto map = [&p](double x) -> RealEvalResult {
        if (!std::isfinite(x)) return {EvalKind::Overflow, 0.0};
        return {EvalKind::Value, std::sin(x) / (x * x + p.lambda())};
    };
    return detail::iterate_axis_orbit(x0, map, targets, opts, /*imag_axis=*/false);
}

/// Orbit of an imaginary-axis ordinate under h (equivalently of i*y0 under f).
inline OrbitOutcome classify_imag_orbit(double y0, const ParamPoint& p,
                                        const AttractorInventory& inv, OrbitOptions opts) {
    if (opts.escape_radius <= 0.0) opts.escape_radius = std::max(1e3, 10.0 * p.pole_ordinate());
    std::vector<Attractor> targets;
    for (const auto& a : inv.items)
        if (a.id == AttractorId::Origin || a.id == AttractorId::ImagTwoCycle) targets.push_back(a);
    auto map = [&p](double y) { return eval_h(y, p); };
    return detail::iterate_axis_orbit(y0, map, targets, opts, /*imag_axis=*/true);
}

// ---------------------------------------------------------------------------
// Chaos certification on the real interval.
// ---------------------------------------------------------------------------

/// Turbulence certificate for f on [0, pi]: with J = [0, p_lambda] and
/// K = [p_lambda, pi], monotonicity of f on both sides of the critical point
/// makes f(J) = f(K) = [0, f(p_lambda)] exact, so covering J u K reduces to
/// the single inequality f(p_lambda) >= pi.
struct ChaosCertificate {
    double lambda = 0.0;
    double p_lambda = 0.0;
    double f_at_p = 0.0;
    std::array<double, 2> interval_j{};
    std::array<double, 2> interval_k{};
    bool covered = false;
};

inline ChaosCertificate chaos_certificate(const ParamPoint& p) {
    ChaosCertificate cert;
    cert.lambda = p.lambda();
    cert.p_lambda = real_critical_ordinate(p);
    cert.f_at_p = std::sin(cert.p_lambda) / (cert.p_lambda * cert.p_lambda + p.lambda());
    cert.interval_j = {0.0, cert.p_lambda};
    cert.interval_k = {cert.p_lambda, std::numbers::pi};
    cert.covered = cert.f_at_p >= std::numbers::pi;
    return cert;
}

// ---------------------------------------------------------------------------
// Bifurcation-diagram sampling.
// ---------------------------------------------------------------------------

enum class ScanAxis { Real, Imag };

struct BifurcationRow {
    double lambda = 0.0;
    OrbitStatus status = OrbitStatus::Undecided;  // Converged marks a retained sample set
    std::vector<double> ordinates;
};

struct BifurcationTable {
    ScanAxis axis = ScanAxis::Real;
    std::vector<BifurcationRow> rows;
};

/// For each lambda on the grid, iterate the 1-D axis map from its natural
/// critical seed (p_lambda on the real axis, c_lambda on the imaginary one),
/// drop n_transient iterates and record the next n_keep. Rows whose transient
/// escapes or hits a pole keep an empty ordinate set.
inline BifurcationTable bifurcation_scan(ScanAxis axis, double lambda_lo, double lambda_hi,
                                         int n_lambda, int n_transient, int n_keep) {
    if (!(0.0 < lambda_lo && lambda_lo < lambda_hi))
        throw std::invalid_argument("bifurcation_scan: requires 0 < lambda_lo < lambda_hi");
    if (n_lambda < 2 || n_transient < 0 || n_keep < 1)
        throw std::invalid_argument("bifurcation_scan: bad sampling sizes");

    BifurcationTable table;
    table.axis = axis;
    for (int i = 0; i < n_lambda; ++i) {
        const double lam = lambda_lo + (lambda_hi - lambda_lo) * i / (n_lambda - 1);
        const ParamPoint p(lam);
        BifurcationRow row;
        row.lambda = lam;
        const double escape_radius = std::max(1e3, 10.0 * p.pole_ordinate());

        double v = axis == ScanAxis::Real ? real_critical_ordinate(p) : imag_critical_ordinate(p);
        auto step = [&](double t) -> RealEvalResult {
            if (axis == ScanAxis::Real)
                return {EvalKind::Value, std::sin(t) / (t * t + lam)};
            return eval_h(t, p);
        };
        int growth = 0;
        bool dead = false;
        for (int n = 0; n < n_transient + n_keep; ++n) {
            const RealEvalResult r = step(v);
            if (r.kind == EvalKind::PoleProximity) {
                row.status = OrbitStatus::PoleHit;
                dead = true;
                break;
            }
            if (r.kind == EvalKind::Overflow) {
                row.status = OrbitStatus::Escaped;
                dead = true;
                break;
            }
            growth = std::abs(r.value) > std::abs(v) ? growth + 1 : 0;
            v = r.value;
            if (std::abs(v) > escape_radius && growth >= 3) {
                row.status = OrbitStatus::Escaped;
                dead = true;
                break;
            }
            if (n >= n_transient) row.ordinates.push_back(v);
        }
        if (!dead) row.status = OrbitStatus::Converged;
        if (dead) row.ordinates.clear();
        table.rows.push_back(std::move(row));
    }
    return table;
}

// ---------------------------------------------------------------------------
// Period-doubling probe around lambda_star.
// ---------------------------------------------------------------------------

struct PeriodDoublingSide {
    double lambda = 0.0;
    double fixed_point = 0.0;
    double fixed_point_multiplier = 0.0;
    bool cycle_found = false;
    std::array<double, 2> cycle_points{};  // ascending; valid when cycle_found
    double cycle_multiplier = 0.0;
};

struct PeriodDoublingReport {
    double eps = 0.0;
    PeriodDoublingSide below;  // lambda_star - eps
    PeriodDoublingSide above;  // lambda_star + eps
};

namespace detail {

inline PeriodDoublingSide probe_side(double lam) {
    const ParamPoint p(lam);
    PeriodDoublingSide side;
    side.lambda = lam;
    side.fixed_point = real_fixed_ordinate(p);
    side.fixed_point_multiplier = eval_f_prime(cplx{side.fixed_point, 0.0}, p).value.real();

    auto f1 = [lam](double x) { return std::sin(x) / (x * x + lam); };
    auto j = [&](double x) { return f1(f1(x)) - x; };

    // Uniform sign scan of f^2(x) - x on (0, pi), then bisection per bracket.
    constexpr int kScan = 10000;
    const double a = 1e-6, b = std::numbers::pi - 1e-6;
    std::vector<double> roots;
    double xp = a, fp = j(a);
    for (int i = 1; i <= kScan; ++i) {
        const double x = a + (b - a) * i / kScan;
        const double fx = j(x);
        if (fx == 0.0) {
            roots.push_back(x);
        } else if (fp * fx < 0.0) {
            roots.push_back(bisect(j, Bracket{xp, x, fp, fx}, 1e-13).root);
        }
        xp = x;
        fp = fx;
    }
    // Split the roots into fixed points of f and genuine period-2 points.
    std::vector<double> cycle;
    for (double r : roots)
        if (std::abs(f1(r) - r) > 1e-7) cycle.push_back(r);
    if (cycle.size() >= 2) {
        side.cycle_found = true;
        side.cycle_points = {cycle.front(), cycle.back()};
        const ParamPoint pp(lam);
        side.cycle_multiplier = eval_f_prime(cplx{cycle.front(), 0.0}, pp).value.real() *
                                eval_f_prime(cplx{cycle.back(), 0.0}, pp).value.real();
    }
    return side;
}

}  // namespace detail

/// Looks for the real 2-cycle just below lambda_star and confirms its absence
/// just above.
inline PeriodDoublingReport period_doubling_probe(double eps, const BifurcationConstants& c) {
    if (!(eps > 0.0 && eps < c.lambda_star / 2.0))
        throw std::invalid_argument("period_doubling_probe: requires 0 < eps < lambda_star/2");
    PeriodDoublingReport rep;
    rep.eps = eps;
    rep.below = detail::probe_side(c.lambda_star - eps);
    rep.above = detail::probe_side(c.lambda_star + eps);
    return rep;
}

}  // namespace merosin

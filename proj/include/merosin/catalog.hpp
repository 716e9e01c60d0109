#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "merosin/constants.hpp"
#include "merosin/family.hpp"
#include "merosin/roots.hpp"

namespace merosin {

/// |m| within kIndifferentTol of 1 is classified as rationally indifferent;
/// matches the solver tolerance of the ladder constants.
inline constexpr double kIndifferentTol = 1e-6;
inline constexpr double kSuperattractingTol = 1e-12;

enum class Stability { Attracting, Repelling, RationallyIndifferent, Superattracting };

inline const char* to_string(Stability s) {
    switch (s) {
        case Stability::Attracting: return "attracting";
        case Stability::Repelling: return "repelling";
        case Stability::RationallyIndifferent: return "rationally_indifferent";
        case Stability::Superattracting: return "superattracting";
    }
    return "?";
}

inline Stability classify_multiplier(double m) {
    const double a = std::abs(m);
    if (std::abs(a - 1.0) <= kIndifferentTol) return Stability::RationallyIndifferent;
    if (a <= kSuperattractingTol) return Stability::Superattracting;
    return a < 1.0 ? Stability::Attracting : Stability::Repelling;
}

enum class AxisTag { RealAxis, ImagAxis, OffAxis };

/// One fixed point or cycle representative. For cycle_length == 2 the record
/// stands for the pair {i*ordinate, -i*ordinate} and `multiplier` is the
/// cycle multiplier (the square of the -h multiplier).
struct FixedPointRecord {
    AxisTag axis = AxisTag::RealAxis;
    double ordinate = 0.0;  // x for RealAxis, y for ImagAxis
    cplx location{0.0, 0.0};
    double multiplier = 0.0;
    Stability stability = Stability::Attracting;
    int cycle_length = 1;
};

namespace detail {

inline FixedPointRecord real_point(double x, double multiplier) {
    return {AxisTag::RealAxis, x, cplx{x, 0.0}, multiplier, classify_multiplier(multiplier), 1};
}

inline FixedPointRecord imag_point(double y, double multiplier) {
    return {AxisTag::ImagAxis, y, cplx{0.0, y}, multiplier, classify_multiplier(multiplier), 1};
}

}  // namespace detail

/// Non-zero real fixed point ordinate: psi_cap(x) = lambda, defined for
/// 0 < lambda < 1.
inline double real_fixed_ordinate(const ParamPoint& p) {
    const double lam = p.lambda();
    if (!(lam < 1.0))
        throw std::domain_error("real_fixed_ordinate: requires lambda < 1");
    auto f = [lam](double x) { return psi_cap(x) - lam; };
    auto df = [](double x) { return detail::psi_cap_prime(x); };
    return newton_hybrid(f, df, make_bracket(f, 1e-9, detail::x0_crossing()), 1e-15, 1e-13).root;
}

/// Non-zero imaginary fixed point ordinate: phi_big(y) = lambda, defined for
/// lambda > 1. Solved through the h fixed-point form sinh y = y (lambda - y^2),
/// which is the same equation cleared of its denominator.
inline double imag_fixed_ordinate(const ParamPoint& p) {
    const double lam = p.lambda();
    if (!(lam > 1.0))
        throw std::domain_error("imag_fixed_ordinate: requires lambda > 1");
    auto f = [lam](double y) { return std::sinh(y) - y * (lam - y * y); };
    auto df = [lam](double y) { return std::cosh(y) - lam + 3.0 * y * y; };
    return newton_hybrid(f, df, make_bracket(f, 1e-9, p.pole_ordinate()), 1e-15, 1e-12).root;
}

/// Radius of the forward-invariant disc around the origin, solved from
/// phi_big(r) = lambda directly. Agrees with imag_fixed_ordinate to within
/// solver precision; the two routes are kept separate on purpose.
inline double invariant_disk_radius(const ParamPoint& p) {
    const double lam = p.lambda();
    if (!(lam > 1.0))
        throw std::domain_error("invariant_disk_radius: requires lambda > 1");
    auto f = [lam](double y) { return phi_big(y) - lam; };
    auto df = [](double y) { return detail::phi_big_prime(y); };
    return newton_hybrid(f, df, make_bracket(f, 1e-9, p.pole_ordinate()), 1e-15, 1e-12).root;
}

/// Multiplier of h at one of its fixed points y > 0 (lambda eliminated via
/// the fixed-point relation).
inline double h_fixed_multiplier(double y) {
    return (y * std::cosh(y) + 2.0 * y * y * y) / std::sinh(y);
}

/// Multiplier of -h at one of its fixed points (2-cycle ordinates of h).
inline double neg_h_multiplier(double y) { return detail::neg_h_multiplier(y); }

/// Real fixed points of the family: 0 always, +/-x_lambda when lambda < 1.
inline std::vector<FixedPointRecord> real_fixed_points(const ParamPoint& p) {
    std::vector<FixedPointRecord> out;
    out.push_back(detail::real_point(0.0, 1.0 / p.lambda()));
    if (p.lambda() < 1.0) {
        const double x = real_fixed_ordinate(p);
        const double m = eval_f_prime(cplx{x, 0.0}, p).value.real();
        out.push_back(detail::real_point(x, m));
        out.push_back(detail::real_point(-x, m));
    }
    return out;
}

/// Fixed points of h (the imaginary-axis dynamics): 0 always, +/-r_lambda
/// when lambda > 1.
inline std::vector<FixedPointRecord> imag_fixed_points(const ParamPoint& p) {
    std::vector<FixedPointRecord> out;
    out.push_back(detail::imag_point(0.0, 1.0 / p.lambda()));
    if (p.lambda() > 1.0) {
        const double r = imag_fixed_ordinate(p);
        const double m = eval_h_prime(r, p).value;
        out.push_back(detail::imag_point(r, m));
        out.push_back(detail::imag_point(-r, m));
    }
    return out;
}

/// 2-cycle ordinates of h = non-zero fixed points of -h, i.e. roots of
/// lambda(y) = y^2 - sinh(y)/y = lambda. Reports whatever roots exist on the
/// two branches of the curve (one rising, one falling, meeting at the fold);
/// empty above the fold parameter. Records carry the cycle multiplier
/// (square of the -h multiplier).
inline std::vector<FixedPointRecord> imag_two_cycles(const ParamPoint& p,
                                                     const BifurcationConstants& c) {
    std::vector<FixedPointRecord> out;
    const double lam = p.lambda();
    const double fold_y = c.witness_y2;
    const double fold_lambda = detail::two_cycle_lambda(fold_y);
    auto curve = [lam](double y) { return detail::two_cycle_lambda(y) - lam; };
    auto curve_prime = [](double y) { return detail::two_cycle_lambda_prime(y); };

    auto push = [&](double y) {
        const double m = detail::neg_h_multiplier(y);
        FixedPointRecord rec{AxisTag::ImagAxis, y, cplx{0.0, y}, m * m, classify_multiplier(m), 2};
        out.push_back(rec);
    };

    if (std::abs(lam - fold_lambda) <= 1e-12 * std::max(1.0, fold_lambda)) {
        push(fold_y);  // single rationally indifferent ordinate at the fold
        return out;
    }
    if (lam > fold_lambda) return out;  // tangent bifurcation has annihilated the pair

    // Rising branch (attracting side for lambda just below the fold).
    push(newton_hybrid(curve, curve_prime, make_bracket(curve, 1e-6, fold_y), 1e-15, 1e-11).root);
    // Falling branch (always repelling).
    double hi = fold_y + 1.0;
    while (curve(hi) > 0.0) hi += 1.0;
    push(newton_hybrid(curve, curve_prime, make_bracket(curve, fold_y, hi), 1e-15, 1e-11).root);
    return out;
}

/// Critical points and singular values of the inverse: the real critical
/// ladder p_{lambda,n}, the imaginary pair +/-c_lambda, their critical
/// values, and the lone asymptotic value 0.
struct SingularValueCatalog {
    std::vector<double> real_critical_points;   // ascending, n in [-n_max, n_max]
    std::vector<double> real_critical_values;   // cos(p)/(2p) at each point
    std::array<double, 2> imag_critical_points{};   // {-c, +c}
    std::array<double, 2> imag_critical_values{};   // ordinates of f at them: {+, -} cosh(c)/(2c)
    std::vector<double> asymptotic_values;      // {0}
};

/// First positive critical point p_{lambda,0}, always inside (0, pi/2).
inline double real_critical_ordinate(const ParamPoint& p) {
    const double lam = p.lambda();
    auto f = [lam](double x) { return (x * x + lam) * std::cos(x) - 2.0 * x * std::sin(x); };
    auto df = [lam](double x) { return -(x * x + lam + 2.0) * std::sin(x); };
    return newton_hybrid(f, df, make_bracket(f, 1e-12, std::numbers::pi / 2.0), 1e-15,
                         1e-14 * (1.0 + lam)).root;
}

/// Imaginary critical ordinate c_lambda > sqrt(lambda). The zero of
/// (lambda - y^2) cosh y + 2 y sinh y, solved in the cosh-normalized form
/// lambda - y^2 + 2 y tanh y, which stays finite for every lambda. The upper
/// bracket end sqrt(lambda + 2) + 2 is always past the root.
inline double imag_critical_ordinate(const ParamPoint& p) {
    const double lam = p.lambda();
    auto f = [lam](double y) { return lam - y * y + 2.0 * y * std::tanh(y); };
    auto df = [](double y) {
        const double t = std::tanh(y);
        return -2.0 * y + 2.0 * t + 2.0 * y * (1.0 - t * t);
    };
    const double hi = std::sqrt(lam + 2.0) + 2.0;
    return newton_hybrid(f, df, make_bracket(f, p.pole_ordinate() * (1.0 + 1e-12) + 1e-300, hi),
                         1e-15, 1e-13 * (1.0 + lam)).root;
}

inline SingularValueCatalog singular_values(const ParamPoint& p, int n_max = 32) {
    if (n_max < 1) throw std::invalid_argument("singular_values: n_max must be >= 1");
    const double lam = p.lambda();
    SingularValueCatalog cat;
    auto f = [lam](double x) { return (x * x + lam) * std::cos(x) - 2.0 * x * std::sin(x); };
    auto df = [lam](double x) { return -(x * x + lam + 2.0) * std::sin(x); };

    std::vector<double> pos;
    pos.push_back(real_critical_ordinate(p));
    for (int n = 1; n <= n_max; ++n) {
        const double lo = n * std::numbers::pi, hi = (n + 1) * std::numbers::pi;
        pos.push_back(newton_hybrid(f, df, make_bracket(f, lo, hi), 1e-15,
                                    1e-13 * (hi * hi + lam)).root);
    }
    // f' is even, so p_{lambda,-n-1} = -p_{lambda,n}; indices n in [-n_max, n_max]
    // cover the negative ordinates -p_0 .. -p_{n_max-1} and the positive ones
    // p_0 .. p_{n_max}.
    for (int i = n_max - 1; i >= 0; --i)
        cat.real_critical_points.push_back(-pos[static_cast<size_t>(i)]);
    for (double q : pos) cat.real_critical_points.push_back(q);
    for (double q : cat.real_critical_points)
        cat.real_critical_values.push_back(std::cos(q) / (2.0 * q));

    const double cc = imag_critical_ordinate(p);
    cat.imag_critical_points = {-cc, cc};
    const double cv = std::cosh(cc) / (2.0 * cc);
    cat.imag_critical_values = {cv, -cv};  // f(-ic) = +i cv, f(+ic) = -i cv
    cat.asymptotic_values = {0.0};
    return cat;
}

// ---------------------------------------------------------------------------
// Regime classification (the nine parameter ranges).
// ---------------------------------------------------------------------------

enum class RegimeId {
    ChaoticRealCore,     // 0 < lambda <= lambda_2star
    RepellingRealPair,   // lambda_2star < lambda < lambda_star
    ParabolicRealPair,   // lambda == lambda_star
    AttractingRealPair,  // lambda_star < lambda < 1
    ParabolicOrigin,     // lambda == 1
    AttractingOrigin,    // 1 < lambda < lambda_1
    ParabolicImagCycle,  // lambda in {lambda_1, lambda_2}
    OriginAndImagCycle,  // lambda_1 < lambda < lambda_2
    OriginOnly,          // lambda > lambda_2
};

inline const char* to_string(RegimeId r) {
    switch (r) {
        case RegimeId::ChaoticRealCore: return "chaotic_real_core";
        case RegimeId::RepellingRealPair: return "repelling_real_pair";
        case RegimeId::ParabolicRealPair: return "parabolic_real_pair";
        case RegimeId::AttractingRealPair: return "attracting_real_pair";
        case RegimeId::ParabolicOrigin: return "parabolic_origin";
        case RegimeId::AttractingOrigin: return "attracting_origin";
        case RegimeId::ParabolicImagCycle: return "parabolic_imag_cycle";
        case RegimeId::OriginAndImagCycle: return "origin_and_imag_cycle";
        case RegimeId::OriginOnly: return "origin_only";
    }
    return "?";
}

struct RegimeDescriptor {
    RegimeId id = RegimeId::OriginOnly;
    std::string notes;
    std::vector<FixedPointRecord> expected_attractors;
};

/// Boundary equality tolerance for the regime map; the ladder constants
/// themselves are solved far tighter than this.
inline constexpr double kRegimeBoundaryTol = 1e-9;

inline RegimeDescriptor regime(const ParamPoint& p, const BifurcationConstants& c) {
    const double lam = p.lambda();
    RegimeDescriptor d;
    auto near = [lam](double edge) { return std::abs(lam - edge) <= kRegimeBoundaryTol; };

    if (near(c.lambda_star)) {
        d.id = RegimeId::ParabolicRealPair;
        d.notes = "parabolic pair +/-x* (multiplier -1); origin repelling";
        const double x = c.witness_x_star;
        d.expected_attractors.push_back(detail::real_point(x, -1.0));
        d.expected_attractors.push_back(detail::real_point(-x, -1.0));
    } else if (near(1.0)) {
        d.id = RegimeId::ParabolicOrigin;
        d.notes = "origin rationally indifferent (multiplier 1)";
        d.expected_attractors.push_back(detail::real_point(0.0, 1.0));
    } else if (near(c.lambda_1) || near(c.lambda_2)) {
        d.id = RegimeId::ParabolicImagCycle;
        d.notes = "origin attracting plus parabolic imaginary 2-cycle";
        d.expected_attractors.push_back(detail::real_point(0.0, 1.0 / lam));
        const double y = near(c.lambda_1) ? c.witness_y1 : c.witness_y2;
        FixedPointRecord cyc{AxisTag::ImagAxis, y, cplx{0.0, y}, 1.0,
                             Stability::RationallyIndifferent, 2};
        d.expected_attractors.push_back(cyc);
    } else if (lam <= c.lambda_2star + kRegimeBoundaryTol) {
        d.id = RegimeId::ChaoticRealCore;
        d.notes = "no attracting cycles on the axes; real interval dynamics chaotic";
    } else if (lam < c.lambda_star) {
        d.id = RegimeId::RepellingRealPair;
        d.notes = "all real fixed points repelling; no attractors in the catalog";
    } else if (lam < 1.0) {
        d.id = RegimeId::AttractingRealPair;
        d.notes = "attracting pair +/-x_lambda; origin repelling";
        const ParamPoint pp(lam);
        const double x = real_fixed_ordinate(pp);
        const double m = eval_f_prime(cplx{x, 0.0}, pp).value.real();
        d.expected_attractors.push_back(detail::real_point(x, m));
        d.expected_attractors.push_back(detail::real_point(-x, m));
    } else if (lam < c.lambda_1) {
        d.id = RegimeId::AttractingOrigin;
        d.notes = "origin is the only attractor";
        d.expected_attractors.push_back(detail::real_point(0.0, 1.0 / lam));
    } else if (lam < c.lambda_2) {
        d.id = RegimeId::OriginAndImagCycle;
        d.notes = "origin attracting plus attracting imaginary 2-cycle";
        d.expected_attractors.push_back(detail::real_point(0.0, 1.0 / lam));
        const ParamPoint pp(lam);
        for (const auto& rec : imag_two_cycles(pp, c))
            if (rec.stability == Stability::Attracting) d.expected_attractors.push_back(rec);
    } else {
        d.id = RegimeId::OriginOnly;
        d.notes = "origin is the only attractor; imaginary 2-cycles annihilated";
        d.expected_attractors.push_back(detail::real_point(0.0, 1.0 / lam));
    }
    return d;
}

// ---------------------------------------------------------------------------
// Attractor inventory used by orbit classification and rendering.
// ---------------------------------------------------------------------------

enum class AttractorId { Origin, RealFixedPlus, RealFixedMinus, ImagTwoCycle };

inline const char* to_string(AttractorId a) {
    switch (a) {
        case AttractorId::Origin: return "origin";
        case AttractorId::RealFixedPlus: return "real_fixed_plus";
        case AttractorId::RealFixedMinus: return "real_fixed_minus";
        case AttractorId::ImagTwoCycle: return "imag_two_cycle";
    }
    return "?";
}

struct Attractor {
    AttractorId id;
    std::vector<cplx> points;  // one point for fixed points, two for the cycle
};

struct AttractorInventory {
    std::vector<Attractor> items;
    bool parabolic = false;  // lambda sits on a ladder boundary
};

/// Attractors (including rationally indifferent boundary cases, handled
/// best-effort) present at the given parameter.
inline AttractorInventory attractor_inventory(const ParamPoint& p, const BifurcationConstants& c) {
    const double lam = p.lambda();
    AttractorInventory inv;
    const double tol = kRegimeBoundaryTol;
    for (double edge : {c.lambda_star, 1.0, c.lambda_1, c.lambda_2})
        if (std::abs(lam - edge) <= tol) inv.parabolic = true;

    if (lam >= 1.0 - tol)
        inv.items.push_back({AttractorId::Origin, {cplx{0.0, 0.0}}});
    if (lam >= c.lambda_star - tol && lam < 1.0) {
        const double x = real_fixed_ordinate(p);
        inv.items.push_back({AttractorId::RealFixedPlus, {cplx{x, 0.0}}});
        inv.items.push_back({AttractorId::RealFixedMinus, {cplx{-x, 0.0}}});
    }
    if (lam >= c.lambda_1 - tol && lam <= c.lambda_2 + tol) {
        double y;
        if (std::abs(lam - c.lambda_2) <= tol) {
            y = c.witness_y2;
        } else {
            y = c.witness_y1;
            if (lam > c.lambda_1 + tol) {
                for (const auto& rec : imag_two_cycles(p, c))
                    if (rec.stability != Stability::Repelling) y = rec.ordinate;
            }
        }
        inv.items.push_back({AttractorId::ImagTwoCycle, {cplx{0.0, y}, cplx{0.0, -y}}});
    }
    return inv;
}

}  // namespace merosin

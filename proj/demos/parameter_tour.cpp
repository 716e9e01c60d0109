// Prints the bifurcation ladder and the fixed-point catalog for a handful of
// parameters, one per dynamical regime.

#include <cstdio>

#include "merosin/merosin.hpp"

int main() {
    using namespace merosin;
    const BifurcationConstants c = compute_constants();
    std::printf("ladder: l** = %.12g  l* = %.12g  l^ = %.12g  l1 = %.12g  l2 = %.12g\n",
                c.lambda_2star, c.lambda_star, c.lambda_hat, c.lambda_1, c.lambda_2);

    for (double lam : {0.01, 0.05, 0.5, 2.0, 9.5, 12.0}) {
        const ParamPoint p(lam);
        const RegimeDescriptor d = regime(p, c);
        std::printf("\nlambda = %-6g  regime = %s\n  %s\n", lam, to_string(d.id), d.notes.c_str());
        for (const auto& r : real_fixed_points(p))
            std::printf("  real fixed point  x = %+.9g  m = %+.6g  (%s)\n", r.ordinate,
                        r.multiplier, to_string(r.stability));
        for (const auto& r : imag_fixed_points(p))
            std::printf("  imag fixed point  y = %+.9g  m = %+.6g  (%s)\n", r.ordinate,
                        r.multiplier, to_string(r.stability));
        for (const auto& r : imag_two_cycles(p, c))
            std::printf("  imag 2-cycle      y = %+.9g  cycle m = %+.6g  (%s)\n", r.ordinate,
                        r.multiplier, to_string(r.stability));
        const ChaosCertificate cert = chaos_certificate(p);
        std::printf("  chaos certificate: f(p) = %.6g %s pi\n", cert.f_at_p,
                    cert.covered ? ">=" : "<");
    }
    return 0;
}

// Renders the two headline basin pictures: lambda between the tangency
// parameters (origin basin plus the imaginary 2-cycle basin) and lambda past
// the fold (origin basin only, escape in black).

#include <iostream>
#include <numbers>

#include "merosin/merosin.hpp"

int main() {
    using namespace merosin;
    const BifurcationConstants c = compute_constants();
    const Window w{-1.5 * std::numbers::pi, 1.5 * std::numbers::pi, -2.0 * std::numbers::pi, 0.0,
                   900, 600};
    for (double lam : {9.5, 12.0}) {
        const ParamPoint p(lam);
        const ClassifiedGrid g = render_grid(p, w, attractor_inventory(p, c));
        const std::string path = "basins_lambda_" + format15(lam) + ".ppm";
        write_ppm(g, default_palette(), path);
        std::cout << path << '\n';
        for (const auto& [label, f] : basin_fractions(g))
            std::cout << "  " << to_string(label) << ": " << f << '\n';
    }
    return 0;
}

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace merosin {

/// Validated parameter of the family sin(z)/(z^2 + lambda), lambda > 0.
/// The map has exactly two simple poles, at +/- i*sqrt(lambda); the square
/// root is cached because every near-pole test needs it.
class ParamPoint {
public:
    explicit ParamPoint(double lambda)
        : lambda_(validated(lambda)), pole_ordinate_(std::sqrt(lambda)) {}

    double lambda() const noexcept { return lambda_; }
    double pole_ordinate() const noexcept { return pole_ordinate_; }

private:
    static double validated(double lambda) {
        if (!(std::isfinite(lambda) && lambda > 0.0))
            throw std::invalid_argument("ParamPoint: lambda must be finite and > 0, got " +
                                        std::to_string(lambda));
        return lambda;
    }

    double lambda_;
    double pole_ordinate_;
};

}  // namespace merosin

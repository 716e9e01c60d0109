#pragma once

// Expected values frozen from the brute-force oracles in oracles.hpp
// (interval halving on the cleared equations, 400 iterations, printed at
// 17 significant digits). test_oracle_values.cpp re-derives every one of
// them at test time before the solver paths are trusted against them.

namespace frozen {

inline constexpr double x0 = 0.92862630873173446;
inline constexpr double x_star = 0.87211713682978886;
inline constexpr double lambda_star = 0.11738138598825265;
inline constexpr double p_2star = 0.15719266639923185;
inline constexpr double lambda_2star = 0.025120638854331436;
inline constexpr double t_hat = 0.63455994552662276;
inline constexpr double lambda_hat = 0.53156090766659581;
inline constexpr double y1 = 3.8529740142422;
inline constexpr double lambda_1 = 8.7317141668251743;
inline constexpr double y2 = 4.7324335311131716;
inline constexpr double lambda_2 = 10.397575685758486;

inline constexpr double x_fix_03 = 0.77624512330552298;
inline constexpr double x_fix_05 = 0.65565079392140779;
inline constexpr double x_fix_08 = 0.41429233594382853;
inline constexpr double mult_x_fix_05 = -0.072164957889621489;

inline constexpr double r_fix_15 = 0.65364683457499773;
inline constexpr double r_fix_2 = 0.92295895555078922;
inline constexpr double r_fix_5 = 1.828150438175387;
inline constexpr double r_fix_95 = 2.6240907322086979;
inline constexpr double r_fix_12 = 2.9584371315644216;

inline constexpr double a2_95 = 4.117836012258163;
inline constexpr double a2_95_neg_h_mult = -0.42806801302037573;
inline constexpr double a2_95_cycle_mult = 0.18324222377121258;
inline constexpr double r2_95 = 5.228891763898627;
inline constexpr double r2_95_neg_h_mult = 2.1642478829595779;
inline constexpr double r2_preimage_95 = 3.610027621857701;

inline constexpr double c_crit_1 = 2.3855869130455574;
inline constexpr double c_crit_95 = 4.2398270203544755;
inline constexpr double h_at_c_crit_95 = -4.0927528695482422;
inline constexpr double p_crit_1 = 0.79801699184237007;
inline constexpr double p_crit_2 = 0.98514047462843513;

}  // namespace frozen

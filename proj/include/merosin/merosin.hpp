#pragma once

// Umbrella header for the merosin library: iteration, bifurcation analysis
// and basin rendering for the family sin(z)/(z^2 + lambda), lambda > 0.

#include "merosin/catalog.hpp"
#include "merosin/constants.hpp"
#include "merosin/family.hpp"
#include "merosin/orbit.hpp"
#include "merosin/param.hpp"
#include "merosin/render.hpp"
#include "merosin/report.hpp"
#include "merosin/roots.hpp"

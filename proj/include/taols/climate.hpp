#pragma once

#include <cmath>
#include <numbers>

#include "taols/estimator.hpp"
#include "taols/forcing.hpp"

namespace taols::climate {

/// Forcing from a doubling of CO2, 5.35 * ln 2 W/m^2 (unrounded).
inline constexpr double kDoublingForcing = forcing::kCo2LogCoefficient * std::numbers::ln2;

/// Heat needed to warm the atmosphere by 1 deg C, W-yr/m^2.
inline constexpr double kAtmosphereHeatPerDegree = 0.31;

/// Numerator of the atmospheric heat share in percent: 100 * 0.31.
inline constexpr double kAtmosphericSharePercent = 100.0 * kAtmosphereHeatPerDegree;

/// Equilibrium climate sensitivity in deg C per CO2 doubling. Throws NonPhysicalError if lambda <= 0.
double ecs_from_lambda(double lambda);

/// Map a lambda interval to an ECS interval; endpoints swap since ECS decreases in lambda.
/// Throws NonPhysicalError when lambda_interval.lower <= 0.
ConfidenceInterval ecs_interval(const ConfidenceInterval& lambda_interval);

/// Percent of total system heat content that warms the atmosphere: 31 / phi.
double atmospheric_share(double phi);

/// Warming implied by a sustained forcing step: forcing_step * duration / phi.
double steady_state_warming(double forcing_step_wm2, double duration_years, double phi);

struct EcsEstimate {
    double ecs;
    ConfidenceInterval interval;
};

/// ECS and its interval from a fit's lambda.
EcsEstimate ecs_estimate(const TaolsFit& fit, double level = 0.95);

}  // namespace taols::climate

#include "taols/climate.hpp"

#include <fmt/format.h>

#include "taols/errors.hpp"

namespace taols::climate {

double ecs_from_lambda(double lambda) {
    if (!(lambda > 0.0)) {
        throw NonPhysicalError(fmt::format("lambda = {} is not positive; ECS is undefined", lambda));
    }
    return kDoublingForcing / lambda;
}

ConfidenceInterval ecs_interval(const ConfidenceInterval& lambda_interval) {
    if (!(lambda_interval.lower > 0.0)) {
        throw NonPhysicalError(fmt::format("lambda interval [{}, {}] is not strictly positive",
                                           lambda_interval.lower, lambda_interval.upper));
    }
    return {ecs_from_lambda(lambda_interval.upper), ecs_from_lambda(lambda_interval.lower), lambda_interval.level};
}

double atmospheric_share(double phi) {
    if (!(phi > 0.0)) {
        throw NonPhysicalError(fmt::format("phi = {} is not positive", phi));
    }
    return kAtmosphericSharePercent / phi;
}

double steady_state_warming(double forcing_step_wm2, double duration_years, double phi) {
    if (!(duration_years >= 0.0)) {
        throw DomainError(fmt::format("duration must be non-negative, got {}", duration_years));
    }
    if (!(phi > 0.0)) {
        throw NonPhysicalError(fmt::format("phi = {} is not positive", phi));
    }
    return forcing_step_wm2 * duration_years / phi;
}

EcsEstimate ecs_estimate(const TaolsFit& fit, double level) {
    return {ecs_from_lambda(fit.lambda()), ecs_interval(confidence_interval(fit, Coefficient::Lambda, level))};
}

}  // namespace taols::climate

#include "taols/forcing.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "taols/errors.hpp"

namespace taols::forcing {

double rf_co2(double concentration_ppm, double baseline_ppm) {
    if (!(concentration_ppm > 0.0) || !(baseline_ppm > 0.0)) {
        throw DomainError(fmt::format("CO2 concentrations must be positive (C = {}, C0 = {})",
                                      concentration_ppm, baseline_ppm));
    }
    return kCo2LogCoefficient * std::log(concentration_ppm / baseline_ppm);
}

TimeSeries aggregate_forcing(std::span<const TimeSeries> components) {
    if (components.empty()) {
        throw DomainError("aggregate_forcing needs at least one component");
    }
    const TimeSeries& first = components.front();
    std::vector<double> total(first.size(), 0.0);
    for (std::size_t c = 0; c < components.size(); ++c) {
        const TimeSeries& comp = components[c];
        if (!comp.aligned_with(first)) {
            throw AlignmentError(fmt::format("component {} spans {}-{}, expected {}-{}", c, comp.start_year(),
                                             comp.end_year(), first.start_year(), first.end_year()));
        }
        for (std::size_t i = 0; i < total.size(); ++i) {
            total[i] += comp[i];
        }
    }
    return TimeSeries(first.start_year(), std::move(total));
}

TimeSeries forcing_from_co2(const TimeSeries& co2_ppm, double baseline_ppm) {
    std::vector<double> out(co2_ppm.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = rf_co2(co2_ppm[i], baseline_ppm);
    }
    return TimeSeries(co2_ppm.start_year(), std::move(out));
}

}  // namespace taols::forcing

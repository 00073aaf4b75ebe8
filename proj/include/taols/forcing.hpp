#pragma once

#include <span>

#include "taols/time_series.hpp"

namespace taols::forcing {

/// Empirical coefficient of the logarithmic CO2 forcing law, W/m^2.
inline constexpr double kCo2LogCoefficient = 5.35;

/// Pre-industrial CO2 concentration, ppm.
inline constexpr double kPreindustrialCo2Ppm = 280.0;

/// A CO2 concentration paired with its reference concentration, both in ppm.
struct Co2Record {
    double concentration_ppm;
    double baseline_ppm = kPreindustrialCo2Ppm;
};

/// Radiative forcing of CO2 at `concentration_ppm` relative to `baseline_ppm`:
/// 5.35 * ln(C / C0) in W/m^2. Throws DomainError unless both are positive.
double rf_co2(double concentration_ppm, double baseline_ppm = kPreindustrialCo2Ppm);

inline double rf_co2(const Co2Record& record) {
    return rf_co2(record.concentration_ppm, record.baseline_ppm);
}

/// Elementwise sum of precomputed component forcings. Throws AlignmentError
/// when components differ in start year or length, DomainError when empty.
TimeSeries aggregate_forcing(std::span<const TimeSeries> components);

/// Convert a CO2 concentration series (ppm) to a forcing series (W/m^2).
TimeSeries forcing_from_co2(const TimeSeries& co2_ppm, double baseline_ppm = kPreindustrialCo2Ppm);

}  // namespace taols::forcing

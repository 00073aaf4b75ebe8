#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "taols/estimator.hpp"
#include "taols/time_series.hpp"

namespace taols::synthetic {

struct NoNoise {};

struct IidNormal {
    double sigma = 1.0;
};

/// v_t = rho * v_{t-1} + sigma * e_t with v_0 = 0.
struct Ar1 {
    double rho = 0.5;
    double sigma = 1.0;
};

/**
 * Gaussian noise with occasional one-sided negative spikes, standing in for
 * volcanic eruptions: v_t = sigma * z_t - B_t * spike_scale * sigma * |w_t|,
 * with B_t ~ Bernoulli(spike_probability).
 */
struct Spiked {
    double sigma = 1.0;
    double spike_probability = 0.05;
    double spike_scale = 10.0;
};

using Noise = std::variant<NoNoise, IidNormal, Ar1, Spiked>;

inline constexpr std::size_t kMinLength = 20;

/**
 * @brief Parameters of a multicointegrated system with known coefficients.
 *
 * Temperature is a driftless random walk with N(0, sigma_s^2) increments.
 * Cumulated forcing satisfies F_t = gamma + mu t + lambda S_t + phi s_t + v_t.
 */
struct DgpSpec {
    std::size_t t = 165;
    double lambda = 1.5;
    double phi = 20.0;
    double gamma = 0.0;
    double mu = 0.0;
    Noise noise = NoNoise{};
    double sigma_s = 1.0;
    std::uint64_t seed = 1;
    int start_year = 1850;

    /// Throws std::invalid_argument describing the first invalid field.
    void validate() const;
};

struct Simulation {
    ClimateDataset dataset;
    std::vector<double> v;  ///< injected equilibrium error v_t
};

/**
 * Generate one dataset. Forcing is the first difference of F_t with F_0 = 0,
 * so for t >= 2, f_t = mu + lambda s_t + phi (s_t - s_{t-1}) + (v_t - v_{t-1}).
 * Output is a deterministic function of the spec (mt19937_64 plus Boost's
 * normal distribution, both fixed algorithms).
 */
Simulation simulate_with_noise(const DgpSpec& spec);

ClimateDataset simulate(const DgpSpec& spec);

/// v_t = cumsum(f - lambda s)_t - phi s_t. Includes gamma + mu t when the data carry them.
TimeSeries verify_multicointegration(const ClimateDataset& dataset, double lambda, double phi);

struct MonteCarloResult {
    std::vector<TaolsFit> fits;  ///< one per replication, in replication order
};

/// Replication r uses seed spec.seed + r. Results do not depend on thread scheduling.
MonteCarloResult monte_carlo(const DgpSpec& spec, std::size_t replications, std::size_t k,
                             VarianceEstimator variance = VarianceEstimator::Homoskedastic,
                             unsigned threads = 0);

}  // namespace taols::synthetic

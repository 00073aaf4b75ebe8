#include "taols/synthetic.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>
#include <fmt/format.h>

#include "taols/errors.hpp"
#include "taols/parallel.hpp"
#include "taols/transform.hpp"

namespace taols::synthetic {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

}  // namespace

void DgpSpec::validate() const {
    require(t >= kMinLength, fmt::format("T = {} is below the minimum of {}", t, kMinLength));
    require(std::isfinite(lambda) && std::isfinite(phi) && std::isfinite(gamma) && std::isfinite(mu),
            "DGP coefficients must be finite");
    require(sigma_s >= 0.0 && std::isfinite(sigma_s), fmt::format("sigma_s = {} must be non-negative", sigma_s));
    std::visit(overloaded{
                   [](const NoNoise&) {},
                   [](const IidNormal& n) {
                       require(n.sigma >= 0.0, fmt::format("noise sigma = {} must be non-negative", n.sigma));
                   },
                   [](const Ar1& n) {
                       require(n.sigma >= 0.0, fmt::format("noise sigma = {} must be non-negative", n.sigma));
                       require(std::abs(n.rho) < 1.0, fmt::format("AR(1) rho = {} must satisfy |rho| < 1", n.rho));
                   },
                   [](const Spiked& n) {
                       require(n.sigma >= 0.0, fmt::format("noise sigma = {} must be non-negative", n.sigma));
                       require(n.spike_probability >= 0.0 && n.spike_probability <= 1.0,
                               fmt::format("spike probability {} must lie in [0, 1]", n.spike_probability));
                       require(n.spike_scale >= 0.0,
                               fmt::format("spike scale {} must be non-negative", n.spike_scale));
                   },
               },
               noise);
}

Simulation simulate_with_noise(const DgpSpec& spec) {
    spec.validate();
    boost::random::mt19937_64 rng(spec.seed);
    boost::random::normal_distribution<double> normal(0.0, 1.0);
    boost::random::uniform_01<double> uniform;

    const std::size_t n = spec.t;
    std::vector<double> s(n);
    double level = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        level += spec.sigma_s * normal(rng);
        s[i] = level;
    }

    std::vector<double> v(n, 0.0);
    std::visit(overloaded{
                   [](const NoNoise&) {},
                   [&](const IidNormal& nz) {
                       for (auto& x : v) x = nz.sigma * normal(rng);
                   },
                   [&](const Ar1& nz) {
                       double prev = 0.0;
                       for (auto& x : v) {
                           x = nz.rho * prev + nz.sigma * normal(rng);
                           prev = x;
                       }
                   },
                   [&](const Spiked& nz) {
                       for (auto& x : v) {
                           const double base = nz.sigma * normal(rng);
                           const double spike = std::abs(normal(rng));
                           const bool erupt = uniform(rng) < nz.spike_probability;
                           x = base - (erupt ? nz.spike_scale * nz.sigma * spike : 0.0);
                       }
                   },
               },
               spec.noise);

    // F_t = gamma + mu t + lambda S_t + phi s_t + v_t, then f_t = F_t - F_{t-1} with F_0 = 0.
    std::vector<double> f(n);
    double cum_s = 0.0;
    double prev_f = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cum_s += s[i];
        const double t = static_cast<double>(i + 1);
        const double cum_f = spec.gamma + spec.mu * t + spec.lambda * cum_s + spec.phi * s[i] + v[i];
        f[i] = cum_f - prev_f;
        prev_f = cum_f;
    }

    return {ClimateDataset(TimeSeries(spec.start_year, std::move(f)), TimeSeries(spec.start_year, std::move(s)),
                           fmt::format("synthetic seed={}", spec.seed)),
            std::move(v)};
}

ClimateDataset simulate(const DgpSpec& spec) {
    return simulate_with_noise(spec).dataset;
}

TimeSeries verify_multicointegration(const ClimateDataset& dataset, double lambda, double phi) {
    const TimeSeries& f = dataset.forcing();
    const TimeSeries& s = dataset.temperature();
    std::vector<double> q(f.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        q[i] = f[i] - lambda * s[i];
    }
    const TimeSeries cum_q = cumulative_sum(TimeSeries(f.start_year(), std::move(q)));
    std::vector<double> v(cum_q.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = cum_q[i] - phi * s[i];
    }
    return TimeSeries(f.start_year(), std::move(v));
}

MonteCarloResult monte_carlo(const DgpSpec& spec, std::size_t replications, std::size_t k,
                             VarianceEstimator variance, unsigned threads) {
    spec.validate();
    BasisSpec{k}.validate(spec.t);
    const BasisMatrix basis(k, spec.t);
    MonteCarloResult result;
    result.fits.resize(replications);
    parallel_for(replications, threads, [&](std::size_t r) {
        DgpSpec rep = spec;
        rep.seed = spec.seed + r;
        result.fits[r] = ols_solve(build_transformed_system(simulate(rep), basis), variance);
    });
    return result;
}

}  // namespace taols::synthetic

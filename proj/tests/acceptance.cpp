// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <array>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "taols/climate.hpp"
#include "taols/dataset_io.hpp"
#include "taols/estimator.hpp"
#include "taols/forcing.hpp"
#include "taols/synthetic.hpp"
#include "taols/transform.hpp"

using namespace taols;

namespace {

enum class Outcome { Pass, Fail, Skip };

struct Verdict {
    Outcome outcome;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<double> x) {
    std::sort(x.begin(), x.end());
    const auto n = x.size();
    return n % 2 ? x[n / 2] : 0.5 * (x[n / 2 - 1] + x[n / 2]);
}

std::string round2(double x) {
    return fmt::format("{:.2f}", x);
}

// ---------------------------------------------------------------------------

std::optional<std::filesystem::path> observational_dataset() {
    if (const char* env = std::getenv("TAOLS_OBSERVED_DATASET")) {
        return std::filesystem::path(env);
    }
    const std::filesystem::path bundled = std::filesystem::path(TAOLS_SOURCE_DIR) / "data" / "observed_1850_2014.csv";
    if (std::filesystem::exists(bundled)) {
        return bundled;
    }
    return std::nullopt;
}

Verdict observed_reproduction() {
    const auto path = observational_dataset();
    if (!path) {
        return {Outcome::Skip,
                "observed forcing/temperature dataset (1850-2014) not available; set TAOLS_OBSERVED_DATASET to "
                "a combined CSV to run this check. Criteria 2-6 stand in for it."};
    }
    const auto start = Clock::now();
    const ClimateDataset ds = load_dataset(*path);
    const auto grid = default_k_grid();
    const SweepResult sweep = k_sweep(ds, grid);
    const double elapsed = seconds_since(start);

    bool ok = elapsed < 10.0;
    for (const auto& fit : sweep.fits) {
        ok = ok && fit.lambda() >= 1.44 && fit.lambda() <= 1.80 && fit.phi() >= 8.0 && fit.phi() <= 28.0;
    }
    const double ecs_lo = climate::ecs_from_lambda(sweep.summary.lambda.max);
    const double ecs_hi = climate::ecs_from_lambda(sweep.summary.lambda.min);
    ok = ok && std::abs(ecs_lo - 2.12) <= 0.1 && std::abs(ecs_hi - 2.49) <= 0.1;
    return {ok ? Outcome::Pass : Outcome::Fail,
            fmt::format("T={} lambda in [{:.3f}, {:.3f}] mean {:.3f}; phi in [{:.2f}, {:.2f}]; ECS in [{}, {}]; {:.2f}s",
                        ds.size(), sweep.summary.lambda.min, sweep.summary.lambda.max, sweep.summary.lambda.mean,
                        sweep.summary.phi.min, sweep.summary.phi.max, round2(ecs_lo), round2(ecs_hi), elapsed)};
}

Verdict noiseless_oracle() {
    const auto start = Clock::now();
    synthetic::DgpSpec spec;
    spec.t = 500;
    spec.lambda = 1.5;
    spec.phi = 20.0;
    spec.gamma = 0.5;
    spec.mu = 0.01;
    spec.noise = synthetic::NoNoise{};
    spec.seed = 2024;
    const ClimateDataset ds = synthetic::simulate(spec);
    const auto grid = make_k_grid(10, 100);
    const SweepResult sweep = k_sweep(ds, grid);
    const std::array<double, 5> truth{spec.gamma, spec.mu, spec.lambda, spec.phi, 0.0};
    double worst = 0.0;
    for (const auto& fit : sweep.fits) {
        for (std::size_t j = 0; j < truth.size(); ++j) {
            worst = std::max(worst, std::abs(fit.coefficients[j] - truth[j]));
        }
    }
    const double elapsed = seconds_since(start);
    const bool ok = worst < 1e-6 && elapsed < 5.0;
    return {ok ? Outcome::Pass : Outcome::Fail,
            fmt::format("max |error| over 5 coefficients and K=10..100: {:.3g} (< 1e-6); {:.2f}s (< 5s)", worst,
                        elapsed)};
}

struct McSummary {
    double median_lambda;
    double median_phi;
    double coverage;
    double seconds;
};

McSummary run_monte_carlo(synthetic::Noise noise) {
    const auto start = Clock::now();
    synthetic::DgpSpec spec;
    spec.t = 2000;
    spec.lambda = 1.5;
    spec.phi = 20.0;
    spec.noise = noise;
    spec.seed = 20250101;
    const auto mc = synthetic::monte_carlo(spec, 200, 80);
    std::vector<double> lambdas, phis;
    std::size_t covered = 0;
    for (const auto& fit : mc.fits) {
        lambdas.push_back(fit.lambda());
        phis.push_back(fit.phi());
        if (confidence_interval(fit, Coefficient::Lambda, 0.95).contains(spec.lambda)) {
            ++covered;
        }
    }
    return {median(lambdas), median(phis), static_cast<double>(covered) / static_cast<double>(mc.fits.size()),
            seconds_since(start)};
}

Verdict monte_carlo_consistency() {
    const auto s = run_monte_carlo(synthetic::IidNormal{1.0});
    const bool ok = s.median_lambda >= 1.425 && s.median_lambda <= 1.575 && s.median_phi >= 18.0 &&
                    s.median_phi <= 22.0 && s.coverage >= 0.88 && s.coverage <= 0.99 && s.seconds < 120.0;
    return {ok ? Outcome::Pass : Outcome::Fail,
            fmt::format("median lambda {:.4f} in [1.425, 1.575]; median phi {:.3f} in [18, 22]; 95% CI coverage "
                        "{:.1f}% in [88, 99]; {:.2f}s",
                        s.median_lambda, s.median_phi, 100.0 * s.coverage, s.seconds)};
}

Verdict robustness_regime() {
    const auto s = run_monte_carlo(synthetic::Spiked{1.0, 0.05, 10.0});
    const bool ok = std::abs(s.median_lambda / 1.5 - 1.0) <= 0.10;
    return {ok ? Outcome::Pass : Outcome::Fail,
            fmt::format("spiked noise: median lambda {:.4f} (within 10% of 1.5); median phi {:.3f}; coverage {:.1f}%",
                        s.median_lambda, s.median_phi, 100.0 * s.coverage)};
}

Verdict closed_form_checks() {
    const double ecs = climate::ecs_from_lambda(1.33);
    const double rf = forcing::rf_co2(560.0, 280.0);
    const double share = climate::atmospheric_share(20.0);
    const double warming = climate::steady_state_warming(1.0, 10.0, 20.0);
    const auto band = climate::ecs_interval({1.488, 1.750, 0.95});
    const bool ok = std::abs(ecs - 2.79) <= 0.01 && std::abs(rf - 3.7084) <= 0.0005 &&
                    std::abs(share - 1.55) <= 1e-12 && std::abs(warming - 0.5) <= 1e-12 &&
                    round2(band.lower) == "2.12" && round2(band.upper) == "2.49";
    return {ok ? Outcome::Pass : Outcome::Fail,
            fmt::format("ECS(1.33)={:.4f}; RF(560,280)={:.5f}; share(20)={:.4f}; warming(1,10,20)={:.4f}; "
                        "ECS band [{}, {}]",
                        ecs, rf, share, warming, round2(band.lower), round2(band.upper))};
}

Verdict numerical_properties() {
    std::vector<std::string> failures;

    // Basis orthonormality at T = 10000.
    {
        const BasisMatrix basis(150, 10000);
        const Eigen::MatrixXd gram = basis.weights() * basis.weights().transpose();
        const double dev = (gram - Eigen::MatrixXd::Identity(150, 150)).cwiseAbs().maxCoeff();
        if (!(dev < 1e-3)) failures.push_back(fmt::format("orthonormality deviation {:.3g}", dev));
    }

    // QR against the normal-equations oracle on 50 random full-rank systems.
    std::mt19937_64 rng(606);
    std::normal_distribution<double> normal(0.0, 1.0);
    double worst_rel = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        TransformedSystem sys;
        sys.k = 6 + static_cast<std::size_t>(rep) * 3;
        sys.t = 10 * sys.k;
        sys.regressors.resize(static_cast<Eigen::Index>(sys.k), 5);
        sys.response.resize(static_cast<Eigen::Index>(sys.k));
        for (Eigen::Index i = 0; i < sys.regressors.size(); ++i) sys.regressors.data()[i] = normal(rng);
        for (Eigen::Index i = 0; i < sys.response.size(); ++i) sys.response[i] = normal(rng);
        const auto fit = ols_solve(sys);
        const auto expected = oracle::normal_equations(sys.regressors, sys.response);
        for (std::size_t j = 0; j < 5; ++j) {
            worst_rel = std::max(worst_rel, std::abs(fit.coefficients[j] - expected[j]) /
                                                std::max(std::abs(expected[j]), 1e-300));
        }
    }
    if (!(worst_rel < 1e-6)) failures.push_back(fmt::format("OLS vs oracle relative error {:.3g}", worst_rel));

    // Residual orthogonality on transformed synthetic systems.
    synthetic::DgpSpec spec;
    spec.t = 600;
    spec.gamma = 0.3;
    spec.mu = 0.02;
    spec.noise = synthetic::IidNormal{1.0};
    spec.seed = 77;
    const ClimateDataset ds = synthetic::simulate(spec);
    double worst_orth = 0.0;
    for (std::size_t k : {10u, 40u, 80u, 150u}) {
        const auto sys = build_transformed_system(ds, k);
        const auto fit = ols_solve(sys);
        for (Eigen::Index j = 0; j < 5; ++j) {
            worst_orth = std::max(worst_orth, std::abs(sys.regressors.col(j).dot(fit.residuals)) /
                                                  (sys.regressors.col(j).norm() * sys.response.norm()));
        }
    }
    if (!(worst_orth < 1e-6)) failures.push_back(fmt::format("residual orthogonality {:.3g}", worst_orth));

    // cumsum(diff(x)) = x - x[1], exact on integer-valued data.
    {
        std::uniform_int_distribution<int> ints(-1000, 1000);
        bool exact = true;
        for (int rep = 0; rep < 100; ++rep) {
            std::vector<double> v(2 + static_cast<std::size_t>(rep));
            for (auto& x : v) x = ints(rng);
            const TimeSeries x(1850, v);
            const auto back = cumulative_sum(first_difference(x));
            for (std::size_t t = 0; t < v.size(); ++t) exact = exact && back[t] == v[t] - v[0];
        }
        if (!exact) failures.push_back("cumsum/diff round trip not exact");
    }

    // Scale equivariance.
    {
        const double c = 2.75;
        const auto base = ols_solve(build_transformed_system(ds, 80));
        const auto f = ols_solve(build_transformed_system(ClimateDataset(ds.forcing().scaled(c), ds.temperature()), 80));
        const auto s = ols_solve(build_transformed_system(ClimateDataset(ds.forcing(), ds.temperature().scaled(c)), 80));
        double worst = 0.0;
        auto rel = [](double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); };
        for (std::size_t j = 0; j < 5; ++j) worst = std::max(worst, rel(f.coefficients[j], c * base.coefficients[j]));
        worst = std::max({worst, rel(s.lambda(), base.lambda() / c), rel(s.phi(), base.phi() / c),
                          rel(s.delta(), base.delta() / c), rel(s.gamma(), base.gamma()), rel(s.mu(), base.mu())});
        if (!(worst < 1e-10)) failures.push_back(fmt::format("scale equivariance relative error {:.3g}", worst));
    }

    if (failures.empty()) {
        return {Outcome::Pass, fmt::format("orthonormality, OLS oracle (max rel {:.2g}), orthogonality (max {:.2g}), "
                                           "round trip, equivariance all within tolerance",
                                           worst_rel, worst_orth)};
    }
    std::string detail;
    for (const auto& f : failures) detail += (detail.empty() ? "" : "; ") + f;
    return {Outcome::Fail, detail};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"1 observed-data reproduction", observed_reproduction},
        {"2 noiseless oracle", noiseless_oracle},
        {"3 Monte Carlo consistency", monte_carlo_consistency},
        {"4 robustness under spiked noise", robustness_regime},
        {"5 closed-form checks", closed_form_checks},
        {"6 numerical property suite", numerical_properties},
    };

    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {Outcome::Fail, fmt::format("exception: {}", e.what())};
        }
        const char* tag = v.outcome == Outcome::Pass ? "PASS" : v.outcome == Outcome::Fail ? "FAIL" : "SKIP";
        std::cout << fmt::format("[{}] criterion {}: {}\n", tag, name, v.detail);
        failed += v.outcome == Outcome::Fail;
    }
    std::cout << (failed == 0 ? "acceptance: all evaluated criteria passed\n"
                              : fmt::format("acceptance: {} criteria failed\n", failed));
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "taols/time_series.hpp"
#include "taols/transform.hpp"

namespace taols {

/// Coefficients of the regression, in regressor column order.
enum class Coefficient : std::size_t {
    Gamma = 0,   ///< constant
    Mu = 1,      ///< per-year trend
    Lambda = 2,  ///< cointegrating coefficient, W/m^2 per deg C
    Phi = 3,     ///< heat feedback, W-yr/m^2 per deg C
    Delta = 4,   ///< coefficient on the first difference of temperature
};

inline constexpr std::array<std::string_view, kNumRegressors> kCoefficientNames = {
    "gamma", "mu", "lambda", "phi", "delta"};

std::string_view coefficient_name(Coefficient c);

/// Throws std::invalid_argument for names outside kCoefficientNames.
Coefficient parse_coefficient(std::string_view name);

enum class VarianceEstimator {
    Homoskedastic,  ///< s^2 (X'X)^-1 with s^2 = RSS / (K - 5)
    Robust,         ///< HC1 sandwich, K/(K-5) * (X'X)^-1 X' diag(e^2) X (X'X)^-1
};

struct TaolsFit {
    std::array<double, kNumRegressors> coefficients{};  ///< gamma, mu, lambda, phi, delta
    std::array<double, kNumRegressors> se{};
    Eigen::VectorXd residuals;
    double rss = 0.0;
    double residual_variance = 0.0;
    std::size_t k = 0;
    std::size_t t = 0;
    std::size_t dof = 0;
    VarianceEstimator variance = VarianceEstimator::Homoskedastic;

    double coefficient(Coefficient c) const { return coefficients[static_cast<std::size_t>(c)]; }
    double standard_error(Coefficient c) const { return se[static_cast<std::size_t>(c)]; }
    double gamma() const { return coefficient(Coefficient::Gamma); }
    double mu() const { return coefficient(Coefficient::Mu); }
    double lambda() const { return coefficient(Coefficient::Lambda); }
    double phi() const { return coefficient(Coefficient::Phi); }
    double delta() const { return coefficient(Coefficient::Delta); }
};

struct ConfidenceInterval {
    double lower = 0.0;
    double upper = 0.0;
    double level = 0.95;

    bool contains(double x) const noexcept { return lower <= x && x <= upper; }
    bool contains(const ConfidenceInterval& other) const noexcept {
        return lower <= other.lower && other.upper <= upper;
    }
};

/// Relative norm below which a column counts as collinear with the ones before it.
inline constexpr double kRankTolerance = 1e-10;

/**
 * @brief Least squares on the transformed system via Householder QR.
 *
 * The trend column is divided by T before factorization and the resulting
 * estimate (and its standard error) multiplied back by 1/T, which leaves
 * every other estimate unchanged.
 *
 * Throws InsufficientKError when K < 6 and SingularDesignError naming the
 * first column whose norm after orthogonalization against the preceding
 * columns drops below kRankTolerance times its original norm.
 */
TaolsFit ols_solve(const TransformedSystem& system,
                   VarianceEstimator variance = VarianceEstimator::Homoskedastic);

/// Same, without the internal trend rescaling. Exposed for the rescaling identity tests.
TaolsFit ols_solve_unscaled(const TransformedSystem& system,
                            VarianceEstimator variance = VarianceEstimator::Homoskedastic);

/// Two-sided Student-t quantile t_{dof, p}.
double student_t_quantile(double dof, double p);

/// estimate +/- t_{dof,(1+level)/2} * se. Throws DomainError for level outside (0,1) or dof < 1.
ConfidenceInterval confidence_interval(const TaolsFit& fit, Coefficient coefficient, double level = 0.95);
ConfidenceInterval confidence_interval(const TaolsFit& fit, std::string_view coefficient, double level = 0.95);

struct Range {
    double min = 0.0;
    double mean = 0.0;
    double max = 0.0;
};

struct SweepSummary {
    Range lambda;
    Range phi;
};

struct SweepResult {
    std::vector<std::size_t> grid;
    std::vector<TaolsFit> fits;
    SweepSummary summary;
};

/// k_min, k_min + step, ..., up to and including k_max when reachable.
std::vector<std::size_t> make_k_grid(std::size_t k_min, std::size_t k_max, std::size_t step = 1);

/// 10..150 step 1.
std::vector<std::size_t> default_k_grid();

struct SweepOptions {
    VarianceEstimator variance = VarianceEstimator::Homoskedastic;
    FirstDifference convention = FirstDifference::ZeroAtStart;
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/**
 * @brief Fit every K of the grid.
 *
 * The grid must be strictly increasing with 6 <= K <= T for every entry; the
 * first offending value is reported via InvalidKError before any fitting.
 * Fits run in parallel and are returned in grid order.
 */
SweepResult k_sweep(const ClimateDataset& dataset, std::span<const std::size_t> grid,
                    const SweepOptions& options = {});

SweepSummary summarize(std::span<const TaolsFit> fits);

}  // namespace taols

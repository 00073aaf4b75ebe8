#include "taols/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/math/distributions/students_t.hpp>
#include <fmt/format.h>

#include "taols/errors.hpp"
#include "taols/parallel.hpp"

namespace taols {

std::string_view coefficient_name(Coefficient c) {
    return kCoefficientNames[static_cast<std::size_t>(c)];
}

Coefficient parse_coefficient(std::string_view name) {
    for (std::size_t i = 0; i < kCoefficientNames.size(); ++i) {
        if (kCoefficientNames[i] == name) {
            return static_cast<Coefficient>(i);
        }
    }
    throw std::invalid_argument(fmt::format("unknown coefficient '{}'", name));
}

namespace {

constexpr std::size_t kMinK = kNumRegressors + 1;

/// Householder QR least squares with a column-by-column rank check. Columns are
/// equilibrated to unit norm before factorization and the scaling undone afterwards.
TaolsFit householder_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, VarianceEstimator variance) {
    const Eigen::Index n = x.rows();
    const Eigen::Index p = x.cols();
    if (n < static_cast<Eigen::Index>(kMinK)) {
        throw InsufficientKError(
            fmt::format("K = {} leaves no residual degrees of freedom; need K >= {}", n, kMinK), static_cast<long>(n));
    }

    Eigen::VectorXd scale(p);
    for (Eigen::Index j = 0; j < p; ++j) {
        const double norm = x.col(j).norm();
        if (norm == 0.0 || !std::isfinite(norm)) {
            const auto name = std::string(kRegressorNames[static_cast<std::size_t>(j)]);
            throw SingularDesignError(fmt::format("design is rank deficient: column '{}' is zero", name), name);
        }
        scale[j] = 1.0 / norm;
    }
    Eigen::MatrixXd a = x * scale.asDiagonal();
    Eigen::VectorXd qty = y;
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(p, p);

    for (Eigen::Index j = 0; j < p; ++j) {
        auto sub = a.col(j).tail(n - j);
        const double remaining = sub.norm();
        if (remaining < kRankTolerance) {  // column j has unit norm before orthogonalization
            const auto name = std::string(kRegressorNames[static_cast<std::size_t>(j)]);
            throw SingularDesignError(
                fmt::format("design is rank deficient: column '{}' is collinear with earlier columns", name), name);
        }
        const double alpha = sub[0] >= 0.0 ? -remaining : remaining;
        Eigen::VectorXd v = sub;
        v[0] -= alpha;
        v /= v.norm();

        auto block = a.block(j, j, n - j, p - j);
        block.noalias() -= 2.0 * v * (v.transpose() * block);
        auto tail = qty.tail(n - j);
        tail -= 2.0 * v * v.dot(tail);

        r.row(j).tail(p - j) = a.row(j).tail(p - j);
        r(j, j) = alpha;
    }

    const auto upper = r.triangularView<Eigen::Upper>();
    const Eigen::VectorXd beta = scale.asDiagonal() * upper.solve(qty.head(p));
    const Eigen::MatrixXd r_inv = scale.asDiagonal() * upper.solve(Eigen::MatrixXd::Identity(p, p));
    const Eigen::MatrixXd xtx_inv = r_inv * r_inv.transpose();

    TaolsFit fit;
    fit.residuals = y - x * beta;
    fit.rss = fit.residuals.squaredNorm();
    fit.k = static_cast<std::size_t>(n);
    fit.dof = static_cast<std::size_t>(n - p);
    fit.residual_variance = fit.rss / static_cast<double>(fit.dof);
    fit.variance = variance;

    Eigen::MatrixXd cov;
    if (variance == VarianceEstimator::Homoskedastic) {
        cov = fit.residual_variance * xtx_inv;
    } else {
        const Eigen::MatrixXd weighted = x.array().colwise() * fit.residuals.array();
        const Eigen::MatrixXd meat = weighted.transpose() * weighted;
        cov = (static_cast<double>(n) / static_cast<double>(fit.dof)) * (xtx_inv * meat * xtx_inv);
    }
    for (Eigen::Index j = 0; j < p; ++j) {
        fit.coefficients[static_cast<std::size_t>(j)] = beta[j];
        fit.se[static_cast<std::size_t>(j)] = std::sqrt(std::max(0.0, cov(j, j)));
    }
    return fit;
}

void check_shape(const TransformedSystem& system) {
    if (system.regressors.cols() != static_cast<Eigen::Index>(kNumRegressors) ||
        system.regressors.rows() != system.response.size()) {
        throw AlignmentError(fmt::format("transformed system has shape {}x{} with {} responses",
                                         system.regressors.rows(), system.regressors.cols(), system.response.size()));
    }
}

}  // namespace

TaolsFit ols_solve_unscaled(const TransformedSystem& system, VarianceEstimator variance) {
    check_shape(system);
    TaolsFit fit = householder_fit(system.regressors, system.response, variance);
    fit.t = system.t;
    return fit;
}

TaolsFit ols_solve(const TransformedSystem& system, VarianceEstimator variance) {
    check_shape(system);
    const auto trend = static_cast<Eigen::Index>(Regressor::Trend);
    const double t = static_cast<double>(std::max<std::size_t>(system.t, 1));

    Eigen::MatrixXd x = system.regressors;
    x.col(trend) /= t;
    TaolsFit fit = householder_fit(x, system.response, variance);
    fit.coefficients[static_cast<std::size_t>(trend)] /= t;
    fit.se[static_cast<std::size_t>(trend)] /= t;
    fit.t = system.t;
    return fit;
}

double student_t_quantile(double dof, double p) {
    if (!(dof > 0.0)) {
        throw DomainError(fmt::format("Student-t degrees of freedom must be positive, got {}", dof));
    }
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError(fmt::format("quantile probability must lie in (0, 1), got {}", p));
    }
    const boost::math::students_t dist(dof);
    return boost::math::quantile(dist, p);
}

ConfidenceInterval confidence_interval(const TaolsFit& fit, Coefficient coefficient, double level) {
    if (!(level > 0.0 && level < 1.0)) {
        throw DomainError(fmt::format("confidence level must lie in (0, 1), got {}", level));
    }
    if (fit.dof < 1) {
        throw InsufficientKError("confidence interval needs at least one degree of freedom", static_cast<long>(fit.k));
    }
    const double estimate = fit.coefficient(coefficient);
    const double half = student_t_quantile(static_cast<double>(fit.dof), 0.5 * (1.0 + level)) *
                        fit.standard_error(coefficient);
    return {estimate - half, estimate + half, level};
}

ConfidenceInterval confidence_interval(const TaolsFit& fit, std::string_view coefficient, double level) {
    return confidence_interval(fit, parse_coefficient(coefficient), level);
}

std::vector<std::size_t> make_k_grid(std::size_t k_min, std::size_t k_max, std::size_t step) {
    if (step == 0) {
        throw std::invalid_argument("K grid step must be positive");
    }
    if (k_min > k_max) {
        throw std::invalid_argument(fmt::format("K grid minimum {} exceeds maximum {}", k_min, k_max));
    }
    std::vector<std::size_t> grid;
    for (std::size_t k = k_min; k <= k_max; k += step) {
        grid.push_back(k);
    }
    return grid;
}

std::vector<std::size_t> default_k_grid() {
    return make_k_grid(10, 150, 1);
}

SweepSummary summarize(std::span<const TaolsFit> fits) {
    SweepSummary summary;
    if (fits.empty()) {
        return summary;
    }
    auto range_of = [&](Coefficient c) {
        Range r{std::numeric_limits<double>::infinity(), 0.0, -std::numeric_limits<double>::infinity()};
        for (const auto& fit : fits) {
            const double x = fit.coefficient(c);
            r.min = std::min(r.min, x);
            r.max = std::max(r.max, x);
            r.mean += x;
        }
        r.mean /= static_cast<double>(fits.size());
        return r;
    };
    summary.lambda = range_of(Coefficient::Lambda);
    summary.phi = range_of(Coefficient::Phi);
    return summary;
}

SweepResult k_sweep(const ClimateDataset& dataset, std::span<const std::size_t> grid, const SweepOptions& options) {
    if (grid.empty()) {
        throw InvalidKError("K grid is empty", 0);
    }
    const std::size_t t =
        options.convention == FirstDifference::DropFirst ? dataset.size() - 1 : dataset.size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const std::size_t k = grid[i];
        if (k < kMinK || k > t) {
            throw InvalidKError(fmt::format("K = {} is outside the admissible range [{}, {}]", k, kMinK, t),
                                static_cast<long>(k));
        }
        if (i > 0 && k <= grid[i - 1]) {
            throw InvalidKError(fmt::format("K grid must be strictly increasing; {} follows {}", k, grid[i - 1]),
                                static_cast<long>(k));
        }
    }

    // Row i of a transformed system does not depend on K, so every K is a prefix of the largest.
    const TransformedSystem full = build_transformed_system(dataset, BasisMatrix(grid.back(), t), options.convention);

    SweepResult result;
    result.grid.assign(grid.begin(), grid.end());
    result.fits.resize(grid.size());
    parallel_for(grid.size(), options.threads, [&](std::size_t i) {
        const auto k = static_cast<Eigen::Index>(grid[i]);
        TransformedSystem system{full.response.head(k), full.regressors.topRows(k), grid[i], t};
        result.fits[i] = ols_solve(system, options.variance);
    });
    result.summary = summarize(result.fits);
    return result;
}

}  // namespace taols

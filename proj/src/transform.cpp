#include "taols/transform.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "taols/errors.hpp"

namespace taols {

void BasisSpec::validate(std::size_t t) const {
    if (k < 1) {
        throw InvalidKError("K must be at least 1", static_cast<long>(k));
    }
    if (k > t) {
        throw InvalidKError(fmt::format("K = {} exceeds the sample length T = {}", k, t), static_cast<long>(k));
    }
}

double basis_fn(std::size_t i, double r) {
    if (i < 1) {
        throw DomainError("basis index must be at least 1");
    }
    if (!(r >= 0.0 && r <= 1.0)) {
        throw DomainError(fmt::format("basis argument r = {} outside [0, 1]", r));
    }
    return std::numbers::sqrt2 * std::sin((static_cast<double>(i) - 0.5) * std::numbers::pi * r);
}

BasisMatrix::BasisMatrix(std::size_t k, std::size_t t) {
    BasisSpec{k}.validate(t);
    weights_.resize(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(t));
    const double scale = 1.0 / std::sqrt(static_cast<double>(t));
    for (std::size_t i = 1; i <= k; ++i) {
        for (std::size_t s = 1; s <= t; ++s) {
            const double r = static_cast<double>(s) / static_cast<double>(t);
            weights_(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(s - 1)) = scale * basis_fn(i, r);
        }
    }
}

Eigen::VectorXd BasisMatrix::apply(std::span<const double> x) const {
    if (x.size() != t()) {
        throw AlignmentError(fmt::format("series of length {} does not match basis length {}", x.size(), t()));
    }
    Eigen::VectorXd out(weights_.rows());
    for (Eigen::Index i = 0; i < weights_.rows(); ++i) {
        double acc = 0.0;
        for (Eigen::Index s = 0; s < weights_.cols(); ++s) {
            acc += weights_(i, s) * x[static_cast<std::size_t>(s)];
        }
        out[i] = acc;
    }
    return out;
}

Eigen::VectorXd transform_series(std::span<const double> x, std::size_t k) {
    return BasisMatrix(k, x.size()).apply(x);
}

namespace {

struct RegressionSeries {
    std::vector<double> cum_forcing;
    std::vector<double> cum_temperature;
    std::vector<double> temperature;
    std::vector<double> temperature_diff;
};

std::vector<double> to_vector(const TimeSeries& x) {
    return {x.values().begin(), x.values().end()};
}

/// The only place that decides what happens to the undefined first difference.
RegressionSeries regression_series(const ClimateDataset& dataset, FirstDifference convention) {
    RegressionSeries out{
        to_vector(cumulative_sum(dataset.forcing())),
        to_vector(cumulative_sum(dataset.temperature())),
        to_vector(dataset.temperature()),
        to_vector(first_difference(dataset.temperature())),
    };
    if (convention == FirstDifference::DropFirst) {
        for (auto* v : {&out.cum_forcing, &out.cum_temperature, &out.temperature, &out.temperature_diff}) {
            v->erase(v->begin());
        }
    }
    return out;
}

std::size_t rows_used(const ClimateDataset& dataset, FirstDifference convention) {
    return convention == FirstDifference::DropFirst ? dataset.size() - 1 : dataset.size();
}

}  // namespace

TransformedSystem build_transformed_system(const ClimateDataset& dataset, std::size_t k,
                                           FirstDifference convention) {
    const std::size_t t = rows_used(dataset, convention);
    BasisSpec{k}.validate(t);
    return build_transformed_system(dataset, BasisMatrix(k, t), convention);
}

TransformedSystem build_transformed_system(const ClimateDataset& dataset, const BasisMatrix& basis,
                                           FirstDifference convention) {
    const std::size_t t = rows_used(dataset, convention);
    if (basis.t() != t) {
        throw AlignmentError(fmt::format("basis built for T = {} but the regression uses {} rows", basis.t(), t));
    }
    const RegressionSeries series = regression_series(dataset, convention);

    std::vector<double> constant(t, 1.0);
    std::vector<double> trend(t);
    for (std::size_t s = 0; s < t; ++s) {
        trend[s] = static_cast<double>(s + 1);
    }

    TransformedSystem system;
    system.k = basis.k();
    system.t = t;
    system.response = basis.apply(series.cum_forcing);
    system.regressors.resize(static_cast<Eigen::Index>(basis.k()), static_cast<Eigen::Index>(kNumRegressors));
    auto set_column = [&](Regressor r, const std::vector<double>& x) {
        system.regressors.col(static_cast<Eigen::Index>(r)) = basis.apply(x);
    };
    set_column(Regressor::Constant, constant);
    set_column(Regressor::Trend, trend);
    set_column(Regressor::CumTemperature, series.cum_temperature);
    set_column(Regressor::Temperature, series.temperature);
    set_column(Regressor::TemperatureDiff, series.temperature_diff);
    return system;
}

}  // namespace taols

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "taols/time_series.hpp"

namespace taols {

/// Number of regressors in the transformed and augmented regression.
inline constexpr std::size_t kNumRegressors = 5;

/// Column order of TransformedSystem::regressors.
enum class Regressor : std::size_t {
    Constant = 0,        ///< deterministic 1
    Trend = 1,           ///< deterministic t = 1..T (raw, not rescaled)
    CumTemperature = 2,  ///< S_t, partial sums of temperature
    Temperature = 3,     ///< s_t
    TemperatureDiff = 4, ///< first difference of s_t
};

inline constexpr std::array<std::string_view, kNumRegressors> kRegressorNames = {
    "constant", "trend", "cum_temperature", "temperature", "temperature_diff"};

inline std::string_view regressor_name(Regressor r) {
    return kRegressorNames[static_cast<std::size_t>(r)];
}

/// Number of basis functions K for a sample of length T.
struct BasisSpec {
    std::size_t k;

    /// Throws InvalidKError if k < 1 or k > t.
    void validate(std::size_t t) const;
};

/// sqrt(2) * sin((i - 1/2) * pi * r). Throws DomainError if i < 1 or r outside [0, 1].
double basis_fn(std::size_t i, double r);

/**
 * @brief K x T matrix of basis values phi_i(t/T) / sqrt(T).
 *
 * Row i-1 holds basis function i evaluated at t/T for t = 1..T, already
 * carrying the 1/sqrt(T) factor, so a transform is a single dot product per
 * row. The dot product runs over t in increasing order.
 */
class BasisMatrix {
public:
    BasisMatrix(std::size_t k, std::size_t t);

    std::size_t k() const noexcept { return static_cast<std::size_t>(weights_.rows()); }
    std::size_t t() const noexcept { return static_cast<std::size_t>(weights_.cols()); }
    const Eigen::MatrixXd& weights() const noexcept { return weights_; }

    /// Transform one series of length T into K coefficients.
    Eigen::VectorXd apply(std::span<const double> x) const;

private:
    Eigen::MatrixXd weights_;
};

/// V[i] = (1/sqrt(T)) * sum_t x[t] * basis_fn(i, t/T), i = 1..K.
Eigen::VectorXd transform_series(std::span<const double> x, std::size_t k);

inline Eigen::VectorXd transform_series(const TimeSeries& x, std::size_t k) {
    return transform_series(x.values(), k);
}

/// Transformed response and K x 5 regressor matrix (columns ordered as Regressor).
struct TransformedSystem {
    Eigen::VectorXd response;
    Eigen::MatrixXd regressors;
    std::size_t k = 0;
    std::size_t t = 0;
};

/// How the undefined first difference at t = 1 is handled.
enum class FirstDifference {
    ZeroAtStart,  ///< keep all T rows, first difference at t = 1 is 0
    DropFirst,    ///< drop t = 1 from every series before transforming
};

/**
 * @brief Build the transformed and augmented system for one K.
 *
 * Response is the transform of cumulated forcing F_t. Regressors are the
 * transforms of 1, t, S_t, s_t and the first difference of s_t, in that order.
 */
TransformedSystem build_transformed_system(const ClimateDataset& dataset, std::size_t k,
                                           FirstDifference convention = FirstDifference::ZeroAtStart);

/// Same as above with a precomputed basis; basis.t() must match the number of rows used.
TransformedSystem build_transformed_system(const ClimateDataset& dataset, const BasisMatrix& basis,
                                           FirstDifference convention = FirstDifference::ZeroAtStart);

}  // namespace taols

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace taols {

/**
 * @brief Annual, equally spaced series of real observations.
 *
 * Observation k (0-based) belongs to calendar year start_year() + k. Years are
 * metadata only; model arithmetic works on the index t = 1..T. Instances are
 * immutable once constructed.
 */
class TimeSeries {
public:
    /// Throws InvalidSeriesError if fewer than two values or any value is non-finite.
    TimeSeries(int start_year, std::vector<double> values);

    int start_year() const noexcept { return start_year_; }
    int end_year() const noexcept { return start_year_ + static_cast<int>(values_.size()) - 1; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    double operator[](std::size_t i) const { return values_[i]; }

    bool aligned_with(const TimeSeries& other) const noexcept {
        return start_year_ == other.start_year_ && values_.size() == other.values_.size();
    }

    /// Sub-series covering [first_year, last_year]; both must lie inside the series.
    TimeSeries slice_years(int first_year, int last_year) const;

    TimeSeries scaled(double factor) const;

    friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

private:
    int start_year_;
    std::vector<double> values_;
};

/// Aligned forcing (W/m^2) and temperature anomaly (deg C) over a common year range.
class ClimateDataset {
public:
    /// Throws AlignmentError unless both series share start year and length.
    ClimateDataset(TimeSeries forcing, TimeSeries temperature, std::string label = {});

    const TimeSeries& forcing() const noexcept { return forcing_; }
    const TimeSeries& temperature() const noexcept { return temperature_; }
    const std::string& label() const noexcept { return label_; }
    std::size_t size() const noexcept { return forcing_.size(); }
    int start_year() const noexcept { return forcing_.start_year(); }
    int end_year() const noexcept { return forcing_.end_year(); }

    friend bool operator==(const ClimateDataset&, const ClimateDataset&) = default;

private:
    TimeSeries forcing_;
    TimeSeries temperature_;
    std::string label_;
};

/// Partial sums: out[t] = x[1] + ... + x[t].
TimeSeries cumulative_sum(const TimeSeries& x);

/// Backward difference with the first entry fixed at zero: out[1] = 0, out[t] = x[t] - x[t-1].
TimeSeries first_difference(const TimeSeries& x);

/// Backward difference that drops t = 1 instead; the series starts one year later.
TimeSeries first_difference_dropping_first(const TimeSeries& x);

}  // namespace taols

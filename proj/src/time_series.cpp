#include "taols/time_series.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "taols/errors.hpp"

namespace taols {

const char* to_string(DataErrorKind kind) noexcept {
    switch (kind) {
        case DataErrorKind::MissingFile: return "missing file";
        case DataErrorKind::MissingHeader: return "missing header";
        case DataErrorKind::MalformedRow: return "malformed row";
        case DataErrorKind::NonNumeric: return "non-numeric cell";
        case DataErrorKind::Unsorted: return "unsorted years";
        case DataErrorKind::YearGap: return "gap in years";
        case DataErrorKind::EmptyIntersection: return "empty intersection";
    }
    return "data error";
}

DataError::DataError(DataErrorKind kind, const std::string& what)
    : Error(fmt::format("{}: {}", to_string(kind), what)), kind_(kind) {}

TimeSeries::TimeSeries(int start_year, std::vector<double> values)
    : start_year_(start_year), values_(std::move(values)) {
    if (values_.size() < 2) {
        throw InvalidSeriesError(
            fmt::format("time series needs at least 2 observations, got {}", values_.size()));
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw InvalidSeriesError(
                fmt::format("non-finite value at year {}", start_year_ + static_cast<int>(i)));
        }
    }
}

TimeSeries TimeSeries::slice_years(int first_year, int last_year) const {
    if (first_year < start_year_ || last_year > end_year() || first_year > last_year) {
        throw InvalidSeriesError(fmt::format("year range {}-{} outside series {}-{}", first_year,
                                             last_year, start_year_, end_year()));
    }
    const auto begin = values_.begin() + (first_year - start_year_);
    const auto end = values_.begin() + (last_year - start_year_ + 1);
    return TimeSeries(first_year, std::vector<double>(begin, end));
}

TimeSeries TimeSeries::scaled(double factor) const {
    std::vector<double> out(values_);
    for (double& x : out) {
        x *= factor;
    }
    return TimeSeries(start_year_, std::move(out));
}

ClimateDataset::ClimateDataset(TimeSeries forcing, TimeSeries temperature, std::string label)
    : forcing_(std::move(forcing)), temperature_(std::move(temperature)), label_(std::move(label)) {
    if (!forcing_.aligned_with(temperature_)) {
        throw AlignmentError(fmt::format(
            "forcing ({}-{}) and temperature ({}-{}) are not aligned", forcing_.start_year(),
            forcing_.end_year(), temperature_.start_year(), temperature_.end_year()));
    }
}

TimeSeries cumulative_sum(const TimeSeries& x) {
    std::vector<double> out(x.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += x[i];
        out[i] = acc;
    }
    return TimeSeries(x.start_year(), std::move(out));
}

TimeSeries first_difference(const TimeSeries& x) {
    std::vector<double> out(x.size());
    out[0] = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        out[i] = x[i] - x[i - 1];
    }
    return TimeSeries(x.start_year(), std::move(out));
}

TimeSeries first_difference_dropping_first(const TimeSeries& x) {
    std::vector<double> out(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i) {
        out[i - 1] = x[i] - x[i - 1];
    }
    return TimeSeries(x.start_year() + 1, std::move(out));
}

}  // namespace taols

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "taols/time_series.hpp"

namespace taols {

/// Column names of the combined dataset file.
inline constexpr std::string_view kYearColumn = "year";
inline constexpr std::string_view kForcingColumn = "forcing_wm2";
inline constexpr std::string_view kTemperatureColumn = "temp_anomaly_c";

/**
 * @brief Parse a combined `year,forcing_wm2,temp_anomaly_c` CSV.
 *
 * A header row is required; column order is free but all three names must be
 * present. Rows must be strictly ascending by year with no gaps. Blank lines
 * are ignored. `source` is used in diagnostics and as the dataset label.
 */
ClimateDataset parse_dataset(std::istream& in, const std::string& source);

/// Parse a `year,<value>` CSV with a header; the second column name is free.
TimeSeries parse_series(std::istream& in, const std::string& source);

/// Load a combined dataset file.
ClimateDataset load_dataset(const std::filesystem::path& path);

/// Two-file mode: forcing and temperature in separate `year,value` files, intersected on year.
ClimateDataset load_dataset(const std::filesystem::path& forcing_path,
                            const std::filesystem::path& temperature_path);

TimeSeries load_series(const std::filesystem::path& path);

/// Trim two series to their common year range; throws DataError (EmptyIntersection) when disjoint.
ClimateDataset intersect(const TimeSeries& forcing, const TimeSeries& temperature,
                         std::string label = {});

/// Write the combined schema. Values use round-trip precision.
void write_dataset(std::ostream& out, const ClimateDataset& dataset);

}  // namespace taols

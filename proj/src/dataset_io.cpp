#include "taols/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "taols/errors.hpp"
#include "taols/report.hpp"

namespace taols {

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = line.find(',', pos);
        out.push_back(trim(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

struct Table {
    std::vector<std::string> header;
    std::vector<int> years;
    std::vector<std::vector<double>> columns;  // value columns, header[1..]
};

int parse_year(std::string_view cell, const std::string& where) {
    int year = 0;
    const auto* end = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(cell.data(), end, year);
    if (cell.empty() || ec != std::errc{} || ptr != end) {
        throw DataError(DataErrorKind::NonNumeric, fmt::format("{}: year '{}' is not an integer", where, cell));
    }
    return year;
}

double parse_value(std::string_view cell, std::string_view column, const std::string& where) {
    if (!cell.empty() && cell.front() == '+') {
        cell.remove_prefix(1);
    }
    double value = 0.0;
    const auto* end = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(cell.data(), end, value);
    if (cell.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw DataError(DataErrorKind::NonNumeric,
                        fmt::format("{}: {} value '{}' is not a finite number", where, column, cell));
    }
    return value;
}

/// Reads a header plus rows; the year column is located by name and checked for order and gaps.
Table read_table(std::istream& in, const std::string& source) {
    Table table;
    std::string line;
    std::size_t line_no = 0;
    std::size_t year_index = 0;
    bool have_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        if (line_no == 1 && view.starts_with("\xEF\xBB\xBF")) {
            view.remove_prefix(3);
        }
        if (trim(view).empty()) {
            continue;
        }
        const auto cells = split(view);
        if (!have_header) {
            const auto it = std::find(cells.begin(), cells.end(), kYearColumn);
            if (it == cells.end()) {
                throw DataError(DataErrorKind::MissingHeader,
                                fmt::format("{}: header row must contain a '{}' column", source, kYearColumn));
            }
            year_index = static_cast<std::size_t>(it - cells.begin());
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != year_index) {
                    table.header.emplace_back(cells[i]);
                }
            }
            if (table.header.empty()) {
                throw DataError(DataErrorKind::MissingHeader,
                                fmt::format("{}: header has no value columns", source));
            }
            table.columns.resize(table.header.size());
            have_header = true;
            continue;
        }

        const std::string where = fmt::format("{} line {}", source, line_no);
        if (cells.size() != table.header.size() + 1) {
            throw DataError(DataErrorKind::MalformedRow,
                            fmt::format("{}: expected {} fields, found {}", where, table.header.size() + 1,
                                        cells.size()));
        }
        const int year = parse_year(cells[year_index], where);
        if (!table.years.empty()) {
            const int prev = table.years.back();
            if (year <= prev) {
                throw DataError(DataErrorKind::Unsorted,
                                fmt::format("{}: year {} does not follow {}", where, year, prev));
            }
            if (year > prev + 1) {
                throw DataError(DataErrorKind::YearGap,
                                year == prev + 2
                                    ? fmt::format("{}: year {} is missing", where, prev + 1)
                                    : fmt::format("{}: years {}-{} are missing", where, prev + 1, year - 1));
            }
        }
        table.years.push_back(year);
        std::size_t c = 0;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i == year_index) {
                continue;
            }
            table.columns[c].push_back(parse_value(cells[i], table.header[c], where));
            ++c;
        }
    }
    if (!have_header) {
        throw DataError(DataErrorKind::MissingHeader, fmt::format("{}: file is empty", source));
    }
    if (table.years.size() < 2) {
        throw DataError(DataErrorKind::MalformedRow,
                        fmt::format("{}: need at least 2 data rows, found {}", source, table.years.size()));
    }
    return table;
}

std::size_t column_index(const Table& table, std::string_view name, const std::string& source) {
    const auto it = std::find(table.header.begin(), table.header.end(), name);
    if (it == table.header.end()) {
        throw DataError(DataErrorKind::MissingHeader,
                        fmt::format("{}: header must contain a '{}' column", source, name));
    }
    return static_cast<std::size_t>(it - table.header.begin());
}

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError(DataErrorKind::MissingFile, fmt::format("cannot open '{}'", path.string()));
    }
    return in;
}

}  // namespace

ClimateDataset parse_dataset(std::istream& in, const std::string& source) {
    Table table = read_table(in, source);
    const auto fi = column_index(table, kForcingColumn, source);
    const auto ti = column_index(table, kTemperatureColumn, source);
    const int start = table.years.front();
    return ClimateDataset(TimeSeries(start, std::move(table.columns[fi])),
                          TimeSeries(start, std::move(table.columns[ti])), source);
}

TimeSeries parse_series(std::istream& in, const std::string& source) {
    Table table = read_table(in, source);
    if (table.header.size() != 1) {
        throw DataError(DataErrorKind::MalformedRow,
                        fmt::format("{}: expected exactly one value column besides '{}', found {}", source,
                                    kYearColumn, table.header.size()));
    }
    return TimeSeries(table.years.front(), std::move(table.columns[0]));
}

ClimateDataset load_dataset(const std::filesystem::path& path) {
    auto in = open(path);
    return parse_dataset(in, path.string());
}

TimeSeries load_series(const std::filesystem::path& path) {
    auto in = open(path);
    return parse_series(in, path.string());
}

ClimateDataset load_dataset(const std::filesystem::path& forcing_path,
                            const std::filesystem::path& temperature_path) {
    const TimeSeries forcing = load_series(forcing_path);
    const TimeSeries temperature = load_series(temperature_path);
    return intersect(forcing, temperature,
                     fmt::format("{} + {}", forcing_path.string(), temperature_path.string()));
}

ClimateDataset intersect(const TimeSeries& forcing, const TimeSeries& temperature, std::string label) {
    const int first = std::max(forcing.start_year(), temperature.start_year());
    const int last = std::min(forcing.end_year(), temperature.end_year());
    if (last - first + 1 < 2) {
        throw DataError(DataErrorKind::EmptyIntersection,
                        fmt::format("forcing {}-{} and temperature {}-{} share fewer than 2 years",
                                    forcing.start_year(), forcing.end_year(), temperature.start_year(),
                                    temperature.end_year()));
    }
    return ClimateDataset(forcing.slice_years(first, last), temperature.slice_years(first, last),
                          std::move(label));
}

void write_dataset(std::ostream& out, const ClimateDataset& dataset) {
    out << kYearColumn << ',' << kForcingColumn << ',' << kTemperatureColumn << '\n';
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        out << dataset.start_year() + static_cast<int>(i) << ','
            << report::format_number(dataset.forcing()[i]) << ','
            << report::format_number(dataset.temperature()[i]) << '\n';
    }
}

}  // namespace taols

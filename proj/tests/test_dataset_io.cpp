#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "taols/dataset_io.hpp"
#include "taols/errors.hpp"

using namespace taols;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
    const fs::path dir = fs::path(TAOLS_TEST_TMP) / "dataset_io";
    fs::create_directories(dir);
    return dir;
}

fs::path write_tmp(const std::string& name, const std::string& content) {
    const auto path = tmp_dir() / name;
    std::ofstream(path, std::ios::binary) << content;
    return path;
}

std::string combined_rows(int first, int last) {
    std::string out = "year,forcing_wm2,temp_anomaly_c\n";
    for (int y = first; y <= last; ++y) {
        out += std::to_string(y) + "," + std::to_string(0.01 * (y - first)) + "," +
               std::to_string(-0.3 + 0.005 * (y - first)) + "\n";
    }
    return out;
}

std::string single_rows(int first, int last, double slope) {
    std::string out = "year,value\n";
    for (int y = first; y <= last; ++y) {
        out += std::to_string(y) + "," + std::to_string(slope * (y - first)) + "\n";
    }
    return out;
}

DataErrorKind kind_of(const std::string& text) {
    std::istringstream in(text);
    try {
        parse_dataset(in, "mem");
    } catch (const DataError& e) {
        return e.kind();
    }
    FAIL("expected a DataError");
    return DataErrorKind::MalformedRow;
}

}  // namespace

TEST_CASE("165-row file covering 1850-2014") {
    const auto path = write_tmp("full.csv", combined_rows(1850, 2014));
    const auto ds = load_dataset(path);
    CHECK(ds.size() == 165);
    CHECK(ds.start_year() == 1850);
    CHECK(ds.end_year() == 2014);
    CHECK(ds.forcing()[1] == doctest::Approx(0.01));
    CHECK(ds.temperature()[0] == doctest::Approx(-0.3));
}

TEST_CASE("header columns may appear in any order; BOM and CRLF tolerated") {
    std::istringstream in("\xEF\xBB\xBFtemp_anomaly_c,year,forcing_wm2\r\n0.1,2000,1.5\r\n\r\n0.2,2001,1.6\r\n");
    const auto ds = parse_dataset(in, "mem");
    CHECK(ds.start_year() == 2000);
    CHECK(ds.forcing()[1] == doctest::Approx(1.6));
    CHECK(ds.temperature()[1] == doctest::Approx(0.2));
}

TEST_CASE("a missing year is reported by name") {
    std::string text = combined_rows(1850, 1900);
    const auto pos = text.find("\n1875,");
    const auto end = text.find('\n', pos + 1);
    text.erase(pos, end - pos);
    std::istringstream in(text);
    try {
        parse_dataset(in, "gappy.csv");
        FAIL("expected a gap error");
    } catch (const DataError& e) {
        CHECK(e.kind() == DataErrorKind::YearGap);
        CHECK(std::string(e.what()).find("1875") != std::string::npos);
    }
}

TEST_CASE("distinct error kinds for each ingestion failure") {
    CHECK(kind_of("year,forcing_wm2,temp_anomaly_c\n1850,1.0\n1851,1,2\n") == DataErrorKind::MalformedRow);
    CHECK(kind_of("year,forcing_wm2,temp_anomaly_c\n1850,abc,0.1\n1851,1,2\n") == DataErrorKind::NonNumeric);
    CHECK(kind_of("year,forcing_wm2,temp_anomaly_c\n1850,,0.1\n1851,1,2\n") == DataErrorKind::NonNumeric);
    CHECK(kind_of("year,forcing_wm2,temp_anomaly_c\n18x0,1,0.1\n1851,1,2\n") == DataErrorKind::NonNumeric);
    CHECK(kind_of("year,forcing_wm2,temp_anomaly_c\n1851,1,0.1\n1850,1,2\n") == DataErrorKind::Unsorted);
    CHECK(kind_of("year,forcing_wm2,temp_anomaly_c\n1850,1,0.1\n1850,1,2\n") == DataErrorKind::Unsorted);
    CHECK(kind_of("year,forcing,temp_anomaly_c\n1850,1,0.1\n1851,1,2\n") == DataErrorKind::MissingHeader);
    CHECK(kind_of("1850,1,0.1\n1851,1,2\n") == DataErrorKind::MissingHeader);
    CHECK(kind_of("") == DataErrorKind::MissingHeader);
    CHECK_THROWS_AS(load_dataset(tmp_dir() / "does_not_exist.csv"), DataError);
    try {
        load_dataset(tmp_dir() / "does_not_exist.csv");
    } catch (const DataError& e) {
        CHECK(e.kind() == DataErrorKind::MissingFile);
    }
}

TEST_CASE("malformed row diagnostic names the line") {
    std::istringstream in("year,forcing_wm2,temp_anomaly_c\n1850,1,0.1\n1851,1\n");
    try {
        parse_dataset(in, "bad.csv");
        FAIL("expected an error");
    } catch (const DataError& e) {
        CHECK(std::string(e.what()).find("bad.csv line 3") != std::string::npos);
    }
}

TEST_CASE("two-file mode intersects the year ranges") {
    const auto forcing = write_tmp("forcing.csv", single_rows(1850, 2000, 0.02));
    const auto temperature = write_tmp("temperature.csv", single_rows(1900, 2014, 0.01));
    const auto ds = load_dataset(forcing, temperature);
    CHECK(ds.start_year() == 1900);
    CHECK(ds.end_year() == 2000);
    CHECK(ds.size() == 101);
    CHECK(ds.forcing()[0] == doctest::Approx(0.02 * 50));
    CHECK(ds.temperature()[0] == doctest::Approx(0.0));

    const auto late = write_tmp("late.csv", single_rows(2001, 2010, 1.0));
    try {
        load_dataset(forcing, late);
        FAIL("expected an empty intersection");
    } catch (const DataError& e) {
        CHECK(e.kind() == DataErrorKind::EmptyIntersection);
    }
}

TEST_CASE("loading is deterministic and write/parse round-trips") {
    const auto path = write_tmp("det.csv", combined_rows(1950, 2020));
    const auto a = load_dataset(path);
    const auto b = load_dataset(path);
    CHECK(a == b);

    std::ostringstream out;
    write_dataset(out, a);
    std::istringstream in(out.str());
    const auto c = parse_dataset(in, path.string());
    CHECK(c == a);
}

#include <doctest.h>

#include <random>
#include <vector>

#include "taols/errors.hpp"
#include "taols/time_series.hpp"

using namespace taols;

namespace {

std::vector<double> values(const TimeSeries& x) {
    return {x.values().begin(), x.values().end()};
}

TimeSeries random_series(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> dist(0.0, 3.0);
    std::vector<double> v(n);
    for (auto& x : v) x = dist(rng);
    return TimeSeries(1900, v);
}

}  // namespace

TEST_CASE("TimeSeries rejects short or non-finite input") {
    CHECK_THROWS_AS(TimeSeries(1850, {1.0}), InvalidSeriesError);
    CHECK_THROWS_AS(TimeSeries(1850, {}), InvalidSeriesError);
    CHECK_THROWS_AS(TimeSeries(1850, {1.0, std::numeric_limits<double>::quiet_NaN()}), InvalidSeriesError);
    const TimeSeries ok(1850, {1.0, 2.0, 3.0});
    CHECK(ok.end_year() == 1852);
    CHECK(values(ok.slice_years(1851, 1852)) == std::vector<double>{2.0, 3.0});
    CHECK_THROWS_AS(ok.slice_years(1849, 1851), InvalidSeriesError);
}

TEST_CASE("ClimateDataset requires aligned series") {
    CHECK_THROWS_AS(ClimateDataset(TimeSeries(1850, {1, 2}), TimeSeries(1851, {1, 2})), AlignmentError);
    CHECK_THROWS_AS(ClimateDataset(TimeSeries(1850, {1, 2}), TimeSeries(1850, {1, 2, 3})), AlignmentError);
    CHECK_NOTHROW(ClimateDataset(TimeSeries(1850, {1, 2}), TimeSeries(1850, {3, 4})));
}

TEST_CASE("cumulative_sum") {
    CHECK(values(cumulative_sum(TimeSeries(0, {1, 1, 1}))) == std::vector<double>{1, 2, 3});
    CHECK(values(cumulative_sum(TimeSeries(0, {0, 0, 0}))) == std::vector<double>{0, 0, 0});
    CHECK(values(cumulative_sum(TimeSeries(0, {2, -1, 3, 0}))) == std::vector<double>{2, 1, 4, 4});
    const auto out = cumulative_sum(TimeSeries(1977, {5, 6}));
    CHECK(out.start_year() == 1977);
    CHECK(out.size() == 2);
}

TEST_CASE("first_difference keeps T rows with zero at t = 1") {
    CHECK(values(first_difference(TimeSeries(0, {1, 2, 3}))) == std::vector<double>{0, 1, 1});
    CHECK(values(first_difference(TimeSeries(0, {5, 5, 5}))) == std::vector<double>{0, 0, 0});
    CHECK(values(first_difference(TimeSeries(0, {1, 4, 2}))) == std::vector<double>{0, 3, -2});

    const auto dropped = first_difference_dropping_first(TimeSeries(2000, {1, 4, 2}));
    CHECK(dropped.start_year() == 2001);
    CHECK(values(dropped) == std::vector<double>{3, -2});
}

TEST_CASE("cumsum of diff recovers the series minus its first value") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 100; ++rep) {
        const auto x = random_series(rng, 2 + rep);
        const auto back = cumulative_sum(first_difference(x));
        for (std::size_t t = 0; t < x.size(); ++t) {
            CHECK(back[t] == doctest::Approx(x[t] - x[0]).epsilon(1e-12).scale(10.0));
        }
    }
}

TEST_CASE("cumulative_sum is linear") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    for (int rep = 0; rep < 50; ++rep) {
        const auto x = random_series(rng, 40);
        const auto y = random_series(rng, 40);
        const double a = coef(rng);
        const double b = coef(rng);
        std::vector<double> combo(40);
        for (std::size_t i = 0; i < 40; ++i) combo[i] = a * x[i] + b * y[i];
        const auto lhs = cumulative_sum(TimeSeries(1900, combo));
        const auto cx = cumulative_sum(x);
        const auto cy = cumulative_sum(y);
        for (std::size_t i = 0; i < 40; ++i) {
            CHECK(lhs[i] == doctest::Approx(a * cx[i] + b * cy[i]).scale(100.0));
        }
    }
}

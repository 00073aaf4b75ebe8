#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "taols/estimator.hpp"
#include "taols/synthetic.hpp"

namespace taols::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 2,
    kDataError = 3,
    kNumericalFailure = 4,
};

enum class OutputFormat { Csv, Svg, Report };

struct RunConfig {
    std::optional<std::filesystem::path> input;        ///< combined CSV
    std::optional<std::filesystem::path> forcing;      ///< two-file mode
    std::optional<std::filesystem::path> temperature;  ///< two-file mode
    std::size_t k_min = 10;
    std::size_t k_max = 150;
    std::size_t k_step = 1;
    double level = 0.95;
    std::filesystem::path out_dir = ".";
    std::set<OutputFormat> formats{OutputFormat::Csv, OutputFormat::Svg, OutputFormat::Report};
    VarianceEstimator variance = VarianceEstimator::Homoskedastic;
    bool timestamp = true;
    unsigned threads = 0;
};

/// Output file names inside out_dir.
inline constexpr const char* kSweepCsvName = "sweep.csv";
inline constexpr const char* kLambdaSvgName = "lambda_ecs.svg";
inline constexpr const char* kPhiSvgName = "phi_share.svg";
inline constexpr const char* kReportName = "report.txt";

/// Load, sweep, and write artifacts. Diagnostics go to `err` as one line.
int run_estimate(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Simulate and write the combined CSV schema to `output`.
int run_simulate(const synthetic::DgpSpec& spec, const std::filesystem::path& output,
                 std::ostream& err);

int run_forcing_from_co2(const std::filesystem::path& input, const std::filesystem::path& output,
                         double baseline_ppm, std::ostream& err);

/// Full command-line entry point: `estimate`, `simulate`, `forcing-from-co2`.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace taols::cli

#include "taols/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>

#include "taols/dataset_io.hpp"
#include "taols/errors.hpp"
#include "taols/forcing.hpp"
#include "taols/report.hpp"

namespace taols::cli {

namespace {

constexpr std::size_t kMinK = kNumRegressors + 1;

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::filesystem::filesystem_error("cannot open for writing", path,
                                                std::make_error_code(std::errc::io_error));
    }
    out << content;
    out.flush();
    if (!out) {
        throw std::filesystem::filesystem_error("write failed", path, std::make_error_code(std::errc::io_error));
    }
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(now));
}

ClimateDataset load_input(const RunConfig& config) {
    if (config.input) {
        return load_dataset(*config.input);
    }
    return load_dataset(*config.forcing, *config.temperature);
}

/// Translates library exceptions into exit codes with a one-line diagnostic.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const InvalidKError& e) {
        err << "invalid K: " << e.what() << '\n';
        return kUsageError;
    } catch (const SingularDesignError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    } catch (const DataError& e) {
        err << "data error: " << e.what() << '\n';
        return kDataError;
    } catch (const InvalidSeriesError& e) {
        err << "data error: " << e.what() << '\n';
        return kDataError;
    } catch (const AlignmentError& e) {
        err << "data error: " << e.what() << '\n';
        return kDataError;
    } catch (const DomainError& e) {
        err << "data error: " << e.what() << '\n';
        return kDataError;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "I/O error: " << e.what() << '\n';
        return kDataError;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
}

}  // namespace

int run_estimate(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const bool combined = config.input.has_value();
    const bool split = config.forcing.has_value() || config.temperature.has_value();
    if (combined == split || (split && !(config.forcing && config.temperature))) {
        err << "usage error: give either --input or both --forcing and --temperature\n";
        return kUsageError;
    }
    if (config.k_min < kMinK) {
        err << fmt::format("invalid K: --k-min = {} is below the minimum of {}\n", config.k_min, kMinK);
        return kUsageError;
    }
    if (config.k_step == 0 || config.k_max < config.k_min) {
        err << fmt::format("invalid K: empty grid (k-min {}, k-max {}, k-step {})\n", config.k_min, config.k_max,
                           config.k_step);
        return kUsageError;
    }
    if (!(config.level > 0.0 && config.level < 1.0)) {
        err << fmt::format("usage error: --level = {} must lie in (0, 1)\n", config.level);
        return kUsageError;
    }

    return guarded(err, [&] {
        const ClimateDataset dataset = load_input(config);
        if (config.k_max > dataset.size()) {
            throw InvalidKError(fmt::format("--k-max = {} exceeds the sample length T = {} ({}-{})", config.k_max,
                                            dataset.size(), dataset.start_year(), dataset.end_year()),
                                static_cast<long>(config.k_max));
        }
        const auto grid = make_k_grid(config.k_min, config.k_max, config.k_step);
        const SweepResult sweep = k_sweep(dataset, grid, {config.variance, FirstDifference::ZeroAtStart, config.threads});
        const auto rows = report::tabulate(sweep, config.level);

        std::vector<std::pair<std::filesystem::path, std::string>> artifacts;
        if (config.formats.contains(OutputFormat::Csv)) {
            std::ostringstream s;
            report::write_sweep_csv(s, rows);
            artifacts.emplace_back(config.out_dir / kSweepCsvName, s.str());
        }
        if (config.formats.contains(OutputFormat::Svg)) {
            std::ostringstream a;
            report::write_lambda_ecs_svg(a, rows, config.level);
            artifacts.emplace_back(config.out_dir / kLambdaSvgName, a.str());
            std::ostringstream b;
            report::write_phi_share_svg(b, rows, config.level);
            artifacts.emplace_back(config.out_dir / kPhiSvgName, b.str());
        }
        std::ostringstream text;
        report::ReportContext context{dataset.label(), dataset.start_year(), dataset.end_year(), dataset.size(),
                                      config.level,    config.variance,      std::nullopt};
        if (config.timestamp) {
            context.timestamp = utc_timestamp();
        }
        report::write_text_report(text, sweep, context);
        if (config.formats.contains(OutputFormat::Report)) {
            artifacts.emplace_back(config.out_dir / kReportName, text.str());
        }

        std::filesystem::create_directories(config.out_dir);
        for (const auto& [path, content] : artifacts) {
            write_file(path, content);
        }
        out << text.str();
        for (const auto& [path, content] : artifacts) {
            out << "wrote " << path.string() << '\n';
        }
        return static_cast<int>(kSuccess);
    });
}

int run_simulate(const synthetic::DgpSpec& spec, const std::filesystem::path& output, std::ostream& err) {
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }
    return guarded(err, [&] {
        std::ostringstream s;
        write_dataset(s, synthetic::simulate(spec));
        if (output.has_parent_path()) {
            std::filesystem::create_directories(output.parent_path());
        }
        write_file(output, s.str());
        return static_cast<int>(kSuccess);
    });
}

int run_forcing_from_co2(const std::filesystem::path& input, const std::filesystem::path& output,
                         double baseline_ppm, std::ostream& err) {
    return guarded(err, [&] {
        const TimeSeries co2 = load_series(input);
        const TimeSeries rf = forcing::forcing_from_co2(co2, baseline_ppm);
        std::ostringstream s;
        s << kYearColumn << ',' << kForcingColumn << '\n';
        for (std::size_t i = 0; i < rf.size(); ++i) {
            s << rf.start_year() + static_cast<int>(i) << ',' << report::format_number(rf[i]) << '\n';
        }
        if (output.has_parent_path()) {
            std::filesystem::create_directories(output.parent_path());
        }
        write_file(output, s.str());
        return static_cast<int>(kSuccess);
    });
}

namespace {

/// Reads `key = value` lines; '#' starts a comment. Keys are long flag names without dashes.
std::vector<std::string> config_arguments(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw DataError(DataErrorKind::MissingFile, fmt::format("cannot open config file '{}'", path.string()));
    }
    std::vector<std::string> args;
    std::string line;
    std::size_t line_no = 0;
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) {
            return std::string{};
        }
        return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(
                fmt::format("{} line {}: expected 'key = value'", path.string(), line_no));
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (value == "true") {
            args.push_back("--" + key);
        } else if (value != "false") {
            args.push_back("--" + key);
            args.push_back(value);
        }
    }
    return args;
}

/// Removes `--config <path>` (or `--config=<path>`) from args and returns the path.
std::optional<std::string> take_config(std::vector<std::string>& args) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            std::string path = args[i + 1];
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            return path;
        }
        if (args[i].starts_with("--config=")) {
            std::string path = args[i].substr(9);
            args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
            return path;
        }
    }
    return std::nullopt;
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);

    // Config values go right after the subcommand so that later command-line flags win.
    if (const auto config = take_config(args)) {
        try {
            auto extra = config_arguments(*config);
            const auto pos = args.empty() || args.front().starts_with("-") ? args.begin() : args.begin() + 1;
            args.insert(pos, extra.begin(), extra.end());
        } catch (const DataError& e) {
            err << "data error: " << e.what() << '\n';
            return kDataError;
        } catch (const std::invalid_argument& e) {
            err << "usage error: " << e.what() << '\n';
            return kUsageError;
        }
    }

    CLI::App app{"Transformed and augmented OLS for multicointegrated forcing/temperature systems", "taols"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    std::string config_path;
    // Consumed before parsing; registered so it shows up in --help.
    app.add_option("--config", config_path, "key = value file of long flags; command-line flags take precedence");

    RunConfig run;
    std::string input, forcing_path, temperature_path, out_dir = ".";
    std::vector<std::string> formats;
    bool robust = false;
    bool no_timestamp = false;
    auto* estimate = app.add_subcommand("estimate", "Run the K sweep and write CSV, SVG and text artifacts");
    estimate->add_option("--input", input, "combined CSV with year,forcing_wm2,temp_anomaly_c");
    estimate->add_option("--forcing", forcing_path, "year,value forcing CSV (two-file mode)");
    estimate->add_option("--temperature", temperature_path, "year,value temperature CSV (two-file mode)");
    estimate->add_option("--k-min", run.k_min, "smallest K")->capture_default_str();
    estimate->add_option("--k-max", run.k_max, "largest K")->capture_default_str();
    estimate->add_option("--k-step", run.k_step, "K increment")->capture_default_str();
    estimate->add_option("--level", run.level, "confidence level")->capture_default_str();
    estimate->add_option("--out-dir", out_dir, "output directory")->capture_default_str();
    estimate->add_option("--format", formats, "any of csv, svg, report (default: all)")
        ->delimiter(',')
        ->check(CLI::IsMember({"csv", "svg", "report"}))
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    estimate->add_flag("--robust-se", robust, "heteroskedasticity-robust (HC1) standard errors");
    estimate->add_flag("--no-timestamp", no_timestamp, "omit the generation time from the report");
    estimate->add_option("--threads", run.threads, "worker threads (0 = all cores)")->capture_default_str();

    synthetic::DgpSpec dgp;
    std::string output, noise = "none";
    double sigma = 1.0, rho = 0.5, spike_prob = 0.05, spike_scale = 10.0;
    auto* simulate = app.add_subcommand("simulate", "Write a synthetic multicointegrated dataset");
    simulate->add_option("--out", output, "output CSV path")->required();
    simulate->add_option("--length", dgp.t, "number of years T")->capture_default_str();
    simulate->add_option("--lambda", dgp.lambda)->capture_default_str();
    simulate->add_option("--phi", dgp.phi)->capture_default_str();
    simulate->add_option("--gamma", dgp.gamma)->capture_default_str();
    simulate->add_option("--mu", dgp.mu)->capture_default_str();
    simulate->add_option("--noise", noise, "none, iid, ar1 or spiked")
        ->check(CLI::IsMember({"none", "iid", "ar1", "spiked"}))
        ->capture_default_str();
    simulate->add_option("--sigma", sigma, "noise standard deviation")->capture_default_str();
    simulate->add_option("--rho", rho, "AR(1) coefficient")->capture_default_str();
    simulate->add_option("--spike-prob", spike_prob)->capture_default_str();
    simulate->add_option("--spike-scale", spike_scale)->capture_default_str();
    simulate->add_option("--sigma-s", dgp.sigma_s, "temperature increment standard deviation")
        ->capture_default_str();
    simulate->add_option("--seed", dgp.seed)->capture_default_str();
    simulate->add_option("--start-year", dgp.start_year)->capture_default_str();

    std::string co2_input, co2_output;
    double baseline = forcing::kPreindustrialCo2Ppm;
    auto* co2 = app.add_subcommand("forcing-from-co2", "Convert a year,co2_ppm CSV to year,forcing_wm2");
    co2->add_option("--input", co2_input)->required();
    co2->add_option("--output", co2_output)->required();
    co2->add_option("--baseline", baseline, "reference concentration in ppm")->capture_default_str();

    std::vector<const char*> cargv{argv[0]};
    for (const auto& a : args) {
        cargv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kSuccess;
        }
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    }

    if (*estimate) {
        if (!input.empty()) run.input = input;
        if (!forcing_path.empty()) run.forcing = forcing_path;
        if (!temperature_path.empty()) run.temperature = temperature_path;
        run.out_dir = out_dir;
        if (!formats.empty()) {
            run.formats.clear();
            for (const auto& f : formats) {
                run.formats.insert(f == "csv" ? OutputFormat::Csv : f == "svg" ? OutputFormat::Svg : OutputFormat::Report);
            }
        }
        run.variance = robust ? VarianceEstimator::Robust : VarianceEstimator::Homoskedastic;
        run.timestamp = !no_timestamp;
        return run_estimate(run, out, err);
    }
    if (*simulate) {
        if (noise == "iid") {
            dgp.noise = synthetic::IidNormal{sigma};
        } else if (noise == "ar1") {
            dgp.noise = synthetic::Ar1{rho, sigma};
        } else if (noise == "spiked") {
            dgp.noise = synthetic::Spiked{sigma, spike_prob, spike_scale};
        }
        return run_simulate(dgp, output, err);
    }
    return run_forcing_from_co2(co2_input, co2_output, baseline, err);
}

}  // namespace taols::cli

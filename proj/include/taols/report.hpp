#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "taols/estimator.hpp"
#include "taols/time_series.hpp"

namespace taols::report {

/// One row of the sweep export. Non-physical ECS or share values are NaN.
struct SweepRow {
    std::size_t k;
    double gamma, mu, lambda, phi, delta;
    double se_lambda, se_phi;
    double lambda_ci_lo, lambda_ci_hi;
    double ecs, ecs_ci_lo, ecs_ci_hi;
    double phi_ci_lo, phi_ci_hi;
    double share, share_ci_lo, share_ci_hi;
};

std::vector<SweepRow> tabulate(const SweepResult& sweep, double level);

/// Sweep-level climate summary; ECS range comes from the lambda range, ECS mean from the mean lambda.
struct ClimateSummary {
    Range lambda;
    Range phi;
    std::optional<Range> ecs;
    std::optional<Range> share;
};

ClimateSummary summarize_climate(const SweepResult& sweep);

/// Shortest decimal form that round-trips; "nan" for NaN.
std::string format_number(double x);

inline constexpr const char* kSweepCsvHeader =
    "K,gamma,mu,lambda,phi,delta,se_lambda,se_phi,lambda_ci_lo,lambda_ci_hi,ecs,ecs_ci_lo,ecs_ci_hi,"
    "phi_ci_lo,phi_ci_hi";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// Two stacked panels: lambda and ECS against K, each with its shaded confidence band.
void write_lambda_ecs_svg(std::ostream& out, const std::vector<SweepRow>& rows, double level);

/// Two stacked panels: phi and the atmospheric heat share against K.
void write_phi_share_svg(std::ostream& out, const std::vector<SweepRow>& rows, double level);

struct ReportContext {
    std::string dataset_label;
    int start_year = 0;
    int end_year = 0;
    std::size_t t = 0;
    double level = 0.95;
    VarianceEstimator variance = VarianceEstimator::Homoskedastic;
    std::optional<std::string> timestamp;
};

/// Plain-text summary; numbers use 4 significant digits except the two-decimal ECS headline.
void write_text_report(std::ostream& out, const SweepResult& sweep, const ReportContext& context);

}  // namespace taols::report

#include "taols/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include <fmt/format.h>

#include "taols/climate.hpp"

namespace taols::report {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ConfidenceInterval share_interval(const ConfidenceInterval& phi) {
    if (!(phi.lower > 0.0)) {
        return {kNaN, kNaN, phi.level};
    }
    return {climate::atmospheric_share(phi.upper), climate::atmospheric_share(phi.lower), phi.level};
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    return fmt::format("{}", x);
}

std::vector<SweepRow> tabulate(const SweepResult& sweep, double level) {
    std::vector<SweepRow> rows;
    rows.reserve(sweep.fits.size());
    for (const TaolsFit& fit : sweep.fits) {
        const auto lambda_ci = confidence_interval(fit, Coefficient::Lambda, level);
        const auto phi_ci = confidence_interval(fit, Coefficient::Phi, level);
        SweepRow row{};
        row.k = fit.k;
        row.gamma = fit.gamma();
        row.mu = fit.mu();
        row.lambda = fit.lambda();
        row.phi = fit.phi();
        row.delta = fit.delta();
        row.se_lambda = fit.standard_error(Coefficient::Lambda);
        row.se_phi = fit.standard_error(Coefficient::Phi);
        row.lambda_ci_lo = lambda_ci.lower;
        row.lambda_ci_hi = lambda_ci.upper;
        row.phi_ci_lo = phi_ci.lower;
        row.phi_ci_hi = phi_ci.upper;

        row.ecs = fit.lambda() > 0.0 ? climate::ecs_from_lambda(fit.lambda()) : kNaN;
        if (lambda_ci.lower > 0.0) {
            const auto ecs_ci = climate::ecs_interval(lambda_ci);
            row.ecs_ci_lo = ecs_ci.lower;
            row.ecs_ci_hi = ecs_ci.upper;
        } else {
            row.ecs_ci_lo = row.ecs_ci_hi = kNaN;
        }

        row.share = fit.phi() > 0.0 ? climate::atmospheric_share(fit.phi()) : kNaN;
        const auto share_ci = share_interval(phi_ci);
        row.share_ci_lo = share_ci.lower;
        row.share_ci_hi = share_ci.upper;
        rows.push_back(row);
    }
    return rows;
}

ClimateSummary summarize_climate(const SweepResult& sweep) {
    ClimateSummary out{sweep.summary.lambda, sweep.summary.phi, std::nullopt, std::nullopt};
    if (sweep.fits.empty()) {
        return out;
    }
    const Range& lambda = sweep.summary.lambda;
    if (lambda.min > 0.0) {
        out.ecs = Range{climate::ecs_from_lambda(lambda.max), climate::ecs_from_lambda(lambda.mean),
                        climate::ecs_from_lambda(lambda.min)};
    }
    const Range& phi = sweep.summary.phi;
    if (phi.min > 0.0) {
        out.share = Range{climate::atmospheric_share(phi.max), climate::atmospheric_share(phi.mean),
                          climate::atmospheric_share(phi.min)};
    }
    return out;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        out << r.k;
        for (double x : {r.gamma, r.mu, r.lambda, r.phi, r.delta, r.se_lambda, r.se_phi, r.lambda_ci_lo,
                         r.lambda_ci_hi, r.ecs, r.ecs_ci_lo, r.ecs_ci_hi, r.phi_ci_lo, r.phi_ci_hi}) {
            out << ',' << format_number(x);
        }
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// SVG

namespace {

struct Series {
    std::string name;
    std::string unit;
    std::vector<std::size_t> k;
    std::vector<double> estimate;
    std::vector<double> lower;
    std::vector<double> upper;
};

struct Panel {
    double left, top, width, height;
};

constexpr double kWidth = 760.0;
constexpr double kPanelHeight = 300.0;
constexpr double kMarginLeft = 80.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 50.0;
constexpr double kPanelGap = 70.0;

double nice_step(double span, int target_ticks) {
    const double raw = span / target_ticks;
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    const double residual = raw / magnitude;
    const double nice = residual < 1.5 ? 1.0 : residual < 3.0 ? 2.0 : residual < 7.0 ? 5.0 : 10.0;
    return nice * magnitude;
}

std::pair<double, double> value_range(const Series& s) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto* v : {&s.estimate, &s.lower, &s.upper}) {
        for (double x : *v) {
            if (std::isfinite(x)) {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
        }
    }
    if (!std::isfinite(lo)) {
        return {0.0, 1.0};
    }
    if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
        const double pad = std::max(1.0, std::abs(hi)) * 0.05;
        return {lo - pad, hi + pad};
    }
    const double pad = 0.05 * (hi - lo);
    return {lo - pad, hi + pad};
}

void write_panel(std::ostream& out, const Series& s, const Panel& p, const std::string& title) {
    const double k_lo = static_cast<double>(s.k.front());
    const double k_hi = s.k.size() > 1 ? static_cast<double>(s.k.back()) : k_lo + 1.0;
    const auto [y_lo, y_hi] = value_range(s);
    auto px = [&](double k) { return p.left + (k - k_lo) / (k_hi - k_lo) * p.width; };
    auto py = [&](double y) { return p.top + (y_hi - y) / (y_hi - y_lo) * p.height; };

    out << fmt::format("<g class=\"panel\" data-series=\"{}\">\n", s.name);
    out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"15\" text-anchor=\"middle\">{}</text>\n",
                       p.left + p.width / 2, p.top - 14, title);
    out << fmt::format(
        "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" stroke=\"#444\"/>\n",
        p.left, p.top, p.width, p.height);

    const double x_step = nice_step(k_hi - k_lo, 8);
    for (double k = std::ceil(k_lo / x_step) * x_step; k <= k_hi + 1e-9; k += x_step) {
        out << fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{0:.2f}\" y2=\"{2:.2f}\" stroke=\"#444\"/>"
                           "<text x=\"{0:.2f}\" y=\"{3:.2f}\" font-size=\"11\" text-anchor=\"middle\">{4}</text>\n",
                           px(k), p.top + p.height, p.top + p.height + 5, p.top + p.height + 18, k);
    }
    const double y_step = nice_step(y_hi - y_lo, 6);
    for (double y = std::ceil(y_lo / y_step) * y_step; y <= y_hi + 1e-12; y += y_step) {
        const double yy = std::abs(y) < 1e-9 * y_step ? 0.0 : y;
        out << fmt::format("<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"#ddd\"/>"
                           "<text x=\"{3:.2f}\" y=\"{4:.2f}\" font-size=\"11\" text-anchor=\"end\">{5:.4g}</text>\n",
                           p.left, py(yy), p.left + p.width, p.left - 6, py(yy) + 4, yy);
    }
    out << fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"12\" text-anchor=\"middle\">K</text>\n",
                       p.left + p.width / 2, p.top + p.height + 36);
    out << fmt::format("<text transform=\"translate({:.2f},{:.2f}) rotate(-90)\" font-size=\"12\" "
                       "text-anchor=\"middle\">{} ({})</text>\n",
                       p.left - 55, p.top + p.height / 2, s.name, s.unit);

    std::string band;
    std::string lower_line;
    std::string upper_line;
    for (std::size_t i = 0; i < s.k.size(); ++i) {
        if (std::isfinite(s.lower[i]) && std::isfinite(s.upper[i])) {
            const double x = px(static_cast<double>(s.k[i]));
            lower_line += fmt::format("{:.2f},{:.2f} ", x, py(s.lower[i]));
            upper_line += fmt::format("{:.2f},{:.2f} ", x, py(s.upper[i]));
        }
    }
    for (std::size_t j = s.k.size(); j-- > 0;) {
        if (std::isfinite(s.lower[j]) && std::isfinite(s.upper[j])) {
            band += fmt::format("{:.2f},{:.2f} ", px(static_cast<double>(s.k[j])), py(s.upper[j]));
        }
    }
    if (!lower_line.empty()) {
        out << "<polygon class=\"band\" fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"none\" points=\""
            << lower_line << band << "\"/>\n";
        out << "<polyline class=\"ci-lower\" fill=\"none\" stroke=\"#3182bd\" stroke-dasharray=\"5,4\" points=\""
            << lower_line << "\"/>\n";
        out << "<polyline class=\"ci-upper\" fill=\"none\" stroke=\"#3182bd\" stroke-dasharray=\"5,4\" points=\""
            << upper_line << "\"/>\n";
    }

    std::string line;
    std::string points;
    for (std::size_t i = 0; i < s.k.size(); ++i) {
        if (!std::isfinite(s.estimate[i])) {
            continue;
        }
        const double x = px(static_cast<double>(s.k[i]));
        const double y = py(s.estimate[i]);
        line += fmt::format("{:.2f},{:.2f} ", x, y);
        points += fmt::format(
            "<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"1.5\" fill=\"#08306b\" data-k=\"{}\" data-value=\"{}\" "
            "data-lo=\"{}\" data-hi=\"{}\"/>\n",
            x, y, s.k[i], format_number(s.estimate[i]), format_number(s.lower[i]), format_number(s.upper[i]));
    }
    out << "<polyline class=\"estimate\" fill=\"none\" stroke=\"#08306b\" stroke-width=\"1.5\" points=\"" << line
        << "\"/>\n";
    out << points;
    out << "</g>\n";
}

void write_two_panels(std::ostream& out, const Series& top, const std::string& top_title, const Series& bottom,
                      const std::string& bottom_title) {
    const double height = kMarginTop + 2 * kPanelHeight + kPanelGap + 60.0;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" viewBox=\"0 0 {0:.0f} "
        "{1:.0f}\" font-family=\"sans-serif\">\n",
        kWidth, height);
    out << fmt::format("<rect width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n", kWidth, height);
    const double panel_width = kWidth - kMarginLeft - kMarginRight;
    if (!top.k.empty()) {
        write_panel(out, top, {kMarginLeft, kMarginTop, panel_width, kPanelHeight}, top_title);
        write_panel(out, bottom,
                    {kMarginLeft, kMarginTop + kPanelHeight + kPanelGap, panel_width, kPanelHeight}, bottom_title);
    }
    out << "</svg>\n";
}

Series make_series(const std::vector<SweepRow>& rows, std::string name, std::string unit, double SweepRow::*est,
                   double SweepRow::*lo, double SweepRow::*hi) {
    Series s{std::move(name), std::move(unit), {}, {}, {}, {}};
    for (const SweepRow& r : rows) {
        s.k.push_back(r.k);
        s.estimate.push_back(r.*est);
        s.lower.push_back(r.*lo);
        s.upper.push_back(r.*hi);
    }
    return s;
}

std::string percent(double level) {
    return fmt::format("{:g}%", 100.0 * level);
}

}  // namespace

void write_lambda_ecs_svg(std::ostream& out, const std::vector<SweepRow>& rows, double level) {
    write_two_panels(
        out,
        make_series(rows, "lambda", "W/m2 per C", &SweepRow::lambda, &SweepRow::lambda_ci_lo, &SweepRow::lambda_ci_hi),
        fmt::format("Estimate of lambda with {} confidence band", percent(level)),
        make_series(rows, "ECS", "C", &SweepRow::ecs, &SweepRow::ecs_ci_lo, &SweepRow::ecs_ci_hi),
        fmt::format("Implied equilibrium climate sensitivity, {} band", percent(level)));
}

void write_phi_share_svg(std::ostream& out, const std::vector<SweepRow>& rows, double level) {
    write_two_panels(
        out, make_series(rows, "phi", "W-yr/m2 per C", &SweepRow::phi, &SweepRow::phi_ci_lo, &SweepRow::phi_ci_hi),
        fmt::format("Estimate of phi with {} confidence band", percent(level)),
        make_series(rows, "share", "percent", &SweepRow::share, &SweepRow::share_ci_lo, &SweepRow::share_ci_hi),
        fmt::format("Share of total heat content warming the atmosphere, {} band", percent(level)));
}

// ---------------------------------------------------------------------------
// Text report

namespace {

std::string sig4(double x) {
    return std::isfinite(x) ? fmt::format("{:#.4g}", x) : "n/a";
}

std::string describe_grid(const std::vector<std::size_t>& grid) {
    if (grid.size() == 1) {
        return fmt::format("{}", grid.front());
    }
    const std::size_t step = grid[1] - grid[0];
    for (std::size_t i = 2; i < grid.size(); ++i) {
        if (grid[i] - grid[i - 1] != step) {
            return fmt::format("{} values from {} to {}", grid.size(), grid.front(), grid.back());
        }
    }
    return step == 1 ? fmt::format("{}..{} ({} values)", grid.front(), grid.back(), grid.size())
                     : fmt::format("{}..{} step {} ({} values)", grid.front(), grid.back(), step, grid.size());
}

}  // namespace

void write_text_report(std::ostream& out, const SweepResult& sweep, const ReportContext& context) {
    const ClimateSummary summary = summarize_climate(sweep);
    out << "TAOLS K-sweep report\n";
    out << "dataset: " << context.dataset_label << '\n';
    out << fmt::format("years: {}-{} (T = {})\n", context.start_year, context.end_year, context.t);
    out << "K grid: " << describe_grid(sweep.grid) << '\n';
    out << fmt::format("confidence level: {}\n", sig4(context.level));
    out << "standard errors: "
        << (context.variance == VarianceEstimator::Homoskedastic ? "homoskedastic" : "robust (HC1)") << '\n';
    if (context.timestamp) {
        out << "generated: " << *context.timestamp << '\n';
    }
    out << '\n';
    if (summary.ecs) {
        out << fmt::format("ECS in [{:.2f}, {:.2f}], mean {:.2f}\n", summary.ecs->min, summary.ecs->max,
                           summary.ecs->mean);
    } else {
        out << "ECS undefined: lambda estimate is not positive for every K\n";
    }
    out << '\n';
    out << fmt::format("{:<28}{:>12}{:>12}{:>12}\n", "quantity", "min", "mean", "max");
    auto line = [&](const char* name, const std::optional<Range>& r) {
        if (r) {
            out << fmt::format("{:<28}{:>12}{:>12}{:>12}\n", name, sig4(r->min), sig4(r->mean), sig4(r->max));
        } else {
            out << fmt::format("{:<28}{:>12}{:>12}{:>12}\n", name, "n/a", "n/a", "n/a");
        }
    };
    line("lambda (W/m2 per C)", summary.lambda);
    line("phi (W-yr/m2 per C)", summary.phi);
    line("ECS (C)", summary.ecs);
    line("atmospheric share (%)", summary.share);
    out << "\nECS mean is evaluated at the mean lambda; its range maps the lambda range.\n";
}

}  // namespace taols::report

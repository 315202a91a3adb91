#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hfi/inequalities.hpp"

namespace hfi {

// A sweep function: a catalog name, or an expression with an optional
// evaluation domain (default [1e-12, 1e12]) and display name.
struct FunctionEntry {
    std::string name_or_expr;
    std::optional<double> lo, hi;
    std::optional<std::string> name;
};

struct SweepConfig {
    std::vector<FunctionEntry> functions;
    std::vector<double> a_values{0.5, 1.0, 2.0};
    std::vector<double> b_ratios{1.5, 2.0, 4.0};             // b = a * ratio
    std::vector<double> x_quantiles{0.0, 0.25, 0.5, 0.75, 1.0};  // x = a * (b/a)^s
    std::vector<double> theta_values{0.5, 1.0, 2.5};
    std::vector<double> lambda_values{0.0, 1.0 / 3.0, 0.5, 1.0};
    std::vector<double> alpha_values{0.25, 0.5, 1.0};
    std::vector<double> m_values{0.5, 0.9, 1.0};
    std::vector<double> q_values{1.0, 2.0, 3.0};  // q = 1 only where the power-mean route applies
    std::vector<Statement> statements;            // default: every statement
    QuadratureConfig quadrature;
    int convexity_grid_n = 32;
    double convexity_tol = 1e-9;
    ToleranceSet tolerances;
    int jobs = 1;
    bool use_caches = true;
};

// The default desk-scale grid over the whole built-in catalog.
SweepConfig default_sweep_config();

// Loads a config (.json or .toml by extension), starting from the defaults;
// every present key overrides. Throws std::runtime_error with path context
// on parse or validation problems.
SweepConfig load_sweep_config(const std::string& path);

void validate_sweep_config(const SweepConfig& cfg);

struct StatementSummary {
    int holds = 0, violated = 0, skipped_convexity = 0, numeric_fail = 0;
    double min_slack = 0.0;  // NaN when no record carries a numeric slack
};

struct Report {
    std::vector<VerificationRecord> records;       // deterministically ordered
    std::map<std::string, StatementSummary> summary;  // keyed by statement name
    std::map<std::string, int> skipped_params;     // reason -> count (no record emitted)
    std::string version;
    std::string timestamp;  // ISO-8601 UTC; the only non-deterministic field
    SweepConfig config;
};

// Expands the grid (collapsing axes a statement pins), screens convexity
// once per (function, alpha, m, q, hull) with an optional cache, evaluates
// every statement at every admissible tuple, and returns the sorted report.
// Never throws for per-record numeric failures (verdict numeric_fail).
Report run_sweep(const SweepConfig& cfg);

std::string report_to_json(const Report& r);
std::string report_to_csv(const Report& r);

// Slack profile along one axis (a, b, x, theta, lambda, alpha, m, q, p):
// CSV of (axis value, statement, min slack, median slack).
std::string report_plotdata_csv(const Report& r, const std::string& axis);

void emit_report(const Report& r, const std::string& path, const std::string& format);
void emit_plotdata(const Report& r, const std::string& axis, const std::string& path);

}  // namespace hfi

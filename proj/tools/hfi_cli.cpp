#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hfi/convexity.hpp"
#include "hfi/format.hpp"
#include "hfi/functions.hpp"
#include "hfi/inequalities.hpp"
#include "hfi/sweep.hpp"

namespace {

int run_verify(const std::string& config_path, std::string out_path, std::string format,
               int jobs, const std::string& plot_axis, std::string plot_out) {
    hfi::SweepConfig cfg =
        config_path.empty() ? hfi::default_sweep_config() : hfi::load_sweep_config(config_path);
    if (jobs > 0) cfg.jobs = jobs;

    if (format.empty()) {
        const bool csv_ext =
            out_path.size() >= 4 && out_path.substr(out_path.size() - 4) == ".csv";
        format = csv_ext ? "csv" : "json";
    }
    if (format != "json" && format != "csv")
        throw std::runtime_error("unknown format \"" + format + "\" (expected json or csv)");

    const hfi::Report rep = hfi::run_sweep(cfg);

    if (!out_path.empty()) {
        hfi::emit_report(rep, out_path, format);
        std::printf("%-26s %8s %9s %9s %9s  %s\n", "statement", "holds", "violated", "skipped",
                    "numfail", "min_slack");
        for (const auto& [name, s] : rep.summary)
            std::printf("%-26s %8d %9d %9d %9d  %s\n", name.c_str(), s.holds, s.violated,
                        s.skipped_convexity, s.numeric_fail,
                        hfi::format_double(s.min_slack).c_str());
        int skipped_total = 0;
        for (const auto& [reason, count] : rep.skipped_params) skipped_total += count;
        if (skipped_total > 0)
            std::printf("parameter tuples outside function domains: %d (listed in the report)\n",
                        skipped_total);
        std::printf("report written to %s (%s, %zu records)\n", out_path.c_str(), format.c_str(),
                    rep.records.size());
    } else {
        std::cout << (format == "csv" ? hfi::report_to_csv(rep) : hfi::report_to_json(rep));
    }

    if (!plot_axis.empty()) {
        if (plot_out.empty()) plot_out = "plot.csv";
        hfi::emit_plotdata(rep, plot_axis, plot_out);
        if (!out_path.empty()) std::printf("plot data written to %s\n", plot_out.c_str());
    }

    bool any_violated = false, any_fail = false;
    for (const auto& rec : rep.records) {
        any_violated |= rec.verdict == hfi::Verdict::violated;
        any_fail |= rec.verdict == hfi::Verdict::numeric_fail;
    }
    return any_violated ? 1 : any_fail ? 2 : 0;
}

int run_check_fn(const std::string& expr, double alpha, double m, double q, double lo, double hi,
                 int n, double tol, const std::string& target) {
    // The function domain must cover the screening hull [min(lo, lo^m),
    // max(hi, hi^m)], which exceeds [lo, hi] when m < 1.
    const double dom_lo = std::min(lo, std::pow(lo, m));
    const double dom_hi = std::max(hi, std::pow(hi, m));
    const hfi::FunctionSpec f = hfi::make_function(expr, dom_lo, dom_hi, expr);

    hfi::FunctionSpec g;
    if (target == "f") {
        g = f;
    } else if (target == "dfq") {
        hfi::ScreenRequest req;
        req.needed = true;
        req.on_f = false;
        req.q = q;
        g = hfi::screen_target(f, req);
    } else {
        throw std::runtime_error("unknown target \"" + target + "\" (expected dfq or f)");
    }

    const hfi::ConvexityVerdict v = hfi::check_alpha_m_ga(g, alpha, m, lo, hi, n, tol);
    std::printf("function: %s\n", expr.c_str());
    std::printf("target:   %s\n", target == "f" ? "f itself" : "|f'|^q");
    std::printf("params:   alpha=%s m=%s q=%s on [%s, %s], grid n=%d, tol=%s\n",
                hfi::format_double(alpha).c_str(), hfi::format_double(m).c_str(),
                hfi::format_double(q).c_str(), hfi::format_double(lo).c_str(),
                hfi::format_double(hi).c_str(), n, hfi::format_double(tol).c_str());
    if (v.certified) {
        std::printf("certified: yes (worst violation %s)\n",
                    hfi::format_double(v.worst_violation).c_str());
        return 0;
    }
    std::printf("certified: no (worst violation %s)\n",
                hfi::format_double(v.worst_violation).c_str());
    if (v.witness)
        std::printf("witness:  x=%s y=%s t=%s\n", hfi::format_double((*v.witness)[0]).c_str(),
                    hfi::format_double((*v.witness)[1]).c_str(),
                    hfi::format_double((*v.witness)[2]).c_str());
    return 1;
}

int run_constants(const std::string& name, hfi::InequalityParams P, bool p_given) {
    if (!p_given) P.p = P.q > 1.0 ? P.q / (P.q - 1.0) : 0.0;
    const auto tag = hfi::constant_tag_from_name(name);
    if (!tag)
        throw std::runtime_error("unknown constant \"" + name +
                                 "\" (expected C0..C4, R0..R4, T1, T2, or V1..V4)");
    const hfi::BoundConstants bc = hfi::eval_constant(*tag, P, {}, true);
    std::printf("%s(a=%s, b=%s, x=%s, theta=%s, lambda=%s, alpha=%s, m=%s, q=%s, p=%s)\n",
                hfi::constant_tag_name(*tag), hfi::format_double(P.a).c_str(),
                hfi::format_double(P.b).c_str(), hfi::format_double(P.x).c_str(),
                hfi::format_double(P.theta).c_str(), hfi::format_double(P.lambda).c_str(),
                hfi::format_double(P.alpha).c_str(), hfi::format_double(P.m).c_str(),
                hfi::format_double(P.q).c_str(), hfi::format_double(P.p).c_str());
    std::printf("  value        = %s (%s)\n", hfi::format_double(bc.value).c_str(),
                bc.route == hfi::EvalRoute::closed_form ? "closed form" : "kink-split quadrature");
    std::printf("  oracle route = %s\n",
                bc.route == hfi::EvalRoute::closed_form ? "quadrature of the defining integral"
                                                        : "unsplit tighter-budget quadrature");
    std::printf("  |delta|      = %s\n", hfi::format_double(*bc.oracle_delta).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical verification of log-kernel fractional-integral identities and "
                 "inequality bounds for (alpha,m)-GA-convex functions"};
    app.require_subcommand(1);

    // verify
    std::string config_path, out_path, format, plot_axis, plot_out;
    int jobs = 0;
    auto* verify = app.add_subcommand("verify", "run a sweep and emit a report");
    verify->add_option("--config", config_path, "sweep config file (.json or .toml)");
    verify->add_option("--out", out_path, "report output path (stdout if omitted)");
    verify->add_option("--format", format, "json or csv (default from --out extension)");
    verify->add_option("--jobs", jobs, "worker threads (overrides config)");
    verify->add_option("--plot-axis", plot_axis,
                       "also emit min/median slack along this parameter axis");
    verify->add_option("--plot-out", plot_out, "plot data path (default plot.csv)");

    // check-fn
    std::string expr, target = "dfq";
    double alpha = 1.0, m = 1.0, q = 1.0, lo = 1.0, hi = 4.0, tol = 1e-9;
    int grid_n = 32;
    auto* check = app.add_subcommand("check-fn", "screen a function for (alpha,m)-GA-convexity");
    check->add_option("--expr", expr, "expression in the variable u")->required();
    check->add_option("--alpha", alpha, "alpha in (0, 1]")->required();
    check->add_option("--m", m, "m in (0, 1]")->required();
    check->add_option("--q", q, "exponent applied to |f'|")->required();
    check->add_option("--lo", lo, "interval lower endpoint")->required();
    check->add_option("--hi", hi, "interval upper endpoint")->required();
    check->add_option("--n", grid_n, "grid density per axis (default 32)");
    check->add_option("--tol", tol, "violation tolerance (default 1e-9)");
    check->add_option("--target", target, "screen |f'|^q (dfq, default) or f itself (f)");

    // constants
    std::string const_name;
    hfi::InequalityParams P;
    auto* consts = app.add_subcommand("constants", "evaluate one bound constant by both routes");
    consts->add_option("--name", const_name, "C0..C4, R0..R4, T1, T2, V1..V4")->required();
    consts->add_option("--a", P.a, "interval lower endpoint (default 1)");
    consts->add_option("--b", P.b, "interval upper endpoint (default 4)");
    consts->add_option("--x", P.x, "evaluation point in [a, b] (default 2)");
    consts->add_option("--theta", P.theta, "integral order theta > 0 (default 1)");
    consts->add_option("--lambda", P.lambda, "weight lambda in [0, 1] (default 0)");
    consts->add_option("--alpha", P.alpha, "convexity exponent alpha in (0, 1] (default 1)");
    consts->add_option("--m", P.m, "convexity scale m in (0, 1] (default 1)");
    consts->add_option("--q", P.q, "Hoelder exponent q >= 1 (default 1)");
    auto* p_opt = consts->add_option("--p", P.p, "conjugate exponent (default q/(q-1))");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return run_verify(config_path, out_path, format, jobs, plot_axis, plot_out);
        if (check->parsed()) return run_check_fn(expr, alpha, m, q, lo, hi, grid_n, tol, target);
        if (consts->parsed()) return run_constants(const_name, P, p_opt->count() > 0);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}

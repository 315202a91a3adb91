#include "hfi/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "hfi/errors.hpp"
#include "hfi/format.hpp"

namespace hfi {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<Statement> all_statements_vec() {
    return {all_statements.begin(), all_statements.end()};
}

[[noreturn]] void config_error(const std::string& path, const std::string& msg) {
    throw std::runtime_error("config " + path + ": " + msg);
}

std::vector<double> to_doubles(const ordered_json& j, const std::string& path,
                               const std::string& key) {
    if (!j.is_array()) config_error(path, key + " must be an array of numbers");
    std::vector<double> out;
    for (const auto& v : j) {
        if (!v.is_number()) config_error(path, key + " must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

void apply_json(SweepConfig& cfg, const ordered_json& j, const std::string& path) {
    for (const auto& [key, val] : j.items()) {
        if (key == "functions") {
            if (!val.is_array()) config_error(path, "functions must be an array");
            cfg.functions.clear();
            for (const auto& e : val) {
                FunctionEntry fe;
                if (e.is_string()) {
                    fe.name_or_expr = e.get<std::string>();
                } else if (e.is_object()) {
                    if (!e.contains("expr")) config_error(path, "function object needs \"expr\"");
                    fe.name_or_expr = e.at("expr").get<std::string>();
                    if (e.contains("lo")) fe.lo = e.at("lo").get<double>();
                    if (e.contains("hi")) fe.hi = e.at("hi").get<double>();
                    if (e.contains("name")) fe.name = e.at("name").get<std::string>();
                } else {
                    config_error(path, "functions entries must be strings or objects");
                }
                cfg.functions.push_back(std::move(fe));
            }
        } else if (key == "a_values") {
            cfg.a_values = to_doubles(val, path, key);
        } else if (key == "b_ratios") {
            cfg.b_ratios = to_doubles(val, path, key);
        } else if (key == "x_quantiles") {
            cfg.x_quantiles = to_doubles(val, path, key);
        } else if (key == "theta_values") {
            cfg.theta_values = to_doubles(val, path, key);
        } else if (key == "lambda_values") {
            cfg.lambda_values = to_doubles(val, path, key);
        } else if (key == "alpha_values") {
            cfg.alpha_values = to_doubles(val, path, key);
        } else if (key == "m_values") {
            cfg.m_values = to_doubles(val, path, key);
        } else if (key == "q_values") {
            cfg.q_values = to_doubles(val, path, key);
        } else if (key == "statements") {
            if (!val.is_array()) config_error(path, "statements must be an array of names");
            cfg.statements.clear();
            for (const auto& s : val) {
                auto st = statement_from_name(s.get<std::string>());
                if (!st) config_error(path, "unknown statement \"" + s.get<std::string>() + "\"");
                cfg.statements.push_back(*st);
            }
        } else if (key == "quadrature") {
            if (!val.is_object()) config_error(path, "quadrature must be an object");
            for (const auto& [qk, qv] : val.items()) {
                if (qk == "rel_tol") cfg.quadrature.rel_tol = qv.get<double>();
                else if (qk == "abs_tol") cfg.quadrature.abs_tol = qv.get<double>();
                else if (qk == "max_subdivisions") cfg.quadrature.max_subdivisions = qv.get<int>();
                else config_error(path, "unknown quadrature key \"" + qk + "\"");
            }
        } else if (key == "convexity_grid_n") {
            cfg.convexity_grid_n = val.get<int>();
        } else if (key == "convexity_tol") {
            cfg.convexity_tol = val.get<double>();
        } else if (key == "verdict_tol") {
            cfg.tolerances.verdict_rel = val.get<double>();
        } else if (key == "jobs") {
            cfg.jobs = val.get<int>();
        } else if (key == "use_caches") {
            cfg.use_caches = val.get<bool>();
        } else {
            config_error(path, "unknown key \"" + key + "\"");
        }
    }
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Minimal TOML subset: comments, [section] headers, key = scalar or
// one-line array; strings are double-quoted; functions are strings only.
ordered_json parse_toml_value(const std::string& raw, const std::string& path) {
    const std::string v = trim(raw);
    if (v.empty()) config_error(path, "empty value");
    if (v.front() == '[') {
        if (v.back() != ']') config_error(path, "unterminated array: " + v);
        ordered_json arr = ordered_json::array();
        std::string inner = v.substr(1, v.size() - 2);
        std::string item;
        std::istringstream ss(inner);
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            arr.push_back(parse_toml_value(item, path));
        }
        return arr;
    }
    if (v.front() == '"') {
        if (v.size() < 2 || v.back() != '"') config_error(path, "unterminated string: " + v);
        return v.substr(1, v.size() - 2);
    }
    if (v == "true") return true;
    if (v == "false") return false;
    char* end = nullptr;
    double num = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0') config_error(path, "cannot parse value: " + v);
    if (num == static_cast<long long>(num) && std::fabs(num) < 1e15 &&
        v.find_first_of(".eE") == std::string::npos)
        return static_cast<long long>(num);
    return num;
}

ordered_json toml_to_json(std::istream& in, const std::string& path) {
    ordered_json root = ordered_json::object();
    ordered_json* section = &root;
    std::string line;
    while (std::getline(in, line)) {
        // strip comments outside strings
        bool in_str = false;
        for (size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') in_str = !in_str;
            else if (line[i] == '#' && !in_str) {
                line.resize(i);
                break;
            }
        }
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') config_error(path, "bad section header: " + line);
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (name.empty()) config_error(path, "empty section name");
            root[name] = ordered_json::object();
            section = &root[name];
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos) config_error(path, "expected key = value: " + line);
        const std::string key = trim(line.substr(0, eq));
        if (key.empty()) config_error(path, "empty key: " + line);
        (*section)[key] = parse_toml_value(line.substr(eq + 1), path);
    }
    return root;
}

void check_list(const std::vector<double>& v, const char* name, double lo, double hi,
                bool lo_strict, bool hi_strict) {
    if (v.empty()) throw DomainError(std::string("sweep config: ") + name + " must be non-empty");
    for (double d : v) {
        const bool lo_ok = lo_strict ? d > lo : d >= lo;
        const bool hi_ok = hi_strict ? d < hi : d <= hi;
        if (!std::isfinite(d) || !lo_ok || !hi_ok)
            throw DomainError(std::string("sweep config: ") + name + " value " +
                              format_double(d) + " out of range");
    }
}

std::vector<FunctionSpec> resolve_functions(const SweepConfig& cfg) {
    if (cfg.functions.empty()) throw DomainError("sweep config: functions must be non-empty");
    std::vector<FunctionSpec> out;
    for (const auto& fe : cfg.functions) {
        if (!fe.lo && !fe.hi && !fe.name) {
            if (auto cat = find_catalog(fe.name_or_expr)) {
                out.push_back(*cat);
                continue;
            }
        }
        const double lo = fe.lo.value_or(1e-12), hi = fe.hi.value_or(1e12);
        out.push_back(make_function(fe.name_or_expr, lo, hi, fe.name.value_or(fe.name_or_expr)));
    }
    return out;
}

struct SweepItem {
    size_t fn;
    Statement st;
    InequalityParams P;
    bool needs_screen;
    ScreenRequest req;
};

std::string param_key(const InequalityParams& P) {
    return format_double(P.a) + "," + format_double(P.b) + "," + format_double(P.x) + "," +
           format_double(P.theta) + "," + format_double(P.lambda) + "," +
           format_double(P.alpha) + "," + format_double(P.m) + "," + format_double(P.q) + "," +
           format_double(P.p);
}

std::string iso8601_utc_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct ScreenKey {
    std::string fkey;
    bool on_f;
    std::array<double, 6> v;  // alpha, m, q, lo, hi, tol
    int n;
    bool operator<(const ScreenKey& o) const {
        if (fkey != o.fkey) return fkey < o.fkey;
        if (on_f != o.on_f) return on_f < o.on_f;
        if (v != o.v) return v < o.v;
        return n < o.n;
    }
};

}  // namespace

SweepConfig default_sweep_config() {
    SweepConfig cfg;
    for (const auto& f : catalog()) cfg.functions.push_back({f.name, {}, {}, {}});
    cfg.statements = all_statements_vec();
    return cfg;
}

void validate_sweep_config(const SweepConfig& cfg) {
    if (cfg.functions.empty()) throw DomainError("sweep config: functions must be non-empty");
    if (cfg.statements.empty()) throw DomainError("sweep config: statements must be non-empty");
    constexpr double inf = std::numeric_limits<double>::infinity();
    check_list(cfg.a_values, "a_values", 0.0, inf, true, true);
    check_list(cfg.b_ratios, "b_ratios", 1.0, inf, true, true);
    check_list(cfg.x_quantiles, "x_quantiles", 0.0, 1.0, false, false);
    check_list(cfg.theta_values, "theta_values", 0.0, inf, true, true);
    check_list(cfg.lambda_values, "lambda_values", 0.0, 1.0, false, false);
    check_list(cfg.alpha_values, "alpha_values", 0.0, 1.0, true, false);
    check_list(cfg.m_values, "m_values", 0.0, 1.0, true, false);
    check_list(cfg.q_values, "q_values", 1.0, inf, false, true);
    if (cfg.convexity_grid_n < 8) throw DomainError("sweep config: convexity_grid_n must be >= 8");
    if (!(cfg.convexity_tol > 0.0)) throw DomainError("sweep config: convexity_tol must be > 0");
    if (cfg.jobs < 1) throw DomainError("sweep config: jobs must be >= 1");
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config " + path + ": cannot open");
    SweepConfig cfg = default_sweep_config();
    ordered_json j;
    const bool is_toml = path.size() >= 5 && path.substr(path.size() - 5) == ".toml";
    if (is_toml) {
        j = toml_to_json(in, path);
    } else {
        try {
            j = ordered_json::parse(in);
        } catch (const ordered_json::exception& e) {
            config_error(path, e.what());
        }
    }
    apply_json(cfg, j, path);
    try {
        validate_sweep_config(cfg);
    } catch (const std::exception& e) {
        config_error(path, e.what());
    }
    return cfg;
}

Report run_sweep(const SweepConfig& cfg) {
    validate_sweep_config(cfg);
    const std::vector<FunctionSpec> fns = resolve_functions(cfg);

    Report rep;
    rep.version = "1.0.0";
    rep.timestamp = iso8601_utc_now();
    rep.config = cfg;

    // Expand the grid. Axes a statement pins collapse via the dedup key;
    // tuples whose evaluation hull escapes the function domain are skipped
    // with a logged reason (no record).
    std::vector<SweepItem> items;
    for (size_t fi = 0; fi < fns.size(); ++fi) {
        const FunctionSpec& f = fns[fi];
        for (Statement st : cfg.statements) {
            std::set<std::string> seen;
            for (double a : cfg.a_values)
                for (double ratio : cfg.b_ratios)
                    for (double s : cfg.x_quantiles)
                        for (double theta : cfg.theta_values)
                            for (double lambda : cfg.lambda_values)
                                for (double alpha : cfg.alpha_values)
                                    for (double m : cfg.m_values)
                                        for (double q : cfg.q_values) {
                                            if (q == 1.0 && !statement_allows_q1(st)) continue;
                                            InequalityParams base;
                                            base.a = a;
                                            base.b = a * ratio;
                                            base.x = a * std::pow(ratio, s);
                                            base.theta = theta;
                                            base.lambda = lambda;
                                            base.alpha = alpha;
                                            base.m = m;
                                            base.q = q;
                                            base.p = 0.0;
                                            const InequalityParams P = effective_params(st, base);
                                            if (!seen.insert(param_key(P)).second) continue;

                                            // statement hull: every point where f or f' is read
                                            const double am = std::pow(P.a, P.m);
                                            const double bm = std::pow(P.b, P.m);
                                            double lo, hi;
                                            if (st == Statement::lemma2) {
                                                lo = am;
                                                hi = bm;
                                            } else if (st == Statement::thm4) {
                                                lo = P.a;
                                                hi = P.b;
                                            } else {
                                                lo = std::min(P.a, am);
                                                hi = std::max(P.b, bm);
                                            }
                                            if (lo < f.domain_lo || hi > f.domain_hi) {
                                                ++rep.skipped_params
                                                      [f.name + ": hull [" + format_double(lo) +
                                                       "," + format_double(hi) +
                                                       "] exceeds domain"];
                                                continue;
                                            }
                                            SweepItem item{fi, st, P, false, {}};
                                            item.req = screening_request(st, P);
                                            item.needs_screen = item.req.needed;
                                            items.push_back(std::move(item));
                                        }
        }
    }

    // Convexity screening cache: one verdict per (function, target kind,
    // alpha, m, q, hull, grid). With use_caches off, every item re-screens.
    std::map<ScreenKey, ConvexityVerdict> screen_cache;
    std::mutex screen_mu;
    auto screen_for = [&](const FunctionSpec& f, const ScreenRequest& req) {
        auto compute = [&] {
            return check_alpha_m_ga(screen_target(f, req), req.alpha, req.m, req.lo, req.hi,
                                    cfg.convexity_grid_n, cfg.convexity_tol);
        };
        if (!cfg.use_caches) return compute();
        ScreenKey key{f.key(), req.on_f,
                      {req.alpha, req.m, req.q, req.lo, req.hi, cfg.convexity_tol},
                      cfg.convexity_grid_n};
        {
            std::lock_guard lock(screen_mu);
            auto it = screen_cache.find(key);
            if (it != screen_cache.end()) return it->second;
        }
        ConvexityVerdict cv = compute();
        std::lock_guard lock(screen_mu);
        return screen_cache.emplace(key, cv).first->second;
    };

    rep.records.resize(items.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < items.size();) {
            const SweepItem& it = items[i];
            const FunctionSpec& f = fns[it.fn];
            if (it.needs_screen) {
                const ConvexityVerdict cv = screen_for(f, it.req);
                rep.records[i] = check_statement(it.st, f, it.P, cfg.quadrature, cfg.tolerances,
                                                 &cv, cfg.convexity_grid_n, cfg.convexity_tol);
            } else {
                rep.records[i] = check_statement(it.st, f, it.P, cfg.quadrature, cfg.tolerances,
                                                 nullptr, cfg.convexity_grid_n, cfg.convexity_tol);
            }
        }
    };
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1 || items.size() < 2) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
        for (auto& t : pool) t.join();
    }

    std::sort(rep.records.begin(), rep.records.end(),
              [](const VerificationRecord& l, const VerificationRecord& r) {
                  if (l.function_name != r.function_name)
                      return l.function_name < r.function_name;
                  const std::string ls = statement_name(l.statement),
                                    rs = statement_name(r.statement);
                  if (ls != rs) return ls < rs;
                  const auto& a = l.params;
                  const auto& b = r.params;
                  return std::tie(a.a, a.b, a.x, a.theta, a.lambda, a.alpha, a.m, a.q, a.p) <
                         std::tie(b.a, b.b, b.x, b.theta, b.lambda, b.alpha, b.m, b.q, b.p);
              });

    for (const auto& rec : rep.records) {
        StatementSummary& s = rep.summary[statement_name(rec.statement)];
        switch (rec.verdict) {
            case Verdict::holds: ++s.holds; break;
            case Verdict::violated: ++s.violated; break;
            case Verdict::skipped_convexity: ++s.skipped_convexity; break;
            case Verdict::numeric_fail: ++s.numeric_fail; break;
        }
    }
    for (auto& [name, s] : rep.summary) {
        double best = std::numeric_limits<double>::quiet_NaN();
        for (const auto& rec : rep.records) {
            if (statement_name(rec.statement) != name || std::isnan(rec.slack)) continue;
            if (std::isnan(best) || rec.slack < best) best = rec.slack;
        }
        s.min_slack = best;
    }
    return rep;
}

}  // namespace hfi

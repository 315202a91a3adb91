#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hfi/errors.hpp"
#include "hfi/format.hpp"
#include "hfi/sweep.hpp"

namespace hfi {

namespace {

using ordered_json = nlohmann::ordered_json;

// NaN-aware: nlohmann would serialize NaN as null; reports spell it "nan"
// (CSV) or null (JSON) consistently.
ordered_json json_num(double v) {
    if (std::isnan(v) || std::isinf(v)) return nullptr;
    return v;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

ordered_json params_json(const InequalityParams& P) {
    ordered_json j;
    j["a"] = P.a;
    j["b"] = P.b;
    j["x"] = P.x;
    j["theta"] = P.theta;
    j["lambda"] = P.lambda;
    j["alpha"] = P.alpha;
    j["m"] = P.m;
    j["q"] = P.q;
    j["p"] = P.p;
    return j;
}

double param_axis(const InequalityParams& P, const std::string& axis) {
    if (axis == "a") return P.a;
    if (axis == "b") return P.b;
    if (axis == "x") return P.x;
    if (axis == "theta") return P.theta;
    if (axis == "lambda") return P.lambda;
    if (axis == "alpha") return P.alpha;
    if (axis == "m") return P.m;
    if (axis == "q") return P.q;
    if (axis == "p") return P.p;
    throw DomainError("unknown plot axis \"" + axis + "\" (expected a, b, x, theta, lambda, "
                      "alpha, m, q, or p)");
}

}  // namespace

std::string report_to_json(const Report& r) {
    ordered_json j;
    ordered_json meta;
    meta["version"] = r.version;
    meta["timestamp"] = r.timestamp;
    ordered_json quad;
    quad["rel_tol"] = r.config.quadrature.rel_tol;
    quad["abs_tol"] = r.config.quadrature.abs_tol;
    quad["max_subdivisions"] = r.config.quadrature.max_subdivisions;
    meta["quadrature"] = quad;
    ordered_json tols;
    tols["verdict_rel"] = r.config.tolerances.verdict_rel;
    tols["verdict_abs"] = r.config.tolerances.verdict_abs;
    tols["lemma_rel"] = r.config.tolerances.lemma_rel;
    meta["tolerances"] = tols;
    meta["convexity_grid_n"] = r.config.convexity_grid_n;
    meta["convexity_tol"] = r.config.convexity_tol;
    meta["use_caches"] = r.config.use_caches;
    meta["jobs"] = r.config.jobs;
    ordered_json fns = ordered_json::array();
    for (const auto& fe : r.config.functions) fns.push_back(fe.name_or_expr);
    meta["functions"] = fns;
    ordered_json stmts = ordered_json::array();
    for (Statement st : r.config.statements) stmts.push_back(statement_name(st));
    meta["statements"] = stmts;
    j["metadata"] = meta;

    ordered_json summary;
    for (const auto& [name, s] : r.summary) {
        ordered_json row;
        row["holds"] = s.holds;
        row["violated"] = s.violated;
        row["skipped_convexity"] = s.skipped_convexity;
        row["numeric_fail"] = s.numeric_fail;
        row["min_slack"] = json_num(s.min_slack);
        summary[name] = row;
    }
    j["summary"] = summary;

    ordered_json skipped;
    for (const auto& [reason, count] : r.skipped_params) skipped[reason] = count;
    j["skipped_params"] = skipped;

    ordered_json records = ordered_json::array();
    for (const auto& rec : r.records) {
        ordered_json row;
        row["function"] = rec.function_name;
        row["statement"] = statement_name(rec.statement);
        row["params"] = params_json(rec.params);
        row["lhs"] = json_num(rec.lhs);
        row["rhs"] = json_num(rec.rhs);
        row["slack"] = json_num(rec.slack);
        row["verdict"] = verdict_name(rec.verdict);
        row["tol_verdict"] = rec.tol_verdict;
        row["note"] = rec.note;
        if (rec.convexity) {
            ordered_json cv;
            cv["certified"] = rec.convexity->certified;
            cv["worst_violation"] = json_num(rec.convexity->worst_violation);
            cv["grid_density"] = rec.convexity->grid_density;
            if (rec.convexity->witness) {
                cv["witness"] = {(*rec.convexity->witness)[0], (*rec.convexity->witness)[1],
                                 (*rec.convexity->witness)[2]};
            } else {
                cv["witness"] = nullptr;
            }
            row["convexity"] = cv;
        } else {
            row["convexity"] = nullptr;
        }
        records.push_back(row);
    }
    j["records"] = records;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const Report& r) {
    std::string out = "function,statement,a,b,x,theta,lambda,alpha,m,q,p,lhs,rhs,slack,verdict\n";
    for (const auto& rec : r.records) {
        const InequalityParams& P = rec.params;
        out += csv_field(rec.function_name);
        out += ',';
        out += statement_name(rec.statement);
        for (double v : {P.a, P.b, P.x, P.theta, P.lambda, P.alpha, P.m, P.q, P.p, rec.lhs,
                         rec.rhs, rec.slack}) {
            out += ',';
            out += format_double(v);
        }
        out += ',';
        out += verdict_name(rec.verdict);
        out += '\n';
    }
    return out;
}

std::string report_plotdata_csv(const Report& r, const std::string& axis) {
    std::map<std::pair<double, std::string>, std::vector<double>> groups;
    for (const auto& rec : r.records) {
        const double v = param_axis(rec.params, axis);
        auto& slacks = groups[{v, statement_name(rec.statement)}];
        if (!std::isnan(rec.slack)) slacks.push_back(rec.slack);
    }
    std::string out = axis + ",statement,min_slack,median_slack\n";
    for (auto& [key, slacks] : groups) {
        double mn = std::numeric_limits<double>::quiet_NaN();
        double med = std::numeric_limits<double>::quiet_NaN();
        if (!slacks.empty()) {
            std::sort(slacks.begin(), slacks.end());
            mn = slacks.front();
            const size_t n = slacks.size();
            med = n % 2 ? slacks[n / 2] : 0.5 * (slacks[n / 2 - 1] + slacks[n / 2]);
        }
        out += format_double(key.first) + "," + key.second + "," + format_double(mn) + "," +
               format_double(med) + "\n";
    }
    return out;
}

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace

void emit_report(const Report& r, const std::string& path, const std::string& format) {
    if (format == "json") {
        write_file(path, report_to_json(r));
    } else if (format == "csv") {
        write_file(path, report_to_csv(r));
    } else {
        throw DomainError("unknown report format \"" + format + "\" (expected json or csv)");
    }
}

void emit_plotdata(const Report& r, const std::string& axis, const std::string& path) {
    write_file(path, report_plotdata_csv(r, axis));
}

}  // namespace hfi

#include "hfi/functions.hpp"

#include "hfi/errors.hpp"
#include "hfi/expr.hpp"

namespace hfi {

FunctionSpec make_function(const std::string& src, double lo, double hi, std::string name) {
    if (!(lo > 0.0) || !(hi > lo))
        throw DomainError("make_function: need 0 < lo < hi, got [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    ExprPtr ast = parse(src);
    ExprPtr dast = diff(ast);
    FunctionSpec spec;
    spec.name = name.empty() ? src : std::move(name);
    spec.source = src;
    spec.f = [ast](double u) { return eval(ast, u); };
    spec.df = [dast](double u) { return eval(dast, u); };
    spec.domain_lo = lo;
    spec.domain_hi = hi;
    return spec;
}

const std::vector<FunctionSpec>& catalog() {
    static const std::vector<FunctionSpec> cat = [] {
        std::vector<FunctionSpec> v;
        auto add = [&v](const std::string& src, double lo, double hi) {
            FunctionSpec s = make_function(src, lo, hi);
            // Powers of u have |f'|^q proportional to a power of u, which
            // certifies at alpha = m = 1 on any positive interval.
            s.convexity_hints = {{1.0, 1.0, 1.0}, {1.0, 1.0, 2.0}, {1.0, 1.0, 3.0}};
            v.push_back(std::move(s));
        };
        add("u", 1e-12, 1e12);
        add("u^2", 1e-12, 1e12);
        add("u^3", 1e-12, 1e12);
        add("ln(u)", 1e-12, 1e12);
        add("exp(u/4)", 0.5, 2.0);
        add("u^-1", 1e-12, 1e12);
        return v;
    }();
    return cat;
}

const FunctionSpec* find_catalog(const std::string& name) {
    for (const FunctionSpec& s : catalog())
        if (s.name == name) return &s;
    return nullptr;
}

}  // namespace hfi

#include "dpfl/experiments.hpp"

#include <algorithm>
#include <utility>

#include "dpfl/errors.hpp"
#include "dpfl/optimal.hpp"

namespace dpfl {

namespace {

const Rational& require_symmetric(const CostParams& params) {
    params.validate();
    if (!params.symmetric()) throw NonSymmetricParams();
    return params.b_left;
}

Instance from_sorted(std::vector<Rational> locations, const CostParams& params) {
    return normalize(std::move(locations), params);
}

}  // namespace

Instance gen_primary(const CostParams& params, const Rational& eps) {
    const Rational& b = require_symmetric(params);
    if (eps <= 0) throw DomainError("gen_primary requires eps > 0");
    return from_sorted({Rational(0), 3 * b + eps}, params);
}

Instance gen_sc_lb(int n, const CostParams& params) {
    const Rational& b = require_symmetric(params);
    if (n < 3) throw DomainError("gen_sc_lb requires n >= 3");
    const int k = median_index(n);
    std::vector<Rational> locations;
    locations.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < k - 1; ++i) locations.push_back(Rational(0));
    locations.push_back(b);
    for (int i = 0; i < n - k; ++i) locations.push_back(2 * b);
    return from_sorted(std::move(locations), params);
}

Instance gen_m1_mc_lb(int n, const CostParams& params, const Rational& d) {
    const Rational& b = require_symmetric(params);
    if (n < 2) throw DomainError("gen_m1_mc_lb requires n >= 2");
    if (d <= 0) throw DomainError("gen_m1_mc_lb requires d > 0");
    std::vector<Rational> locations(static_cast<std::size_t>(n), 2 * (b + d));
    locations.front() = Rational(0);
    return from_sorted(std::move(locations), params);
}

Instance gen_m2_sc_worst(int n, const CostParams& params, const Rational& spread) {
    require_symmetric(params);
    if (n < 2) throw DomainError("gen_m2_sc_worst requires n >= 2");
    if (spread <= 0) throw DomainError("gen_m2_sc_worst requires spread > 0");
    std::vector<Rational> locations(static_cast<std::size_t>(n), spread);
    locations.front() = Rational(0);
    return from_sorted(std::move(locations), params);
}

Instance gen_m2_mc_tight(const CostParams& params) {
    const Rational& b = require_symmetric(params);
    return from_sorted({Rational(0), 2 * b}, params);
}

Instance gen_even_lb(int n, const CostParams& params) {
    const Rational& b = require_symmetric(params);
    if (n < 2 || n % 2 != 0) throw DomainError("gen_even_lb requires even n >= 2");
    std::vector<Rational> locations;
    locations.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n / 2; ++i) locations.push_back(Rational(0));
    for (int i = 0; i < n / 2; ++i) locations.push_back(2 * b);
    return from_sorted(std::move(locations), params);
}

Instance gen_opt_not_sp(const CostParams& params, const Rational& eps) {
    const Rational& b = require_symmetric(params);
    if (eps <= 0 || eps >= b) throw DomainError("gen_opt_not_sp requires 0 < eps < b");
    return from_sorted({-2 * b + eps, Rational(0), 3 * b}, params);
}

Instance gen_det_mc_lb(const CostParams& params, const Rational& d) {
    return gen_m1_mc_lb(2, params, d);
}

RatioReport ratio(const Mechanism& mechanism, const Instance& instance, Objective objective,
                  std::string descriptor) {
    RatioReport report;
    report.mechanism = mechanism.name;
    report.objective = objective;
    report.descriptor = std::move(descriptor);
    report.mech_value = expected_objective(instance, mechanism.apply(instance), objective);
    report.opt_value = objective == Objective::social ? optimal_social(instance).value
                                                      : optimal_max(instance).value;
    report.ratio = report.mech_value / report.opt_value;
    return report;
}

namespace {

Rational take(const GenSpec& spec, const std::string& key, const Rational& fallback) {
    auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
}

Rational require(const GenSpec& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw DomainError("family '" + spec.family + "' needs parameter '" + key + "'");
    return it->second;
}

int require_int(const GenSpec& spec, const std::string& key) {
    Rational value = require(spec, key);
    if (value.get_den() != 1 || !value.get_num().fits_sint_p())
        throw DomainError("parameter '" + key + "' must be a small integer");
    return static_cast<int>(value.get_num().get_si());
}

}  // namespace

Instance generate(const GenSpec& spec) {
    const CostParams params =
        CostParams::symmetric_params(take(spec, "b", Rational(1)), take(spec, "c", Rational(1)));
    if (spec.family == "primary") return gen_primary(params, require(spec, "eps"));
    if (spec.family == "sc-lb") return gen_sc_lb(require_int(spec, "n"), params);
    if (spec.family == "m1-mc-lb")
        return gen_m1_mc_lb(require_int(spec, "n"), params, require(spec, "d"));
    if (spec.family == "m2-sc-worst")
        return gen_m2_sc_worst(require_int(spec, "n"), params, require(spec, "spread"));
    if (spec.family == "m2-mc-tight") return gen_m2_mc_tight(params);
    if (spec.family == "even-lb") return gen_even_lb(require_int(spec, "n"), params);
    if (spec.family == "opt-not-sp") return gen_opt_not_sp(params, require(spec, "eps"));
    if (spec.family == "det-mc-lb") return gen_det_mc_lb(params, require(spec, "d"));
    throw DomainError("unknown instance family '" + spec.family + "'");
}

std::string descriptor(const GenSpec& spec) {
    std::string out = spec.family;
    std::string args;
    for (const auto& [key, value] : spec.params) {
        if (!args.empty()) args += ';';
        args += key + "=" + to_fraction_string(value);
    }
    if (!args.empty()) out += "(" + args + ")";
    return out;
}

std::vector<std::string> generator_families() {
    return {"primary",     "sc-lb",   "m1-mc-lb", "m2-sc-worst",
            "m2-mc-tight", "even-lb", "opt-not-sp", "det-mc-lb"};
}

ParamGrid parse_grid(const std::string& text) {
    ParamGrid grid;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string::npos) end = text.size();
        const std::string axis = text.substr(pos, end - pos);
        pos = end + 1;
        if (axis.empty()) continue;

        const std::size_t eq = axis.find('=');
        if (eq == std::string::npos) throw ParseError("grid axis '" + axis + "' lacks '='");
        const std::string key = axis.substr(0, eq);
        if (key.empty()) throw ParseError("grid axis with empty name");

        std::vector<Rational> values;
        std::size_t vpos = eq + 1;
        while (vpos <= axis.size()) {
            std::size_t vend = axis.find(',', vpos);
            if (vend == std::string::npos) vend = axis.size();
            values.push_back(parse_rational(axis.substr(vpos, vend - vpos)));
            vpos = vend + 1;
        }
        if (values.empty()) throw ParseError("grid axis '" + key + "' has no values");
        grid.axes.emplace_back(key, std::move(values));
    }
    if (grid.axes.empty()) throw ParseError("empty grid");
    return grid;
}

std::vector<RatioReport> sweep(const Mechanism& mechanism, Objective objective,
                               const std::string& family, const ParamGrid& grid, Exec exec) {
    std::size_t points = 1;
    for (const auto& [key, values] : grid.axes) points *= values.size();

    std::vector<GenSpec> specs;
    specs.reserve(points);
    for (std::size_t flat = 0; flat < points; ++flat) {
        GenSpec spec;
        spec.family = family;
        std::size_t rest = flat;
        for (auto it = grid.axes.rbegin(); it != grid.axes.rend(); ++it) {
            spec.params[it->first] = it->second[rest % it->second.size()];
            rest /= it->second.size();
        }
        specs.push_back(std::move(spec));
    }

    std::vector<RatioReport> reports(points);
    for_each_index(
        points,
        [&](std::size_t i) {
            reports[i] = ratio(mechanism, generate(specs[i]), objective, descriptor(specs[i]));
        },
        exec);
    return reports;
}

std::string ratio_csv_header() {
    return "mechanism,objective,generator,params,mech_value,opt_value,ratio";
}

std::string to_csv_row(const RatioReport& report) {
    // descriptor is "family(key=value;...)"; split it for the two columns
    std::string generator = report.descriptor;
    std::string params;
    if (auto open = generator.find('('); open != std::string::npos) {
        params = generator.substr(open + 1, generator.size() - open - 2);
        generator = generator.substr(0, open);
    }
    std::string row;
    row += report.mechanism;
    row += ',';
    row += objective_name(report.objective);
    row += ',';
    row += generator;
    row += ',';
    row += params;
    row += ',';
    row += to_fraction_string(report.mech_value);
    row += ',';
    row += to_fraction_string(report.opt_value);
    row += ',';
    row += to_fraction_string(report.ratio);
    return row;
}

const char* objective_name(Objective objective) {
    return objective == Objective::social ? "sc" : "mc";
}

Objective objective_by_name(const std::string& name) {
    if (name == "sc") return Objective::social;
    if (name == "mc") return Objective::max;
    throw Error("unknown objective '" + name + "' (expected sc or mc)");
}

}  // namespace dpfl

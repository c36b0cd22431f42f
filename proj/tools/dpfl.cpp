// Command-line front end. Exit codes: 0 = success / no violation found,
// 1 = violation found (verify-* commands), 2 = usage or parse error,
// 3 = search budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dpfl/errors.hpp"
#include "dpfl/experiments.hpp"
#include "dpfl/instance_io.hpp"
#include "dpfl/mechanisms.hpp"
#include "dpfl/optimal.hpp"
#include "dpfl/verification.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int g_decimal_digits = -1;  // -1: exact p/q output

std::string render(const dpfl::Rational& value) {
    if (g_decimal_digits >= 0) return dpfl::to_decimal_string(value, g_decimal_digits);
    return dpfl::to_fraction_string(value);
}

std::string render_lottery(const dpfl::Lottery& lottery) {
    std::string out;
    for (const dpfl::LotteryAtom& atom : lottery.atoms) {
        if (!out.empty()) out += "; ";
        out += render(atom.point) + " with prob " + render(atom.prob);
    }
    return out;
}

void write_violation_csv(const std::string& path, const dpfl::ViolationReport& report,
                         const std::string& mechanism) {
    std::ofstream out(path);
    if (!out) throw dpfl::Error("cannot write '" + path + "'");
    out << dpfl::violation_csv_header() << "\n" << dpfl::to_csv_row(report, mechanism) << "\n";
}

struct VerifyOutput {
    std::string csv_path;

    int report(const std::optional<dpfl::ViolationReport>& violation,
               const std::string& mechanism) const {
        if (!violation) {
            std::cout << "no violation within candidate set (not a proof)\n";
            return kExitOk;
        }
        std::cout << dpfl::to_text(*violation);
        if (!csv_path.empty()) write_violation_csv(csv_path, *violation, mechanism);
        return kExitViolation;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for one-facility location with double-peaked agent costs"};
    app.require_subcommand(1);
    app.add_option("--decimal", g_decimal_digits,
                   "render numbers rounded to this many decimal digits ('~' marks rounding) "
                   "instead of exact p/q");

    std::string file, mech_name, objective_name = "sc", family, grid_spec, csv_path, out_path;
    std::string at_text;
    int max_coalition = 2;
    std::uint64_t budget = dpfl::kDefaultGspBudget;

    auto* eval = app.add_subcommand("eval", "evaluate an objective at a point");
    eval->add_option("file", file)->required();
    eval->add_option("--at", at_text, "facility location")->required();
    eval->add_option("--objective", objective_name, "sc or mc");

    auto* opt = app.add_subcommand("opt", "exact optimal facility placement");
    opt->add_option("file", file)->required();
    opt->add_option("--objective", objective_name, "sc or mc");

    auto* mech = app.add_subcommand("mech", "run a mechanism, print its lottery");
    mech->add_option("file", file)->required();
    mech->add_option("--mech", mech_name)->required();

    auto* ratio_cmd = app.add_subcommand("ratio", "mechanism objective / optimal objective");
    ratio_cmd->add_option("file", file)->required();
    ratio_cmd->add_option("--mech", mech_name)->required();
    ratio_cmd->add_option("--objective", objective_name, "sc or mc");

    auto* vsp = app.add_subcommand("verify-sp", "search for a unilateral deviation");
    vsp->add_option("file", file)->required();
    vsp->add_option("--mech", mech_name)->required();
    vsp->add_option("--csv", csv_path, "also write the violation as CSV");

    auto* vgsp = app.add_subcommand("verify-gsp", "search for a coalition deviation");
    vgsp->add_option("file", file)->required();
    vgsp->add_option("--mech", mech_name)->required();
    vgsp->add_option("--max-coalition", max_coalition);
    vgsp->add_option("--budget", budget, "evaluation budget");
    vgsp->add_option("--csv", csv_path);

    auto* vax = app.add_subcommand("verify-axioms", "probe anonymity and position invariance");
    vax->add_option("file", file)->required();
    vax->add_option("--mech", mech_name)->required();
    vax->add_option("--csv", csv_path);

    auto* gen = app.add_subcommand("gen", "write a named instance family member");
    gen->add_option("family", family)->required();
    gen->add_option("-o,--out", out_path)->required();
    std::map<std::string, std::string> gen_params;
    for (const char* key : {"n", "d", "eps", "spread", "b", "c"})
        gen->add_option(std::string("--") + key, gen_params[key]);

    auto* sweep_cmd = app.add_subcommand("sweep", "ratio reports over a parameter grid");
    sweep_cmd->add_option("--mech", mech_name)->required();
    sweep_cmd->add_option("--objective", objective_name, "sc or mc");
    sweep_cmd->add_option("--family", family)->required();
    sweep_cmd->add_option("--grid", grid_spec, "e.g. n=3,4,5;b=1;c=1")->required();
    sweep_cmd->add_option("--csv", csv_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval) {
            dpfl::Instance instance = dpfl::load_instance(file);
            dpfl::Objective objective = dpfl::objective_by_name(objective_name);
            dpfl::Rational y = dpfl::parse_rational(at_text);
            std::cout << "value=" << render(dpfl::objective_value(instance, y, objective)) << "\n";
            return kExitOk;
        }
        if (*opt) {
            dpfl::Instance instance = dpfl::load_instance(file);
            dpfl::Objective objective = dpfl::objective_by_name(objective_name);
            dpfl::OptResult result = objective == dpfl::Objective::social
                                         ? dpfl::optimal_social(instance)
                                         : dpfl::optimal_max(instance);
            std::cout << "y=" << render(result.location) << " value=" << render(result.value)
                      << "\n";
            if (result.right_limit_infimum)
                std::cout << "note: unattained infimum " << render(*result.right_limit_infimum)
                          << " just right of an agent location\n";
            return kExitOk;
        }
        if (*mech) {
            dpfl::Instance instance = dpfl::load_instance(file);
            dpfl::Mechanism mechanism = dpfl::mechanism_or_fixture_by_name(mech_name);
            std::cout << "f(x) = " << render_lottery(mechanism.apply(instance)) << "\n";
            return kExitOk;
        }
        if (*ratio_cmd) {
            dpfl::Instance instance = dpfl::load_instance(file);
            dpfl::Mechanism mechanism = dpfl::mechanism_or_fixture_by_name(mech_name);
            dpfl::Objective objective = dpfl::objective_by_name(objective_name);
            std::cout << render(dpfl::ratio(mechanism, instance, objective, file).ratio) << "\n";
            return kExitOk;
        }
        if (*vsp) {
            dpfl::Instance instance = dpfl::load_instance(file);
            dpfl::Mechanism mechanism = dpfl::mechanism_or_fixture_by_name(mech_name);
            return VerifyOutput{csv_path}.report(dpfl::find_sp_violation(mechanism, instance),
                                                 mechanism.name);
        }
        if (*vgsp) {
            dpfl::Instance instance = dpfl::load_instance(file);
            dpfl::Mechanism mechanism = dpfl::mechanism_or_fixture_by_name(mech_name);
            dpfl::GspResult result =
                dpfl::find_gsp_violation(mechanism, instance, max_coalition, budget);
            if (result.violation)
                return VerifyOutput{csv_path}.report(result.violation, mechanism.name);
            if (result.budget_exceeded) {
                std::cout << "search budget exceeded after " << result.evaluations
                          << " evaluations; no violation so far\n";
                return kExitBudget;
            }
            std::cout << "no violation within candidate set (not a proof)\n";
            return kExitOk;
        }
        if (*vax) {
            dpfl::Instance instance = dpfl::load_instance(file);
            dpfl::Mechanism mechanism = dpfl::mechanism_or_fixture_by_name(mech_name);
            const std::vector<dpfl::Rational> shifts = {
                dpfl::Rational(1), dpfl::Rational(-1), dpfl::Rational(5), dpfl::frac(-7, 3),
                dpfl::frac(137, 10)};
            std::optional<dpfl::ViolationReport> anon =
                dpfl::check_anonymity(mechanism, instance.raw_locations(), instance.params);
            std::optional<dpfl::ViolationReport> pos =
                dpfl::check_position_invariance(mechanism, instance, shifts);
            std::cout << "anonymity: " << (anon ? "VIOLATED" : "ok") << "\n";
            std::cout << "position invariance: " << (pos ? "VIOLATED" : "ok") << "\n";
            if (anon) std::cout << dpfl::to_text(*anon);
            if (pos) std::cout << dpfl::to_text(*pos);
            if (!csv_path.empty() && (anon || pos))
                write_violation_csv(csv_path, anon ? *anon : *pos, mechanism.name);
            return (anon || pos) ? kExitViolation : kExitOk;
        }
        if (*gen) {
            dpfl::GenSpec spec;
            spec.family = family;
            for (const auto& [key, text] : gen_params)
                if (!text.empty()) spec.params[key] = dpfl::parse_rational(text);
            dpfl::save_instance(dpfl::generate(spec), out_path);
            std::cout << "wrote " << out_path << "\n";
            return kExitOk;
        }
        if (*sweep_cmd) {
            dpfl::Mechanism mechanism = dpfl::mechanism_or_fixture_by_name(mech_name);
            dpfl::Objective objective = dpfl::objective_by_name(objective_name);
            std::vector<dpfl::RatioReport> reports =
                dpfl::sweep(mechanism, objective, family, dpfl::parse_grid(grid_spec));
            std::ofstream out(csv_path);
            if (!out) throw dpfl::Error("cannot write '" + csv_path + "'");
            out << dpfl::ratio_csv_header() << "\n";
            for (const dpfl::RatioReport& report : reports)
                out << dpfl::to_csv_row(report) << "\n";
            std::cout << "wrote " << reports.size() << " rows to " << csv_path << "\n";
            return kExitOk;
        }
    } catch (const dpfl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

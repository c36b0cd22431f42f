#include "dpfl/verification.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

#include "dpfl/errors.hpp"

namespace dpfl {

const char* violation_kind_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::unilateral: return "unilateral";
        case ViolationKind::coalition: return "coalition";
        case ViolationKind::anonymity: return "anonymity";
        case ViolationKind::position_invariance: return "position-invariance";
    }
    return "?";
}

namespace {

std::string format_params(const CostParams& p) {
    if (p.symmetric()) return "b=" + to_fraction_string(p.b_left) + " c=" + to_fraction_string(p.c);
    return "b_left=" + to_fraction_string(p.b_left) + " b_right=" + to_fraction_string(p.b_right) +
           " c=" + to_fraction_string(p.c);
}

std::string format_locations(const std::vector<Rational>& xs) {
    std::string out;
    for (const Rational& x : xs) {
        if (!out.empty()) out += ' ';
        out += to_fraction_string(x);
    }
    return out;
}

std::string format_lottery(const Lottery& lottery) {
    std::string out;
    for (const LotteryAtom& atom : lottery.atoms) {
        if (!out.empty()) out += ' ';
        out += to_fraction_string(atom.point) + ":" + to_fraction_string(atom.prob);
    }
    return out;
}

std::string format_indexed(const std::map<int, Rational>& m) {
    std::string out;
    for (const auto& [agent, value] : m) {
        if (!out.empty()) out += ' ';
        out += std::to_string(agent + 1) + ":" + to_fraction_string(value);
    }
    return out;
}

}  // namespace

std::string to_text(const ViolationReport& report) {
    std::ostringstream out;
    out << "violation: " << violation_kind_name(report.kind) << "\n";
    out << "  agents (input order): " << format_locations(report.instance.raw_locations()) << "\n";
    out << "  params: " << format_params(report.instance.params) << "\n";
    if (!report.deviators.empty()) {
        out << "  deviators:";
        for (int agent : report.deviators) out << " agent " << agent + 1;
        out << "\n";
    }
    for (int agent : report.deviators) {
        out << "  agent " << agent + 1 << " reports "
            << to_fraction_string(report.misreports.at(agent)) << ", expected cost "
            << to_fraction_string(report.cost_before.at(agent)) << " -> "
            << to_fraction_string(report.cost_after.at(agent)) << "\n";
    }
    if (!report.probe.empty()) out << "  probe: " << report.probe << "\n";
    if (report.lottery_expected)
        out << "  expected lottery: " << format_lottery(*report.lottery_expected) << "\n";
    if (report.lottery_actual)
        out << "  actual lottery:   " << format_lottery(*report.lottery_actual) << "\n";
    return out.str();
}

std::string violation_csv_header() {
    return "kind,mechanism,params,agents,deviators,misreports,cost_before,cost_after,"
           "lottery_expected,lottery_actual,probe";
}

std::string to_csv_row(const ViolationReport& report, const std::string& mechanism) {
    std::string deviators;
    for (int agent : report.deviators) {
        if (!deviators.empty()) deviators += ' ';
        deviators += std::to_string(agent + 1);
    }
    const CostParams& p = report.instance.params;
    std::string row;
    row += violation_kind_name(report.kind);
    row += ',';
    row += mechanism;
    row += ',';
    row += to_fraction_string(p.b_left) + " " + to_fraction_string(p.b_right) + " " +
           to_fraction_string(p.c);
    row += ',';
    row += format_locations(report.instance.raw_locations());
    row += ',';
    row += deviators;
    row += ',';
    row += format_indexed(report.misreports);
    row += ',';
    row += format_indexed(report.cost_before);
    row += ',';
    row += format_indexed(report.cost_after);
    row += ',';
    row += report.lottery_expected ? format_lottery(*report.lottery_expected) : "";
    row += ',';
    row += report.lottery_actual ? format_lottery(*report.lottery_actual) : "";
    row += ',';
    row += report.probe;
    return row;
}

Rational CandidateSet::at(std::size_t i) const {
    if (i < exact_points.size()) return exact_points[i];
    i -= exact_points.size();
    if (i < perturbed_points.size()) return perturbed_points[i];
    i -= perturbed_points.size();
    return grid.lo + static_cast<long>(i) * grid.step;
}

std::vector<Rational> CandidateSet::structured() const {
    std::vector<Rational> out = exact_points;
    out.insert(out.end(), perturbed_points.begin(), perturbed_points.end());
    return out;
}

CandidateSet deviation_candidates(const Instance& instance, int agent) {
    (void)agent;  // one shared set covers every deviator
    const CostParams& p = instance.params;
    const Rational spread = p.b_left + p.b_right;
    const Rational eps0 = spread / 1000;

    std::vector<Rational> offsets = {Rational(0), p.b_left,      -p.b_left,    p.b_right,
                                     -p.b_right,  spread,        -spread,      2 * p.b_left,
                                     -2 * p.b_left, 2 * p.b_right, -2 * p.b_right};

    CandidateSet set;
    for (const Rational& x : instance.locations)
        for (const Rational& offset : offsets) set.exact_points.push_back(x + offset);
    std::sort(set.exact_points.begin(), set.exact_points.end());
    set.exact_points.erase(std::unique(set.exact_points.begin(), set.exact_points.end()),
                           set.exact_points.end());

    for (const Rational& point : set.exact_points) {
        set.perturbed_points.push_back(point - eps0);
        set.perturbed_points.push_back(point + eps0);
    }
    std::sort(set.perturbed_points.begin(), set.perturbed_points.end());
    set.perturbed_points.erase(
        std::unique(set.perturbed_points.begin(), set.perturbed_points.end()),
        set.perturbed_points.end());

    set.grid = GridSpec{instance.locations.front() - 3 * spread,
                        instance.locations.back() + 3 * spread, spread / 32};
    const Rational span = (set.grid.hi - set.grid.lo) / set.grid.step;
    set.grid_points = static_cast<std::size_t>(
                          mpz_class(span.get_num() / span.get_den()).get_ui()) +
                      1;
    return set;
}

void recheck(const Mechanism& mechanism, const ViolationReport& report) {
    const Instance& instance = report.instance;
    switch (report.kind) {
        case ViolationKind::unilateral:
        case ViolationKind::coalition: {
            if (report.deviators.empty()) throw Error("recheck: no deviators");
            if (report.kind == ViolationKind::unilateral && report.deviators.size() != 1)
                throw Error("recheck: unilateral report must have exactly one deviator");

            const Lottery truthful = mechanism.apply(instance);
            std::vector<Rational> raw = instance.raw_locations();
            for (int agent : report.deviators)
                raw[static_cast<std::size_t>(agent)] = report.misreports.at(agent);
            const Lottery deviated = mechanism.apply(normalize(raw, instance.params));

            bool some_strict = false;
            for (int agent : report.deviators) {
                const Rational& x = instance.raw_location(agent);
                Rational before = expected_cost(instance.params, x, truthful);
                Rational after = expected_cost(instance.params, x, deviated);
                if (before != report.cost_before.at(agent) || after != report.cost_after.at(agent))
                    throw Error("recheck: recorded costs do not reproduce");
                if (after > before) throw Error("recheck: a deviator is worse off");
                if (after < before) some_strict = true;
            }
            if (!some_strict) throw Error("recheck: no strict improvement");
            break;
        }
        case ViolationKind::anonymity:
        case ViolationKind::position_invariance:
            if (!report.lottery_expected || !report.lottery_actual)
                throw Error("recheck: axiom report lacks lotteries");
            if (*report.lottery_expected == *report.lottery_actual)
                throw Error("recheck: lotteries are equal");
            break;
    }
}

namespace {

std::optional<ViolationReport> sp_search(const Mechanism& mechanism, const Instance& instance,
                                         const std::vector<int>& agents, Exec exec) {
    const CandidateSet set = deviation_candidates(instance, agents.empty() ? 0 : agents.front());
    const std::size_t per_agent = set.size();
    const std::vector<Rational> raw = instance.raw_locations();

    const Lottery truthful = mechanism.apply(instance);
    std::vector<Rational> before;
    before.reserve(agents.size());
    for (int agent : agents)
        before.push_back(
            expected_cost(instance.params, raw[static_cast<std::size_t>(agent)], truthful));

    auto improves = [&](std::size_t flat) {
        const std::size_t which = flat / per_agent;
        const int agent = agents[which];
        const Rational report = set.at(flat % per_agent);
        const Lottery lottery =
            mechanism.apply(with_raw_report(instance, agent, report));
        const Rational after =
            expected_cost(instance.params, raw[static_cast<std::size_t>(agent)], lottery);
        return after < before[which];
    };

    const std::optional<std::size_t> hit = first_match(agents.size() * per_agent, improves, exec);
    if (!hit) return std::nullopt;

    const std::size_t which = *hit / per_agent;
    const int agent = agents[which];
    const Rational report_value = set.at(*hit % per_agent);
    const Lottery lottery = mechanism.apply(with_raw_report(instance, agent, report_value));

    ViolationReport report;
    report.kind = ViolationKind::unilateral;
    report.instance = instance;
    report.deviators = {agent};
    report.misreports[agent] = report_value;
    report.cost_before[agent] = before[which];
    report.cost_after[agent] =
        expected_cost(instance.params, raw[static_cast<std::size_t>(agent)], lottery);
    recheck(mechanism, report);
    return report;
}

}  // namespace

std::optional<ViolationReport> find_sp_violation(const Mechanism& mechanism,
                                                 const Instance& instance, Exec exec) {
    std::vector<int> agents(static_cast<std::size_t>(instance.n()));
    std::iota(agents.begin(), agents.end(), 0);
    return sp_search(mechanism, instance, agents, exec);
}

std::optional<ViolationReport> find_sp_violation_for_agent(const Mechanism& mechanism,
                                                           const Instance& instance, int agent,
                                                           Exec exec) {
    if (agent < 0 || agent >= instance.n())
        throw IndexOutOfRange("agent index " + std::to_string(agent + 1) + " out of range");
    return sp_search(mechanism, instance, {agent}, exec);
}

GspResult find_gsp_violation(const Mechanism& mechanism, const Instance& instance,
                             int max_coalition, std::uint64_t budget, Exec exec) {
    if (max_coalition < 1 || max_coalition > instance.n())
        throw IndexOutOfRange("max_coalition must be in 1..n");

    const int n = instance.n();
    const std::vector<Rational> candidates =
        deviation_candidates(instance, 0).structured();
    const std::uint64_t per_member = candidates.size();
    const std::vector<Rational> raw = instance.raw_locations();

    const Lottery truthful = mechanism.apply(instance);
    std::vector<Rational> before;
    before.reserve(static_cast<std::size_t>(n));
    for (int agent = 0; agent < n; ++agent)
        before.push_back(
            expected_cost(instance.params, raw[static_cast<std::size_t>(agent)], truthful));

    GspResult result;

    std::vector<int> subset;
    // Lexicographically next combination of `size` members, or false if done.
    auto next_combination = [&](int size) {
        int i = size - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - size + i) --i;
        if (i < 0) return false;
        ++subset[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
        return true;
    };

    for (int size = 1; size <= max_coalition; ++size) {
        subset.resize(static_cast<std::size_t>(size));
        std::iota(subset.begin(), subset.end(), 0);
        do {
            std::uint64_t tuples = 1;
            for (int i = 0; i < size; ++i) tuples *= per_member;

            const std::uint64_t remaining = budget - result.evaluations;
            const std::uint64_t allowed = std::min(tuples, remaining);

            auto decode = [&](std::uint64_t flat, std::vector<Rational>& reports) {
                reports.resize(static_cast<std::size_t>(size));
                for (int i = size - 1; i >= 0; --i) {
                    reports[static_cast<std::size_t>(i)] =
                        candidates[static_cast<std::size_t>(flat % per_member)];
                    flat /= per_member;
                }
            };

            auto improves = [&](std::size_t flat) {
                std::vector<Rational> reports;
                decode(flat, reports);
                std::vector<Rational> misreported = raw;
                for (int i = 0; i < size; ++i)
                    misreported[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])] =
                        reports[static_cast<std::size_t>(i)];
                const Lottery lottery =
                    mechanism.apply(normalize(std::move(misreported), instance.params));
                bool strict = false;
                for (int i = 0; i < size; ++i) {
                    const int agent = subset[static_cast<std::size_t>(i)];
                    const Rational after = expected_cost(
                        instance.params, raw[static_cast<std::size_t>(agent)], lottery);
                    if (after > before[static_cast<std::size_t>(agent)]) return false;
                    if (after < before[static_cast<std::size_t>(agent)]) strict = true;
                }
                return strict;
            };

            const std::optional<std::size_t> hit =
                first_match(static_cast<std::size_t>(allowed), improves, exec);
            if (hit) {
                result.evaluations += *hit + 1;
                std::vector<Rational> reports;
                decode(*hit, reports);

                ViolationReport report;
                report.kind = size == 1 ? ViolationKind::unilateral : ViolationKind::coalition;
                report.instance = instance;
                report.deviators = subset;

                std::vector<Rational> misreported = raw;
                for (int i = 0; i < size; ++i) {
                    const int agent = subset[static_cast<std::size_t>(i)];
                    report.misreports[agent] = reports[static_cast<std::size_t>(i)];
                    misreported[static_cast<std::size_t>(agent)] =
                        reports[static_cast<std::size_t>(i)];
                }
                const Lottery lottery =
                    mechanism.apply(normalize(std::move(misreported), instance.params));
                for (int i = 0; i < size; ++i) {
                    const int agent = subset[static_cast<std::size_t>(i)];
                    report.cost_before[agent] = before[static_cast<std::size_t>(agent)];
                    report.cost_after[agent] = expected_cost(
                        instance.params, raw[static_cast<std::size_t>(agent)], lottery);
                }
                recheck(mechanism, report);
                result.violation = std::move(report);
                return result;
            }

            result.evaluations += allowed;
            if (allowed < tuples) {
                result.budget_exceeded = true;
                return result;
            }
        } while (next_combination(size));
    }
    return result;
}

std::optional<ViolationReport> check_anonymity(const Mechanism& mechanism,
                                               const std::vector<Rational>& raw_locations,
                                               const CostParams& params, int samples,
                                               std::uint64_t seed) {
    const Instance base = normalize(raw_locations, params);
    const Lottery base_lottery = mechanism.apply(base);
    const int n = static_cast<int>(raw_locations.size());

    auto probe_permutation = [&](const std::vector<int>& perm) -> std::optional<ViolationReport> {
        std::vector<Rational> permuted;
        permuted.reserve(raw_locations.size());
        for (int i : perm) permuted.push_back(raw_locations[static_cast<std::size_t>(i)]);
        const Lottery lottery = mechanism.apply(normalize(permuted, params));
        if (lottery == base_lottery) return std::nullopt;

        ViolationReport report;
        report.kind = ViolationKind::anonymity;
        report.instance = base;
        report.lottery_expected = base_lottery;
        report.lottery_actual = lottery;
        std::string order;
        for (int i : perm) {
            if (!order.empty()) order += ' ';
            order += std::to_string(i + 1);
        }
        report.probe = "reports permuted to input order (" + order + ")";
        recheck(mechanism, report);
        return report;
    };

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    if (n <= 8) {
        while (std::next_permutation(perm.begin(), perm.end())) {
            if (auto report = probe_permutation(perm)) return report;
        }
        return std::nullopt;
    }

    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        std::shuffle(perm.begin(), perm.end(), rng);
        if (auto report = probe_permutation(perm)) return report;
    }
    return std::nullopt;
}

std::optional<ViolationReport> check_position_invariance(const Mechanism& mechanism,
                                                         const Instance& instance,
                                                         const std::vector<Rational>& shifts) {
    if (shifts.empty()) throw InvalidRange("check_position_invariance needs at least one shift");
    const Lottery base_lottery = mechanism.apply(instance);
    for (const Rational& t : shifts) {
        const Lottery expected = shift_lottery(base_lottery, t);
        const Lottery actual = mechanism.apply(shifted(instance, t));
        if (actual == expected) continue;

        ViolationReport report;
        report.kind = ViolationKind::position_invariance;
        report.instance = instance;
        report.lottery_expected = expected;
        report.lottery_actual = actual;
        report.probe = "all reports shifted by " + to_fraction_string(t);
        recheck(mechanism, report);
        return report;
    }
    return std::nullopt;
}

Mechanism fixture_constant_zero() {
    return {"constant-zero", [](const Instance&) { return Lottery::deterministic(Rational(0)); }};
}

Mechanism fixture_first_report_dictator() {
    return {"first-dictator", [](const Instance& instance) {
                for (std::size_t slot = 0; slot < instance.locations.size(); ++slot)
                    if (instance.origin_index[slot] == 0)
                        return Lottery::deterministic(instance.locations[slot] -
                                                      instance.params.b_left);
                throw Error("instance lacks an input slot 0");
            }};
}

Mechanism mechanism_or_fixture_by_name(const std::string& name) {
    if (name == "constant-zero") return fixture_constant_zero();
    if (name == "first-dictator") return fixture_first_report_dictator();
    return mechanism_by_name(name);
}

}  // namespace dpfl

#include "dpfl/core.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "dpfl/errors.hpp"

namespace dpfl {

void CostParams::validate() const {
    if (b_left <= 0) throw InvalidParams("b_left must be positive");
    if (b_right <= 0) throw InvalidParams("b_right must be positive");
    if (c <= 0) throw InvalidParams("c must be positive");
}

std::vector<Rational> Instance::raw_locations() const {
    std::vector<Rational> raw(locations.size());
    for (std::size_t slot = 0; slot < locations.size(); ++slot)
        raw[static_cast<std::size_t>(origin_index[slot])] = locations[slot];
    return raw;
}

const Rational& Instance::raw_location(int input_slot) const {
    for (std::size_t slot = 0; slot < locations.size(); ++slot)
        if (origin_index[slot] == input_slot) return locations[slot];
    throw IndexOutOfRange("agent index " + std::to_string(input_slot + 1) + " out of range");
}

Instance normalize(std::vector<Rational> raw_locations, const CostParams& params) {
    params.validate();
    if (raw_locations.empty()) throw EmptyInstance();

    std::vector<int> order(raw_locations.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return raw_locations[static_cast<std::size_t>(a)] < raw_locations[static_cast<std::size_t>(b)];
    });

    Instance instance;
    instance.params = params;
    instance.locations.reserve(raw_locations.size());
    instance.origin_index = order;
    for (int input_slot : order)
        instance.locations.push_back(std::move(raw_locations[static_cast<std::size_t>(input_slot)]));
    return instance;
}

Instance with_raw_report(const Instance& instance, int input_slot, const Rational& report) {
    if (input_slot < 0 || input_slot >= instance.n())
        throw IndexOutOfRange("agent index " + std::to_string(input_slot + 1) + " out of range");
    std::vector<Rational> raw = instance.raw_locations();
    raw[static_cast<std::size_t>(input_slot)] = report;
    return normalize(std::move(raw), instance.params);
}

Instance shifted(const Instance& instance, const Rational& t) {
    Instance out = instance;
    for (Rational& x : out.locations) x += t;
    return out;
}

Lottery Lottery::deterministic(const Rational& point) {
    return Lottery{{LotteryAtom{point, Rational(1)}}};
}

Lottery Lottery::from_atoms(std::vector<LotteryAtom> atoms) {
    if (atoms.empty()) throw InvalidParams("lottery needs at least one atom");
    std::sort(atoms.begin(), atoms.end(),
              [](const LotteryAtom& a, const LotteryAtom& b) { return a.point < b.point; });

    Lottery lottery;
    Rational total(0);
    for (LotteryAtom& atom : atoms) {
        if (atom.prob <= 0) throw InvalidParams("lottery probabilities must be positive");
        total += atom.prob;
        if (!lottery.atoms.empty() && lottery.atoms.back().point == atom.point)
            lottery.atoms.back().prob += atom.prob;
        else
            lottery.atoms.push_back(std::move(atom));
    }
    if (total != 1) throw InvalidParams("lottery probabilities must sum to 1");
    return lottery;
}

Lottery shift_lottery(const Lottery& lottery, const Rational& t) {
    Lottery out = lottery;
    for (LotteryAtom& atom : out.atoms) atom.point += t;
    return out;
}

Rational agent_cost(const CostParams& params, const Rational& x, const Rational& y) {
    if (y <= x) return params.c + abs(x - params.b_left - y);
    return params.c + abs(x + params.b_right - y);
}

namespace {

// Right-limit variant: at y == x the facility is treated as infinitesimally
// to the right, so the right-peak branch applies.
Rational agent_cost_right_limit(const CostParams& params, const Rational& x, const Rational& y) {
    if (y < x) return params.c + abs(x - params.b_left - y);
    return params.c + abs(x + params.b_right - y);
}

template <class Cost>
Rational fold_social(const Instance& instance, const Rational& y, Cost cost) {
    Rational total(0);
    for (const Rational& x : instance.locations) total += cost(instance.params, x, y);
    return total;
}

template <class Cost>
Rational fold_max(const Instance& instance, const Rational& y, Cost cost) {
    Rational best = cost(instance.params, instance.locations.front(), y);
    for (std::size_t i = 1; i < instance.locations.size(); ++i) {
        Rational value = cost(instance.params, instance.locations[i], y);
        if (value > best) best = std::move(value);
    }
    return best;
}

}  // namespace

Rational social_cost(const Instance& instance, const Rational& y) {
    return fold_social(instance, y, [](const CostParams& p, const Rational& x, const Rational& yy) {
        return agent_cost(p, x, yy);
    });
}

Rational max_cost(const Instance& instance, const Rational& y) {
    return fold_max(instance, y, [](const CostParams& p, const Rational& x, const Rational& yy) {
        return agent_cost(p, x, yy);
    });
}

Rational objective_value(const Instance& instance, const Rational& y, Objective objective) {
    return objective == Objective::social ? social_cost(instance, y) : max_cost(instance, y);
}

Rational objective_right_limit(const Instance& instance, const Rational& y, Objective objective) {
    auto cost = [](const CostParams& p, const Rational& x, const Rational& yy) {
        return agent_cost_right_limit(p, x, yy);
    };
    return objective == Objective::social ? fold_social(instance, y, cost)
                                          : fold_max(instance, y, cost);
}

Rational expected_cost(const CostParams& params, const Rational& x, const Lottery& lottery) {
    Rational total(0);
    for (const LotteryAtom& atom : lottery.atoms)
        total += atom.prob * agent_cost(params, x, atom.point);
    return total;
}

Rational expected_objective(const Instance& instance, const Lottery& lottery, Objective objective) {
    Rational total(0);
    for (const LotteryAtom& atom : lottery.atoms)
        total += atom.prob * objective_value(instance, atom.point, objective);
    return total;
}

}  // namespace dpfl

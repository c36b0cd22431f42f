#pragma once

#include <vector>

#include "dpfl/rational.hpp"

namespace dpfl {

// Cost model: an agent at x has minimum cost c at her two peaks x - b_left and
// x + b_right; away from a peak the cost grows at unit rate. Placements at the
// agent's own location use the left-peak branch.
struct CostParams {
    Rational b_left;
    Rational b_right;
    Rational c;

    bool symmetric() const { return b_left == b_right; }

    // Throws InvalidParams unless b_left, b_right, c are all positive.
    void validate() const;

    static CostParams symmetric_params(const Rational& b, const Rational& c) {
        return CostParams{b, b, c};
    }

    bool operator==(const CostParams&) const = default;
};

// A location profile, stored sorted. origin_index maps each sorted slot back
// to the position of that report in the original input (0-based); the sort is
// stable, so duplicate reports keep their input order.
struct Instance {
    CostParams params;
    std::vector<Rational> locations;  // nondecreasing
    std::vector<int> origin_index;    // sorted slot -> input slot

    int n() const { return static_cast<int>(locations.size()); }

    // The profile in original input order.
    std::vector<Rational> raw_locations() const;

    // True location of the agent at a given input slot.
    const Rational& raw_location(int input_slot) const;

    bool operator==(const Instance&) const = default;
};

// Sorts the profile (stably) and records the permutation.
// Throws EmptyInstance / InvalidParams.
Instance normalize(std::vector<Rational> raw_locations, const CostParams& params);

// Re-reports one agent (identified by input slot) and renormalizes.
Instance with_raw_report(const Instance& instance, int input_slot, const Rational& report);

// Every location shifted by t.
Instance shifted(const Instance& instance, const Rational& t);

struct LotteryAtom {
    Rational point;
    Rational prob;

    bool operator==(const LotteryAtom&) const = default;
};

// Finite-support distribution over facility points. Atoms are kept with
// strictly increasing points (equal points merged) and positive probabilities
// summing to exactly 1.
struct Lottery {
    std::vector<LotteryAtom> atoms;

    static Lottery deterministic(const Rational& point);

    // Sorts, merges duplicates, validates. Throws InvalidParams on a
    // nonpositive probability or a total != 1.
    static Lottery from_atoms(std::vector<LotteryAtom> atoms);

    bool is_deterministic() const { return atoms.size() == 1; }

    bool operator==(const Lottery&) const = default;
};

Lottery shift_lottery(const Lottery& lottery, const Rational& t);

enum class Objective { social, max };

// The two-branch double-peaked cost.
Rational agent_cost(const CostParams& params, const Rational& x, const Rational& y);

Rational social_cost(const Instance& instance, const Rational& y);
Rational max_cost(const Instance& instance, const Rational& y);
Rational objective_value(const Instance& instance, const Rational& y, Objective objective);

// Limit of the objective as the facility approaches y from the right. Differs
// from objective_value(y) only at agent locations when b_left != b_right.
Rational objective_right_limit(const Instance& instance, const Rational& y, Objective objective);

Rational expected_cost(const CostParams& params, const Rational& x, const Lottery& lottery);
Rational expected_objective(const Instance& instance, const Lottery& lottery, Objective objective);

}  // namespace dpfl

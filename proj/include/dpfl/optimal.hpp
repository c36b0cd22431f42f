#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dpfl/core.hpp"
#include "dpfl/parallel.hpp"

namespace dpfl {

struct OptResult {
    Rational location;  // leftmost minimizer among the examined candidates
    Rational value;     // objective at location
    std::size_t candidates_examined = 0;

    // Set only for non-symmetric parameters: the objective jumps downward at
    // agent locations when b_left > b_right, and the one-sided limit just
    // right of some agent can undercut every attained value. When that
    // happens the unattained infimum is reported here; `value` stays the best
    // value attained at an actual point.
    std::optional<Rational> right_limit_infimum;
};

// Kinks of the social cost: every x_i - b_left, x_i, x_i + b_right.
std::vector<Rational> sc_candidates(const Instance& instance);

// Kinks plus all midpoints of peak pairs. Cost pieces have unit slopes, so
// local minima of the max-cost envelope sit either on a kink or where a
// falling piece crosses a rising one, i.e. midway between two peaks.
std::vector<Rational> mc_candidates(const Instance& instance);

OptResult optimal_social(const Instance& instance, Exec exec = Exec::parallel);
OptResult optimal_max(const Instance& instance, Exec exec = Exec::parallel);

struct GridSpec {
    Rational lo;
    Rational hi;
    Rational step;
};

// lo = min location - 3(b_left+b_right), hi = max + 3(b_left+b_right),
// step = (b_left+b_right)/64. Wide enough to cover every candidate.
GridSpec default_grid(const Instance& instance);

// Independent oracle: evaluates the objective at lo, lo+step, ..., hi and
// returns the leftmost grid minimizer. Shares no logic with the candidate
// solvers above.
OptResult grid_scan(const Instance& instance, Objective objective, const Rational& lo,
                    const Rational& hi, const Rational& step, Exec exec = Exec::parallel);

}  // namespace dpfl

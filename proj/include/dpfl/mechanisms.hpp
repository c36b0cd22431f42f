#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dpfl/core.hpp"

namespace dpfl {

// A named rule mapping instances to lotteries. apply must be a pure function;
// Mechanism values are safe to share across threads.
struct Mechanism {
    std::string name;
    std::function<Lottery(const Instance&)> apply;
};

enum class Side { left, right };

// 1-based position of the median agent in the sorted profile: ceil(n/2).
// For even n this picks the lower median.
int median_index(int n);

// Equal-probability lottery over the median agent's two peaks.
Lottery m1(const Instance& instance);

// Left peak of the leftmost agent, or right peak of the rightmost agent.
Lottery m2(const Instance& instance, Side side);

// Peak of the k-th order statistic (k is 1-based). Throws IndexOutOfRange.
Lottery kth_peak(const Instance& instance, int k, Side side);

// The cost-minimizing points as (non-strategyproof) deterministic rules.
// Ties go to the leftmost minimizer; that tie-break is what makes these
// rules manipulable, so it is part of the contract.
Lottery opt_sc_mech(const Instance& instance);
Lottery opt_mc_mech(const Instance& instance);

// Names: "m1", "m2-left", "m2-right", "kth-left:<k>", "kth-right:<k>",
// "opt-sc", "opt-mc". Throws Error for anything else.
Mechanism mechanism_by_name(const std::string& name);

// The nameable rules above, with <k> shown as a placeholder.
std::vector<std::string> mechanism_names();

}  // namespace dpfl

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dpfl/core.hpp"
#include "dpfl/mechanisms.hpp"
#include "dpfl/optimal.hpp"
#include "dpfl/parallel.hpp"

namespace dpfl {

enum class ViolationKind { unilateral, coalition, anonymity, position_invariance };

const char* violation_kind_name(ViolationKind kind);

// A certified counterexample. Agent indices are 0-based input slots
// throughout; serialization renders them 1-based. Expected costs are always
// the deviators' TRUE costs: misreports only change the profile handed to the
// mechanism. Axiom probes carry the two differing lotteries instead of costs.
struct ViolationReport {
    ViolationKind kind;
    Instance instance;  // the truthful instance
    std::vector<int> deviators;
    std::map<int, Rational> misreports;
    std::map<int, Rational> cost_before;
    std::map<int, Rational> cost_after;
    std::optional<Lottery> lottery_expected;
    std::optional<Lottery> lottery_actual;
    std::string probe;  // which permutation / shift exposed the axiom failure
};

std::string to_text(const ViolationReport& report);
std::string violation_csv_header();
std::string to_csv_row(const ViolationReport& report, const std::string& mechanism);

// Misreport candidates, searched in three tiers: structural points first
// (agent locations combined with peak offsets), then their eps0-perturbed
// copies with eps0 = (b_left+b_right)/1000, then a coarse fallback grid.
// Points are ascending within each tier, which fixes the deterministic
// search order.
struct CandidateSet {
    std::vector<Rational> exact_points;
    std::vector<Rational> perturbed_points;
    GridSpec grid;
    std::size_t grid_points = 0;

    std::size_t size() const { return exact_points.size() + perturbed_points.size() + grid_points; }
    Rational at(std::size_t i) const;

    // The non-grid tiers in search order; coalition search draws from these.
    std::vector<Rational> structured() const;
};

CandidateSet deviation_candidates(const Instance& instance, int agent);

// Re-derives every number in the report from scratch and throws Error if the
// claimed improvement does not hold exactly. Called automatically by every
// search below before a report is returned.
void recheck(const Mechanism& mechanism, const ViolationReport& report);

// Searches agents in input order, candidates in tier order, and returns the
// first strict expected-cost improvement, exactly rechecked. nullopt means no
// violation within the candidate set; it is not a proof of strategyproofness.
std::optional<ViolationReport> find_sp_violation(const Mechanism& mechanism,
                                                 const Instance& instance,
                                                 Exec exec = Exec::parallel);

// Same search restricted to one deviating agent (input slot).
std::optional<ViolationReport> find_sp_violation_for_agent(const Mechanism& mechanism,
                                                           const Instance& instance, int agent,
                                                           Exec exec = Exec::parallel);

struct GspResult {
    std::optional<ViolationReport> violation;
    bool budget_exceeded = false;
    std::uint64_t evaluations = 0;  // mechanism applications charged against the budget
};

inline constexpr std::uint64_t kDefaultGspBudget = 1'000'000;

// Coalitions in ascending size then lexicographic order; per-member
// misreports from the structured tiers only, first member outermost. A
// coalition counterexample is weak: no member worse off, at least one
// strictly better. Stops after `budget` evaluations and reports that
// distinctly from "none found".
GspResult find_gsp_violation(const Mechanism& mechanism, const Instance& instance,
                             int max_coalition, std::uint64_t budget = kDefaultGspBudget,
                             Exec exec = Exec::parallel);

// Applies the mechanism to every permutation of the raw reports (all n!
// permutations for n <= 8, `samples` seeded shuffles above) and reports the
// first permutation whose lottery differs.
std::optional<ViolationReport> check_anonymity(const Mechanism& mechanism,
                                               const std::vector<Rational>& raw_locations,
                                               const CostParams& params, int samples = 5040,
                                               std::uint64_t seed = 0x5eed5eedULL);

// For each shift t the lottery on the shifted instance must equal the
// original lottery shifted by t.
std::optional<ViolationReport> check_position_invariance(const Mechanism& mechanism,
                                                         const Instance& instance,
                                                         const std::vector<Rational>& shifts);

// Self-test rules: "constant-zero" always outputs 0 (strategyproof and
// anonymous, not position invariant); "first-dictator" outputs the left peak
// of the first raw report (position invariant, not anonymous).
Mechanism fixture_constant_zero();
Mechanism fixture_first_report_dictator();

// mechanism_by_name plus the two fixtures; used by the CLI.
Mechanism mechanism_or_fixture_by_name(const std::string& name);

}  // namespace dpfl

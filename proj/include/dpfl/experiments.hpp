#pragma once

#include <map>
#include <string>
#include <vector>

#include "dpfl/core.hpp"
#include "dpfl/mechanisms.hpp"
#include "dpfl/parallel.hpp"

namespace dpfl {

struct RatioReport {
    std::string mechanism;
    Objective objective;
    std::string descriptor;  // which instance, human readable
    Rational mech_value;     // expected objective of the mechanism's lottery
    Rational opt_value;
    Rational ratio;          // mech_value / opt_value, exact
};

// Named instance families. All of them require symmetric peak offsets and
// place the leftmost agent at 0; translation invariance makes that lossless.

// Two agents at distance 3b + eps; the far-apart pair every impossibility
// argument builds on. Requires eps > 0.
Instance gen_primary(const CostParams& params, const Rational& eps);

// k-1 agents at 0, one at b, n-k at 2b with k = median_index(n); the family
// whose median-peak-lottery social-cost ratio is (nc+(n-1)b)/(nc+b). n >= 3.
Instance gen_sc_lb(int n, const CostParams& params);

// One agent at 0, n-1 at 2(b+d): max-cost ratio 1+(b+d)/(c+d) for the
// median-peak lottery. Requires n >= 2, d > 0.
Instance gen_m1_mc_lb(int n, const CostParams& params, const Rational& d);

// One agent at 0, n-1 at `spread`: stretching spread drives the leftmost-peak
// rule's social-cost ratio toward n-1. Requires n >= 2, spread > 0.
Instance gen_m2_sc_worst(int n, const CostParams& params, const Rational& spread);

// Two agents at distance 2b, whose inner peaks coincide: the leftmost-peak
// rule's max-cost ratio is exactly 1+2b/c here.
Instance gen_m2_mc_tight(const CostParams& params);

// n/2 agents at 0 and n/2 at 2b (n even): every agent has a peak at b, so the
// optimum is nc while the leftmost-peak rule pays nc+nb.
Instance gen_even_lb(int n, const CostParams& params);

// Three agents (-2b+eps, 0, 3b) with 0 < eps < b: the profile on which the
// social-cost-optimal rule is manipulable by the leftmost agent.
Instance gen_opt_not_sp(const CostParams& params, const Rational& eps);

// Two agents at distance 2(b+d): as d grows any rule that avoids the midpoint
// pays close to twice the optimal maximum cost. Requires d > 0.
Instance gen_det_mc_lb(const CostParams& params, const Rational& d);

RatioReport ratio(const Mechanism& mechanism, const Instance& instance, Objective objective,
                  std::string descriptor = {});

// A family id plus its parameters ("n", "d", "eps", "spread", and optional
// "b", "c" defaulting to 1).
struct GenSpec {
    std::string family;
    std::map<std::string, Rational> params;
};

Instance generate(const GenSpec& spec);
std::string descriptor(const GenSpec& spec);
std::vector<std::string> generator_families();

// Cartesian grid over parameter values, first key outermost.
struct ParamGrid {
    std::vector<std::pair<std::string, std::vector<Rational>>> axes;
};

// "n=3,4,5;b=1;c=1" -> axes in written order.
ParamGrid parse_grid(const std::string& text);

// One RatioReport per grid point, in grid order.
std::vector<RatioReport> sweep(const Mechanism& mechanism, Objective objective,
                               const std::string& family, const ParamGrid& grid,
                               Exec exec = Exec::parallel);

std::string ratio_csv_header();
std::string to_csv_row(const RatioReport& report);

const char* objective_name(Objective objective);
Objective objective_by_name(const std::string& name);

}  // namespace dpfl

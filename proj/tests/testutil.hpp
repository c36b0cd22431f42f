#pragma once

#include <random>
#include <vector>

#include "dpfl/core.hpp"

namespace testutil {

using dpfl::CostParams;
using dpfl::Instance;
using dpfl::Rational;

// Locations live on the 1/8 lattice in [-10, 10]; together with b, c drawn
// from {1/2, 1, 2, 3} every breakpoint stays on a coarse lattice, so grid
// oracles land close to the true optima.
inline Rational lattice_location(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-80, 80);
    return dpfl::frac(num(rng), 8);
}

inline Rational param_choice(std::mt19937_64& rng) {
    static const Rational choices[] = {dpfl::frac(1, 2), Rational(1), Rational(2), Rational(3)};
    std::uniform_int_distribution<int> pick(0, 3);
    return choices[pick(rng)];
}

inline CostParams random_symmetric_params(std::mt19937_64& rng) {
    return CostParams::symmetric_params(param_choice(rng), param_choice(rng));
}

inline Instance random_instance(std::mt19937_64& rng, int min_n = 1, int max_n = 6) {
    std::uniform_int_distribution<int> size(min_n, max_n);
    const int n = size(rng);
    std::vector<Rational> locations;
    locations.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) locations.push_back(lattice_location(rng));
    return dpfl::normalize(std::move(locations), random_symmetric_params(rng));
}

inline Instance instance_of(std::vector<Rational> locations, const Rational& b,
                            const Rational& c) {
    return dpfl::normalize(std::move(locations), CostParams::symmetric_params(b, c));
}

inline Instance instance_of(std::vector<Rational> locations, const Rational& b_left,
                            const Rational& b_right, const Rational& c) {
    return dpfl::normalize(std::move(locations), CostParams{b_left, b_right, c});
}

}  // namespace testutil

#include <doctest.h>

#include <algorithm>
#include <random>

#include "dpfl/errors.hpp"
#include "dpfl/optimal.hpp"
#include "testutil.hpp"

using namespace dpfl;
using testutil::instance_of;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> values) {
    std::vector<Rational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("sc_candidates are the kinks of the social cost") {
    CHECK(sc_candidates(instance_of({Rational(0)}, 1, 1)) == rationals({-1, 0, 1}));
    CHECK(sc_candidates(instance_of({Rational(0), Rational(2)}, 1, 1)) ==
          rationals({-1, 0, 1, 2, 3}));
    CHECK(sc_candidates(instance_of({Rational(0), Rational(0)}, 1, 1)) == rationals({-1, 0, 1}));
    CHECK(sc_candidates(instance_of({Rational(0)}, Rational(1), Rational(3), Rational(1))) ==
          rationals({-1, 0, 3}));
}

TEST_CASE("optimal_social picks the leftmost global minimizer") {
    OptResult one = optimal_social(instance_of({Rational(0)}, 1, 1));
    CHECK(one.location == -1);
    CHECK(one.value == 1);
    CHECK(one.candidates_examined == 3);

    OptResult pair = optimal_social(instance_of({Rational(0), Rational(2)}, 1, 1));
    CHECK(pair.location == 1);
    CHECK(pair.value == 2);

    OptResult trio = optimal_social(instance_of({frac(-19, 10), Rational(0), Rational(3)}, 1, 1));
    CHECK(trio.location == 1);
    CHECK(trio.value == frac(59, 10));
}

TEST_CASE("mc_candidates add midpoints of peak pairs") {
    CHECK(mc_candidates(instance_of({Rational(0)}, 1, 1)) == rationals({-1, 0, 1}));

    std::vector<Rational> pair = mc_candidates(instance_of({Rational(0), Rational(4)}, 1, 1));
    CHECK(std::find(pair.begin(), pair.end(), Rational(2)) != pair.end());

    std::vector<Rational> trio =
        mc_candidates(instance_of({Rational(0), Rational(1), Rational(2)}, 1, 1));
    CHECK(std::find(trio.begin(), trio.end(), frac(1, 2)) != trio.end());
}

TEST_CASE("optimal_max finds the min of the upper envelope") {
    OptResult pair = optimal_max(instance_of({Rational(0), Rational(4)}, 1, 1));
    CHECK(pair.location == 2);
    CHECK(pair.value == 2);

    OptResult one = optimal_max(instance_of({Rational(0)}, 1, 1));
    CHECK(one.location == -1);
    CHECK(one.value == 1);

    OptResult trio = optimal_max(instance_of({Rational(0), Rational(1), Rational(2)}, 1, 1));
    CHECK(trio.location == frac(1, 2));
    CHECK(trio.value == frac(3, 2));
}

TEST_CASE("grid_scan walks the grid and keeps the leftmost minimizer") {
    Instance pair = instance_of({Rational(0), Rational(2)}, 1, 1);
    OptResult sc = grid_scan(pair, Objective::social, Rational(-2), Rational(4), frac(1, 4));
    CHECK(sc.location == 1);
    CHECK(sc.value == 2);
    CHECK(sc.candidates_examined == 25);

    OptResult one =
        grid_scan(instance_of({Rational(0)}, 1, 1), Objective::max, Rational(-2), Rational(2),
                  Rational(1));
    CHECK(one.location == -1);
    CHECK(one.value == 1);

    OptResult mc = grid_scan(instance_of({Rational(0), Rational(4)}, 1, 1), Objective::max,
                             Rational(0), Rational(4), frac(1, 2));
    CHECK(mc.location == 2);
    CHECK(mc.value == 2);

    CHECK_THROWS_AS(grid_scan(pair, Objective::social, Rational(1), Rational(0), Rational(1)),
                    InvalidRange);
    CHECK_THROWS_AS(grid_scan(pair, Objective::social, Rational(0), Rational(1), Rational(0)),
                    InvalidRange);
}

TEST_CASE("grid_scan handles a span that is not a multiple of the step") {
    Instance one = instance_of({Rational(0)}, 1, 1);
    OptResult r = grid_scan(one, Objective::social, Rational(0), frac(5, 2), Rational(1));
    CHECK(r.candidates_examined == 3);  // 0, 1, 2
    CHECK(r.location == 1);
}

TEST_CASE("default_grid covers peak span with step (b_left+b_right)/64") {
    GridSpec grid = default_grid(instance_of({Rational(0)}, 1, 1));
    CHECK(grid.lo == -6);
    CHECK(grid.hi == 6);
    CHECK(grid.step == frac(1, 32));
}

TEST_CASE("candidate solvers agree with the grid oracle on random instances") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        Instance instance = testutil::random_instance(rng);
        GridSpec grid = default_grid(instance);
        for (Objective objective : {Objective::social, Objective::max}) {
            OptResult exact = objective == Objective::social ? optimal_social(instance)
                                                             : optimal_max(instance);
            OptResult scan =
                grid_scan(instance, objective, grid.lo, grid.hi, grid.step, Exec::serial);
            CHECK(exact.value <= scan.value);
            Rational oracle_gap = scan.value - exact.value;
            CHECK(oracle_gap <= grid.step);

            const std::vector<Rational> candidates = objective == Objective::social
                                                         ? sc_candidates(instance)
                                                         : mc_candidates(instance);
            CHECK(std::binary_search(candidates.begin(), candidates.end(), exact.location));
        }
    }
}

TEST_CASE("a finer grid never beats the candidate solver") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        Instance instance = testutil::random_instance(rng, 1, 4);
        GridSpec grid = default_grid(instance);
        Rational fine = grid.step / 8;
        OptResult sc = grid_scan(instance, Objective::social, grid.lo, grid.hi, fine);
        OptResult mc = grid_scan(instance, Objective::max, grid.lo, grid.hi, fine);
        CHECK(optimal_social(instance).value <= sc.value);
        CHECK(optimal_max(instance).value <= mc.value);
    }
}

TEST_CASE("restricting candidates to the median peak interval keeps the optimum") {
    std::mt19937_64 rng(44);
    for (int trial = 0; trial < 60; ++trial) {
        Instance instance = testutil::random_instance(rng);
        const Rational& b = instance.params.b_left;
        const Rational& median =
            instance.locations[static_cast<std::size_t>((instance.n() + 1) / 2 - 1)];

        Rational best_in_window(0);
        bool found = false;
        for (const Rational& y : sc_candidates(instance)) {
            if (y < median - b || y > median + b) continue;
            Rational value = social_cost(instance, y);
            if (!found || value < best_in_window) {
                best_in_window = value;
                found = true;
            }
        }
        REQUIRE(found);
        CHECK(best_in_window == optimal_social(instance).value);
    }
}

TEST_CASE("optima translate with the instance and ignore report order") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 40; ++trial) {
        Instance instance = testutil::random_instance(rng);
        Rational t = testutil::lattice_location(rng);

        OptResult sc = optimal_social(instance);
        OptResult sc_shifted = optimal_social(shifted(instance, t));
        CHECK(sc_shifted.location == sc.location + t);
        CHECK(sc_shifted.value == sc.value);

        OptResult mc = optimal_max(instance);
        OptResult mc_shifted = optimal_max(shifted(instance, t));
        CHECK(mc_shifted.location == mc.location + t);
        CHECK(mc_shifted.value == mc.value);

        std::vector<Rational> raw = instance.raw_locations();
        std::shuffle(raw.begin(), raw.end(), rng);
        Instance permuted = normalize(raw, instance.params);
        OptResult sc_perm = optimal_social(permuted);
        CHECK(sc_perm.location == sc.location);
        CHECK(sc_perm.value == sc.value);
    }
}

TEST_CASE("non-symmetric jump can hide an unattained infimum") {
    // Agent at 0 with peaks {-2, 1}; two agents at 2 with peaks {0, 3}.
    // Just right of 0 the social cost tends to 4, but no point attains it.
    Instance instance =
        instance_of({Rational(0), Rational(2), Rational(2)}, Rational(2), Rational(1), Rational(1));
    OptResult r = optimal_social(instance);
    CHECK(r.location == 0);
    CHECK(r.value == 5);
    REQUIRE(r.right_limit_infimum.has_value());
    CHECK(*r.right_limit_infimum == 4);

    OptResult sym = optimal_social(instance_of({Rational(0), Rational(2)}, 1, 1));
    CHECK(!sym.right_limit_infimum.has_value());
}

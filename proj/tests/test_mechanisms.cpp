#include <doctest.h>

#include <random>

#include "dpfl/errors.hpp"
#include "dpfl/mechanisms.hpp"
#include "dpfl/verification.hpp"
#include "testutil.hpp"

using namespace dpfl;
using testutil::instance_of;

TEST_CASE("median index is ceil(n/2), the lower median for even n") {
    CHECK(median_index(1) == 1);
    CHECK(median_index(4) == 2);
    CHECK(median_index(5) == 3);
    CHECK(median_index(1000) == 500);
    CHECK_THROWS_AS(median_index(0), EmptyInstance);
}

TEST_CASE("m1 randomizes evenly over the median agent's peaks") {
    Lottery four = m1(instance_of({Rational(0), Rational(1), Rational(2), Rational(2)}, 1, 1));
    REQUIRE(four.atoms.size() == 2);
    CHECK(four.atoms[0] == LotteryAtom{Rational(0), frac(1, 2)});
    CHECK(four.atoms[1] == LotteryAtom{Rational(2), frac(1, 2)});

    Lottery single = m1(instance_of({Rational(5)}, 1, 1));
    CHECK(single.atoms[0].point == 4);
    CHECK(single.atoms[1].point == 6);

    Lottery skew = m1(instance_of({Rational(0)}, Rational(1), Rational(3), Rational(1)));
    CHECK(skew.atoms[0].point == -1);
    CHECK(skew.atoms[1].point == 3);
}

TEST_CASE("m2 places on the outermost peaks") {
    Instance primary = instance_of({Rational(0), frac(31, 10)}, 1, 1);
    CHECK(m2(primary, Side::left) == Lottery::deterministic(Rational(-1)));
    CHECK(m2(primary, Side::right) == Lottery::deterministic(frac(41, 10)));
    CHECK(m2(instance_of({Rational(7)}, 1, 1), Side::left) == Lottery::deterministic(Rational(6)));
}

TEST_CASE("kth_peak picks the k-th order statistic's peak") {
    Instance trio = instance_of({Rational(0), Rational(1), Rational(5)}, 1, 1);
    CHECK(kth_peak(trio, 1, Side::right) == Lottery::deterministic(Rational(1)));
    CHECK(kth_peak(trio, 2, Side::left) == Lottery::deterministic(Rational(0)));
    CHECK_THROWS_AS(kth_peak(trio, 4, Side::left), IndexOutOfRange);
    CHECK_THROWS_AS(kth_peak(trio, 0, Side::left), IndexOutOfRange);
}

TEST_CASE("optimal rules break ties to the left") {
    CHECK(opt_sc_mech(instance_of({frac(-5, 2), Rational(0), Rational(3)}, 1, 1)) ==
          Lottery::deterministic(Rational(-1)));
    CHECK(opt_sc_mech(instance_of({Rational(0)}, 1, 1)) == Lottery::deterministic(Rational(-1)));
    CHECK(opt_mc_mech(instance_of({Rational(0), Rational(4)}, 1, 1)) ==
          Lottery::deterministic(Rational(2)));
}

TEST_CASE("mechanism registry resolves every documented name") {
    Instance trio = instance_of({Rational(0), Rational(1), Rational(5)}, 1, 1);
    CHECK(mechanism_by_name("m1").apply(trio) == m1(trio));
    CHECK(mechanism_by_name("m2-left").apply(trio) == m2(trio, Side::left));
    CHECK(mechanism_by_name("m2-right").apply(trio) == m2(trio, Side::right));
    CHECK(mechanism_by_name("kth-left:2").apply(trio) == kth_peak(trio, 2, Side::left));
    CHECK(mechanism_by_name("kth-right:1").apply(trio) == kth_peak(trio, 1, Side::right));
    CHECK(mechanism_by_name("opt-sc").apply(trio) == opt_sc_mech(trio));
    CHECK(mechanism_by_name("opt-mc").apply(trio) == opt_mc_mech(trio));

    CHECK_THROWS_AS(mechanism_by_name("median"), Error);
    CHECK_THROWS_AS(mechanism_by_name("kth-left:"), Error);
    CHECK_THROWS_AS(mechanism_by_name("kth-left:0"), Error);
    CHECK_THROWS_AS(mechanism_by_name("kth-left:2x"), Error);
}

TEST_CASE("all built-in rules are anonymous and position invariant") {
    std::mt19937_64 rng(99);
    const std::vector<Rational> shifts = {Rational(5), frac(-7, 3), frac(1, 2)};
    for (int trial = 0; trial < 15; ++trial) {
        Instance instance = testutil::random_instance(rng, 1, 5);
        for (const char* name : {"m1", "m2-left", "m2-right", "opt-sc", "opt-mc"}) {
            Mechanism mechanism = mechanism_by_name(name);
            CHECK(!check_anonymity(mechanism, instance.raw_locations(), instance.params));
            CHECK(!check_position_invariance(mechanism, instance, shifts));
        }
    }
}

TEST_CASE("m1 lottery structure: two atoms, b_left+b_right apart") {
    std::mt19937_64 rng(100);
    for (int trial = 0; trial < 50; ++trial) {
        Instance instance = testutil::random_instance(rng);
        Lottery lottery = m1(instance);
        REQUIRE(lottery.atoms.size() == 2);
        CHECK(lottery.atoms[0].prob == frac(1, 2));
        CHECK(lottery.atoms[1].prob == frac(1, 2));
        Rational spread = lottery.atoms[1].point - lottery.atoms[0].point;
        CHECK(spread == instance.params.b_left + instance.params.b_right);
    }
}

TEST_CASE("m2-left never places right of the smallest left peak") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        Instance instance = testutil::random_instance(rng);
        Rational point = m2(instance, Side::left).atoms.front().point;
        for (const Rational& x : instance.locations) CHECK(point <= x - instance.params.b_left);
    }
}

TEST_CASE("one agent gets expected cost exactly c from every built-in rule") {
    std::mt19937_64 rng(102);
    for (int trial = 0; trial < 20; ++trial) {
        Instance one = testutil::random_instance(rng, 1, 1);
        const Rational& x = one.locations.front();
        CHECK(expected_cost(one.params, x, m1(one)) == one.params.c);
        CHECK(expected_cost(one.params, x, m2(one, Side::left)) == one.params.c);
        CHECK(expected_cost(one.params, x, m2(one, Side::right)) == one.params.c);
        CHECK(expected_cost(one.params, x, kth_peak(one, 1, Side::left)) == one.params.c);
    }
}

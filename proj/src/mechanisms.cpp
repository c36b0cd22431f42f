#include "dpfl/mechanisms.hpp"

#include <charconv>

#include "dpfl/errors.hpp"
#include "dpfl/optimal.hpp"

namespace dpfl {

int median_index(int n) {
    if (n < 1) throw EmptyInstance();
    return (n + 1) / 2;
}

Lottery m1(const Instance& instance) {
    const Rational& x_m =
        instance.locations[static_cast<std::size_t>(median_index(instance.n()) - 1)];
    return Lottery::from_atoms({{x_m - instance.params.b_left, frac(1, 2)},
                                {x_m + instance.params.b_right, frac(1, 2)}});
}

Lottery m2(const Instance& instance, Side side) {
    return side == Side::left
               ? Lottery::deterministic(instance.locations.front() - instance.params.b_left)
               : Lottery::deterministic(instance.locations.back() + instance.params.b_right);
}

Lottery kth_peak(const Instance& instance, int k, Side side) {
    if (k < 1 || k > instance.n())
        throw IndexOutOfRange("order statistic " + std::to_string(k) + " out of range for n=" +
                              std::to_string(instance.n()));
    const Rational& x_k = instance.locations[static_cast<std::size_t>(k - 1)];
    return side == Side::left ? Lottery::deterministic(x_k - instance.params.b_left)
                              : Lottery::deterministic(x_k + instance.params.b_right);
}

Lottery opt_sc_mech(const Instance& instance) {
    return Lottery::deterministic(optimal_social(instance).location);
}

Lottery opt_mc_mech(const Instance& instance) {
    return Lottery::deterministic(optimal_max(instance).location);
}

namespace {

int parse_k(const std::string& name, std::size_t prefix_len) {
    const char* begin = name.data() + prefix_len;
    const char* end = name.data() + name.size();
    int k = 0;
    auto [ptr, ec] = std::from_chars(begin, end, k);
    if (ec != std::errc() || ptr != end || k < 1)
        throw Error("bad order statistic in mechanism name '" + name + "'");
    return k;
}

}  // namespace

Mechanism mechanism_by_name(const std::string& name) {
    if (name == "m1") return {name, [](const Instance& i) { return m1(i); }};
    if (name == "m2-left") return {name, [](const Instance& i) { return m2(i, Side::left); }};
    if (name == "m2-right") return {name, [](const Instance& i) { return m2(i, Side::right); }};
    if (name == "opt-sc") return {name, [](const Instance& i) { return opt_sc_mech(i); }};
    if (name == "opt-mc") return {name, [](const Instance& i) { return opt_mc_mech(i); }};
    if (name.starts_with("kth-left:")) {
        int k = parse_k(name, 9);
        return {name, [k](const Instance& i) { return kth_peak(i, k, Side::left); }};
    }
    if (name.starts_with("kth-right:")) {
        int k = parse_k(name, 10);
        return {name, [k](const Instance& i) { return kth_peak(i, k, Side::right); }};
    }
    throw Error("unknown mechanism '" + name + "'");
}

std::vector<std::string> mechanism_names() {
    return {"m1", "m2-left", "m2-right", "kth-left:<k>", "kth-right:<k>", "opt-sc", "opt-mc"};
}

}  // namespace dpfl

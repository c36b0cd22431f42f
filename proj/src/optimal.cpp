#include "dpfl/optimal.hpp"

#include <algorithm>
#include <utility>

#include "dpfl/errors.hpp"

namespace dpfl {

namespace {

void sort_unique(std::vector<Rational>& points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
}

std::vector<Rational> peak_points(const Instance& instance) {
    std::vector<Rational> peaks;
    peaks.reserve(2 * instance.locations.size());
    for (const Rational& x : instance.locations) {
        peaks.push_back(x - instance.params.b_left);
        peaks.push_back(x + instance.params.b_right);
    }
    sort_unique(peaks);
    return peaks;
}

OptResult minimize_over(const Instance& instance, const std::vector<Rational>& candidates,
                        Objective objective, Exec exec) {
    auto [index, value] = argmin_by_index(
        candidates.size(),
        [&](std::size_t i) { return objective_value(instance, candidates[i], objective); }, exec);

    OptResult result;
    result.location = candidates[index];
    result.value = std::move(value);
    result.candidates_examined = candidates.size();

    if (!instance.params.symmetric()) {
        // The objective is only left-continuous at agent locations; probe the
        // right-branch value there to detect an unattained lower envelope.
        Rational inf = result.value;
        for (const Rational& x : instance.locations) {
            Rational limit = objective_right_limit(instance, x, objective);
            if (limit < inf) inf = std::move(limit);
        }
        if (inf < result.value) result.right_limit_infimum = std::move(inf);
    }
    return result;
}

}  // namespace

std::vector<Rational> sc_candidates(const Instance& instance) {
    std::vector<Rational> points;
    points.reserve(3 * instance.locations.size());
    for (const Rational& x : instance.locations) {
        points.push_back(x - instance.params.b_left);
        points.push_back(x);
        points.push_back(x + instance.params.b_right);
    }
    sort_unique(points);
    return points;
}

std::vector<Rational> mc_candidates(const Instance& instance) {
    std::vector<Rational> points = sc_candidates(instance);
    std::vector<Rational> peaks = peak_points(instance);
    points.reserve(points.size() + peaks.size() * (peaks.size() + 1) / 2);
    for (std::size_t i = 0; i < peaks.size(); ++i)
        for (std::size_t j = i; j < peaks.size(); ++j)
            points.push_back((peaks[i] + peaks[j]) / 2);
    sort_unique(points);
    return points;
}

OptResult optimal_social(const Instance& instance, Exec exec) {
    return minimize_over(instance, sc_candidates(instance), Objective::social, exec);
}

OptResult optimal_max(const Instance& instance, Exec exec) {
    return minimize_over(instance, mc_candidates(instance), Objective::max, exec);
}

GridSpec default_grid(const Instance& instance) {
    const Rational span = instance.params.b_left + instance.params.b_right;
    return GridSpec{instance.locations.front() - 3 * span, instance.locations.back() + 3 * span,
                    span / 64};
}

OptResult grid_scan(const Instance& instance, Objective objective, const Rational& lo,
                    const Rational& hi, const Rational& step, Exec exec) {
    if (!(lo < hi)) throw InvalidRange("grid_scan requires lo < hi");
    if (step <= 0) throw InvalidRange("grid_scan requires step > 0");

    const Rational span = (hi - lo) / step;
    mpz_class steps_z = span.get_num() / span.get_den();  // floor; span >= 0
    if (!steps_z.fits_ulong_p()) throw InvalidRange("grid_scan grid too fine");
    const std::size_t count = steps_z.get_ui() + 1;

    auto [index, value] = argmin_by_index(
        count,
        [&](std::size_t i) {
            return objective_value(instance, lo + static_cast<long>(i) * step, objective);
        },
        exec);

    OptResult result;
    result.location = lo + static_cast<long>(index) * step;
    result.value = std::move(value);
    result.candidates_examined = count;
    return result;
}

}  // namespace dpfl

#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dpfl/rational.hpp"

namespace dpfl {

// Every search and sweep in this project is a data-parallel loop over an
// index space. The kernels below come in a serial reference version and an
// OpenMP version; both produce bit-identical results, which the test suite
// checks. Exec::parallel falls back to the serial path when the problem is
// too small to amortize thread startup or when OpenMP is unavailable.
enum class Exec { serial, parallel };

namespace detail {
constexpr std::size_t kParallelCutoff = 256;
constexpr std::size_t kMatchBlock = 2048;

inline int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}
}  // namespace detail

// Index of the minimum of eval(0..count-1), ties broken toward the smallest
// index. eval must be pure.
template <class Eval>
std::pair<std::size_t, Rational> argmin_by_index(std::size_t count, Eval&& eval, Exec exec) {
    struct Best {
        bool set = false;
        std::size_t index = 0;
        Rational value;
    };

    auto consider = [](Best& best, std::size_t i, Rational value) {
        if (!best.set || value < best.value || (value == best.value && i < best.index)) {
            best.set = true;
            best.index = i;
            best.value = std::move(value);
        }
    };

#ifdef _OPENMP
    if (exec == Exec::parallel && count >= detail::kParallelCutoff) {
        std::vector<Best> bests(static_cast<std::size_t>(detail::thread_count()));
#pragma omp parallel
        {
            Best& mine = bests[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
            for (long long i = 0; i < static_cast<long long>(count); ++i)
                consider(mine, static_cast<std::size_t>(i), eval(static_cast<std::size_t>(i)));
        }
        Best best;
        for (Best& b : bests)
            if (b.set) consider(best, b.index, std::move(b.value));
        return {best.index, std::move(best.value)};
    }
#else
    (void)exec;
#endif

    Best best;
    for (std::size_t i = 0; i < count; ++i) consider(best, i, eval(i));
    return {best.index, std::move(best.value)};
}

// Smallest index in [0, count) satisfying pred, or nullopt. pred must be
// pure. The parallel version scans block by block so it can stop early while
// still returning the sequentially-first match.
template <class Pred>
std::optional<std::size_t> first_match(std::size_t count, Pred&& pred, Exec exec) {
#ifdef _OPENMP
    if (exec == Exec::parallel && count >= detail::kParallelCutoff) {
        constexpr long long kNoHit = std::numeric_limits<long long>::max();
        for (std::size_t begin = 0; begin < count; begin += detail::kMatchBlock) {
            const std::size_t end = std::min(count, begin + detail::kMatchBlock);
            long long hit = kNoHit;
#pragma omp parallel for schedule(static) reduction(min : hit)
            for (long long i = static_cast<long long>(begin); i < static_cast<long long>(end); ++i) {
                if (pred(static_cast<std::size_t>(i)) && i < hit) hit = i;
            }
            if (hit != kNoHit) return static_cast<std::size_t>(hit);
        }
        return std::nullopt;
    }
#else
    (void)exec;
#endif

    for (std::size_t i = 0; i < count; ++i)
        if (pred(i)) return i;
    return std::nullopt;
}

// fn(i) fills slot i of an output the caller preallocated.
template <class Fn>
void for_each_index(std::size_t count, Fn&& fn, Exec exec) {
#ifdef _OPENMP
    if (exec == Exec::parallel && count >= 2) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            fn(static_cast<std::size_t>(i));
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace dpfl

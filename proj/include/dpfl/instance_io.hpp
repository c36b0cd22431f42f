#pragma once

#include <string>
#include <string_view>

#include "dpfl/core.hpp"

namespace dpfl {

// Instance file format: '#' comment lines, one "params <b> <c>" (symmetric)
// or "params <b_left> <b_right> <c>" line, one "agents <x_1> ... <x_n>" line.
// Numbers are "p", "p/q" or finite decimals; parsing is exact.
Instance parse_instance(std::string_view text);

// Writes the normalized (sorted) profile. Instances whose reports were
// already sorted, generator output in particular, round-trip exactly.
std::string format_instance(const Instance& instance);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

}  // namespace dpfl

#pragma once

#include <cstdint>
#include <vector>

namespace beatty {

// Geometric grid: x_0 = x_min, x_{i+1} = max(x_i + 1, floor(x_i * factor)),
// truncated to x_max and always ending exactly at x_max.
std::vector<std::int64_t> geometric_checkpoints(std::int64_t x_min, std::int64_t x_max,
                                                double factor = 1.1);

}  // namespace beatty

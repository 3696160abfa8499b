#include "beatty/checkpoints.hpp"

#include <cmath>

#include "beatty/errors.hpp"

namespace beatty {

std::vector<std::int64_t> geometric_checkpoints(std::int64_t x_min, std::int64_t x_max,
                                                double factor) {
    if (x_min < 1 || x_min > x_max || factor <= 1.0) {
        throw Error(ErrorCategory::ConfigError,
                    "geometric grid needs 1 <= x_min <= x_max and factor > 1");
    }
    std::vector<std::int64_t> xs;
    std::int64_t x = x_min;
    while (x < x_max) {
        xs.push_back(x);
        const auto next = static_cast<std::int64_t>(
            std::floor(static_cast<double>(x) * factor));
        x = next > x ? next : x + 1;
    }
    xs.push_back(x_max);
    return xs;
}

}  // namespace beatty

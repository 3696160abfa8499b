#pragma once

#include <cstdint>
#include <string>

namespace beatty {

// Shortest round-trip decimal rendering (std::to_chars), so emitted CSV and
// JSON are byte-stable across runs.
std::string format_double(double v);
std::string format_int(std::int64_t v);

}  // namespace beatty

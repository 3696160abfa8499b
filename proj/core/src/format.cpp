#include "beatty/format.hpp"

#include <charconv>
#include <cmath>

namespace beatty {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_int(std::int64_t v) { return std::to_string(v); }

}  // namespace beatty

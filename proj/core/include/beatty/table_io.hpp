#pragma once

#include <cstdint>
#include <string>

#include "beatty/function_table.hpp"

namespace beatty {

// Sieve cache file layout (integer-valued tables only):
//
//   bytes 0..4   magic "BLAB1"
//   bytes 5..12  N, unsigned 64-bit little-endian
//   byte  13     type tag (see TableTag)
//   then         N signed 64-bit little-endian values f(1..N)
enum class TableTag : std::uint8_t {
    Generic = 0,
    One = 1,
    Identity = 2,
    Primes = 3,
    Totient = 4,
    Rademacher = 5,
    Tau = 6,
};

TableTag tag_for_spec(const std::string& f_spec);

void write_blab(const std::string& path, const FunctionTable& table, TableTag tag);

struct BlabFile {
    TableTag tag;
    std::vector<std::int64_t> values;  // f(1..N)
};
BlabFile read_blab(const std::string& path);

// Table for `f_spec` of size n, going through the sieve cache directory in
// $BEATTY_LAB_CACHE when it is set and the spec is cacheable.
FunctionTable load_or_sieve(const std::string& f_spec, std::int64_t n,
                            std::uint64_t master_seed);

}  // namespace beatty

#include "beatty/table_io.hpp"

#include <array>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>

#include "beatty/errors.hpp"

namespace beatty {

namespace {

constexpr char kMagic[5] = {'B', 'L', 'A', 'B', '1'};

void put_u64_le(std::ofstream& out, std::uint64_t v) {
    std::array<char, 8> b;
    for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<char>(v >> (8 * i));
    out.write(b.data(), 8);
}

std::uint64_t get_u64_le(std::ifstream& in) {
    std::array<unsigned char, 8> b{};
    in.read(reinterpret_cast<char*>(b.data()), 8);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
    return v;
}

}  // namespace

TableTag tag_for_spec(const std::string& f_spec) {
    if (f_spec == "one") return TableTag::One;
    if (f_spec == "id") return TableTag::Identity;
    if (f_spec == "primes") return TableTag::Primes;
    if (f_spec == "totient") return TableTag::Totient;
    if (f_spec == "rademacher") return TableTag::Rademacher;
    if (f_spec.rfind("tau", 0) == 0) return TableTag::Tau;
    return TableTag::Generic;
}

void write_blab(const std::string& path, const FunctionTable& table, TableTag tag) {
    if (!table.integer_valued()) {
        throw Error(ErrorCategory::ConfigError,
                    "the sieve cache format stores integer-valued tables only");
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCategory::IoError, "cannot open '" + path + "' for writing");
    out.write(kMagic, 5);
    put_u64_le(out, static_cast<std::uint64_t>(table.size()));
    const char tag_byte = static_cast<char>(tag);
    out.write(&tag_byte, 1);
    for (std::int64_t v : table.int_values()) {
        put_u64_le(out, static_cast<std::uint64_t>(v));
    }
    if (!out) throw Error(ErrorCategory::IoError, "short write to '" + path + "'");
}

BlabFile read_blab(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCategory::IoError, "cannot open '" + path + "'");
    char magic[5];
    in.read(magic, 5);
    if (!in || std::memcmp(magic, kMagic, 5) != 0) {
        throw Error(ErrorCategory::IoError, "'" + path + "' is not a BLAB1 file");
    }
    const std::uint64_t n = get_u64_le(in);
    char tag_byte = 0;
    in.read(&tag_byte, 1);
    if (!in || n > 200'000'000ULL) {
        throw Error(ErrorCategory::IoError, "'" + path + "' has a corrupt header");
    }
    std::vector<std::int64_t> values(static_cast<std::size_t>(n));
    for (auto& v : values) v = static_cast<std::int64_t>(get_u64_le(in));
    if (!in) throw Error(ErrorCategory::IoError, "short read from '" + path + "'");
    return BlabFile{static_cast<TableTag>(tag_byte), std::move(values)};
}

FunctionTable load_or_sieve(const std::string& f_spec, std::int64_t n,
                            std::uint64_t master_seed) {
    const char* cache_dir = std::getenv("BEATTY_LAB_CACHE");
    const bool cacheable = f_spec_is_integer_valued(f_spec) && f_spec != "zero" &&
                           f_spec != "one" && f_spec != "id";
    if (cache_dir == nullptr || !cacheable) {
        return make_table(f_spec, n, master_seed);
    }

    std::string slug = f_spec;
    if (f_spec == "rademacher") slug += "_s" + std::to_string(master_seed);
    const std::string path = std::string(cache_dir) + "/" + slug + "_" +
                             std::to_string(n) + ".blab";

    if (std::filesystem::exists(path)) {
        BlabFile cached = read_blab(path);
        if (static_cast<std::int64_t>(cached.values.size()) == n &&
            cached.tag == tag_for_spec(f_spec)) {
            return FunctionTable::from_integer_values(f_spec, std::move(cached.values));
        }
        // stale or mismatched cache entry: fall through and rebuild
    }
    FunctionTable t = make_table(f_spec, n, master_seed);
    std::error_code ec;
    std::filesystem::create_directories(cache_dir, ec);
    write_blab(path, t, tag_for_spec(f_spec));
    return t;
}

}  // namespace beatty

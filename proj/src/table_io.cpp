#include "overcubic/table_io.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace overcubic {

namespace {

constexpr const char* kHeader = "overcubic-table v1";

uint64_t fnv1a(uint64_t state, const std::string& data) {
    for (unsigned char c : data) {
        state ^= c;
        state *= 0x100000001b3ull;
    }
    return state;
}

constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ull;

std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

}  // namespace

void save_table(const PowerSeries& table, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw cache_error("save_table: cannot open " + path);
    out << kHeader << "\n";
    uint64_t sum = kFnvOffset;
    for (long n = 0; n <= table.truncation_order(); ++n) {
        std::string line = std::to_string(n) + "," + table.coefficient(n).get_str() + "\n";
        sum = fnv1a(sum, line);
        out << line;
    }
    out << "checksum," << hex64(sum) << "\n";
    if (!out) throw cache_error("save_table: write failure on " + path);
}

PowerSeries load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cache_error("load_table: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw cache_error("load_table: bad header in " + path);
    PowerSeries table;
    table.coeffs.clear();
    uint64_t sum = kFnvOffset;
    bool saw_checksum = false;
    long expect = 0;
    while (std::getline(in, line)) {
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw cache_error("load_table: malformed record in " + path);
        std::string key = line.substr(0, comma);
        std::string value = line.substr(comma + 1);
        if (key == "checksum") {
            if (value != hex64(sum))
                throw cache_error("load_table: checksum mismatch in " + path);
            saw_checksum = true;
            break;
        }
        long n = std::stol(key);
        if (n != expect)
            throw cache_error("load_table: records not contiguous in " + path);
        ++expect;
        sum = fnv1a(sum, line + "\n");
        table.coeffs.emplace_back(value);
    }
    if (!saw_checksum) throw cache_error("load_table: missing checksum in " + path);
    if (table.coeffs.empty()) throw cache_error("load_table: empty table in " + path);
    return table;
}

PowerSeries load_or_build_table(long nmax, const std::optional<std::string>& path) {
    if (path && std::filesystem::exists(*path)) {
        try {
            PowerSeries t = load_table(*path);
            if (t.truncation_order() >= nmax) {
                t.coeffs.resize(static_cast<size_t>(nmax) + 1);
                return t;
            }
        } catch (const cache_error&) {
            // fall through to recomputation
        }
    }
    PowerSeries t = overcubic_table(nmax);
    if (path) save_table(t, *path);
    return t;
}

}  // namespace overcubic

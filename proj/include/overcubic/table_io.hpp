#pragma once

#include <optional>
#include <string>

#include "overcubic/qseries.hpp"

namespace overcubic {

// Raised when a cache file fails its format, contiguity, or checksum checks.
struct cache_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Cache file layout: a version header line, one `n,value` record per line
 * in ascending n from 0, and a trailing `checksum,<16 hex digits>` line
 * (FNV-1a 64 over the record lines including newlines). */
void save_table(const PowerSeries& table, const std::string& path);
PowerSeries load_table(const std::string& path);

// Loads `path` when it exists and covers nmax (truncating to nmax);
// otherwise recomputes, writing back to `path` when given.
PowerSeries load_or_build_table(long nmax, const std::optional<std::string>& path);

}  // namespace overcubic

#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "cli/report.hpp"

namespace krull::cli {

std::string sha256_hex(const std::string& data);

// Content-addressed result cache: one JSON file per key, named by the SHA-256
// of the key material.  Unreadable or mismatching entries are recomputed.
class Cache {
public:
    Cache() = default;
    explicit Cache(std::filesystem::path dir);

    bool enabled() const { return dir_.has_value(); }
    Json get_or_compute(const std::string& material, const std::function<Json()>& compute);

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }

private:
    std::optional<std::filesystem::path> dir_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

// KRULL_ARITH_CACHE when set, otherwise --cache-dir; caching is off when neither is given.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag);

}  // namespace krull::cli

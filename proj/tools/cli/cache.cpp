#include "cli/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "krull/error.hpp"

namespace krull::cli {

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("SHA-256 computation failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return os.str();
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(*dir_); }

Json Cache::get_or_compute(const std::string& material, const std::function<Json()>& compute) {
    if (!dir_) return compute();
    const auto file = *dir_ / (sha256_hex(material) + ".json");
    if (std::ifstream in{file}) {
        Json entry = Json::parse(in, nullptr, false);
        if (!entry.is_discarded() && entry.is_object() && entry.value("key", std::string()) == material &&
            entry.contains("value")) {
            ++hits_;
            return entry["value"];
        }
    }
    ++misses_;
    Json value = compute();
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw Error("cannot write cache file " + tmp);
        out << Json{{"key", material}, {"value", value}}.dump() << "\n";
    }
    std::filesystem::rename(tmp, file);
    return value;
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag) {
    if (const char* env = std::getenv("KRULL_ARITH_CACHE"); env && *env) return std::filesystem::path(env);
    if (!flag.empty()) return std::filesystem::path(flag);
    return std::nullopt;
}

}  // namespace krull::cli

#include "subring/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>

#include "subring/errors.hpp"

namespace subring {

std::string rfc3339_utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string ResultCache::key_of(const std::string& kind, const nlohmann::json& params) {
    // nlohmann::json::dump emits object keys sorted, so this is canonical
    return kind + "\x1f" + params.dump();
}

ResultCache::ResultCache(const std::string& path) : path_(path) {
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_APPEND, 0644);
    if (fd_ < 0)
        throw CacheError("cannot open cache file '" + path + "': " + std::strerror(errno));
    if (::flock(fd_, LOCK_EX | LOCK_NB) != 0) {
        ::close(fd_);
        throw CacheError("cache file '" + path + "' is locked by another process");
    }

    std::ifstream in(path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        nlohmann::json rec;
        try {
            rec = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw CacheError("cache file '" + path + "' line " + std::to_string(lineno) +
                             " is not valid JSON: " + e.what());
        }
        if (!rec.is_object() || !rec.contains("kind") || !rec.contains("params") ||
            !rec.contains("value") || !rec.contains("schema_version"))
            throw CacheError("cache file '" + path + "' line " + std::to_string(lineno) +
                             " is missing required fields");
        if (rec["schema_version"].get<int>() != kCacheSchemaVersion)
            throw CacheError("cache file '" + path + "' line " + std::to_string(lineno) +
                             " has unsupported schema_version");
        std::string key = key_of(rec["kind"].get<std::string>(), rec["params"]);
        Entry entry;
        entry.value = rec["value"].get<std::string>();
        entry.method = rec.value("method", "");
        auto it = values_.find(key);
        if (it != values_.end() && it->second.value != entry.value)
            throw CacheError("cache file '" + path + "' line " + std::to_string(lineno) +
                             " contradicts an earlier record for the same key (" + it->second.value +
                             " vs " + entry.value + ")");
        values_.emplace(std::move(key), std::move(entry));
    }
}

ResultCache::~ResultCache() {
    if (fd_ >= 0) {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
}

std::optional<ResultCache::Entry> ResultCache::lookup(const std::string& kind,
                                                      const nlohmann::json& params) const {
    auto it = values_.find(key_of(kind, params));
    if (it == values_.end())
        return std::nullopt;
    return it->second;
}

void ResultCache::record(const std::string& kind, const nlohmann::json& params,
                         const std::string& value, const std::string& method,
                         int64_t duration_ms) {
    std::string key = key_of(kind, params);
    auto it = values_.find(key);
    if (it != values_.end()) {
        if (it->second.value != value)
            throw CacheError("recomputed value " + value + " for " + kind + " " + params.dump() +
                             " contradicts cached value " + it->second.value);
        return;
    }
    nlohmann::json rec{{"schema_version", kCacheSchemaVersion},
                       {"kind", kind},
                       {"params", params},
                       {"value", value},
                       {"method", method},
                       {"duration_ms", duration_ms},
                       {"timestamp", rfc3339_utc_now()}};
    std::string line = rec.dump();
    line.push_back('\n');
    if (::write(fd_, line.data(), line.size()) != static_cast<ssize_t>(line.size()))
        throw CacheError("short write to cache file '" + path_ + "'");
    values_.emplace(std::move(key), Entry{value, method});
}

} // namespace subring

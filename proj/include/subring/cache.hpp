#pragma once
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace subring {

inline constexpr int kCacheSchemaVersion = 1;

// Append-only JSON Lines result store. One record per line:
//   {"schema_version":1,"kind":"g_alpha","params":{...},"value":"27",
//    "method":"enumeration","duration_ms":12,"timestamp":"..."}
// (kind, params) identifies a value; conflicting duplicates, or an append
// that contradicts a stored value, abort with CacheError. The file is held
// under an exclusive advisory lock for the lifetime of the object.
class ResultCache {
public:
    explicit ResultCache(const std::string& path);
    ~ResultCache();
    ResultCache(const ResultCache&) = delete;
    ResultCache& operator=(const ResultCache&) = delete;

    struct Entry {
        std::string value;
        std::string method;
    };

    std::optional<Entry> lookup(const std::string& kind, const nlohmann::json& params) const;

    // Idempotent append: no-op when the identical value is already stored.
    void record(const std::string& kind, const nlohmann::json& params, const std::string& value,
                const std::string& method, int64_t duration_ms);

    size_t size() const { return values_.size(); }
    const std::string& path() const { return path_; }

    static std::string key_of(const std::string& kind, const nlohmann::json& params);

private:
    std::string path_;
    int fd_ = -1;
    std::map<std::string, Entry> values_;
};

std::string rfc3339_utc_now();

} // namespace subring

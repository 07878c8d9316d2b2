#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "subring/cache.hpp"
#include "subring/errors.hpp"

using namespace subring;
using nlohmann::json;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = (std::filesystem::temp_directory_path() / name).string();
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("cache round trip and idempotent append") {
    TempFile tmp("subring-cache-test-1.jsonl");
    {
        ResultCache cache(tmp.path);
        CHECK_FALSE(cache.lookup("g_alpha", json{{"alpha", {2, 1}}, {"p", 3}}).has_value());
        cache.record("g_alpha", json{{"alpha", {2, 1}}, {"p", 3}}, "3", "enumeration", 1);
        auto hit = cache.lookup("g_alpha", json{{"alpha", {2, 1}}, {"p", 3}});
        REQUIRE(hit.has_value());
        CHECK(hit->value == "3");
        CHECK(hit->method == "enumeration");
        // identical append is a no-op
        cache.record("g_alpha", json{{"alpha", {2, 1}}, {"p", 3}}, "3", "enumeration", 9);
        CHECK(cache.size() == 1);
    }
    // reopen: record persists, file has exactly one line
    {
        ResultCache cache(tmp.path);
        CHECK(cache.size() == 1);
        auto hit = cache.lookup("g_alpha", json{{"alpha", {2, 1}}, {"p", 3}});
        REQUIRE(hit.has_value());
        CHECK(hit->value == "3");
        std::ifstream in(tmp.path);
        int lines = 0;
        std::string line;
        while (std::getline(in, line))
            if (!line.empty())
                ++lines;
        CHECK(lines == 1);
    }
}

TEST_CASE("conflicting recompute aborts") {
    TempFile tmp("subring-cache-test-2.jsonl");
    ResultCache cache(tmp.path);
    cache.record("f_pp", json{{"n", 3}, {"e", 2}, {"p", 2}}, "7", "recursion", 1);
    CHECK_THROWS_AS(cache.record("f_pp", json{{"n", 3}, {"e", 2}, {"p", 2}}, "8", "recursion", 1),
                    CacheError);
}

TEST_CASE("malformed line is reported with its number") {
    TempFile tmp("subring-cache-test-3.jsonl");
    {
        std::ofstream out(tmp.path);
        out << R"({"schema_version":1,"kind":"g_n","params":{"e":9,"n":3,"p":2},"value":"33","method":"enumeration","duration_ms":1,"timestamp":"2025-01-01T00:00:00Z"})"
            << "\n";
        out << "this is not json\n";
    }
    try {
        ResultCache cache(tmp.path);
        FAIL("expected CacheError");
    } catch (const CacheError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("contradictory duplicate records are corruption") {
    TempFile tmp("subring-cache-test-4.jsonl");
    {
        std::ofstream out(tmp.path);
        out << R"({"schema_version":1,"kind":"g_n","params":{"e":9,"n":3,"p":2},"value":"33"})" << "\n";
        out << R"({"schema_version":1,"kind":"g_n","params":{"e":9,"n":3,"p":2},"value":"34"})" << "\n";
    }
    CHECK_THROWS_AS(ResultCache(tmp.path), CacheError);
}

TEST_CASE("advisory lock excludes a second owner") {
    TempFile tmp("subring-cache-test-5.jsonl");
    ResultCache first(tmp.path);
    CHECK_THROWS_AS(ResultCache(tmp.path), CacheError);
}

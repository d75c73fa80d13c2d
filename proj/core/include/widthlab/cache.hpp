#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace widthlab {

// Content-addressed result files under one directory: key -> <key>.json.
// Writes are idempotent; identical keys always carry identical payloads.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    std::optional<std::string> get(const std::string &key) const;
    void put(const std::string &key, const std::string &payload) const;
    const std::filesystem::path &dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

} // namespace widthlab

#include "widthlab/cache.hpp"

#include <fstream>
#include <sstream>

#include "widthlab/errors.hpp"

namespace widthlab {

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) raise(Errc::bad_params, "cannot create cache directory " + dir_.string());
}

std::optional<std::string> ResultCache::get(const std::string &key) const {
    std::ifstream in(dir_ / (key + ".json"), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void ResultCache::put(const std::string &key, const std::string &payload) const {
    auto final_path = dir_ / (key + ".json");
    auto tmp_path = dir_ / (key + ".tmp");
    {
        std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
        out << payload;
    }
    std::error_code ec;
    std::filesystem::rename(tmp_path, final_path, ec);
}

} // namespace widthlab

#pragma once

// On-disk cache of generated recursion systems, one file per d:
// <dir>/recursions_d<d>.txt. A file that fails to parse or validate is
// regenerated with a warning.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>

#include "hanoi_dimer/errors.hpp"
#include "hanoi_dimer/recursion_gen.hpp"

namespace hanoi_dimer {

inline constexpr const char* kCacheEnv = "HANOI_DIMER_CACHE";

class SystemCache {
public:
    SystemCache(std::optional<std::filesystem::path> dir, std::ostream* warnings, int max_d = kDefaultMaxCensusDimension)
        : dir_(std::move(dir)), warn_(warnings), max_d_(max_d) {}

    static std::filesystem::path file_name(int d) { return "recursions_d" + std::to_string(d) + ".txt"; }

    const RecursionSystem& get(int d) {
        if (auto it = memo_.find(d); it != memo_.end()) return it->second;
        return memo_.emplace(d, load(d)).first->second;
    }

    const std::optional<std::filesystem::path>& dir() const { return dir_; }

private:
    RecursionSystem load(int d) {
        check_dimension(d, max_d_);
        if (!dir_) return generate(d, max_d_);
        const auto path = *dir_ / file_name(d);
        if (std::filesystem::exists(path)) {
            try {
                std::ifstream in(path);
                auto sys = read_system(in);
                if (sys.d != d) throw IntegrityError("file holds d=" + std::to_string(sys.d));
                return sys;
            } catch (const Error& e) {
                if (warn_) *warn_ << "warning: cache file " << path.string() << " is corrupt (" << e.what() << "), regenerating\n";
            }
        }
        auto sys = generate(d, max_d_);
        std::filesystem::create_directories(*dir_);
        const auto tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary);
            if (!out) throw Error("cannot write cache file " + tmp);
            write_system(out, sys);
        }
        std::filesystem::rename(tmp, path);
        return sys;
    }

    std::optional<std::filesystem::path> dir_;
    std::ostream* warn_;
    int max_d_;
    std::map<int, RecursionSystem> memo_;
};

/// --cache-dir wins, then the environment variable; no caching otherwise.
inline std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return std::filesystem::path(flag);
    if (const char* env = std::getenv(kCacheEnv); env && *env) return std::filesystem::path(env);
    return std::nullopt;
}

}  // namespace hanoi_dimer

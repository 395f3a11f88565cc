#pragma once

// On-disk cache for bar matrices, keyed by block.
//
// Layout: one JSON file per (block, truncation) under the cache directory.
// Files carry a format version; anything unreadable or from another version
// is ignored and recomputed, never trusted.  Writes go through a temporary
// file and an atomic rename so concurrent runs see whole files or nothing.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include <unistd.h>

#include "canonical.hpp"

namespace qwedge {

inline constexpr int kCacheFormat = 1;

/// Resolution order: explicit override, QWEDGE_CACHE_DIR, XDG_CACHE_HOME,
/// ~/.cache, falling back to ./.qwedge-cache.
inline std::filesystem::path cache_directory(const std::string& override_dir = "") {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("QWEDGE_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "qwedge";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "qwedge";
    return std::filesystem::path(".qwedge-cache");
}

inline std::filesystem::path cache_file(const BlockSpec& spec, int r,
                                        const std::filesystem::path& dir) {
    return dir / (spec.key() + "-r" + std::to_string(r) + ".json");
}

inline nlohmann::ordered_json bar_matrix_to_json(const BarMatrix& A) {
    nlohmann::ordered_json j;
    j["format"] = kCacheFormat;
    j["block"] = A.spec.to_json();
    j["r"] = A.r;
    auto ord = nlohmann::ordered_json::array();
    for (const auto& mp : A.order) ord.push_back(to_json(mp));
    j["order"] = std::move(ord);
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < A.dim(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int k = 0; k < A.dim(); ++k)
            if (!A.a[i][k].is_zero()) {
                nlohmann::ordered_json e = nlohmann::ordered_json::array();
                e.push_back(k);
                e.push_back(A.a[i][k].to_json());
                row.push_back(std::move(e));
            }
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

inline BarMatrix bar_matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("format", -1) != kCacheFormat)
        throw InputError("unsupported cache format");
    BarMatrix A;
    const auto& b = j.at("block");
    A.spec.n = b.at("n").get<int>();
    A.spec.level = b.at("level").get<int>();
    A.spec.charge = b.at("charge").get<MultiCharge>();
    A.spec.size = b.at("size").get<int>();
    A.spec.validate();
    A.r = j.at("r").get<int>();
    for (const auto& mp : j.at("order"))
        A.order.push_back(multipartition_from_json(mp, A.spec.level));
    const auto& rows = j.at("rows");
    if (rows.size() != A.order.size()) throw InputError("cache row count mismatch");
    A.a.assign(A.dim(), std::vector<LaurentPoly>(A.dim()));
    for (int i = 0; i < A.dim(); ++i)
        for (const auto& e : rows[i]) {
            const int k = e.at(0).get<int>();
            if (k < 0 || k >= A.dim()) throw InputError("cache column out of range");
            A.a[i][k] = LaurentPoly::from_json(e.at(1));
        }
    return A;
}

/// Try the disk; any problem (missing, stale format, corrupt) reads as a miss.
inline std::optional<BarMatrix> load_bar_matrix(const BlockSpec& spec, int r,
                                                const std::filesystem::path& dir) {
    std::error_code ec;
    const auto path = cache_file(spec, r, dir);
    if (!std::filesystem::exists(path, ec) || ec) return std::nullopt;
    try {
        std::ifstream in(path);
        nlohmann::json j;
        in >> j;
        BarMatrix A = bar_matrix_from_json(j);
        if (!(A.spec == spec) || A.r != r) return std::nullopt;
        return A;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline void save_bar_matrix(const BarMatrix& A, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return; // caching is best-effort
    const auto path = cache_file(A.spec, A.r, dir);
    const auto tmp = path.string() + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << bar_matrix_to_json(A).dump(2) << '\n';
        if (!out) {
            std::filesystem::remove(tmp, ec);
            return;
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

/// Cached bar matrix: disk hit or compute-and-store.  `enabled = false`
/// bypasses the disk entirely.
inline BarMatrix bar_matrix_cached(const BlockSpec& spec, int r = 0, bool enabled = true,
                                   const std::string& override_dir = "") {
    const int eff_r = (r == 0) ? choose_truncation(spec) : r;
    const auto dir = cache_directory(override_dir);
    if (enabled)
        if (auto hit = load_bar_matrix(spec, eff_r, dir)) return *hit;
    BarMatrix A = bar_matrix(spec, eff_r);
    if (enabled) save_bar_matrix(A, dir);
    return A;
}

} // namespace qwedge

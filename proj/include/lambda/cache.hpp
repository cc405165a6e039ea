#pragma once

#include "lambda/differential.hpp"
#include "lambda/homology.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace lambda {

/// Bumped whenever a change could alter any cached value.
inline constexpr std::string_view kCodeVersion = "lambda-e2/1";

/// 64-bit FNV-1a, stable across platforms and builds.
std::uint64_t stable_hash(std::string_view bytes);

/// Content-addressed JSON store: one file per key, named by the hash of the
/// key string. Each file repeats its key; unreadable or mismatched entries are
/// reported on stderr and treated as misses.
class ContentCache : public CellStore {
public:
    ContentCache(std::filesystem::path dir, SignConvention sign, std::string version = std::string(kCodeVersion));

    /// Directory from --cache-dir, else LAMBDA_CACHE_DIR, else none.
    static std::optional<std::filesystem::path> resolve_dir(const std::optional<std::string>& flag);

    std::string key_string(const BasisKey& key) const;
    std::filesystem::path path_for(const BasisKey& key) const;

    std::optional<E2Cell> load(const BasisKey& key) override;
    void store(const E2Cell& cell) override;

    std::size_t hits() const { return hits_; }
    std::size_t misses() const { return misses_; }

private:
    std::filesystem::path dir_;
    SignConvention sign_;
    std::string version_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

}  // namespace lambda

#include "lambda/cache.hpp"

#include "lambda/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace lambda {

std::uint64_t stable_hash(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

ContentCache::ContentCache(std::filesystem::path dir, SignConvention sign, std::string version)
    : dir_(std::move(dir)), sign_(sign), version_(std::move(version))
{
    std::filesystem::create_directories(dir_);
}

std::optional<std::filesystem::path> ContentCache::resolve_dir(const std::optional<std::string>& flag)
{
    if (flag && !flag->empty())
        return std::filesystem::path(*flag);
    if (const char* env = std::getenv("LAMBDA_CACHE_DIR"); env && *env)
        return std::filesystem::path(env);
    return std::nullopt;
}

std::string ContentCache::key_string(const BasisKey& key) const
{
    std::ostringstream os;
    os << "e2cell;p=" << key.p << ";n=" << key.n << ";m=" << key.m << ";l=" << key.l << ";ideal=" << to_string(key.ideal)
       << ";sign=" << to_string(sign_) << ";version=" << version_;
    return os.str();
}

std::filesystem::path ContentCache::path_for(const BasisKey& key) const
{
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(stable_hash(key_string(key))));
    return dir_ / name;
}

std::optional<E2Cell> ContentCache::load(const BasisKey& key)
{
    const auto path = path_for(key);
    std::ifstream in(path);
    if (!in) {
        ++misses_;
        return std::nullopt;
    }
    try {
        json j = json::parse(in);
        if (j.at("key").get<std::string>() != key_string(key))
            throw std::runtime_error("key mismatch");
        E2Cell cell = e2_cell_from_json(j.at("cell"));
        if (!(cell.key == key))
            throw std::runtime_error("cell key mismatch");
        ++hits_;
        return cell;
    } catch (const std::exception& e) {
        std::cerr << "warning: ignoring corrupt cache entry " << path.string() << ": " << e.what() << '\n';
        ++misses_;
        return std::nullopt;
    }
}

void ContentCache::store(const E2Cell& cell)
{
    const auto path = path_for(cell.key);
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp);
        out << json{{"key", key_string(cell.key)}, {"cell", to_json(cell)}}.dump() << '\n';
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        std::cerr << "warning: could not write cache entry " << path.string() << ": " << ec.message() << '\n';
}

}  // namespace lambda

#include "lambda/cache.hpp"
#include "lambda/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace lambda;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const char* tag)
{
    std::random_device rd;
    auto dir = fs::temp_directory_path() / (std::string("lambda-cache-") + tag + "-" + std::to_string(rd()));
    fs::remove_all(dir);
    return dir;
}

}  // namespace

TEST_SUITE("cache") {

TEST_CASE("stable hash")
{
    CHECK(stable_hash("") == 0xcbf29ce484222325ull);
    CHECK(stable_hash("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("keys separate everything that changes a cell")
{
    ContentCache c("/tmp/x", SignConvention::TopologicalDegreeSign);
    ContentCache other_sign("/tmp/x", SignConvention::Unsigned);
    ContentCache other_version("/tmp/x", SignConvention::TopologicalDegreeSign, "lambda-e2/0");
    const BasisKey k{3, 1, 3, 1, Ideal::LambdaIdeal};
    CHECK(c.path_for(k) != c.path_for({3, 2, 3, 1, Ideal::LambdaIdeal}));
    CHECK(c.path_for(k) != c.path_for({3, 1, 3, 1, Ideal::Full}));
    CHECK(c.path_for(k) != c.path_for({5, 1, 3, 1, Ideal::LambdaIdeal}));
    CHECK(c.path_for(k) != other_sign.path_for(k));
    CHECK(c.path_for(k) != other_version.path_for(k));
}

TEST_CASE("cold and warm runs agree, corrupt entries recompute")
{
    const auto dir = fresh_dir("unit");
    ContentCache cache(dir, kDefaultSign);
    E2Options opts;
    opts.store = &cache;
    const auto plain = e2_page(3, 1, 24, Ideal::LambdaIdeal);
    const auto cold = e2_page(3, 1, 24, Ideal::LambdaIdeal, opts);
    CHECK(cache.hits() == 0);
    CHECK(cache.misses() > 0);
    const auto warm = e2_page(3, 1, 24, Ideal::LambdaIdeal, opts);
    CHECK(cache.hits() > 0);
    CHECK(plain == cold);
    CHECK(cold == warm);

    // corrupt one entry, mislabel another
    const auto first = cache.path_for(cold.front().key);
    REQUIRE(fs::exists(first));
    std::ofstream(first) << "{ not json";
    const auto second = cache.path_for(cold.back().key);
    auto j = json::parse(std::ifstream(second));
    j["key"] = "p=3;bogus";
    std::ofstream(second) << j.dump();

    ContentCache again(dir, kDefaultSign);
    opts.store = &again;
    CHECK(e2_page(3, 1, 24, Ideal::LambdaIdeal, opts) == plain);
    CHECK(again.misses() >= 1);
    // the bad entries were rewritten
    ContentCache third(dir, kDefaultSign);
    CHECK(third.load(cold.front().key).has_value());
    fs::remove_all(dir);
}

TEST_CASE("directory resolution")
{
    CHECK(ContentCache::resolve_dir(std::string("/tmp/flag")) == fs::path("/tmp/flag"));
}

}

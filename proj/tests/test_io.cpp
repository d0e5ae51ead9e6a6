#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "kacq/io.hpp"
#include "test_util.hpp"

using namespace kacq;

TEST_CASE("series JSON round trip") {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    const int rank = static_cast<int>(rng() % 4);
    Series x = kacq::testing::random_series(rng, rank, {static_cast<int>(rng() % 9), rank ? 5 : 0}, 30);
    auto j = series_to_json(x);
    CHECK(series_from_json(nlohmann::json::parse(j.dump())) == x);
    // canonical: equal series give equal bytes
    CHECK(series_to_json(series_from_json(nlohmann::json::parse(j.dump()))).dump() == j.dump());
  }
  Series big = Series::term(0, {2, 0}, q_power(2), CoeffPoly::constant(Integer::parse("123456789012345678901234567890")));
  CHECK(series_from_json(nlohmann::json::parse(series_to_json(big).dump())) == big);
}

TEST_CASE("malformed JSON is rejected") {
  using nlohmann::json;
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"rank":1})")), SpecMismatchError);
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"rank":1,"maxD2":2,"box":2,"terms":[{"finite":[1,2],"d2":0,"coeff":[]}]})")),
                  SpecMismatchError);
  CHECK_THROWS_AS(series_from_json(json::parse(R"({"rank":1,"maxD2":2,"box":2,"terms":[{"finite":[9],"d2":0,"coeff":[]}]})")),
                  SpecMismatchError);
  CHECK_THROWS_AS(
      series_from_json(json::parse(R"({"rank":0,"maxD2":2,"box":0,"terms":[{"finite":[],"d2":0,"coeff":[[0,0,"x"]]}]})")),
      SpecMismatchError);
}

TEST_CASE("FNV-1a and cache keys") {
  CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  TableCache c("/tmp/x");
  CHECK(c.path_for("A2~2", 4, 8, false) != c.path_for("A2~2", 4, 8, true));
  CHECK(c.path_for("A2~2", 4, 8, false) != c.path_for("A2~2", 4, 10, false));
  CHECK(c.path_for("A2~2", 4, 8, false) == c.path_for("A2~2", 4, 8, false));
}

TEST_CASE("cached partition tables reproduce fresh ones") {
  auto dir = std::filesystem::temp_directory_path() / "kacq-io-cache";
  std::filesystem::remove_all(dir);
  TableCache cache(dir);
  auto g = build("A4~2");
  std::string warning;
  PartitionTable fresh = cached_partition_table(g, 3, 0, true, &cache, &warning);
  PartitionTable again = cached_partition_table(g, 3, 0, true, &cache, &warning);
  CHECK(warning.empty());
  CHECK(again.positive_part() == fresh.positive_part());
  CHECK(string_function_weylsum(g, lambda0(g), lambda0(g), 3, true, &again) ==
        string_function_weylsum(g, lambda0(g), lambda0(g), 3, true));
  std::ofstream(cache.path_for(g.id, 6, again.box(), true)) << "[]";
  CHECK_FALSE(cache.load(g.id, 6, again.box(), true, &warning));
  CHECK_FALSE(warning.empty());
  std::filesystem::remove_all(dir);
}

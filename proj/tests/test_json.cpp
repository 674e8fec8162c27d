#include "doctest.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "emc/core.hpp"
#include "emc/json_io.hpp"
#include "emc/random.hpp"

using namespace emc;

TEST_CASE("family round-trips through json text") {
  Family f(6, 2, {mask_from_elements({1, 2}, 6), mask_from_elements({3, 5}, 6)});
  std::string text = family_to_json_text(f);
  Family back = family_from_json_text(text);
  CHECK(back == f);
  CHECK(back.n() == 6);
  CHECK(back.k() == 2);
}

TEST_CASE("round-trip holds for random families") {
  SplitMix64 rng(57);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 4 + static_cast<int>(rng.below(10));
    int k = 1 + static_cast<int>(rng.below(3));
    if (k > n) continue;
    std::uint64_t universe = binomial64(n, k);
    Family f = random_family(n, k, rng.below(std::min<std::uint64_t>(universe, 30) + 1), rng);
    CHECK(family_from_json_text(family_to_json_text(f, 2)) == f);
  }
}

TEST_CASE("loader accepts the documented shape") {
  Family f = family_from_json_text(R"({"n":6,"k":2,"sets":[[1,2],[1,3]]})");
  CHECK(f.size() == 2);
  CHECK(f.contains(mask_from_elements({1, 3}, 6)));
}

TEST_CASE("loader rejects malformed documents") {
  CHECK_THROWS_AS(family_from_json_text("not json"), std::invalid_argument);
  CHECK_THROWS_AS(family_from_json_text("[1,2]"), std::invalid_argument);
  CHECK_THROWS_AS(family_from_json_text(R"({"k":2,"sets":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(family_from_json_text(R"({"n":6,"sets":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(family_from_json_text(R"({"n":6,"k":2})"), std::invalid_argument);
  CHECK_THROWS_AS(family_from_json_text(R"({"n":"6","k":2,"sets":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(family_from_json_text(R"({"n":6,"k":2,"sets":4})"), std::invalid_argument);
  CHECK_THROWS_AS(family_from_json_text(R"({"n":6,"k":2,"sets":[[1,2,3]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_from_json_text(R"({"n":6,"k":2,"sets":[[2,1]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_from_json_text(R"({"n":6,"k":2,"sets":[[1,1]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_from_json_text(R"({"n":6,"k":2,"sets":[[1,7]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_from_json_text(R"({"n":6,"k":2,"sets":[[0,1]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_from_json_text(R"({"n":6,"k":2,"sets":[[1,2],[1,2]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_from_json_text(R"({"n":6,"k":2,"sets":[[1,2.5]]})"),
                  std::invalid_argument);
}

TEST_CASE("emitted json lists sorted element arrays") {
  Family f(5, 2, {mask_from_elements({4, 5}, 5), mask_from_elements({1, 3}, 5)});
  auto j = family_to_json(f);
  CHECK(j["n"] == 5);
  CHECK(j["k"] == 2);
  CHECK(j["sets"].size() == 2);
  CHECK(j["sets"][0] == nlohmann::json::array({1, 3}));
  CHECK(j["sets"][1] == nlohmann::json::array({4, 5}));
}

TEST_CASE("stream and file loading") {
  std::istringstream in(R"({"n":4,"k":2,"sets":[[1,2],[3,4]]})");
  Family f = load_family(in);
  CHECK(f.size() == 2);

  std::string path = "test_json_tmp_family.json";
  {
    std::ofstream out(path);
    out << family_to_json_text(f, 2);
  }
  Family g = load_family_file(path);
  CHECK(g == f);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_family_file("definitely_missing_file.json"), std::invalid_argument);
}

#include <catch2/catch_amalgamated.hpp>

#include "vecrec/system_json.hpp"
#include "vecrec/tiling.hpp"

using namespace vecrec;

namespace {

const char* kTilingK2 = R"({
  "order": 2,
  "matrices": [[["1","0"],["1","1"]], [["1","0"],["1","1"]]],
  "initialA": ["1","1"],
  "initialB": ["0","1"]
})";

}  // namespace

TEST_CASE("parsing a well-formed document", "[json]") {
    const ParsedDocument doc = parse_system_text(kTilingK2);
    CHECK(doc.system.order() == 2);
    CHECK(doc.system.matrices()[0] == Mat2(1, 0, 1, 1));
    CHECK(doc.system.initial_a() == std::vector<Scalar>{Scalar(1), Scalar(1)});
    CHECK(doc.system.initial_b() == std::vector<Scalar>{Scalar(0), Scalar(1)});
    CHECK_FALSE(doc.coefficients.has_value());
}

TEST_CASE("serialize(parse(doc)) is canonical and stable", "[json]") {
    const char* messy = R"({
      "order": 1,
      "matrices": [[["4/6","0"],["-2/-4","1"]]],
      "initialA": [3],
      "initialB": ["+0"]
    })";
    const ParsedDocument doc = parse_system_text(messy);
    const nlohmann::json canonical = system_to_json(doc.system);
    CHECK(canonical["matrices"][0][0][0] == "2/3");
    CHECK(canonical["matrices"][0][1][0] == "1/2");
    CHECK(canonical["initialA"][0] == "3");
    CHECK(canonical["initialB"][0] == "0");

    // a second round trip is the identity
    const ParsedDocument again = parse_system_text(canonical.dump());
    CHECK(system_to_json(again.system) == canonical);
}

TEST_CASE("optional coefficients field", "[json]") {
    nlohmann::json doc = nlohmann::json::parse(kTilingK2);
    doc["coefficients"] = {"2", "1", "-2", "-1"};
    const ParsedDocument parsed = parse_system(doc);
    REQUIRE(parsed.coefficients.has_value());
    CHECK(*parsed.coefficients ==
          std::vector<Scalar>{Scalar(2), Scalar(1), Scalar(-2), Scalar(-1)});

    const nlohmann::json out = system_to_json(parsed.system, parsed.coefficients);
    CHECK(out["coefficients"] == nlohmann::json({"2", "1", "-2", "-1"}));
}

TEST_CASE("malformed documents are rejected", "[json]") {
    CHECK_THROWS_AS(parse_system_text("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_system_text("[1,2,3]"), std::invalid_argument);

    nlohmann::json doc = nlohmann::json::parse(kTilingK2);

    SECTION("missing field") {
        doc.erase("initialB");
        CHECK_THROWS_WITH(parse_system(doc), "system document missing field 'initialB'");
    }
    SECTION("order mismatch") {
        doc["order"] = 3;
        CHECK_THROWS_AS(parse_system(doc), std::invalid_argument);
    }
    SECTION("initial vector length mismatch") {
        doc["initialA"] = {"1"};
        CHECK_THROWS_AS(parse_system(doc), std::invalid_argument);
    }
    SECTION("zero denominator") {
        doc["matrices"][0][0][0] = "1/0";
        CHECK_THROWS_AS(parse_system(doc), std::domain_error);
    }
    SECTION("floating point scalars are refused") {
        doc["initialA"][0] = 0.5;
        CHECK_THROWS_AS(parse_system(doc), std::invalid_argument);
    }
    SECTION("non-2x2 matrix") {
        doc["matrices"][0] = {{"1", "0", "0"}, {"1", "1", "0"}};
        CHECK_THROWS_AS(parse_system(doc), std::invalid_argument);
    }
    SECTION("nonpositive order") {
        doc["order"] = 0;
        CHECK_THROWS_AS(parse_system(doc), std::invalid_argument);
    }
}

TEST_CASE("tiling systems serialize cleanly", "[json]") {
    const nlohmann::json doc = system_to_json(tiling_system(2));
    const ParsedDocument parsed = parse_system(doc);
    CHECK(parsed.system.order() == 2);
    CHECK(parsed.system.initial_b() == std::vector<Scalar>{Scalar(0), Scalar(1)});
}

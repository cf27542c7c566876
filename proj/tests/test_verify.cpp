#include <set>

#include "brittle/verify.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace brittle;

TEST_CASE("claim registry") {
  CHECK(all_claims().size() >= 20);
  CHECK(find_claim("lemma-etabase1") != nullptr);
  CHECK(find_claim("lemma-tomatching-1") != nullptr);
  CHECK(find_claim("prop-inequality") != nullptr);
  CHECK(find_claim("no-such-claim") == nullptr);
  CHECK_THROWS_AS(run_claims({"no-such-claim"}, Scale::Small, 1), std::invalid_argument);

  CHECK(scale_from_name("small") == Scale::Small);
  CHECK(scale_from_name("medium") == Scale::Medium);
  CHECK(scale_from_name("3") == Scale::Small);
  CHECK(scale_from_name("5") == Scale::Medium);
  CHECK(!scale_from_name("big").has_value());
}

TEST_CASE("reports carry the documented schema") {
  // required keys and types: claim, params, status, witness, elapsed_ms
  for (const char* id : {"graph6-roundtrip", "bounds-formulas", "lemma-tomatching-1"}) {
    Report rep = find_claim(id)->run(Scale::Small, 7);
    nlohmann::json j = rep.to_json();
    CHECK(j.at("claim").is_string());
    CHECK(j.at("params").is_object());
    CHECK(j.at("status").is_string());
    CHECK(j.at("witness").is_object());
    CHECK(j.at("elapsed_ms").is_number_integer());
    CHECK((j["status"] == "pass" || j["status"] == "fail" || j["status"] == "inconclusive"));
    CHECK(j["status"] == "pass");
    CHECK(j["witness"].contains("checks"));
  }
}

TEST_CASE("claim ids are unique") {
  std::set<std::string> ids;
  for (const Claim& c : all_claims()) CHECK(ids.insert(c.id).second);
}

TEST_CASE("class enumeration matches the published counts") {
  CHECK(all_graphs_on(0).size() == 1);
  CHECK(all_graphs_on(1).size() == 1);
  CHECK(all_graphs_on(2).size() == 2);
  CHECK(all_graphs_on(3).size() == 4);
  CHECK(all_graphs_on(4).size() == 11);
  CHECK(all_graphs_on(5).size() == 34);
  CHECK(connected_graphs_with_edges(2).size() == 1);   // the two-edge path
  CHECK(connected_graphs_with_edges(3).size() == 3);   // path, triangle, claw
  CHECK(connected_graphs_with_edges(4).size() == 5);
  CHECK(connected_graphs_on(4).size() == 6);
}

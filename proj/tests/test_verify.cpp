#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "ajb/text_format.hpp"
#include "ajb/verify.hpp"

using namespace ajb;

TEST_CASE("random_tied_braid is deterministic") {
  const TiedDiagram a = random_tied_braid(123, 3, 6, 2);
  const TiedDiagram b = random_tied_braid(123, 3, 6, 2);
  CHECK(a == b);
  CHECK(serialize_diagram(a) == serialize_diagram(b));
}

TEST_CASE("random recipes hit every color and respect the length cap") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (int colors = 1; colors <= 3; ++colors) {
      const BraidRecipe recipe = random_braid_recipe(seed, 2 + seed % 4, seed % 9, colors);
      CHECK(recipe.word.size() == seed % 9);
      const TiedDiagram d = recipe.build();
      CHECK(d.color_count() == colors);
      CHECK(d.crossing_count() <= static_cast<int>(seed % 9));
    }
  }
}

TEST_CASE("strands below the color count fall back to free loops") {
  const TiedDiagram d = random_tied_braid(9, 2, 3, 3);
  CHECK(d.color_count() == 3);
  CHECK(d.component_count() >= 3);
}

TEST_CASE("verify_suite passes and is reproducible") {
  VerifyConfig config;
  config.count = 6;
  config.seed = 2024;
  const VerifyReport first = verify_suite(config);
  CHECK(first.all_pass());
  CHECK(first.failure_count() == 0);
  const VerifyReport second = verify_suite(config);
  CHECK(first.to_text() == second.to_text());
  CHECK(first.to_json() == second.to_json());

  std::set<std::string> names;
  for (const auto& record : first.records) names.insert(record.check);
  CHECK(names.count("strategy_independence") == 1);
  CHECK(names.count("state_contributions") == 1);
  CHECK(names.count("loop_axioms") == 1);
  CHECK(names.count("reidemeister_2") == 1);
}

TEST_CASE("report rendering reflects failures") {
  VerifyReport report;
  report.config = VerifyConfig{1, 0, 8};
  report.records.push_back({7, "deadbeef00000000", "demo_check", false, "braid 2 1 1"});
  CHECK_FALSE(report.all_pass());
  CHECK(report.failure_count() == 1);
  const std::string text = report.to_text();
  CHECK(text.find("FAIL seed=7") != std::string::npos);
  CHECK(text.find("braid 2 1 1") != std::string::npos);  // reproducer is emitted
  CHECK(text.find("1 failures") != std::string::npos);
  CHECK(report.to_json().find("\"all_pass\": false") != std::string::npos);
}

TEST_CASE("json summary carries one record per check") {
  VerifyConfig config;
  config.count = 2;
  config.seed = 5;
  const VerifyReport report = verify_suite(config);
  const std::string json = report.to_json();
  std::size_t records = 0;
  for (std::size_t at = json.find("\"check\""); at != std::string::npos;
       at = json.find("\"check\"", at + 1))
    ++records;
  CHECK(records == report.records.size());
}

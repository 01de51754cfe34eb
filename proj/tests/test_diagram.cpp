#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "ajb/diagram.hpp"
#include "ajb/verify.hpp"

using namespace ajb;

TEST_CASE("braid closure of the Hopf link") {
  const TiedDiagram mono = TiedDiagram::from_braid(2, {1, 1}, {1, 1});
  CHECK(mono.crossing_count() == 2);
  CHECK(mono.color_count() == 1);
  CHECK(mono.component_count() == 2);
  const CrossingCensus census = mono.classify();
  CHECK(census.z() == 2);
  CHECK(census.x() == 0);
  CHECK(census.y() == 0);
}

TEST_CASE("2-tied Hopf census and complexity") {
  const TiedDiagram d = TiedDiagram::from_braid(2, {1, 1}, {1, 2});
  const CrossingCensus census = d.classify();
  CHECK(census.x(1, 2) == 1);
  CHECK(census.y(1, 2) == 1);
  CHECK(census.z() == 0);
  CHECK(d.complexity() == Complexity{2, 1});
}

TEST_CASE("crossingless braids become free loops") {
  const TiedDiagram d = TiedDiagram::from_braid(1, {}, {1}, {2});
  CHECK(d.crossing_count() == 0);
  CHECK(d.free_loops() == std::vector<int>{1, 2});
  CHECK(d.component_count() == 2);
}

TEST_CASE("from_braid rejects bad input") {
  CHECK_THROWS_AS(TiedDiagram::from_braid(0, {}, {}), DiagramError);
  CHECK_THROWS_AS(TiedDiagram::from_braid(2, {2}, {1}), DiagramError);
  CHECK_THROWS_AS(TiedDiagram::from_braid(2, {1, 1}, {1}), DiagramError);
  CHECK_THROWS_AS(TiedDiagram::from_braid(2, {1, 1}, {1, 0}), DiagramError);
}

TEST_CASE("pd input") {
  const TiedDiagram kink = TiedDiagram::from_pd({{1, 1, 2, 2}}, {1});
  CHECK(kink.crossing_count() == 1);
  CHECK(kink.classify().z(1) == 1);
  CHECK(kink.component_count() == 1);

  // hand-written Hopf link pd against the braid closure
  const TiedDiagram pd_hopf = TiedDiagram::from_pd({{1, 2, 3, 4}, {4, 3, 2, 1}}, {2, 1});
  const TiedDiagram braid_hopf = TiedDiagram::from_braid(2, {1, 1}, {1, 2});
  CHECK(pd_hopf == braid_hopf);

  const TiedDiagram empty = TiedDiagram::from_pd({}, {}, {1});
  CHECK(empty.component_count() == 1);
  CHECK(empty.evaluate_legal() == TiedLaurent::unit());

  CHECK_THROWS_AS(TiedDiagram::from_pd({{1, 2, 3, 3}}, {1}), DiagramError);  // dangling 1, 2
  CHECK_THROWS_AS(TiedDiagram::from_pd({{1, 1, 2, 2}}, {1, 2}), DiagramError);
}

TEST_CASE("colors normalize to a gap-free range") {
  const TiedDiagram d = TiedDiagram::from_braid(2, {1, 1}, {5, 9}, {7});
  CHECK(d.color_count() == 3);
  CHECK(d.free_loops() == std::vector<int>{2});  // 7 sits between 5 and 9
}

TEST_CASE("smoothing the monochromatic Hopf") {
  const TiedDiagram mono = TiedDiagram::from_braid(2, {1, 1}, {1, 1});
  const TiedDiagram once = mono.smooth(0, SmoothingType::kBarZero);
  CHECK(once.complexity() == Complexity{1, 1});
  CHECK_THROWS_AS(mono.smooth(0, SmoothingType::kTwo), DiagramError);
}

TEST_CASE("smoothing the 2-tied Hopf") {
  const TiedDiagram d = TiedDiagram::from_braid(2, {1, 1}, {1, 2});
  const int illegal = d.classify().x_ids().front();

  const TiedDiagram flipped = d.smooth(illegal, SmoothingType::kTwo);
  CHECK(flipped.complexity() == Complexity{2, 0});
  CHECK(flipped.classify().y(1, 2) == 2);
  CHECK(flipped.flip_parity(illegal));

  const TiedDiagram merged = d.smooth(illegal, SmoothingType::kZero);
  CHECK(merged.crossing_count() == 1);
  CHECK(merged.color_count() == 1);

  CHECK_THROWS_AS(d.smooth(illegal, SmoothingType::kBarZero), DiagramError);
}

TEST_CASE("smoothing drops complexity and type 2 flips the class") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    const TiedDiagram d = random_tied_braid(rng(), 2 + rng() % 3, 1 + rng() % 6, 1 + rng() % 3);
    for (int id : d.crossing_ids()) {
      const CrossingClass cls = d.crossing_class(id);
      std::vector<SmoothingType> applicable{SmoothingType::kZero, SmoothingType::kOne};
      if (cls.mono()) {
        applicable.push_back(SmoothingType::kBarZero);
        applicable.push_back(SmoothingType::kBarOne);
      } else {
        applicable.push_back(SmoothingType::kTwo);
      }
      for (SmoothingType t : applicable) {
        const TiedDiagram next = d.smooth(id, t);
        if (t == SmoothingType::kTwo) {
          CHECK(next.crossing_count() == d.crossing_count());
          CHECK(next.crossing_class(id).kind !=
                cls.kind);  // DiIllegal <-> DiLegal
        } else {
          CHECK(next.crossing_count() == d.crossing_count() - 1);
        }
        if (cls.illegal()) CHECK(next.complexity() < d.complexity());
      }
    }
  }
}

TEST_CASE("classify partitions the crossing set") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 60; ++i) {
    const TiedDiagram d = random_tied_braid(rng(), 2 + rng() % 4, rng() % 9, 1 + rng() % 3);
    const CrossingCensus census = d.classify();
    CHECK(census.x() + census.y() + census.z() == d.crossing_count());
  }
}

TEST_CASE("subdiagram extraction") {
  const TiedDiagram d = TiedDiagram::from_braid(2, {1, 1}, {1, 2});
  const SubdiagramResult only1 = d.subdiagram({1});
  CHECK(only1.diagram.crossing_count() == 0);
  CHECK(only1.diagram.component_count() == 1);

  const SubdiagramResult both = d.subdiagram({1, 2});
  CHECK(both.diagram == d);

  const SubdiagramResult none = d.subdiagram({});
  CHECK(none.diagram.empty());

  CHECK_THROWS_AS(d.subdiagram({3}), DiagramError);
}

TEST_CASE("subdiagram of a 3-tied diagram keeps only the surviving census") {
  const TiedDiagram d = TiedDiagram::from_braid(3, {1, 1, 2, 2}, {1, 2, 3});
  const SubdiagramResult sub = d.subdiagram({1, 2});
  const CrossingCensus census = sub.diagram.classify();
  CHECK(census.m() == 2);  // the two crossings between colors 1 and 2
  CHECK(census.x(1, 2) == 1);
  CHECK(census.y(1, 2) == 1);
  CHECK(sub.color_map == std::map<int, int>{{1, 1}, {2, 2}});

  const SubdiagramResult sub13 = d.subdiagram({1, 3});
  CHECK(sub13.color_map == std::map<int, int>{{1, 1}, {3, 2}});
  CHECK(sub13.diagram.classify().m() == 0);  // colors 1 and 3 never cross
  CHECK(sub13.diagram.component_count() == 2);
}

TEST_CASE("subdiagram component counts match the coloring") {
  std::mt19937_64 rng(555);
  for (int i = 0; i < 40; ++i) {
    const TiedDiagram d = random_tied_braid(rng(), 2 + rng() % 4, rng() % 8, 1 + rng() % 3);
    std::set<int> all;
    for (int c = 1; c <= d.color_count(); ++c) all.insert(c);
    CHECK(d.subdiagram(all).diagram == d);
    for (int c = 1; c <= d.color_count(); ++c) {
      int colored = 0;
      for (const auto& [endpoint, color] : d.circle_colors())
        if (color == c) ++colored;
      for (int loop : d.free_loops())
        if (loop == c) ++colored;
      CHECK(d.subdiagram({c}).diagram.component_count() == colored);
    }
  }
}

TEST_CASE("component counting") {
  CHECK(TiedDiagram::from_braid(2, {1, 1}, {1, 1}).component_count() == 2);
  CHECK(TiedDiagram::from_braid(1, {}, {1}).component_count() == 1);

  const TiedDiagram d = TiedDiagram::from_braid(2, {1, 1}, {1, 2});
  const std::vector<int> ids = d.crossing_ids();
  const int x_id = d.classify().x_ids().front();
  const int other = ids[0] == x_id ? ids[1] : ids[0];
  const TiedDiagram once = d.smooth(x_id, SmoothingType::kZero);
  const TiedDiagram twice = once.smooth(other, SmoothingType::kBarZero);
  CHECK(twice.component_count() == 2);
}

TEST_CASE("evaluate_legal") {
  CHECK(TiedDiagram::from_braid(1, {}, {1}).evaluate_legal() == TiedLaurent::unit());
  CHECK(TiedDiagram::from_pd({}, {}, {1, 2}).evaluate_legal() == TiedLaurent::variable_c());
  const TiedDiagram three = TiedDiagram::from_pd({}, {}, {1, 1, 2});
  CHECK(three.evaluate_legal() == TiedLaurent::variable_c() * TiedLaurent::loop_value());
  CHECK_THROWS_AS(TiedDiagram::from_braid(2, {1, 1}, {1, 2}).evaluate_legal(), DiagramError);
}

TEST_CASE("k_sigma and e_count") {
  CHECK(k_sigma({}) == 0);
  CHECK(k_sigma({{0, 0}, {1, 0}, {2, 1}}) == 1);
  CHECK(k_sigma({{0, 1}, {1, 1}}) == -2);
  CHECK(e_count({}) == 0);
  CHECK(e_count({{0, SmoothingType::kBarZero}, {1, SmoothingType::kBarZero},
                 {2, SmoothingType::kBarOne}}) == 1);
}

TEST_CASE("apply_assignment") {
  const TiedDiagram d = TiedDiagram::from_braid(2, {1, 1}, {1, 2});
  CHECK(d.apply_assignment({}) == d);

  const int x_id = d.classify().x_ids().front();
  CHECK(d.apply_assignment({{x_id, 0}}) == d.smooth(x_id, SmoothingType::kZero));

  const TiedDiagram mono = TiedDiagram::from_braid(2, {1, 1}, {1, 1});
  CHECK(mono.apply_assignment({{0, 0}, {1, 0}}).component_count() == 2);
}

TEST_CASE("apply_assignment commutes") {
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 30; ++i) {
    const TiedDiagram d = random_tied_braid(rng(), 2 + rng() % 4, 2 + rng() % 6, 1 + rng() % 3);
    std::vector<int> ids = d.crossing_ids();
    StateAssignment assignment;
    for (int id : ids)
      if (rng() % 2 == 0) assignment[id] = static_cast<int>(rng() % 2);
    // apply in two different orders by splitting into singleton steps
    std::vector<std::pair<int, int>> steps(assignment.begin(), assignment.end());
    TiedDiagram forward = d;
    for (const auto& [id, bit] : steps) forward = forward.apply_assignment({{id, bit}});
    TiedDiagram backward = d;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
      backward = backward.apply_assignment({{it->first, it->second}});
    CHECK(forward == backward);
    CHECK(forward == d.apply_assignment(assignment));
  }
}

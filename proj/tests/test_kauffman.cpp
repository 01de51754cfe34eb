#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ajb/kauffman.hpp"
#include "ajb/verify.hpp"

using namespace ajb;

TEST_CASE("spot values") {
  CHECK(kauffman_bracket(TiedDiagram::from_braid(1, {}, {1})) == TiedLaurent::unit());
  CHECK(kauffman_bracket(TiedDiagram::from_pd({}, {}, {1, 2})) == TiedLaurent::loop_value());
  // Hopf link: the four states have 2, 1, 1, 2 circles
  CHECK(kauffman_bracket(TiedDiagram::from_braid(2, {1, 1}, {1, 1})) ==
        TiedLaurent::parse("-A^4 - A^-4"));
}

TEST_CASE("empty diagram is flagged") {
  bool empty = false;
  CHECK(kauffman_bracket(TiedDiagram(), &empty) == TiedLaurent::unit());
  CHECK(empty);
  kauffman_bracket(TiedDiagram::from_braid(1, {}, {1}), &empty);
  CHECK_FALSE(empty);
}

TEST_CASE("bracket_of_restriction") {
  const TiedDiagram unknot = TiedDiagram::from_braid(1, {}, {1});
  CHECK(bracket_of_restriction(unknot, {}) == TiedLaurent::unit());

  const TiedDiagram hopf = TiedDiagram::from_braid(2, {1, 1}, {1, 1});
  const TiedLaurent kinked = bracket_of_restriction(hopf, {{0, 0}});
  const bool is_plus_minus_a_cubed = kinked == TiedLaurent::monomial(-1, 3) ||
                                     kinked == TiedLaurent::monomial(-1, -3) ||
                                     kinked == TiedLaurent::monomial(1, 3) ||
                                     kinked == TiedLaurent::monomial(1, -3);
  CHECK(is_plus_minus_a_cubed);

  // smoothing everything leaves a pure loop-value power
  const TiedLaurent all = bracket_of_restriction(hopf, {{0, 0}, {1, 0}});
  CHECK(all == TiedLaurent::loop_value());
}

TEST_CASE("no c ever appears, and disjoint circles multiply by the loop value") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 40; ++i) {
    const TiedDiagram d = random_tied_braid(rng(), 2 + rng() % 4, rng() % 8, 1 + rng() % 3);
    const TiedLaurent b = kauffman_bracket(d);
    CHECK_FALSE(b.mentions_c());
    CHECK(kauffman_bracket(d.with_loop(1)) == TiedLaurent::loop_value() * b);
  }
}

TEST_CASE("skein relation at every crossing") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 25; ++i) {
    const TiedDiagram d = random_tied_braid(rng(), 2 + rng() % 4, 1 + rng() % 7, 1 + rng() % 3);
    const TiedLaurent whole = kauffman_bracket(d);
    for (int id : d.crossing_ids()) {
      const TiedLaurent zero = kauffman_bracket(d.smooth(id, SmoothingType::kZero));
      const TiedLaurent one = kauffman_bracket(d.smooth(id, SmoothingType::kOne));
      CHECK(whole == TiedLaurent::a_power(1) * zero + TiedLaurent::a_power(-1) * one);
    }
  }
}

TEST_CASE("braid relation invariance") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 25; ++i) {
    const int strands = 3 + static_cast<int>(rng() % 3);
    const BraidRecipe recipe =
        random_braid_recipe(rng(), strands, 1 + rng() % 7, 1 + rng() % 2);
    const TiedLaurent base = kauffman_bracket(recipe.build());

    BraidRecipe r2 = recipe;
    const int g = 1 + static_cast<int>(rng() % (strands - 1));
    r2.word.insert(r2.word.begin() + rng() % (r2.word.size() + 1), {g, -g});
    CHECK(kauffman_bracket(r2.build()) == base);

    BraidRecipe ra = recipe, rb = recipe;
    const int h = 1 + static_cast<int>(rng() % (strands - 2));
    const int at = static_cast<int>(rng() % (recipe.word.size() + 1));
    ra.word.insert(ra.word.begin() + at, {h, h + 1, h});
    rb.word.insert(rb.word.begin() + at, {h + 1, h, h + 1});
    // the triple changes the permutation; give both sides one coloring
    std::vector<int> shared(ajb::detail::closure_component_count(strands, ra.word), 1);
    ra.colors = rb.colors = shared;
    CHECK(kauffman_bracket(ra.build()) == kauffman_bracket(rb.build()));
  }
}

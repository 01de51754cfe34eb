#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ajb/closed.hpp"
#include "ajb/diagram.hpp"
#include "ajb/kauffman.hpp"
#include "ajb/text_format.hpp"
#include "ajb/tree.hpp"

namespace ajb {

/// Braid-closure construction data, kept around so checks can mutate the
/// word (Reidemeister moves) and rebuild the diagram.
struct BraidRecipe {
  int strands = 1;
  std::vector<int> word;
  std::vector<int> colors;  // one per closure component
  std::vector<int> loops;

  TiedDiagram build() const { return TiedDiagram::from_braid(strands, word, colors, loops); }
};

namespace detail {

inline int closure_component_count(int strands, const std::vector<int>& word) {
  std::vector<int> wire_at(strands + 1);
  std::iota(wire_at.begin(), wire_at.end(), 0);
  for (int w : word) {
    const int g = std::abs(w);
    std::swap(wire_at[g], wire_at[g + 1]);
  }
  std::vector<int> end_col(strands + 1, 0);
  for (int col = 1; col <= strands; ++col) end_col[wire_at[col]] = col;
  std::vector<bool> seen(strands + 1, false);
  int cycles = 0;
  for (int p = 1; p <= strands; ++p) {
    if (seen[p]) continue;
    ++cycles;
    for (int q = p; !seen[q]; q = end_col[q]) seen[q] = true;
  }
  return cycles;
}

}  // namespace detail

/// Deterministic random tied braid closure: a uniform word of the given
/// length, components colored by a uniform surjection onto {1..colors}.
/// Words are redrawn (up to a bound) until the closure has at least
/// `colors` components; when the strand count cannot provide enough
/// components, free loops make up the difference.
inline BraidRecipe random_braid_recipe(std::uint64_t seed, int strands, int length, int colors) {
  if (strands < 2 || colors < 1) throw DiagramError("random_braid_recipe: bad parameters");
  std::mt19937_64 rng(seed);
  auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };

  BraidRecipe recipe;
  recipe.strands = strands;
  int components = 0;
  for (int attempt = 0; attempt < 64; ++attempt) {
    recipe.word.clear();
    for (int i = 0; i < length; ++i) {
      const int g = draw(1, strands - 1);
      recipe.word.push_back(rng() % 2 == 0 ? g : -g);
    }
    components = detail::closure_component_count(strands, recipe.word);
    if (components >= colors || strands < colors) break;
  }

  const int loop_count = std::max(0, colors - components);
  const int total = components + loop_count;
  std::vector<int> assignment(total);
  for (;;) {
    std::set<int> hit;
    for (int& a : assignment) {
      a = draw(1, colors);
      hit.insert(a);
    }
    if (static_cast<int>(hit.size()) == colors) break;
  }
  recipe.colors.assign(assignment.begin(), assignment.begin() + components);
  recipe.loops.assign(assignment.begin() + components, assignment.end());
  return recipe;
}

inline TiedDiagram random_tied_braid(std::uint64_t seed, int strands, int length, int colors) {
  return random_braid_recipe(seed, strands, length, colors).build();
}

struct VerifyConfig {
  int count = 50;
  std::uint64_t seed = 0;
  int max_m = 8;
};

struct CheckRecord {
  std::uint64_t seed = 0;
  std::string diagram_hash;
  std::string check;
  bool pass = true;
  std::string detail;  // reproducer text on failure
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<CheckRecord> records;

  bool all_pass() const {
    for (const auto& r : records)
      if (!r.pass) return false;
    return true;
  }

  int failure_count() const {
    int n = 0;
    for (const auto& r : records)
      if (!r.pass) ++n;
    return n;
  }

  std::string to_text() const {
    std::ostringstream out;
    out << "verify: count=" << config.count << " seed=" << config.seed
        << " max_m=" << config.max_m << "\n";
    for (const auto& r : records) {
      out << (r.pass ? "PASS" : "FAIL") << " seed=" << r.seed << " hash=" << r.diagram_hash
          << " " << r.check << "\n";
      if (!r.pass && !r.detail.empty()) {
        std::istringstream lines(r.detail);
        std::string line;
        while (std::getline(lines, line)) out << "    " << line << "\n";
      }
    }
    out << "summary: " << records.size() << " checks, " << failure_count() << " failures\n";
    return out.str();
  }

  std::string to_json() const {
    nlohmann::json j;
    j["config"] = {{"count", config.count}, {"seed", config.seed}, {"max_m", config.max_m}};
    j["checks"] = nlohmann::json::array();
    for (const auto& r : records) {
      j["checks"].push_back({{"seed", r.seed},
                             {"diagram_hash", r.diagram_hash},
                             {"check", r.check},
                             {"pass", r.pass}});
    }
    j["all_pass"] = all_pass();
    return j.dump(2);
  }
};

namespace detail {

struct SuiteRunner {
  VerifyReport& report;
  std::uint64_t seed;
  std::string hash;
  std::string reproducer;

  void record(const std::string& check, bool pass, const std::string& note = {}) {
    CheckRecord r;
    r.seed = seed;
    r.diagram_hash = hash;
    r.check = check;
    r.pass = pass;
    if (!pass) r.detail = note.empty() ? reproducer : note + "\n" + reproducer;
    report.records.push_back(r);
  }
};

}  // namespace detail

/// Cross-validates every theorem the library implements on a seeded corpus
/// of random tied braid closures. Failures become report entries carrying
/// the diagram's text serialization, never faults.
inline VerifyReport verify_suite(const VerifyConfig& config) {
  VerifyReport report;
  report.config = config;
  const int max_len = std::min(10, config.max_m);

  for (int i = 0; i < config.count; ++i) {
    const std::uint64_t seed =
        detail::splitmix64(config.seed ^ (0x9e3779b97f4a7c15ull * (i + 1)));
    std::mt19937_64 rng(seed);
    const int strands = 2 + static_cast<int>(rng() % 4);
    const int colors = 1 + static_cast<int>(rng() % 3);
    const int length = static_cast<int>(rng() % (max_len + 1));
    const BraidRecipe recipe = random_braid_recipe(rng(), strands, length, colors);
    const TiedDiagram d = recipe.build();

    detail::SuiteRunner run{report, seed, diagram_hash(d), serialize_diagram(d)};

    const ResolutionStrategy strategies[] = {ResolutionStrategy::canonical(),
                                             ResolutionStrategy::first_illegal(),
                                             ResolutionStrategy::seeded(seed)};
    TreeResult trees[3];
    for (int t = 0; t < 3; ++t) trees[t] = aj_bracket_recursive(d, strategies[t]);

    run.record("strategy_independence", trees[0].bracket == trees[1].bracket &&
                                            trees[0].bracket == trees[2].bracket);

    const int n = d.color_count();
    if (n == 1) {
      const TiedLaurent classic = kauffman_bracket(d);
      bool ok = trees[0].bracket == classic && !trees[0].bracket.mentions_c();
      for (const TreeResult& t : trees)
        ok = ok && t.stats.leaf_count == (std::uint64_t{1} << d.crossing_count());
      run.record("kauffman_degeneration", ok);
    } else if (n == 2) {
      run.record("closed_2tied", aj2_closed(d) == trees[0].bracket);
      const TwoTiedCounts predicted = count_2tied(d.classify());
      bool ok = true;
      for (const TreeResult& t : trees) {
        ok = ok && BigInt(t.stats.leaf_count) == predicted.leaves;
        auto count_at = [&](int colors_in_leaf) {
          auto it = t.stats.distinct_states_by_color_count.find(colors_in_leaf);
          return it == t.stats.distinct_states_by_color_count.end() ? BigInt(0)
                                                                    : BigInt(it->second);
        };
        ok = ok && count_at(2) == predicted.dichromatic_states;
        ok = ok && count_at(1) == predicted.monochromatic_states;
      }
      run.record("counts_2tied", ok);
    } else if (n == 3) {
      run.record("closed_3tied", aj3_closed(d).total == trees[0].bracket);
      const ThreeTiedCounts predicted = count_3tied_families(d.classify());
      const TreeStats& canonical = trees[0].stats;
      bool ok = true;
      for (int f = 1; f <= 7; ++f) {
        auto leaves_it = canonical.gamma_leaves.find(f);
        const BigInt measured =
            leaves_it == canonical.gamma_leaves.end() ? BigInt(0) : BigInt(leaves_it->second);
        ok = ok && measured == predicted.families.at(f).leaves;
        auto states_it = canonical.gamma_states.find(f);
        const BigInt measured_states =
            states_it == canonical.gamma_states.end() ? BigInt(0) : BigInt(states_it->second);
        ok = ok && measured_states == predicted.families.at(f).states;
      }
      auto count_at = [&](int colors_in_leaf) {
        auto it = canonical.distinct_states_by_color_count.find(colors_in_leaf);
        return it == canonical.distinct_states_by_color_count.end() ? BigInt(0)
                                                                    : BigInt(it->second);
      };
      ok = ok && count_at(3) == predicted.trichromatic_states;
      ok = ok && count_at(2) == predicted.dichromatic_states;
      ok = ok && count_at(1) == predicted.monochromatic_states;
      run.record("counts_3tied", ok);
    }

    {
      auto maps0 = per_state_contribution(trees[0].leaves);
      auto maps1 = per_state_contribution(trees[1].leaves);
      auto maps2 = per_state_contribution(trees[2].leaves);
      run.record("state_contributions", maps0 == maps1 && maps0 == maps2);
    }

    {
      const TiedLaurent fresh =
          aj_bracket_recursive(d.with_loop(n + 1), strategies[0]).bracket;
      const TiedLaurent same = aj_bracket_recursive(d.with_loop(1), strategies[0]).bracket;
      const bool ok = fresh == TiedLaurent::variable_c() * trees[0].bracket &&
                      same == TiedLaurent::loop_value() * trees[0].bracket;
      run.record("loop_axioms", ok);
    }

    {
      BraidRecipe r2 = recipe;
      const int g = 1 + static_cast<int>(rng() % (strands - 1));
      const int at = static_cast<int>(rng() % (r2.word.size() + 1));
      const int sign = rng() % 2 == 0 ? 1 : -1;
      r2.word.insert(r2.word.begin() + at, {sign * g, -sign * g});
      run.record("reidemeister_2",
                 aj_bracket_recursive(r2.build(), strategies[0]).bracket == trees[0].bracket);
    }
    if (strands >= 3) {
      const int g = 1 + static_cast<int>(rng() % (strands - 2));
      const int at = static_cast<int>(rng() % (recipe.word.size() + 1));
      const int sign = rng() % 2 == 0 ? 1 : -1;
      BraidRecipe ra = recipe, rb = recipe;
      ra.word.insert(ra.word.begin() + at, {sign * g, sign * (g + 1), sign * g});
      rb.word.insert(rb.word.begin() + at, {sign * (g + 1), sign * g, sign * (g + 1)});
      // The inserted triple changes the strand permutation, so both sides
      // get one shared fresh coloring for their common component count.
      const int comps = detail::closure_component_count(strands, ra.word);
      std::vector<int> shared_colors(comps);
      for (int& color : shared_colors) color = 1 + static_cast<int>(rng() % colors);
      ra.colors = rb.colors = shared_colors;
      run.record("reidemeister_3",
                 aj_bracket_recursive(ra.build(), strategies[0]).bracket ==
                     aj_bracket_recursive(rb.build(), strategies[0]).bracket);
    }
  }
  return report;
}

}  // namespace ajb

// Command-line front end: bracket evaluation, census/count reports,
// resolution-tree DOT dumps, and the randomized verification suite, all
// over the line-oriented diagram format (file path or "-" for stdin).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ajb/ajb.hpp"

namespace {

ajb::TiedDiagram load_diagram(const std::string& path) {
  if (path == "-") return ajb::parse_diagram(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return ajb::parse_diagram(in);
}

ajb::ResolutionStrategy parse_strategy(const std::string& text) {
  if (text == "canonical") return ajb::ResolutionStrategy::canonical();
  if (text == "first") return ajb::ResolutionStrategy::first_illegal();
  if (text.rfind("seeded:", 0) == 0)
    return ajb::ResolutionStrategy::seeded(std::stoull(text.substr(7)));
  throw CLI::ValidationError("--strategy", "expected canonical, first, or seeded:<n>");
}

ajb::TiedLaurent closed_bracket(const ajb::TiedDiagram& d) {
  switch (d.color_count()) {
    case 1: return ajb::kauffman_bracket(d);
    case 2: return ajb::aj2_closed(d);
    case 3: return ajb::aj3_closed(d).total;
    default:
      throw std::runtime_error("closed form supports at most 3 colors (diagram has " +
                               std::to_string(d.color_count()) + ")");
  }
}

int run_bracket(const std::string& file, const std::string& method,
                const std::string& strategy_text) {
  const ajb::TiedDiagram d = load_diagram(file);
  const ajb::ResolutionStrategy strategy = parse_strategy(strategy_text);
  if (method == "recursive") {
    std::cout << ajb::aj_bracket_recursive(d, strategy).bracket << "\n";
    return 0;
  }
  if (method == "closed") {
    std::cout << closed_bracket(d) << "\n";
    return 0;
  }
  const ajb::TiedLaurent recursive = ajb::aj_bracket_recursive(d, strategy).bracket;
  const ajb::TiedLaurent closed = closed_bracket(d);
  std::cout << "recursive: " << recursive << "\n";
  std::cout << "closed:    " << closed << "\n";
  const bool equal = recursive == closed;
  std::cout << (equal ? "EQUAL" : "UNEQUAL") << "\n";
  return equal ? 0 : 1;
}

void print_census(const ajb::CrossingCensus& census, const ajb::Complexity& cx) {
  std::ostringstream line;
  line << "census:";
  for (const auto& [pair, ids] : census.x_sets)
    line << " x[" << pair.first << "," << pair.second << "]=" << ids.size();
  for (const auto& [pair, ids] : census.y_sets)
    line << " y[" << pair.first << "," << pair.second << "]=" << ids.size();
  for (const auto& [color, ids] : census.z_sets) line << " z[" << color << "]=" << ids.size();
  line << " (x=" << census.x() << " y=" << census.y() << " z=" << census.z()
       << " m=" << census.m() << ")";
  std::cout << line.str() << "\n";
  std::cout << "complexity: (" << cx.total << "," << cx.illegal << ")\n";
}

int run_count(const std::string& file, const std::string& strategy_text) {
  const ajb::TiedDiagram d = load_diagram(file);
  const ajb::ResolutionStrategy strategy = parse_strategy(strategy_text);
  const ajb::CrossingCensus census = d.classify();
  print_census(census, d.complexity());

  const ajb::TreeResult tree = ajb::aj_bracket_recursive(d, strategy);
  const ajb::TreeStats& stats = tree.stats;
  auto states_at = [&](int colors) -> ajb::BigInt {
    auto it = stats.distinct_states_by_color_count.find(colors);
    return it == stats.distinct_states_by_color_count.end() ? ajb::BigInt(0)
                                                            : ajb::BigInt(it->second);
  };
  bool all_match = true;
  auto row = [&](const std::string& label, const ajb::BigInt& predicted,
                 const ajb::BigInt& measured) {
    const bool match = predicted == measured;
    all_match = all_match && match;
    std::cout << label << ": predicted " << predicted << " measured " << measured << " "
              << (match ? "MATCH" : "MISMATCH") << "\n";
  };

  const int n = d.color_count();
  if (n == 1) {
    const ajb::BigInt predicted = ajb::BigInt(1) << census.m();
    row("leaves", predicted, stats.leaf_count);
    row("monochromatic states", predicted, states_at(1));
  } else if (n == 2) {
    const ajb::TwoTiedCounts counts = ajb::count_2tied(census);
    row("leaves", counts.leaves, stats.leaf_count);
    row("dichromatic states", counts.dichromatic_states, states_at(2));
    row("monochromatic states", counts.monochromatic_states, states_at(1));
  } else if (n == 3) {
    const ajb::ThreeTiedCounts counts = ajb::count_3tied_families(census);
    for (int f = 1; f <= 7; ++f) {
      auto it = stats.gamma_leaves.find(f);
      const ajb::BigInt measured =
          it == stats.gamma_leaves.end() ? ajb::BigInt(0) : ajb::BigInt(it->second);
      row("gamma" + std::to_string(f) + " leaves", counts.families.at(f).leaves, measured);
    }
    row("trichromatic states", counts.trichromatic_states, states_at(3));
    row("dichromatic states", counts.dichromatic_states, states_at(2));
    row("monochromatic states", counts.monochromatic_states, states_at(1));
  } else {
    std::cout << "no closed-form count predictions for " << n << " colors\n";
    std::cout << "leaves: measured " << stats.leaf_count << "\n";
    for (const auto& [colors, count] : stats.distinct_states_by_color_count)
      std::cout << colors << "-colored states: measured " << count << "\n";
    return 0;
  }
  return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tied-link bracket calculator and verifier"};
  app.require_subcommand(1);

  std::string file;
  std::string method = "both";
  std::string strategy = "canonical";
  int max_depth = -1;

  auto* bracket = app.add_subcommand("bracket", "Evaluate the bracket of a diagram");
  bracket->add_option("file", file, "diagram file, or - for stdin")->required();
  bracket->add_option("--method", method, "recursive, closed, or both")
      ->check(CLI::IsMember({"recursive", "closed", "both"}));
  bracket->add_option("--strategy", strategy, "canonical, first, or seeded:<n>");

  auto* count = app.add_subcommand("count", "Compare predicted and measured leaf/state counts");
  count->add_option("file", file, "diagram file, or - for stdin")->required();
  count->add_option("--strategy", strategy, "canonical, first, or seeded:<n>");

  auto* tree = app.add_subcommand("tree", "Print the resolution tree as DOT");
  tree->add_option("file", file, "diagram file, or - for stdin")->required();
  tree->add_option("--strategy", strategy, "canonical, first, or seeded:<n>");
  tree->add_option("--max-depth", max_depth, "truncate below this depth (-1 = full)");

  ajb::VerifyConfig config;
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "Run the randomized cross-validation suite");
  verify->add_option("--count", config.count, "number of random diagrams");
  verify->add_option("--seed", config.seed, "base seed");
  verify->add_option("--max-m", config.max_m, "crossing-count cap per diagram");
  verify->add_option("--json", json_path, "write the machine-readable summary here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bracket) return run_bracket(file, method, strategy);
    if (*count) return run_count(file, strategy);
    if (*tree) {
      std::cout << ajb::export_dot(load_diagram(file), parse_strategy(strategy), max_depth);
      return 0;
    }
    const ajb::VerifyReport report = ajb::verify_suite(config);
    std::cout << report.to_text();
    if (!json_path.empty()) {
      if (json_path == "-") {
        std::cout << report.to_json() << "\n";
      } else {
        std::ofstream out(json_path);
        if (!out) throw std::runtime_error("cannot write '" + json_path + "'");
        out << report.to_json() << "\n";
      }
    }
    return report.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ajb/diagram.hpp"
#include "ajb/laurent.hpp"

namespace ajb {

/// Which illegal crossing a resolution tree smooths at each vertex.
///
/// Canonical fixes, at the root, the order X_{1,2} < X_{1,3} < ... < all
/// Y pairs < Z (ids ascending inside each set) and always smooths the
/// lowest-ranked crossing that is currently dichromatic illegal, falling
/// back to the lowest-ranked monochromatic one. FirstIllegal takes the
/// smallest crossing id among all currently illegal crossings. Seeded
/// picks uniformly among them with a generator keyed by (seed, path), so
/// runs are reproducible.
struct ResolutionStrategy {
  enum class Kind { kCanonical, kFirstIllegal, kSeeded };

  Kind kind = Kind::kCanonical;
  std::uint64_t seed = 0;

  static ResolutionStrategy canonical() { return {Kind::kCanonical, 0}; }
  static ResolutionStrategy first_illegal() { return {Kind::kFirstIllegal, 0}; }
  static ResolutionStrategy seeded(std::uint64_t seed) { return {Kind::kSeeded, seed}; }

  std::string name() const {
    switch (kind) {
      case Kind::kCanonical: return "canonical";
      case Kind::kFirstIllegal: return "first";
      case Kind::kSeeded: return "seeded:" + std::to_string(seed);
    }
    return "?";
  }
};

/// One leaf of a resolution tree.
///
/// `weight` is the product of the edge labels on the root-to-leaf path;
/// it always factors as sign * A^{a_power} * (A+A^{-1})^{delta_power},
/// which is also stored unexpanded. `state_key` identifies the AJ-state:
/// the final resolution of every root crossing expressed in the root's
/// slot labeling ('0', '1', or 'k' for kept-legal) together with the final
/// color of every resulting circle. `merge_trace` lists, in order, the
/// root color pair of every smoothing that fused two colors.
struct LeafRecord {
  TiedLaurent weight;
  TiedLaurent value;
  std::string state_key;
  std::vector<std::pair<int, int>> merge_trace;
  int gamma_family = 0;  // 1..7 on 3-colored roots, 0 otherwise
  int sign = 1;
  int a_power = 0;
  int delta_power = 0;
  int color_count = 0;
  int circle_count = 0;
};

struct TreeStats {
  std::uint64_t leaf_count = 0;
  // distinct state keys among leaves, grouped by the leaf's color count
  std::map<int, std::uint64_t> distinct_states_by_color_count;
  // per Gamma family: leaves and distinct state keys (3-colored roots)
  std::map<int, std::uint64_t> gamma_leaves;
  std::map<int, std::uint64_t> gamma_states;
};

struct TreeResult {
  TiedLaurent bracket;
  TreeStats stats;
  std::vector<LeafRecord> leaves;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Root-census data shared by a whole traversal.
struct TreeContext {
  std::vector<int> root_ids;                     // ascending
  std::map<int, int> canonical_rank;             // id -> rank in the root order
  std::map<int, std::pair<int, int>> root_pair;  // id -> root colors for dichromatic ids
  int root_colors = 0;

  explicit TreeContext(const TiedDiagram& root) {
    root_ids = root.crossing_ids();
    std::sort(root_ids.begin(), root_ids.end());
    root_colors = root.color_count();

    const CrossingCensus census = root.classify();
    std::vector<int> ordered;
    auto append_bucket = [&](std::vector<int> ids) {
      std::sort(ids.begin(), ids.end());
      ordered.insert(ordered.end(), ids.begin(), ids.end());
    };
    for (const auto& [pair, ids] : census.x_sets) {
      for (int id : ids) root_pair[id] = pair;
      append_bucket(ids);
    }
    for (const auto& [pair, ids] : census.y_sets) {
      for (int id : ids) root_pair[id] = pair;
      append_bucket(ids);
    }
    append_bucket(census.z_ids());
    for (std::size_t r = 0; r < ordered.size(); ++r)
      canonical_rank[ordered[r]] = static_cast<int>(r);
  }
};

struct PathState {
  std::map<int, char> resolution;  // id -> '0'/'1' in root slot labeling
  std::vector<std::pair<int, int>> merge_trace;
  int sign = 1;
  int a_power = 0;
  int delta_power = 0;
  std::uint64_t path_key = 0;
};

/// Strategy choice among the currently illegal crossings; -1 when none.
inline int choose_crossing(const TiedDiagram& d, const CrossingCensus& census,
                           const TreeContext& ctx, const ResolutionStrategy& strategy,
                           std::uint64_t path_key) {
  const std::vector<int> di = census.x_ids();
  const std::vector<int> mono = census.z_ids();
  if (di.empty() && mono.empty()) return -1;
  switch (strategy.kind) {
    case ResolutionStrategy::Kind::kCanonical: {
      auto best = [&](const std::vector<int>& ids) {
        int pick = -1, rank = 0;
        for (int id : ids) {
          const int r = ctx.canonical_rank.at(id);
          if (pick < 0 || r < rank) {
            pick = id;
            rank = r;
          }
        }
        return pick;
      };
      return di.empty() ? best(mono) : best(di);
    }
    case ResolutionStrategy::Kind::kFirstIllegal: {
      int pick = -1;
      for (int id : di)
        if (pick < 0 || id < pick) pick = id;
      for (int id : mono)
        if (pick < 0 || id < pick) pick = id;
      return pick;
    }
    case ResolutionStrategy::Kind::kSeeded: {
      std::vector<int> all = di;
      all.insert(all.end(), mono.begin(), mono.end());
      std::sort(all.begin(), all.end());
      return all[splitmix64(path_key) % all.size()];
    }
  }
  return -1;
}

inline int gamma_family(const std::vector<std::pair<int, int>>& trace) {
  auto pair_index = [](const std::pair<int, int>& p) {
    if (p == std::pair<int, int>{1, 2}) return 0;
    if (p == std::pair<int, int>{1, 3}) return 1;
    if (p == std::pair<int, int>{2, 3}) return 2;
    return -1;
  };
  if (trace.empty()) return 1;
  if (trace.size() == 1) {
    const int i = pair_index(trace[0]);
    return i < 0 ? 0 : 2 + i;
  }
  if (trace.size() == 2) {
    int a = pair_index(trace[0]);
    int b = pair_index(trace[1]);
    if (a < 0 || b < 0 || a == b) return 0;
    if (a > b) std::swap(a, b);
    if (a == 0 && b == 1) return 5;
    if (a == 0 && b == 2) return 6;
    return 7;  // {1,3} with {2,3}
  }
  return 0;
}

inline std::string make_state_key(const TiedDiagram& leaf, const TreeContext& ctx,
                                  const std::map<int, char>& resolution) {
  std::ostringstream key;
  key << "r:";
  for (int id : ctx.root_ids) {
    auto it = resolution.find(id);
    key << (it == resolution.end() ? 'k' : it->second);
  }
  key << "|c:";
  for (const auto& [min_endpoint, color] : leaf.circle_colors())
    key << min_endpoint << "=" << color << ",";
  key << "|l:";
  for (int c : leaf.free_loops()) key << c << ",";
  return key.str();
}

template <class LeafSink>
void resolve(const TiedDiagram& d, const TreeContext& ctx, const ResolutionStrategy& strategy,
             const PathState& st, LeafSink&& sink) {
  const CrossingCensus census = d.classify();
  const int pick = choose_crossing(d, census, ctx, strategy, st.path_key);
  if (pick < 0) {
    LeafRecord rec;
    rec.sign = st.sign;
    rec.a_power = st.a_power;
    rec.delta_power = st.delta_power;
    rec.weight = TiedLaurent::monomial(st.sign, st.a_power) *
                 TiedLaurent::delta().pow(st.delta_power);
    rec.value = d.evaluate_legal();
    rec.merge_trace = st.merge_trace;
    rec.color_count = d.color_count();
    rec.circle_count = d.component_count();
    rec.state_key = make_state_key(d, ctx, st.resolution);
    rec.gamma_family = ctx.root_colors == 3 ? gamma_family(st.merge_trace) : 0;
    sink(rec);
    return;
  }

  const CrossingClass cls = d.crossing_class(pick);
  const bool flipped = d.flip_parity(pick);
  auto child_key = [&](int edge) { return splitmix64(st.path_key ^ (0x51ed2701ull + edge)); };

  if (cls.mono()) {
    // axiom (5): A-labeled and A^{-1}-labeled smoothings
    PathState a = st;
    a.a_power += 1;
    a.resolution[pick] = flipped ? '1' : '0';
    a.path_key = child_key(0);
    resolve(d.smooth(pick, SmoothingType::kBarZero), ctx, strategy, a, sink);

    PathState b = st;
    b.a_power -= 1;
    b.resolution[pick] = flipped ? '0' : '1';
    b.path_key = child_key(1);
    resolve(d.smooth(pick, SmoothingType::kBarOne), ctx, strategy, b, sink);
    return;
  }

  // axiom (6): two delta-labeled merging smoothings and the crossing change
  const std::pair<int, int> root_pair = ctx.root_pair.at(pick);
  PathState a = st;
  a.delta_power += 1;
  a.resolution[pick] = flipped ? '1' : '0';
  a.merge_trace.push_back(root_pair);
  a.path_key = child_key(0);
  resolve(d.smooth(pick, SmoothingType::kZero), ctx, strategy, a, sink);

  PathState b = st;
  b.delta_power += 1;
  b.resolution[pick] = flipped ? '0' : '1';
  b.merge_trace.push_back(root_pair);
  b.path_key = child_key(1);
  resolve(d.smooth(pick, SmoothingType::kOne), ctx, strategy, b, sink);

  PathState c = st;
  c.sign = -c.sign;
  c.path_key = child_key(2);
  resolve(d.smooth(pick, SmoothingType::kTwo), ctx, strategy, c, sink);
}

}  // namespace detail

/// Aggregates leaf records of one tree into counts.
inline TreeStats census(const std::vector<LeafRecord>& leaves) {
  TreeStats stats;
  stats.leaf_count = leaves.size();
  std::map<int, std::set<std::string>> by_colors;
  std::map<int, std::set<std::string>> by_family;
  for (const LeafRecord& leaf : leaves) {
    by_colors[leaf.color_count].insert(leaf.state_key);
    if (leaf.gamma_family > 0) {
      ++stats.gamma_leaves[leaf.gamma_family];
      by_family[leaf.gamma_family].insert(leaf.state_key);
    }
  }
  for (const auto& [colors, keys] : by_colors)
    stats.distinct_states_by_color_count[colors] = keys.size();
  for (const auto& [family, keys] : by_family) stats.gamma_states[family] = keys.size();
  return stats;
}

/// Expands the resolution tree of `d` under the given strategy and returns
/// the bracket (sum of weight * value over all leaves), the leaf census,
/// and the leaves themselves. Tree vertices are never materialized.
inline TreeResult aj_bracket_recursive(const TiedDiagram& d,
                                       const ResolutionStrategy& strategy = {}) {
  detail::TreeContext ctx(d);
  detail::PathState root_state;
  root_state.path_key = detail::splitmix64(strategy.seed ^ 0xa5a5a5a5deadbeefull);

  TreeResult result;
  detail::resolve(d, ctx, strategy, root_state, [&](const LeafRecord& leaf) {
    result.bracket += leaf.weight * leaf.value;
    result.leaves.push_back(leaf);
  });
  result.stats = census(result.leaves);
  return result;
}

/// Total contribution per AJ-state, zero totals dropped: states absent
/// from one tree may appear in another with net contribution zero.
inline std::map<std::string, TiedLaurent> per_state_contribution(
    const std::vector<LeafRecord>& leaves) {
  std::map<std::string, TiedLaurent> totals;
  for (const LeafRecord& leaf : leaves) totals[leaf.state_key] += leaf.weight * leaf.value;
  for (auto it = totals.begin(); it != totals.end();)
    it = it->second.is_zero() ? totals.erase(it) : std::next(it);
  return totals;
}

/// DOT rendering of the resolution tree, depth-limited when max_depth >= 0.
/// Nodes show complexity and census counts; edges carry the skein labels.
inline std::string export_dot(const TiedDiagram& d, const ResolutionStrategy& strategy = {},
                              int max_depth = -1) {
  detail::TreeContext ctx(d);
  std::ostringstream out;
  out << "digraph resolution_tree {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  int counter = 0;

  struct Frame {
    TiedDiagram diagram;
    std::uint64_t path_key;
    int depth;
  };

  auto emit = [&](auto&& self, const Frame& frame) -> int {
    const int node = counter++;
    const CrossingCensus census = frame.diagram.classify();
    const Complexity cx = frame.diagram.complexity();
    const int pick =
        detail::choose_crossing(frame.diagram, census, ctx, strategy, frame.path_key);
    const bool truncated = pick >= 0 && max_depth >= 0 && frame.depth >= max_depth;

    out << "  n" << node << " [label=\"(" << cx.total << "," << cx.illegal << ")\\n"
        << "x=" << census.x() << " y=" << census.y() << " z=" << census.z();
    if (pick < 0)
      out << "\\n" << frame.diagram.evaluate_legal().to_string() << "\", peripheries=2];\n";
    else if (truncated)
      out << "\\n...\", style=dashed];\n";
    else
      out << "\"];\n";
    if (pick < 0 || truncated) return node;

    auto child_key = [&](int edge) {
      return detail::splitmix64(frame.path_key ^ (0x51ed2701ull + edge));
    };
    const bool mono = frame.diagram.crossing_class(pick).mono();
    const char* labels_mono[] = {"A", "A^-1"};
    const char* labels_di[] = {"A+A^-1", "A+A^-1", "-1"};
    const SmoothingType types_mono[] = {SmoothingType::kBarZero, SmoothingType::kBarOne};
    const SmoothingType types_di[] = {SmoothingType::kZero, SmoothingType::kOne,
                                      SmoothingType::kTwo};
    const int arity = mono ? 2 : 3;
    for (int i = 0; i < arity; ++i) {
      Frame child{frame.diagram.smooth(pick, mono ? types_mono[i] : types_di[i]), child_key(i),
                  frame.depth + 1};
      const int child_node = self(self, child);
      out << "  n" << node << " -> n" << child_node << " [label=\""
          << (mono ? labels_mono[i] : labels_di[i]) << "\"];\n";
    }
    return node;
  };

  Frame root{d, detail::splitmix64(strategy.seed ^ 0xa5a5a5a5deadbeefull), 0};
  emit(emit, root);
  out << "}\n";
  return out.str();
}

}  // namespace ajb

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ajb/laurent.hpp"

namespace ajb {

/// Raised on invalid diagram construction or surgery input.
struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

class DisjointSet {
 public:
  explicit DisjointSet(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  void reset(int n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[b] = a;
  }

  int root_count() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      if (find(i) == i) ++n;
    return n;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

/// The five local surgeries. Zero/One are the two planar smoothings; on a
/// dichromatic crossing they merge the two colors into the smaller one.
/// BarZero/BarOne are the same smoothings restricted to monochromatic
/// crossings (distinct edge labels in resolution trees). Two is the
/// crossing change that turns an illegal dichromatic crossing legal.
enum class SmoothingType { kZero, kOne, kTwo, kBarZero, kBarOne };

/// (total crossings, illegal crossings), compared lexicographically.
/// Every admissible smoothing strictly decreases it.
struct Complexity {
  int total = 0;
  int illegal = 0;

  friend bool operator==(const Complexity&, const Complexity&) = default;
  friend bool operator<(const Complexity& l, const Complexity& r) {
    if (l.total != r.total) return l.total < r.total;
    return l.illegal < r.illegal;
  }
};

enum class CrossingKind { kMonoIllegal, kDiIllegal, kDiLegal };

/// Classification of one crossing. For dichromatic crossings low < high;
/// a crossing is illegal when the over-strand carries the smaller color.
struct CrossingClass {
  CrossingKind kind = CrossingKind::kMonoIllegal;
  int low = 0;
  int high = 0;

  bool mono() const { return kind == CrossingKind::kMonoIllegal; }
  bool illegal() const { return kind != CrossingKind::kDiLegal; }
  std::pair<int, int> colors() const { return {low, high}; }

  friend bool operator==(const CrossingClass&, const CrossingClass&) = default;
};

/// Partition of the crossing set by class, keyed by the colors involved.
/// x_sets/y_sets map ascending color pairs to crossing ids (dichromatic
/// illegal resp. legal), z_sets maps a color to its monochromatic ids.
struct CrossingCensus {
  std::map<std::pair<int, int>, std::vector<int>> x_sets;
  std::map<std::pair<int, int>, std::vector<int>> y_sets;
  std::map<int, std::vector<int>> z_sets;
  int color_count = 0;

  int x(int i, int j) const { return count_of(x_sets, std::pair{i, j}); }
  int y(int i, int j) const { return count_of(y_sets, std::pair{i, j}); }
  int z(int i) const {
    auto it = z_sets.find(i);
    return it == z_sets.end() ? 0 : static_cast<int>(it->second.size());
  }
  int x() const { return total(x_sets); }
  int y() const { return total(y_sets); }
  int z() const {
    int n = 0;
    for (const auto& [color, ids] : z_sets) n += static_cast<int>(ids.size());
    return n;
  }
  int m() const { return x() + y() + z(); }

  std::vector<int> x_ids(int i, int j) const { return ids_of(x_sets, std::pair{i, j}); }
  std::vector<int> y_ids(int i, int j) const { return ids_of(y_sets, std::pair{i, j}); }

  std::vector<int> x_ids() const {
    std::vector<int> out;
    for (const auto& [pair, ids] : x_sets) out.insert(out.end(), ids.begin(), ids.end());
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<int> z_ids() const {
    std::vector<int> out;
    for (const auto& [color, ids] : z_sets) out.insert(out.end(), ids.begin(), ids.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  template <class M, class K>
  static int count_of(const M& m, const K& k) {
    auto it = m.find(k);
    return it == m.end() ? 0 : static_cast<int>(it->second.size());
  }
  template <class M, class K>
  static std::vector<int> ids_of(const M& m, const K& k) {
    auto it = m.find(k);
    return it == m.end() ? std::vector<int>{} : it->second;
  }
  template <class M>
  static int total(const M& m) {
    int n = 0;
    for (const auto& [pair, ids] : m) n += static_cast<int>(ids.size());
    return n;
  }
};

/// Map from crossing ids to a smoothing bit (0 or 1). Monochromatic
/// crossings receive the bar variant, dichromatic ones the merging variant.
using StateAssignment = std::map<int, int>;

/// #(bits == 0) - #(bits == 1); the empty assignment gives 0.
inline int k_sigma(const StateAssignment& s) {
  int k = 0;
  for (const auto& [id, bit] : s) k += bit == 0 ? 1 : -1;
  return k;
}

/// #BarZero - #BarOne over a concrete smoothing record.
inline int e_count(const std::map<int, SmoothingType>& s) {
  int e = 0;
  for (const auto& [id, t] : s) {
    if (t == SmoothingType::kBarZero) ++e;
    else if (t == SmoothingType::kBarOne) --e;
  }
  return e;
}

struct SubdiagramResult;

/// A tied link diagram: crossings with stable integer identities, a perfect
/// matching of the 4m crossing slots by arcs, a color per component, and a
/// multiset of crossingless circles (free loops).
///
/// Slot convention: slots are numbered 0..3 counterclockwise around each
/// crossing with the under-strand occupying slots 0 and 2 and the
/// over-strand slots 1 and 3. Tracing a strand through a crossing connects
/// opposite slots. Smoothing Zero joins slots 0-1 and 2-3, One joins 0-3
/// and 1-2, and Two is realized as a cyclic slot relabeling that swaps the
/// over- and under-strand.
///
/// Colors are always normalized to {1..n} with no gaps. Diagrams are
/// immutable: every surgery returns a new value, so resolution trees can
/// share ancestors freely.
class TiedDiagram {
 public:
  TiedDiagram() = default;

  /// Diagram of the closure of a braid word on `strands` strands, e.g.
  /// word {1, 1, -2} for sigma_1 sigma_1 sigma_2^{-1}. `colors` carries one
  /// color per closure component, components ordered by the least strand
  /// position each one touches at the top of the braid. `loops` adds extra
  /// crossingless circles with the given colors.
  static TiedDiagram from_braid(int strands, const std::vector<int>& word,
                                const std::vector<int>& colors,
                                const std::vector<int>& loops = {});

  /// Diagram from planar-diagram data: one quadruple of arc labels per
  /// crossing, slots counterclockwise with the under-strand at positions 0
  /// and 2. Every arc label must occur exactly twice. `colors` carries one
  /// color per component, components ordered by the least arc label they
  /// contain. Planarity of the input is trusted.
  static TiedDiagram from_pd(const std::vector<std::array<int, 4>>& pd,
                             const std::vector<int>& colors,
                             const std::vector<int>& loops = {});

  bool empty() const { return sites_.empty() && free_loops_.empty(); }
  int crossing_count() const { return static_cast<int>(sites_.size()); }
  int color_count() const { return color_count_; }
  const std::vector<int>& free_loops() const { return free_loops_; }

  std::vector<int> crossing_ids() const {
    std::vector<int> ids;
    ids.reserve(sites_.size());
    for (const auto& s : sites_) ids.push_back(s.id);
    return ids;
  }

  bool has_crossing(int id) const {
    for (const auto& s : sites_)
      if (s.id == id) return true;
    return false;
  }

  /// Parity of type-2 crossing changes applied to this crossing since the
  /// diagram it was created in. Used to express smoothing choices relative
  /// to the original slot labeling.
  bool flip_parity(int id) const { return sites_[pos_of(id)].flipped; }

  /// Other endpoint of the arc attached at `endpoint` (= 4*position + slot).
  int mate(int endpoint) const { return mate_[endpoint]; }
  int endpoint_color(int endpoint) const { return strand_color_[endpoint]; }

  CrossingClass crossing_class(int id) const { return class_at(pos_of(id)); }

  CrossingCensus classify() const {
    CrossingCensus census;
    census.color_count = color_count_;
    for (int p = 0; p < crossing_count(); ++p) {
      const CrossingClass cls = class_at(p);
      const int id = sites_[p].id;
      switch (cls.kind) {
        case CrossingKind::kMonoIllegal:
          census.z_sets[cls.low].push_back(id);
          break;
        case CrossingKind::kDiIllegal:
          census.x_sets[cls.colors()].push_back(id);
          break;
        case CrossingKind::kDiLegal:
          census.y_sets[cls.colors()].push_back(id);
          break;
      }
    }
    return census;
  }

  Complexity complexity() const {
    Complexity c;
    c.total = crossing_count();
    for (int p = 0; p < crossing_count(); ++p)
      if (class_at(p).illegal()) ++c.illegal;
    return c;
  }

  /// Applies one smoothing and returns the resulting diagram. Two requires
  /// a dichromatic crossing, BarZero/BarOne a monochromatic one; Zero/One
  /// apply to any crossing and merge colors on dichromatic ones.
  TiedDiagram smooth(int id, SmoothingType t) const;

  /// Deletes every component whose color is not in `keep_colors`. Crossings
  /// that involve a deleted strand are removed, with a surviving strand
  /// reconnected straight through. Surviving colors are renormalized.
  SubdiagramResult subdiagram(const std::set<int>& keep_colors) const;

  /// Number of closed curves, free loops included.
  int component_count() const {
    detail::DisjointSet dsu(4 * crossing_count());
    join_strands(dsu);
    return dsu.root_count() + static_cast<int>(free_loops_.size());
  }

  /// Bracket value c^{k-1} (-A^2-A^{-2})^{s-k} of a diagram with no illegal
  /// crossings (s circles, k colors). Legal dichromatic crossings are not
  /// removed; the formula applies to the diagram as-is.
  TiedLaurent evaluate_legal() const {
    if (complexity().illegal != 0)
      throw DiagramError("evaluate_legal: diagram has illegal crossings");
    if (empty()) return TiedLaurent::unit();
    const int s = component_count();
    const int k = color_count_;
    return TiedLaurent::variable_c().pow(k - 1) * TiedLaurent::loop_value().pow(s - k);
  }

  /// Smooths every crossing in the assignment's domain: bit 0 as Zero (or
  /// BarZero when monochromatic), bit 1 as One/BarOne. The result does not
  /// depend on the application order.
  TiedDiagram apply_assignment(const StateAssignment& s) const {
    TiedDiagram d = *this;
    for (const auto& [id, bit] : s) {
      if (bit != 0 && bit != 1) throw DiagramError("apply_assignment: bits must be 0 or 1");
      const bool mono = d.crossing_class(id).mono();
      SmoothingType t;
      if (bit == 0) t = mono ? SmoothingType::kBarZero : SmoothingType::kZero;
      else t = mono ? SmoothingType::kBarOne : SmoothingType::kOne;
      d = d.smooth(id, t);
    }
    return d;
  }

  /// This diagram together with one extra crossingless circle.
  TiedDiagram with_loop(int color) const {
    TiedDiagram d = *this;
    d.free_loops_.push_back(color);
    d.normalize_colors();
    return d;
  }

  /// Colors of the crossing-bearing circles, listed by the least endpoint
  /// key (stable crossing id * 4 + slot) on each circle, ascending.
  std::vector<std::pair<std::int64_t, int>> circle_colors() const {
    const int m = crossing_count();
    detail::DisjointSet dsu(4 * m);
    join_strands(dsu);
    std::map<int, std::pair<std::int64_t, int>> by_root;
    for (int e = 0; e < 4 * m; ++e) {
      const std::int64_t key = static_cast<std::int64_t>(sites_[e / 4].id) * 4 + e % 4;
      auto [it, fresh] = by_root.try_emplace(dsu.find(e), key, strand_color_[e]);
      if (!fresh && key < it->second.first) it->second.first = key;
    }
    std::vector<std::pair<std::int64_t, int>> out;
    out.reserve(by_root.size());
    for (const auto& [root, entry] : by_root) out.push_back(entry);
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const TiedDiagram& l, const TiedDiagram& r) {
    return l.ids_and_flips() == r.ids_and_flips() && l.mate_ == r.mate_ &&
           l.strand_color_ == r.strand_color_ && l.free_loops_ == r.free_loops_;
  }

 private:
  struct Site {
    int id = 0;
    bool flipped = false;
  };

  std::vector<Site> sites_;
  std::vector<int> mate_;          // arc matching on the 4m slots
  std::vector<int> strand_color_;  // color per slot endpoint
  std::vector<int> free_loops_;    // sorted multiset of loop colors
  int color_count_ = 0;

  std::vector<std::pair<int, int>> ids_and_flips() const {
    std::vector<std::pair<int, int>> v;
    v.reserve(sites_.size());
    for (const auto& s : sites_) v.emplace_back(s.id, s.flipped ? 1 : 0);
    return v;
  }

  int pos_of(int id) const {
    for (int p = 0; p < crossing_count(); ++p)
      if (sites_[p].id == id) return p;
    throw DiagramError("no crossing with id " + std::to_string(id));
  }

  CrossingClass class_at(int p) const {
    const int under = strand_color_[4 * p];
    const int over = strand_color_[4 * p + 1];
    CrossingClass cls;
    if (under == over) {
      cls = {CrossingKind::kMonoIllegal, under, under};
    } else if (over < under) {
      cls = {CrossingKind::kDiIllegal, over, under};
    } else {
      cls = {CrossingKind::kDiLegal, under, over};
    }
    return cls;
  }

  void join_strands(detail::DisjointSet& dsu) const {
    for (int e = 0; e < 4 * crossing_count(); ++e) dsu.unite(e, mate_[e]);
    for (int p = 0; p < crossing_count(); ++p) {
      dsu.unite(4 * p, 4 * p + 2);
      dsu.unite(4 * p + 1, 4 * p + 3);
    }
  }

  /// Renumbers colors so the used set is exactly {1..n}, preserving order.
  void normalize_colors() {
    std::set<int> used(strand_color_.begin(), strand_color_.end());
    used.insert(free_loops_.begin(), free_loops_.end());
    std::map<int, int> dense;
    int next = 1;
    for (int c : used) dense[c] = next++;
    for (int& c : strand_color_) c = dense[c];
    for (int& c : free_loops_) c = dense[c];
    std::sort(free_loops_.begin(), free_loops_.end());
    color_count_ = next - 1;
  }

  void check_consistency() const {
    const int n = 4 * crossing_count();
    if (static_cast<int>(mate_.size()) != n || static_cast<int>(strand_color_.size()) != n)
      throw DiagramError("internal: endpoint table size mismatch");
    for (int e = 0; e < n; ++e) {
      if (mate_[e] < 0 || mate_[e] >= n || mate_[mate_[e]] != e || mate_[e] == e)
        throw DiagramError("internal: arc matching is not a perfect pairing");
      if (strand_color_[e] != strand_color_[mate_[e]])
        throw DiagramError("internal: arc endpoints disagree on color");
    }
    for (int p = 0; p < crossing_count(); ++p) {
      if (strand_color_[4 * p] != strand_color_[4 * p + 2] ||
          strand_color_[4 * p + 1] != strand_color_[4 * p + 3])
        throw DiagramError("internal: strand through a crossing changes color");
    }
    for (int c : free_loops_)
      if (c < 1) throw DiagramError("internal: loop color out of range");
  }

  static TiedDiagram assemble(std::vector<Site> sites, std::vector<int> mate,
                              std::vector<int> colors, std::vector<int> loops) {
    TiedDiagram d;
    d.sites_ = std::move(sites);
    d.mate_ = std::move(mate);
    d.strand_color_ = std::move(colors);
    d.free_loops_ = std::move(loops);
    d.normalize_colors();
    d.check_consistency();
    return d;
  }
};

struct SubdiagramResult {
  TiedDiagram diagram;
  std::map<int, int> color_map;  // old color -> new color for kept colors
};

inline TiedDiagram TiedDiagram::from_braid(int strands, const std::vector<int>& word,
                                           const std::vector<int>& colors,
                                           const std::vector<int>& loops) {
  if (strands < 1) throw DiagramError("from_braid: need at least one strand");
  const int m = static_cast<int>(word.size());
  std::vector<int> mate(4 * m, -1);
  auto link = [&](int a, int b) {
    mate[a] = b;
    mate[b] = a;
  };

  // Per column (1-based): the dangling endpoint at the bottom of the
  // column so far, and the endpoint the top of the column attaches to.
  std::vector<int> hang(strands + 1, -1);
  std::vector<int> first_slot(strands + 1, -1);
  std::vector<int> wire_at(strands + 1);
  std::iota(wire_at.begin(), wire_at.end(), 0);

  auto attach = [&](int column, int endpoint) {
    if (hang[column] < 0) first_slot[column] = endpoint;
    else link(hang[column], endpoint);
  };

  for (int k = 0; k < m; ++k) {
    const int w = word[k];
    const int g = std::abs(w);
    if (g < 1 || g >= strands)
      throw DiagramError("from_braid: generator index " + std::to_string(w) + " out of range");
    // Positive generator: the strand entering at column g passes over.
    int nw, ne, sw, se;
    if (w > 0) {
      ne = 4 * k + 0; nw = 4 * k + 1; sw = 4 * k + 2; se = 4 * k + 3;
    } else {
      nw = 4 * k + 0; sw = 4 * k + 1; se = 4 * k + 2; ne = 4 * k + 3;
    }
    attach(g, nw);
    attach(g + 1, ne);
    hang[g] = sw;
    hang[g + 1] = se;
    std::swap(wire_at[g], wire_at[g + 1]);
  }
  for (int col = 1; col <= strands; ++col)
    if (hang[col] >= 0) link(hang[col], first_slot[col]);

  // Closure components are the cycles of the strand permutation,
  // enumerated by their least top position.
  std::vector<int> end_col(strands + 1, 0);
  for (int col = 1; col <= strands; ++col) end_col[wire_at[col]] = col;
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(strands + 1, false);
  for (int p = 1; p <= strands; ++p) {
    if (seen[p]) continue;
    std::vector<int> cycle;
    for (int q = p; !seen[q]; q = end_col[q]) {
      seen[q] = true;
      cycle.push_back(q);
    }
    cycles.push_back(std::move(cycle));
  }
  if (cycles.size() != colors.size())
    throw DiagramError("from_braid: expected " + std::to_string(cycles.size()) +
                       " colors, got " + std::to_string(colors.size()));

  detail::DisjointSet dsu(4 * m);
  for (int e = 0; e < 4 * m; ++e) dsu.unite(e, mate[e]);
  for (int p = 0; p < m; ++p) {
    dsu.unite(4 * p, 4 * p + 2);
    dsu.unite(4 * p + 1, 4 * p + 3);
  }
  std::map<int, int> comp_color;
  std::vector<int> loop_colors;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (colors[i] < 1) throw DiagramError("from_braid: colors must be positive");
    const int p0 = cycles[i][0];
    if (first_slot[p0] < 0) loop_colors.push_back(colors[i]);  // crossingless strand
    else comp_color[dsu.find(first_slot[p0])] = colors[i];
  }
  std::vector<int> endpoint_colors(4 * m, 0);
  for (int e = 0; e < 4 * m; ++e) endpoint_colors[e] = comp_color.at(dsu.find(e));

  for (int c : loops) {
    if (c < 1) throw DiagramError("from_braid: loop colors must be positive");
    loop_colors.push_back(c);
  }
  std::vector<Site> sites(m);
  for (int p = 0; p < m; ++p) sites[p] = Site{p, false};
  return assemble(std::move(sites), std::move(mate), std::move(endpoint_colors),
                  std::move(loop_colors));
}

inline TiedDiagram TiedDiagram::from_pd(const std::vector<std::array<int, 4>>& pd,
                                        const std::vector<int>& colors,
                                        const std::vector<int>& loops) {
  const int m = static_cast<int>(pd.size());
  std::map<int, std::vector<int>> occurrences;
  for (int k = 0; k < m; ++k)
    for (int s = 0; s < 4; ++s) occurrences[pd[k][s]].push_back(4 * k + s);

  std::vector<int> mate(4 * m, -1);
  for (const auto& [label, endpoints] : occurrences) {
    if (endpoints.size() != 2)
      throw DiagramError("from_pd: arc label " + std::to_string(label) + " occurs " +
                         std::to_string(endpoints.size()) + " times (expected 2)");
    mate[endpoints[0]] = endpoints[1];
    mate[endpoints[1]] = endpoints[0];
  }

  detail::DisjointSet dsu(4 * m);
  for (int e = 0; e < 4 * m; ++e) dsu.unite(e, mate[e]);
  for (int p = 0; p < m; ++p) {
    dsu.unite(4 * p, 4 * p + 2);
    dsu.unite(4 * p + 1, 4 * p + 3);
  }
  // Components ordered by the least arc label they contain; occurrences is
  // already sorted by label.
  std::vector<int> comp_roots;
  for (const auto& [label, endpoints] : occurrences) {
    const int root = dsu.find(endpoints[0]);
    if (std::find(comp_roots.begin(), comp_roots.end(), root) == comp_roots.end())
      comp_roots.push_back(root);
  }
  if (comp_roots.size() != colors.size())
    throw DiagramError("from_pd: expected " + std::to_string(comp_roots.size()) +
                       " colors, got " + std::to_string(colors.size()));
  std::map<int, int> comp_color;
  for (std::size_t i = 0; i < comp_roots.size(); ++i) {
    if (colors[i] < 1) throw DiagramError("from_pd: colors must be positive");
    comp_color[comp_roots[i]] = colors[i];
  }
  std::vector<int> endpoint_colors(4 * m, 0);
  for (int e = 0; e < 4 * m; ++e) endpoint_colors[e] = comp_color.at(dsu.find(e));

  for (int c : loops)
    if (c < 1) throw DiagramError("from_pd: loop colors must be positive");
  std::vector<Site> sites(m);
  for (int p = 0; p < m; ++p) sites[p] = Site{p, false};
  return assemble(std::move(sites), std::move(mate), std::move(endpoint_colors), loops);
}

inline TiedDiagram TiedDiagram::smooth(int id, SmoothingType t) const {
  const int pk = pos_of(id);
  const CrossingClass cls = class_at(pk);

  if (t == SmoothingType::kTwo) {
    if (cls.mono()) throw DiagramError("smooth: type 2 needs a dichromatic crossing");
    // Crossing change: relabel slots cyclically so the over-strand becomes
    // the under-strand. New slot i is old slot (i+1) mod 4.
    auto remap = [&](int e) { return e / 4 == pk ? 4 * pk + (e % 4 + 3) % 4 : e; };
    TiedDiagram d = *this;
    d.sites_[pk].flipped = !d.sites_[pk].flipped;
    for (int e = 0; e < 4 * crossing_count(); ++e) {
      d.mate_[remap(e)] = remap(mate_[e]);
      d.strand_color_[remap(e)] = strand_color_[e];
    }
    return d;
  }

  if ((t == SmoothingType::kBarZero || t == SmoothingType::kBarOne) && !cls.mono())
    throw DiagramError("smooth: bar smoothings need a monochromatic crossing");

  const bool zeroish = t == SmoothingType::kZero || t == SmoothingType::kBarZero;
  // Zero joins slots 0-1 and 2-3; One joins 0-3 and 1-2.
  const std::array<int, 4> join =
      zeroish ? std::array<int, 4>{1, 0, 3, 2} : std::array<int, 4>{3, 2, 1, 0};

  // Color merge for the merging smoothings on a dichromatic crossing.
  int from = 0, to = 0;
  if (!cls.mono() && (t == SmoothingType::kZero || t == SmoothingType::kOne)) {
    from = cls.high;
    to = cls.low;
  }
  auto merged = [&](int color) { return color == from && from != 0 ? to : color; };

  const int m = crossing_count();
  std::vector<Site> nsites;
  nsites.reserve(m - 1);
  for (int p = 0; p < m; ++p)
    if (p != pk) nsites.push_back(sites_[p]);
  auto to_new = [&](int e) {
    const int p = e / 4;
    return 4 * (p < pk ? p : p - 1) + e % 4;
  };

  std::vector<int> nmate(4 * (m - 1), -1);
  std::vector<int> ncolor(4 * (m - 1), 0);
  std::array<bool, 4> consumed{false, false, false, false};
  for (int e = 0; e < 4 * m; ++e) {
    if (e / 4 == pk || nmate[to_new(e)] >= 0) continue;
    // Follow the arc, passing through the removed crossing via its joins.
    int f = mate_[e];
    while (f / 4 == pk) {
      const int s = f % 4;
      const int s2 = join[s];
      consumed[s] = consumed[s2] = true;
      f = mate_[4 * pk + s2];
    }
    nmate[to_new(e)] = to_new(f);
    nmate[to_new(f)] = to_new(e);
    ncolor[to_new(e)] = merged(strand_color_[e]);
    ncolor[to_new(f)] = merged(strand_color_[f]);
  }

  std::vector<int> nloops;
  nloops.reserve(free_loops_.size() + 2);
  for (int c : free_loops_) nloops.push_back(merged(c));
  // Arcs confined to the removed crossing close up into free loops.
  for (int s = 0; s < 4; ++s) {
    if (consumed[s]) continue;
    int cur = s;
    do {
      consumed[cur] = true;
      const int s2 = join[cur];
      consumed[s2] = true;
      const int f = mate_[4 * pk + s2];
      if (f / 4 != pk) throw DiagramError("internal: broken loop trace in smooth");
      cur = f % 4;
    } while (cur != s);
    nloops.push_back(merged(strand_color_[4 * pk + s]));
  }

  return assemble(std::move(nsites), std::move(nmate), std::move(ncolor), std::move(nloops));
}

inline SubdiagramResult TiedDiagram::subdiagram(
    const std::set<int>& keep_colors) const {
  for (int c : keep_colors)
    if (c < 1 || c > color_count_)
      throw DiagramError("subdiagram: color " + std::to_string(c) + " not used");
  auto kept = [&](int color) { return keep_colors.count(color) > 0; };

  const int m = crossing_count();
  std::vector<int> new_pos(m, -1);
  std::vector<Site> nsites;
  for (int p = 0; p < m; ++p) {
    if (kept(strand_color_[4 * p]) && kept(strand_color_[4 * p + 1])) {
      new_pos[p] = static_cast<int>(nsites.size());
      nsites.push_back(sites_[p]);
    }
  }
  auto survives = [&](int e) { return new_pos[e / 4] >= 0; };
  auto to_new = [&](int e) { return 4 * new_pos[e / 4] + e % 4; };
  auto opposite = [](int e) { return 4 * (e / 4) + (e % 4 + 2) % 4; };

  const int nm = static_cast<int>(nsites.size());
  std::vector<int> nmate(4 * nm, -1);
  std::vector<int> ncolor(4 * nm, 0);
  std::vector<bool> consumed(4 * m, false);
  for (int e = 0; e < 4 * m; ++e) {
    if (!survives(e) || nmate[to_new(e)] >= 0) continue;
    // Pass straight through removed crossings along the kept strand.
    int f = mate_[e];
    while (!survives(f)) {
      consumed[f] = true;
      consumed[opposite(f)] = true;
      f = mate_[opposite(f)];
    }
    nmate[to_new(e)] = to_new(f);
    nmate[to_new(f)] = to_new(e);
    ncolor[to_new(e)] = strand_color_[e];
    ncolor[to_new(f)] = strand_color_[f];
  }

  std::vector<int> nloops;
  for (int c : free_loops_)
    if (kept(c)) nloops.push_back(c);
  // Kept strands that pass only through removed crossings close up.
  for (int e = 0; e < 4 * m; ++e) {
    if (survives(e) || consumed[e] || !kept(strand_color_[e])) continue;
    int cur = e;
    do {
      consumed[cur] = true;
      consumed[opposite(cur)] = true;
      cur = mate_[opposite(cur)];
    } while (cur != e);
    nloops.push_back(strand_color_[e]);
  }

  SubdiagramResult result;
  result.diagram =
      assemble(std::move(nsites), std::move(nmate), std::move(ncolor), std::move(nloops));
  int next = 1;
  for (int c : keep_colors) result.color_map[c] = next++;
  return result;
}

}  // namespace ajb

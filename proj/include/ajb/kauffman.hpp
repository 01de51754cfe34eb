#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "ajb/diagram.hpp"
#include "ajb/laurent.hpp"

namespace ajb {

/// Classical Kauffman bracket of a diagram with its colors forgotten,
/// computed as the full state sum: over all 2^m smoothing assignments,
/// A^{#0 - #1} (-A^2-A^{-2})^{circles - 1}. Exhaustive by design; the
/// diagrams this library handles stay well under m ~ 20.
///
/// The bracket of the empty diagram is not defined by the skein axioms;
/// this returns 1 for it and reports the case through `empty_diagram`.
inline TiedLaurent kauffman_bracket(const TiedDiagram& d, bool* empty_diagram = nullptr) {
  if (empty_diagram) *empty_diagram = d.empty();
  if (d.empty()) return TiedLaurent::unit();

  const int m = d.crossing_count();
  const int loop_count = static_cast<int>(d.free_loops().size());
  if (m > 30) throw DiagramError("kauffman_bracket: state sum over 2^m needs m <= 30");

  std::vector<TiedLaurent> circle_pow{TiedLaurent::unit()};
  circle_pow.reserve(2 * m + loop_count + 1);
  auto circle_power = [&](int n) -> const TiedLaurent& {
    while (static_cast<int>(circle_pow.size()) <= n)
      circle_pow.push_back(circle_pow.back() * TiedLaurent::loop_value());
    return circle_pow[n];
  };

  TiedLaurent total;
  detail::DisjointSet dsu(4 * m);
  for (std::uint32_t state = 0; state < (1u << m); ++state) {
    dsu.reset(4 * m);
    for (int p = 0; p < m; ++p) {
      if ((state >> p) & 1u) {
        dsu.unite(4 * p, 4 * p + 3);
        dsu.unite(4 * p + 1, 4 * p + 2);
      } else {
        dsu.unite(4 * p, 4 * p + 1);
        dsu.unite(4 * p + 2, 4 * p + 3);
      }
    }
    for (int e = 0; e < 4 * m; ++e) dsu.unite(e, d.mate(e));
    const int circles = dsu.root_count() + loop_count;
    const int ones = std::popcount(state);
    total += TiedLaurent::a_power(m - 2 * ones) * circle_power(circles - 1);
  }
  return total;
}

/// Kauffman bracket of the diagram with part of its crossings already
/// smoothed by `s` (colors forgotten, so merges are immaterial here).
inline TiedLaurent bracket_of_restriction(const TiedDiagram& d, const StateAssignment& s) {
  return kauffman_bracket(d.apply_assignment(s));
}

}  // namespace ajb

#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ajb/diagram.hpp"

namespace ajb {

/// Raised on malformed diagram files; carries the 1-based line number.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_number, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
        line(line_number) {}
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline int parse_int(const std::string& tok, int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return value;
}

}  // namespace detail

/// Parses the line-oriented diagram format:
///
///   # comment
///   braid <strands> <g1> <g2> ...        (signed generator indices)
///   pd <a>,<b>,<c>,<d>; <a>,<b>,<c>,<d>; ...
///   colors <c1> <c2> ...
///   loop <color>
///
/// Exactly one of `braid`/`pd` may appear (none for loop-only diagrams);
/// `colors` carries one entry per component. Quadruples list slots
/// counterclockwise with the under-strand at positions 0 and 2.
inline TiedDiagram parse_diagram(std::istream& in) {
  bool have_braid = false, have_pd = false, have_colors = false;
  int strands = 0;
  std::vector<int> word;
  std::vector<std::array<int, 4>> pd;
  std::vector<int> colors;
  std::vector<int> loops;
  int colors_line = 0;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto tokens = detail::split_ws(raw);
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0];

    if (kind == "braid") {
      if (have_braid || have_pd) throw ParseError(line, "duplicate diagram line");
      if (tokens.size() < 2) throw ParseError(line, "braid needs a strand count");
      have_braid = true;
      strands = detail::parse_int(tokens[1], line);
      for (std::size_t i = 2; i < tokens.size(); ++i)
        word.push_back(detail::parse_int(tokens[i], line));
    } else if (kind == "pd") {
      if (have_braid || have_pd) throw ParseError(line, "duplicate diagram line");
      have_pd = true;
      std::string rest;
      for (std::size_t i = 1; i < tokens.size(); ++i) rest += tokens[i];
      std::istringstream quads(rest);
      std::string quad;
      while (std::getline(quads, quad, ';')) {
        if (quad.empty()) continue;
        std::array<int, 4> entry{};
        std::istringstream fields(quad);
        std::string field;
        int n = 0;
        while (std::getline(fields, field, ',')) {
          if (n >= 4) throw ParseError(line, "pd quadruple has more than 4 entries");
          entry[n++] = detail::parse_int(field, line);
        }
        if (n != 4) throw ParseError(line, "pd quadruple has fewer than 4 entries");
        pd.push_back(entry);
      }
    } else if (kind == "colors") {
      if (have_colors) throw ParseError(line, "duplicate colors line");
      have_colors = true;
      colors_line = line;
      for (std::size_t i = 1; i < tokens.size(); ++i)
        colors.push_back(detail::parse_int(tokens[i], line));
    } else if (kind == "loop") {
      if (tokens.size() != 2) throw ParseError(line, "loop needs exactly one color");
      loops.push_back(detail::parse_int(tokens[1], line));
    } else {
      throw ParseError(line, "unknown directive '" + kind + "'");
    }
  }

  try {
    if (have_braid) return TiedDiagram::from_braid(strands, word, colors, loops);
    return TiedDiagram::from_pd(pd, colors, loops);
  } catch (const DiagramError& e) {
    throw ParseError(have_colors ? colors_line : line, e.what());
  }
}

inline TiedDiagram parse_diagram_text(const std::string& text) {
  std::istringstream in(text);
  return parse_diagram(in);
}

/// Serializes any diagram in pd form. Arcs are numbered by their first
/// endpoint, so parsing the output reproduces the diagram (crossing
/// identities renumber to 0..m-1; type-2 flip parity is not geometry and
/// is not serialized).
inline std::string serialize_diagram(const TiedDiagram& d) {
  const int m = d.crossing_count();
  std::vector<int> arc_label(4 * m, 0);
  int next = 1;
  for (int e = 0; e < 4 * m; ++e) {
    if (arc_label[e] != 0) continue;
    arc_label[e] = arc_label[d.mate(e)] = next++;
  }

  std::ostringstream out;
  if (m > 0) {
    out << "pd ";
    for (int p = 0; p < m; ++p) {
      if (p > 0) out << "; ";
      out << arc_label[4 * p] << "," << arc_label[4 * p + 1] << "," << arc_label[4 * p + 2]
          << "," << arc_label[4 * p + 3];
    }
    out << "\n";
    // Components ordered by least arc label, matching from_pd.
    detail::DisjointSet dsu(4 * m);
    for (int e = 0; e < 4 * m; ++e) dsu.unite(e, d.mate(e));
    for (int p = 0; p < m; ++p) {
      dsu.unite(4 * p, 4 * p + 2);
      dsu.unite(4 * p + 1, 4 * p + 3);
    }
    std::map<int, int> comp_order;  // least arc label -> a member endpoint
    std::set<int> seen_roots;
    for (int e = 0; e < 4 * m; ++e)
      if (seen_roots.insert(dsu.find(e)).second) comp_order[arc_label[e]] = e;
    out << "colors";
    for (const auto& [label, member] : comp_order) out << " " << d.endpoint_color(member);
    out << "\n";
  }
  for (int c : d.free_loops()) out << "loop " << c << "\n";
  return out.str();
}

/// FNV-1a hash of the canonical serialization, as fixed-width hex.
inline std::string diagram_hash(const TiedDiagram& d) {
  const std::string text = serialize_diagram(d);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace ajb

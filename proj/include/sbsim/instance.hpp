#pragma once

#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "words.hpp"

namespace sbsim {

// Node orientation label. Three symbols in the cyclic order A < B < C < A.
enum class Orientation : std::uint8_t { A = 0, B = 1, C = 2 };

inline Orientation succ(Orientation o) {
  return static_cast<Orientation>((static_cast<int>(o) + 1) % 3);
}
inline Orientation pred(Orientation o) {
  return static_cast<Orientation>((static_cast<int>(o) + 2) % 3);
}
inline char orientation_char(Orientation o) { return "ABC"[static_cast<int>(o)]; }

// A problem instance: the communication graph plus optional per-node inputs.
// Orientation and word symbols are present together for the path-word problem
// and absent for input-free problems.
struct Instance {
  Graph graph;
  std::optional<std::vector<Orientation>> orientation;
  std::optional<std::vector<char>> word;  // per-node symbol over {0,1,_}

  bool operator==(const Instance& other) const {
    return graph == other.graph && orientation == other.orientation && word == other.word;
  }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline int parse_int(const std::string& tok, int line_no, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return value;
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("expected ") + what + ", got '" + tok + "'");
  }
}

}  // namespace detail

// Text format, newline separated, '#' starts a comment line:
//   sbsim-instance v1
//   n <nodeCount>
//   e <u> <v>            one line per edge
//   i <v> <orient> <sym> one line per node, orient in {A,B,C,-}, sym in {0,1,_,-}
inline std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "sbsim-instance v1\n";
  out << "n " << inst.graph.node_count() << "\n";
  for (auto [u, v] : inst.graph.edges()) out << "e " << u << " " << v << "\n";
  for (int v = 0; v < inst.graph.node_count(); ++v) {
    char o = inst.orientation ? orientation_char((*inst.orientation)[v]) : '-';
    char s = inst.word ? (*inst.word)[v] : '-';
    out << "i " << v << " " << o << " " << s << "\n";
  }
  return out.str();
}

inline Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  bool header_seen = false, n_seen = false;
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<int, int>> edge_keys;
  std::vector<char> orient_seen;
  std::vector<char> orients;
  std::vector<char> syms;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string stripped = line;
    auto first = stripped.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (stripped[first] == '#') continue;
    auto toks = detail::split_ws(stripped);

    if (!header_seen) {
      if (toks.size() != 2 || toks[0] != "sbsim-instance" || toks[1] != "v1")
        throw ParseError(line_no, "expected header 'sbsim-instance v1'");
      header_seen = true;
      continue;
    }
    if (!n_seen) {
      if (toks.size() != 2 || toks[0] != "n")
        throw ParseError(line_no, "expected 'n <nodeCount>'");
      n = detail::parse_int(toks[1], line_no, "node count");
      if (n < 1) throw ParseError(line_no, "node count must be positive");
      n_seen = true;
      orient_seen.assign(n, 0);
      orients.assign(n, '-');
      syms.assign(n, '-');
      continue;
    }
    if (toks[0] == "e") {
      if (toks.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      int u = detail::parse_int(toks[1], line_no, "node id");
      int v = detail::parse_int(toks[2], line_no, "node id");
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "edge endpoint out of range");
      if (u == v) throw ParseError(line_no, "self loop");
      std::pair<int, int> key = std::minmax(u, v);
      if (!edge_keys.insert(key).second) throw ParseError(line_no, "duplicate edge");
      edges.emplace_back(u, v);
      continue;
    }
    if (toks[0] == "i") {
      if (toks.size() != 4) throw ParseError(line_no, "expected 'i <v> <orient> <sym>'");
      int v = detail::parse_int(toks[1], line_no, "node id");
      if (v < 0 || v >= n) throw ParseError(line_no, "input node id out of range");
      if (orient_seen[v]) throw ParseError(line_no, "duplicate input line for node");
      orient_seen[v] = 1;
      if (toks[2].size() != 1 || std::string("ABC-").find(toks[2][0]) == std::string::npos)
        throw ParseError(line_no, "orientation must be one of A, B, C, -");
      if (toks[3].size() != 1 || std::string("01_-").find(toks[3][0]) == std::string::npos)
        throw ParseError(line_no, "symbol must be one of 0, 1, _, -");
      orients[v] = toks[2][0];
      syms[v] = toks[3][0];
      continue;
    }
    throw ParseError(line_no, "unknown line kind '" + toks[0] + "'");
  }

  if (!header_seen) throw ParseError(line_no, "missing header");
  if (!n_seen) throw ParseError(line_no, "missing node count");
  for (int v = 0; v < n; ++v)
    if (!orient_seen[v])
      throw ParseError(line_no, "missing input line for node " + std::to_string(v));

  int with_orient = 0, with_sym = 0;
  for (int v = 0; v < n; ++v) {
    with_orient += (orients[v] != '-');
    with_sym += (syms[v] != '-');
  }
  if (with_orient != 0 && with_orient != n)
    throw ParseError(line_no, "orientation must be given for all nodes or none");
  if (with_sym != 0 && with_sym != n)
    throw ParseError(line_no, "word symbol must be given for all nodes or none");

  std::optional<Graph> graph;
  try {
    graph.emplace(n, std::move(edges));
  } catch (const InvalidGraphError& e) {
    throw ParseError(0, e.what());
  }
  Instance inst{std::move(*graph), std::nullopt, std::nullopt};
  if (with_orient == n) {
    std::vector<Orientation> os(n);
    for (int v = 0; v < n; ++v)
      os[v] = static_cast<Orientation>(std::string("ABC").find(orients[v]));
    inst.orientation = std::move(os);
  }
  if (with_sym == n) inst.word = std::vector<char>(syms.begin(), syms.end());
  return inst;
}

// Companion format for directed graphs, used to pipe generator stages:
//   sbsim-digraph v1
//   n <nodeCount>
//   a <tail> <head>  one line per arc
inline std::string serialize_digraph(const DirectedGraph& g) {
  std::ostringstream out;
  out << "sbsim-digraph v1\n";
  out << "n " << g.node_count() << "\n";
  for (auto [t, h] : g.arcs()) out << "a " << t << " " << h << "\n";
  return out.str();
}

inline DirectedGraph parse_digraph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int n = -1;
  bool header_seen = false, n_seen = false;
  std::vector<std::pair<int, int>> arcs;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    auto toks = detail::split_ws(line);
    if (!header_seen) {
      if (toks.size() != 2 || toks[0] != "sbsim-digraph" || toks[1] != "v1")
        throw ParseError(line_no, "expected header 'sbsim-digraph v1'");
      header_seen = true;
      continue;
    }
    if (!n_seen) {
      if (toks.size() != 2 || toks[0] != "n")
        throw ParseError(line_no, "expected 'n <nodeCount>'");
      n = detail::parse_int(toks[1], line_no, "node count");
      if (n < 1) throw ParseError(line_no, "node count must be positive");
      n_seen = true;
      continue;
    }
    if (toks[0] == "a") {
      if (toks.size() != 3) throw ParseError(line_no, "expected 'a <tail> <head>'");
      int t = detail::parse_int(toks[1], line_no, "node id");
      int h = detail::parse_int(toks[2], line_no, "node id");
      arcs.emplace_back(t, h);
      continue;
    }
    throw ParseError(line_no, "unknown line kind '" + toks[0] + "'");
  }
  if (!header_seen) throw ParseError(line_no, "missing header");
  if (!n_seen) throw ParseError(line_no, "missing node count");
  try {
    return DirectedGraph(n, std::move(arcs));
  } catch (const InvalidGraphError& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace sbsim

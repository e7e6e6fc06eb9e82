#pragma once

#include <random>
#include <string_view>

#include "instance.hpp"
#include "words.hpp"

namespace sbsim {

// Consistent orientation along node order: A, B, C, A, B, ...
inline std::vector<Orientation> consistent_orientation(int n) {
  std::vector<Orientation> o(n);
  for (int v = 0; v < n; ++v) o[v] = static_cast<Orientation>(v % 3);
  return o;
}

// True iff successive orientations follow the cyclic order in the given node
// order or in its reverse (paths carry no inherent direction).
inline bool orientation_consistent_on_sequence(const std::vector<Orientation>& o, bool circular) {
  const int n = static_cast<int>(o.size());
  if (n <= 1) return true;
  bool fwd = true, bwd = true;
  const int last = circular ? n : n - 1;
  for (int v = 0; v < last; ++v) {
    int u = (v + 1) % n;
    if (o[u] != succ(o[v])) fwd = false;
    if (o[u] != pred(o[v])) bwd = false;
  }
  return fwd || bwd;
}

// Path of 2*4^i + 1 nodes spelling the i-th valid word with a consistent
// orientation. Accepted by the path-word verifier and its oracle.
inline Instance make_yes_instance(int i) {
  std::string w = valid_word(i);
  const int n = static_cast<int>(w.size());
  return Instance{Graph::path(n), consistent_orientation(n),
                  std::vector<char>(w.begin(), w.end())};
}

// Path instance carrying the given word. With consistent_orientation = false
// a seeded random orientation that is consistent in neither direction is used.
inline Instance make_path_instance(std::string_view word, bool consistent, std::uint64_t seed = 0) {
  const int n = static_cast<int>(word.size());
  if (n < 1) throw InvalidInstanceError("word must be nonempty");
  for (char c : word)
    if (!is_symbol(c)) throw InvalidInstanceError("word symbols must be in {0,1,_}");
  Instance inst{Graph::path(n), std::nullopt,
                std::vector<char>(word.begin(), word.end())};
  if (consistent) {
    inst.orientation = consistent_orientation(n);
    return inst;
  }
  if (n == 1)
    throw InvalidInstanceError("a single node has every orientation consistent");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  std::vector<Orientation> o(n);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    for (auto& x : o) x = static_cast<Orientation>(pick(rng));
    if (!orientation_consistent_on_sequence(o, false)) {
      inst.orientation = std::move(o);
      return inst;
    }
  }
  // Degenerate fallback: two equal adjacent orientations are never consistent.
  o.assign(n, Orientation::A);
  inst.orientation = std::move(o);
  return inst;
}

// Cycle instance. A consistent orientation exists exactly when the length is
// divisible by 3 and is used whenever possible; require_consistent surfaces
// the infeasible case as an error instead.
inline Instance make_cycle_instance(std::string_view word, std::uint64_t seed = 0,
                                    bool require_consistent = false) {
  const int n = static_cast<int>(word.size());
  if (n < 3) throw InvalidInstanceError("cycle needs at least 3 symbols");
  for (char c : word)
    if (!is_symbol(c)) throw InvalidInstanceError("word symbols must be in {0,1,_}");
  if (n % 3 != 0 && require_consistent)
    throw LengthNotOrientableError("consistent cycle orientation needs length divisible by 3");
  Instance inst{Graph::cycle(n), std::nullopt,
                std::vector<char>(word.begin(), word.end())};
  if (n % 3 == 0) {
    inst.orientation = consistent_orientation(n);
  } else {
    // Any assignment fails to wrap consistently; pick a seeded random one.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 2);
    std::vector<Orientation> o(n);
    for (auto& x : o) x = static_cast<Orientation>(pick(rng));
    inst.orientation = std::move(o);
  }
  return inst;
}

enum class PseudotreeShape { BalancedTree, RandomTree, WithCycle };

// Directed binary pseudotree: out-degree at most 1, in-degree 0 or 2, arcs
// directed away from the leaves.
//   balanced-tree: complete binary tree, needs 2^k - 1 nodes, k >= 2
//   random-tree:   full binary tree grown at seeded random leaves, odd n >= 3
//   with-cycle:    a directed cycle whose every node absorbs one full binary
//                  tree, even n >= 6
inline DirectedGraph make_pseudotree(int original_nodes, PseudotreeShape shape,
                                     std::uint64_t seed = 0) {
  std::vector<std::pair<int, int>> arcs;
  switch (shape) {
    case PseudotreeShape::BalancedTree: {
      int n = original_nodes;
      if (n < 3 || (n & (n + 1)) != 0)
        throw ShapeInfeasibleError("balanced tree needs 2^k - 1 nodes with k >= 2");
      for (int v = 1; v < n; ++v) arcs.emplace_back(v, (v - 1) / 2);
      break;
    }
    case PseudotreeShape::RandomTree: {
      int n = original_nodes;
      if (n < 3 || n % 2 == 0)
        throw ShapeInfeasibleError("full binary tree needs an odd node count, at least 3");
      std::mt19937_64 rng(seed);
      std::vector<int> leaves{0};
      int next_id = 1;
      while (next_id < n) {
        std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
        std::size_t at = pick(rng);
        int parent = leaves[at];
        leaves[at] = leaves.back();
        leaves.pop_back();
        int a = next_id++, b = next_id++;
        arcs.emplace_back(a, parent);
        arcs.emplace_back(b, parent);
        leaves.push_back(a);
        leaves.push_back(b);
      }
      break;
    }
    case PseudotreeShape::WithCycle: {
      int n = original_nodes;
      if (n < 6 || n % 2 != 0)
        throw ShapeInfeasibleError("cycle shape needs an even node count, at least 6");
      std::mt19937_64 rng(seed);
      // Cycle of c nodes; each cycle node absorbs one full binary tree of odd
      // size, so n = c + sum of c odd tree sizes. Distribute (n - 2c) / 2
      // increments of 2 over the trees.
      std::uniform_int_distribution<int> pick_c(3, n / 2);
      int c = pick_c(rng);
      std::vector<int> tree_size(c, 1);
      std::uniform_int_distribution<int> pick_tree(0, c - 1);
      for (int left = (n - 2 * c) / 2; left > 0; --left) tree_size[pick_tree(rng)] += 2;
      int next_id = 0;
      std::vector<int> cycle_ids(c);
      for (int j = 0; j < c; ++j) cycle_ids[j] = next_id++;
      for (int j = 0; j < c; ++j) arcs.emplace_back(cycle_ids[j], cycle_ids[(j + 1) % c]);
      for (int j = 0; j < c; ++j) {
        // Roots of the absorbed trees arc into their cycle node.
        int root = next_id++;
        arcs.emplace_back(root, cycle_ids[j]);
        std::vector<int> leaves{root};
        int grown = 1;
        while (grown < tree_size[j]) {
          std::uniform_int_distribution<std::size_t> pick(0, leaves.size() - 1);
          std::size_t at = pick(rng);
          int parent = leaves[at];
          leaves[at] = leaves.back();
          leaves.pop_back();
          int a = next_id++, b = next_id++;
          arcs.emplace_back(a, parent);
          arcs.emplace_back(b, parent);
          leaves.push_back(a);
          leaves.push_back(b);
          grown += 2;
        }
      }
      break;
    }
  }
  return DirectedGraph(original_nodes, std::move(arcs));
}

// Replaces each arc (u, v) by five fresh nodes: a chain u-g1-g2-g3-v plus a
// four-cycle g1-g4-g5-g2-g1. The cycle side marks the tail, which makes the
// arc direction locally recoverable. Output: n + 5m nodes, max degree 3, the
// only degree-1 nodes are original sources of total degree 1.
inline Graph gadget_transform(const DirectedGraph& g) {
  const int n = g.node_count();
  for (int v = 0; v < n; ++v)
    if (g.total_degree(v) > 3)
      throw DegreeViolationError("gadget transform input has a node of degree above 3");
  std::vector<std::pair<int, int>> edges;
  int next_id = n;
  for (auto [u, v] : g.arcs()) {
    int g1 = next_id++, g2 = next_id++, g3 = next_id++, g4 = next_id++, g5 = next_id++;
    edges.emplace_back(u, g1);
    edges.emplace_back(g1, g2);
    edges.emplace_back(g2, g3);
    edges.emplace_back(g3, v);
    edges.emplace_back(g1, g4);
    edges.emplace_back(g4, g5);
    edges.emplace_back(g5, g2);
  }
  return Graph(next_id, std::move(edges));
}

inline Instance make_gadget_instance(const DirectedGraph& g) {
  return Instance{gadget_transform(g), std::nullopt, std::nullopt};
}

}  // namespace sbsim

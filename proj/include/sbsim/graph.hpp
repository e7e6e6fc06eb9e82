#pragma once

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace sbsim {

// Simple undirected connected graph over dense 0-based node ids.
// Adjacency is stored in CSR form; neighbor lists are sorted.
class Graph {
public:
  Graph(int node_count, std::vector<std::pair<int, int>> edges) {
    if (node_count < 1) throw InvalidGraphError("node count must be at least 1");
    n_ = node_count;
    for (auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InvalidGraphError("edge endpoint out of range");
      if (u == v) throw InvalidGraphError("self loop");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw InvalidGraphError("duplicate edge");
    edges_ = std::move(edges);

    std::vector<int> deg(n_, 0);
    for (auto [u, v] : edges_) {
      ++deg[u];
      ++deg[v];
    }
    off_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) off_[v + 1] = off_[v] + deg[v];
    adj_.resize(edges_.size() * 2);
    std::vector<int> cursor(off_.begin(), off_.end() - 1);
    for (auto [u, v] : edges_) {
      adj_[cursor[u]++] = v;
      adj_[cursor[v]++] = u;
    }
    for (int v = 0; v < n_; ++v)
      std::sort(adj_.begin() + off_[v], adj_.begin() + off_[v + 1]);

    // Connectivity: every node reachable from node 0.
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
    }
    if (reached != n_) throw InvalidGraphError("graph is not connected");
  }

  int node_count() const { return n_; }
  int degree(int v) const { return off_[v + 1] - off_[v]; }
  std::span<const int> neighbors(int v) const {
    return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
  }
  // Sorted by (min id, max id), each pair with u < v.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool adjacent(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

  static Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, std::move(e));
  }

  static Graph cycle(int n) {
    if (n < 3) throw InvalidGraphError("cycle needs at least 3 nodes");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
  }

private:
  int n_ = 0;
  std::vector<int> off_;
  std::vector<int> adj_;
  std::vector<std::pair<int, int>> edges_;
};

// Simple directed graph whose underlying undirected graph is connected.
// Antiparallel arc pairs are allowed; duplicates and self loops are not.
class DirectedGraph {
public:
  DirectedGraph(int node_count, std::vector<std::pair<int, int>> arcs) {
    if (node_count < 1) throw InvalidGraphError("node count must be at least 1");
    n_ = node_count;
    for (auto [t, h] : arcs) {
      if (t < 0 || h < 0 || t >= n_ || h >= n_)
        throw InvalidGraphError("arc endpoint out of range");
      if (t == h) throw InvalidGraphError("self loop");
    }
    std::sort(arcs.begin(), arcs.end());
    if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end())
      throw InvalidGraphError("duplicate arc");
    arcs_ = std::move(arcs);

    if (n_ > 1) {
      // Weak connectivity check via an undirected union of the arcs.
      std::vector<std::vector<int>> adj(n_);
      for (auto [t, h] : arcs_) {
        adj[t].push_back(h);
        adj[h].push_back(t);
      }
      std::vector<char> seen(n_, 0);
      std::vector<int> stack{0};
      seen[0] = 1;
      int reached = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
          if (!seen[u]) {
            seen[u] = 1;
            ++reached;
            stack.push_back(u);
          }
      }
      if (reached != n_) throw InvalidGraphError("digraph is not weakly connected");
    }
  }

  int node_count() const { return n_; }
  // Sorted (tail, head) pairs.
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

  int out_degree(int v) const {
    int d = 0;
    for (auto [t, h] : arcs_) d += (t == v);
    return d;
  }
  int in_degree(int v) const {
    int d = 0;
    for (auto [t, h] : arcs_) d += (h == v);
    return d;
  }
  int total_degree(int v) const { return out_degree(v) + in_degree(v); }

  // Binary pseudotree: out-degree at most 1 and in-degree 0 or 2 everywhere.
  bool is_binary_pseudotree() const {
    std::vector<int> ind(n_, 0), outd(n_, 0);
    for (auto [t, h] : arcs_) {
      ++outd[t];
      ++ind[h];
    }
    for (int v = 0; v < n_; ++v)
      if (outd[v] > 1 || (ind[v] != 0 && ind[v] != 2)) return false;
    return true;
  }

  bool operator==(const DirectedGraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

private:
  int n_ = 0;
  std::vector<std::pair<int, int>> arcs_;
};

}  // namespace sbsim

#pragma once

#include <bit>
#include <concepts>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace sbsim {

// A deterministic anonymous state machine for the synchronous broadcast model.
// init/message/transition never see node identities; the received messages
// arrive as a set (sorted, duplicates collapsed by value equality).
template <class A>
concept DistributedAlgorithm =
    std::regular<typename A::State> && std::totally_ordered<typename A::State> &&
    std::regular<typename A::Message> && std::totally_ordered<typename A::Message> &&
    requires(const A a, const typename A::State s, const typename A::Input& in,
             const std::vector<typename A::Message>& inbox, int degree) {
      { a.init(degree, in) } -> std::same_as<typename A::State>;
      { a.message(s) } -> std::same_as<typename A::Message>;
      { a.transition(s, inbox) } -> std::same_as<typename A::State>;
      { a.is_halting(s) } -> std::same_as<bool>;
    };

template <class A>
struct ExecutionResult {
  std::vector<typename A::State> final_states;
  long rounds = 0;              // first round index at which every node has halted
  std::size_t distinct_states = 0;  // distinct state values visited by any node, round 0 included
  int space_bits = 0;           // ceil(log2(distinct_states))
  std::optional<std::vector<std::vector<typename A::State>>> trace;  // per round, per node
};

inline int space_bits_for(std::size_t distinct_states) {
  if (distinct_states <= 1) return 0;
  return std::bit_width(distinct_states - 1);
}

namespace detail {

// Sorted duplicate-free inbox for one node. Reuses the caller's scratch buffer.
template <class Message>
void gather_inbox(const std::vector<Message>& msgs, std::span<const int> nbrs,
                  std::vector<Message>& out) {
  out.clear();
  for (int u : nbrs) out.push_back(msgs[u]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
}

}  // namespace detail

// One pure synchronous round: every node broadcasts message(state) and then
// transitions on the set of received messages. No halting shortcut is taken;
// halting absorption is a property of the algorithm, not of this function.
template <class A>
  requires DistributedAlgorithm<A>
std::vector<typename A::State> deliver_round(const Graph& g,
                                             const std::vector<typename A::State>& states,
                                             const A& algo) {
  const int n = g.node_count();
  if (static_cast<int>(states.size()) != n)
    throw InputMismatchError("state map does not cover the node set");
  std::vector<typename A::Message> msgs;
  msgs.reserve(n);
  for (int v = 0; v < n; ++v) msgs.push_back(algo.message(states[v]));
  std::vector<typename A::State> next;
  next.reserve(n);
  std::vector<typename A::Message> inbox;
  for (int v = 0; v < n; ++v) {
    detail::gather_inbox(msgs, g.neighbors(v), inbox);
    next.push_back(algo.transition(states[v], inbox));
  }
  return next;
}

// Runs the algorithm until every node is in a halting state.
// max_rounds = 0 selects the default cap of 64 * node count.
// Observationally identical to iterating deliver_round; halted nodes are
// skipped only because their states are absorbing and their messages fixed.
template <class A>
  requires DistributedAlgorithm<A>
ExecutionResult<A> run_execution(const Graph& g, const std::vector<typename A::Input>& inputs,
                                 const A& algo, long max_rounds = 0,
                                 bool capture_trace = false) {
  const int n = g.node_count();
  if (static_cast<int>(inputs.size()) != n)
    throw InputMismatchError("input assignment does not cover the node set");
  if (max_rounds == 0) max_rounds = 64l * n;
  if (max_rounds < 1) throw InvalidInstanceError("max_rounds must be positive");

  using State = typename A::State;
  using Message = typename A::Message;

  std::vector<State> cur;
  cur.reserve(n);
  std::set<State> visited;
  int halted = 0;
  for (int v = 0; v < n; ++v) {
    cur.push_back(algo.init(g.degree(v), inputs[v]));
    visited.insert(cur.back());
    if (algo.is_halting(cur.back())) ++halted;
  }

  ExecutionResult<A> result;
  if (capture_trace) result.trace.emplace();
  if (capture_trace) result.trace->push_back(cur);

  std::vector<Message> msgs(n);
  std::vector<char> fresh(n, 1);  // message cache invalid, recompute
  std::vector<Message> inbox;
  long round = 0;
  while (halted < n) {
    if (round == max_rounds) throw NonHaltingError(max_rounds, n - halted);
    ++round;
    for (int v = 0; v < n; ++v)
      if (fresh[v]) {
        msgs[v] = algo.message(cur[v]);
        fresh[v] = 0;
      }
    for (int v = 0; v < n; ++v) {
      if (algo.is_halting(cur[v])) continue;  // absorbing
      detail::gather_inbox(msgs, g.neighbors(v), inbox);
      State next = algo.transition(cur[v], inbox);
      if (!(next == cur[v])) {
        visited.insert(next);
        fresh[v] = 1;
        if (algo.is_halting(next)) ++halted;
        cur[v] = std::move(next);
      }
    }
    if (capture_trace) result.trace->push_back(cur);
  }

  result.final_states = std::move(cur);
  result.rounds = round;
  result.distinct_states = visited.size();
  result.space_bits = space_bits_for(result.distinct_states);
  return result;
}

}  // namespace sbsim

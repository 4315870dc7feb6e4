#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "badcycle/errors.hpp"
#include "badcycle/graph_kernels.hpp"
#include "badcycle/hypergraph.hpp"
#include "badcycle/machine.hpp"
#include "badcycle/order_theory.hpp"

namespace badcycle {

// Where a product arc comes from: edge e read from coordinate i to j while
// the machine moves from state s to t.
struct ArcOrigin {
  EdgeId edge;
  Position i;
  Position j;
  StateId from_state;
  StateId to_state;
};

// Product digraph on V x S. Vertex (v, s) has index v*|S| + s, and
// ((a,s),(b,t)) is an arc iff some edge e has e_i = a, e_j = b and
// t in f(s,(i,j)).
struct AuxiliaryDigraph {
  std::size_t num_states = 0;
  Digraph graph;
  // origin[v][n] describes graph.out[v][n].
  std::vector<std::vector<ArcOrigin>> origin;

  std::size_t node(VertexId v, StateId s) const { return v * num_states + s; }
  VertexId vertex_of(std::size_t node) const { return node / num_states; }
  StateId state_of(std::size_t node) const { return node % num_states; }
};

// Throws InputError when the uniformities differ.
AuxiliaryDigraph build_auxiliary(const DirectedHypergraph& h, const Machine& m);

// A bad cycle together with an accepting run s_0..s_n.
struct BadCycleWitness {
  HyperCycle cycle;
  std::vector<StateId> states;
};

// Empty when w replays as a bad cycle straight from the definition: each
// s_i lies in f(s_{i-1}, tr(c,i)), (s_0, s_n) is bad, and under cycling
// semantics the cycle is nonempty.
std::optional<std::string> replay_witness(const DirectedHypergraph& h,
                                          const Machine& m,
                                          const BadCycleWitness& w,
                                          Semantics semantics);

struct GoodnessVerdict {
  bool good = true;
  std::optional<BadCycleWitness> witness;
};

// Decides whether h has an m-bad cycle through the product digraph. Cycling
// semantics: bad iff some strong component contains an arc. General: bad iff
// some (v,s) reaches (v,t) with (s,t) in B. Witnesses are shortest closed
// walks of the offending kind. Throws InputError on uniformity mismatch or an
// invalid machine.
GoodnessVerdict is_good(const DirectedHypergraph& h, const Machine& m,
                        Semantics semantics);
GoodnessVerdict is_good(const DirectedHypergraph& h, const Machine& m);

struct BruteForceVerdict {
  enum class Outcome { good, bad, budget_exhausted };
  Outcome outcome = Outcome::good;
  std::optional<BadCycleWitness> witness;
};

// Reference decision straight from the definition: grows cycles of h step by
// step (up to max_len steps), reading each step's trace and carrying, per
// start state, the set of states the machine can be in. Walk prefixes whose
// vertex and state sets repeat an earlier prefix from the same start vertex
// are not extended again. Independent of the product digraph.
BruteForceVerdict brute_force_is_good(const DirectedHypergraph& h,
                                      const Machine& m, std::size_t max_len,
                                      Semantics semantics,
                                      SearchBudget budget = {});

// For a good h: the order system on S induced at each vertex v by the strong
// components of the product digraph (equivalence), their reachability
// (partial order) and the component numbering (linear order). Throws
// NotGoodError if h is not good.
std::vector<OrderSystem> induced_order_system_coloring(
    const DirectedHypergraph& h, const Machine& m);

class NotGoodError : public std::runtime_error {
 public:
  explicit NotGoodError(BadCycleWitness w)
      : std::runtime_error("hypergraph is not good for the machine"),
        witness(std::move(w)) {}
  BadCycleWitness witness;
};

}  // namespace badcycle

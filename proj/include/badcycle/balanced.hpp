#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "badcycle/hypergraph.hpp"
#include "badcycle/rational.hpp"

namespace badcycle {

// A closed walk in the underlying graph of a digraph. Step n goes from
// vertices[n] to vertices[n+1] along edges[n], with the arc direction when
// forward[n] is set and against it otherwise.
struct OrientedCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  std::vector<bool> forward;

  std::size_t forward_count() const;
  std::size_t backward_count() const;
};

struct BalanceVerdict {
  bool balanced = true;
  // A cycle with backward_count >= alpha * forward_count when unbalanced.
  std::optional<OrientedCycle> witness;
};

// Every cycle with f forward edges has fewer than alpha*f backward edges.
// For alpha = p/q each edge gives an arc of weight p along it and one of
// weight -q against it; the digraph is balanced iff every cycle of that
// doubled graph has positive weight. Throws InputError unless g has k = 2
// and alpha > 1.
BalanceVerdict is_alpha_balanced(const DirectedHypergraph& g, const Rational& alpha);

class UnbalancedError : public std::runtime_error {
 public:
  explicit UnbalancedError(OrientedCycle c)
      : std::runtime_error("digraph is not balanced for the given alpha"),
        witness(std::move(c)) {}
  OrientedCycle witness;
};

struct BalancedColoring {
  // ceil(alpha)
  std::int64_t alpha_ceiling = 0;
  // Longest walk value from the least vertex of each weak component, with
  // forward steps counting +1 and backward steps -ceil(alpha).
  std::vector<std::int64_t> potential;
  // potential mod (ceil(alpha) + 1)
  Coloring coloring;
};

// Colors an alpha-balanced digraph with at most ceil(alpha)+1 colors. Every
// edge (a,b) ends up with potential(a)+1 <= potential(b) <=
// potential(a)+ceil(alpha). Throws UnbalancedError with a witness when g is
// not alpha-balanced.
BalancedColoring balanced_coloring(const DirectedHypergraph& g, const Rational& alpha);

// True when a cycle traversal is a valid closed walk of g and its counts
// violate the alpha bound.
bool is_violating_cycle(const DirectedHypergraph& g, const Rational& alpha,
                        const OrientedCycle& c);

struct TwoBalancedComparison {
  bool balanced = false;
  bool good_for_all = false;
  // Smallest n <= n_max for which g is not good for the counter machine.
  std::optional<int> first_bad_n;

  bool agree() const { return balanced == good_for_all; }
};

// Compares 2-balance with goodness for the counter machines M_1..M_{n_max}.
// n_max = 0 selects 2|E|+2.
TwoBalancedComparison check_two_balanced_equivalence(const DirectedHypergraph& g,
                                                     int n_max = 0);

}  // namespace badcycle

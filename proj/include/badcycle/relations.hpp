#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "badcycle/errors.hpp"
#include "badcycle/hypergraph.hpp"
#include "badcycle/machine.hpp"

namespace badcycle {

// Binary relation on {0..n-1}, n <= 8. Pair (a,b) is bit a*n+b.
struct Relation {
  int n = 0;
  std::uint64_t bits = 0;

  bool has(int a, int b) const { return (bits >> (a * n + b)) & 1U; }
  void set(int a, int b) { bits |= std::uint64_t{1} << (a * n + b); }
  int size() const;
  // 0-based pairs in lexicographic order.
  std::vector<std::pair<int, int>> pairs() const;

  auto operator<=>(const Relation&) const = default;
};

// Throws InputError unless 1 <= n <= 8 and every pair lies in range.
Relation make_relation(int n, const std::vector<std::pair<int, int>>& pairs);
Relation identity_relation(int n);
Relation full_relation(int n);

// "{(1,2),(2,3)}" with 1-based elements.
std::string to_string(const Relation& r);

// Both projections are onto.
bool is_subdirect(const Relation& r);
// R is contained in S.
bool contains(const Relation& s, const Relation& r);

// {(a,c) : (a,b) in R, (b,c) in S}. Throws InputError on a size mismatch.
Relation compose(const Relation& r, const Relation& s);
Relation reverse(const Relation& r);
// R composed with itself e times; e = 0 gives the identity.
Relation power(const Relation& r, int e);

// Least set containing the generators closed under composition and reversal,
// sorted.
std::vector<Relation> semigroup_closure(const std::vector<Relation>& generators);

struct PqWitness {
  std::size_t p;
  std::size_t q;
  int j;
};

struct PqVerdict {
  bool compatible = false;
  std::vector<std::string> violations;
  // One entry per ordered pair (P,Q) that has a j; indices into the set.
  std::vector<PqWitness> witnesses;
};

// Closure under composition and reversal, and for each P, Q some j >= 0 with
// the identity inside P o (Q o P)^j. The sequence P o (Q o P)^j is iterated
// until it repeats, so the search for j is complete.
PqVerdict is_pq_compatible(const std::vector<Relation>& set);

// R = {(x,y), (x,z), (y,z), (z,x)} on {x,y,z} = {0,1,2}.
Relation corollary_relation();

// Relations of words over R and R^- that contain RR or R^-R^-, or equal
// (RR^-)^j or (R^-R)^j for some j >= 0, with R the corollary relation.
// Sorted.
std::vector<Relation> corollary_s_set();

struct RelationMachine {
  Machine machine;
  // Relation of each state.
  std::vector<Relation> states;
};

using RelationAssignment = std::map<std::pair<Position, Position>, Relation>;

// pi(1,2) = R and pi(2,1) = R^- for a binary relation R.
RelationAssignment binary_projections(const Relation& r);

// Deterministic k-machine on the relations reachable from the identity under
// R -> R o pi(i,j), with B = {identity} x (states outside s_set). Throws
// InputError if pi misses a pair (i,j) with i != j, mixes domain sizes, or
// the identity itself lies outside s_set.
RelationMachine build_relation_machine(const std::vector<Relation>& s_set, int k,
                                       const RelationAssignment& pi);

// The corollary machine: corollary_s_set() with binary_projections of the
// corollary relation.
RelationMachine corollary_machine();

// Shortest closed walk of odd length whose steps alternate between forward
// and backward except that the first and last step have the same direction.
// Throws InputError unless g has k = 2.
std::optional<HyperCycle> detect_odd_alternating_cycle(const DirectedHypergraph& g);

class PreconditionError : public InputError {
 public:
  PreconditionError(const std::string& property, const std::string& what)
      : InputError(what), property(property) {}
  std::string property;
};

struct LoopLemmaResult {
  // Least k with (R^l o R^-m)^k full for all k <= l, m <= k_max.
  std::optional<int> k;
  // R^l = R^(l+period) for all l >= preperiod.
  int preperiod = 0;
  int period = 0;
  // The window reaches one full period past max(k, preperiod), so the
  // identity holds for every l, m >= k.
  bool window_conclusive = false;
  // gcd of the forward-minus-backward counts of closed walks.
  int algebraic_length = 0;
};

// Every vertex has an incoming and an outgoing edge.
bool is_smooth(const Relation& r);
bool is_weakly_connected(const Relation& r);
// 0 when every closed walk is balanced.
int algebraic_length(const Relation& r);

// Throws PreconditionError naming "smooth", "weakly connected" or
// "algebraic length" when R fails that hypothesis.
LoopLemmaResult loop_lemma_exponent(const Relation& r, int k_max);

}  // namespace badcycle

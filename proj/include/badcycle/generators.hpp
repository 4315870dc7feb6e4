#pragma once

#include <string>
#include <vector>

#include "badcycle/hypergraph.hpp"
#include "badcycle/machine.hpp"
#include "badcycle/order_theory.hpp"

namespace badcycle {

// Vertex names used by the generated hypergraphs: "{1,3}" for a subset,
// "(1,3)" for an increasing pair and "({1},{2,3})" for a pair of subsets.
std::string subset_name(const std::vector<int>& elements);

// States s, t, u, v with f(s,(1,2)) = t, f(t,(1,2)) = t, f(t,(2,1)) = u,
// f(u,(1,2)) = v and B = {(s,t), (s,v)}. Good digraphs are exactly Hasse
// diagrams.
Machine gen_hasse_machine();

// Counter machine M_n on states 0..n: f(i,(1,2)) = min(i+1,n),
// f(i,(2,1)) = i-2 for i >= 2, B = diagonal. Throws InputError for n < 0.
Machine gen_counter_machine(int n);

// Each copy is ordered n, n-1, ..., 0 and (i,1) precedes (j,2) iff i > j-2.
CompatibleOrder counter_machine_order(int n);

// States 0, 1 with f(0,(1,2)) = f(0,(2,1)) = {1}, f(1,(1,2)) = {0} and
// B = {(0,1)}.
Machine gen_example3_machine();

// (0,1) < (1,1) ~ (0,2) < (1,2) with (0,1) below (1,2) and nothing else.
OrderSystem example3_order_system();

// States a-k..ak, b0..bk with B = {a0} x (S \ {a0}). Throws InputError for
// k < 1.
Machine gen_unbalanced_machine(int k);

// Classes (a-k,2) < (a-k,1)~(a-k+1,2) < ... < (ak,1) < (b0,1) <
// (b0,2)~(b1,1) < ... < (bk,2). The b classes form a chain, the a classes an
// antichain, and (ai,u) is below (bj,v) iff i+j > k+u-v.
OrderSystem unbalanced_order_system(int k);

// Hasse diagram of the pairs {a,b} of [2^n] ordered by max(a,b) <= min(c,d).
// Throws InputError unless 1 <= n <= 5.
DirectedHypergraph gen_explicit_hasse_digraph(int n);

// Vertices are the |S|-subsets of [m]. Each k|S|-subset C of [m] gives one
// edge: the element of C at the rank of (s,i) in `order` becomes a_{is}, and
// coordinate i is the set {a_{is} : s in S}. Throws InputError if the order
// is not compatible, m < k|S| or m > 30.
DirectedHypergraph gen_cycling_construction(const Machine& m,
                                            const CompatibleOrder& order,
                                            int ground);

// Vertices are ordered pairs (A,B) of subsets of [m] with neither contained
// in the other; edges ((A,B),(B,C)) with A a proper subset of C. Throws
// InputError unless 2 <= m <= 4.
DirectedHypergraph gen_incomparable_pairs_digraph(int m);

// Vertices (a,b) with a < b <= m, edges ((a,b),(b,c)). Throws InputError
// unless 2 <= m <= 64.
DirectedHypergraph gen_shift_digraph(int m);

}  // namespace badcycle

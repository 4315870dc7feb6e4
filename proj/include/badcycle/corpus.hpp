#pragma once

#include <cstdint>
#include <random>

#include "badcycle/hypergraph.hpp"
#include "badcycle/machine.hpp"
#include "badcycle/reductions.hpp"

namespace badcycle {

using Rng = std::mt19937_64;

// Uniform in [0, bound) from raw engine output, so that sequences are the same
// on every standard library.
std::uint64_t uniform(Rng& rng, std::uint64_t bound);

// Each (s,i,j) gets up to max_targets distinct targets, each slot filled with
// probability density_percent/100. Cycling machines have B = diagonal;
// otherwise B is a random nonempty set of off-diagonal pairs (or empty when
// there is a single state).
Machine random_machine(Rng& rng, int k, std::size_t states, bool cycling,
                       int density_percent = 35, int max_targets = 2);

// `edges` random k-tuples of distinct vertices (duplicates allowed).
DirectedHypergraph random_hypergraph(Rng& rng, int k, std::size_t vertices,
                                     std::size_t edges);

// Each ordered pair of distinct vertices is an arc with the given
// probability; antiparallel arcs allowed.
DirectedHypergraph random_digraph(Rng& rng, std::size_t vertices, int arc_percent);

CnfInstance random_cnf(Rng& rng, std::size_t variables, std::size_t clauses);

// All 8 sign patterns over three variables: unsatisfiable.
CnfInstance all_sign_patterns_cnf();

}  // namespace badcycle

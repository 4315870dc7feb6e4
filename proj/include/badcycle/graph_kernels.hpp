#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "badcycle/rational.hpp"

namespace badcycle {

// Plain directed multigraph on vertices 0..n-1.
struct Digraph {
  explicit Digraph(std::size_t n = 0) : out(n) {}

  std::size_t size() const { return out.size(); }
  void add_arc(std::size_t from, std::size_t to) { out.at(from).push_back(to); }
  std::size_t arc_count() const;

  std::vector<std::vector<std::size_t>> out;
};

struct WeightedArc {
  std::size_t from;
  std::size_t to;
  Rational weight;
};

// Directed multigraph with exact rational arc weights. Parallel arcs and
// self-loops are allowed.
struct WeightedDigraph {
  explicit WeightedDigraph(std::size_t n = 0) : vertex_count(n) {}

  std::size_t size() const { return vertex_count; }
  void add_arc(std::size_t from, std::size_t to, Rational weight) {
    arcs.push_back({from, to, weight});
  }
  Digraph skeleton() const;

  std::size_t vertex_count;
  std::vector<WeightedArc> arcs;
};

struct StrongComponents {
  // Component of each vertex. Components are numbered in a topological order
  // of the condensation: every arc goes from a component to itself or to a
  // component with a larger number.
  std::vector<std::size_t> component;
  std::vector<std::vector<std::size_t>> members;
  // Deduplicated condensation arcs, sorted per source.
  std::vector<std::vector<std::size_t>> condensation;
  // Whether the component contains at least one arc (a self-loop or two or
  // more members).
  std::vector<bool> has_cycle;

  std::size_t count() const { return members.size(); }
};

StrongComponents strong_components(const Digraph& g);

// Reflexive reachability. Throws InputError for unknown vertices.
bool reachable(const Digraph& g, std::size_t from, std::size_t to);

// Vertices reachable from `from` (including itself).
std::vector<bool> reachable_set(const Digraph& g, std::size_t from);

// Reachability between strong components: reaches[a][b] iff component b can
// be reached from component a (reflexive). Bit-packed rows.
class ComponentReachability {
 public:
  explicit ComponentReachability(const StrongComponents& scc);
  bool operator()(std::size_t a, std::size_t b) const {
    return (rows_[a][b / 64] >> (b % 64)) & 1U;
  }

 private:
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Minimum of (total weight / length) over all directed cycles, or nullopt if
// the graph is acyclic. Karp's dynamic program per strong component.
std::optional<Rational> min_cycle_mean(const WeightedDigraph& g);
std::optional<Rational> max_cycle_mean(const WeightedDigraph& g);

struct MeanCycle {
  Rational mean;
  // Indices into g.arcs, in traversal order.
  std::vector<std::size_t> arcs;
};

// A cycle attaining the minimum mean, found among the arcs that are tight
// for shortest-path potentials under the reduced weights w - mean.
std::optional<MeanCycle> min_mean_cycle(const WeightedDigraph& g);

struct UnboundedWalk {
  // A positive-weight cycle (arc indices in traversal order) reachable from
  // the source.
  std::vector<std::size_t> cycle;
};

using Potentials = std::vector<Rational>;

// Supremum over walks from `source` of the walk weight, per vertex.
// Bellman-Ford in longest-path form: a relaxation in round |V| proves a
// positive cycle. Relaxation then continues until the predecessor arcs close
// a cycle, which is returned as the witness. Throws InputError if some vertex
// is unreachable from source.
std::variant<Potentials, UnboundedWalk> longest_walk_potentials(
    const WeightedDigraph& g, std::size_t source);

}  // namespace badcycle

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "badcycle/errors.hpp"
#include "badcycle/machine.hpp"

namespace badcycle {

using VertexId = std::size_t;
using EdgeId = std::size_t;

// A k-uniform directed hypergraph. Edges are ordered k-tuples; coordinate a
// of an edge is addressed with the 1-based Position a.
class DirectedHypergraph {
 public:
  DirectedHypergraph() = default;
  DirectedHypergraph(int k, std::vector<std::string> vertices);

  // Anonymous vertices named "1".."n".
  static DirectedHypergraph with_vertex_count(int k, std::size_t n);

  int k() const { return k_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  VertexId vertex_id(std::string_view name) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;

  // Throws InputError unless the edge has k distinct known coordinates.
  EdgeId add_edge(std::vector<VertexId> edge);
  const std::vector<VertexId>& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<std::vector<VertexId>>& edges() const { return edges_; }

  // Coordinate (1-based) at which v occurs in edge e, if any.
  std::optional<Position> position_of(EdgeId e, VertexId v) const;

  // Edges incident to each vertex, in edge order, each listed once.
  std::vector<std::vector<EdgeId>> incidence() const;

  bool operator==(const DirectedHypergraph&) const = default;

 private:
  int k_ = 2;
  std::vector<std::string> vertices_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::vector<VertexId>> edges_;
};

// (v_0, e_1, v_1, ..., e_n, v_n) with v_n = v_0. vertices holds all n+1
// entries; edges holds e_1..e_n.
struct HyperCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const { return edges.size(); }
  bool operator==(const HyperCycle&) const = default;
};

// Empty when c is a valid cycle of h; otherwise describes the first problem.
std::optional<std::string> check_cycle(const DirectedHypergraph& h,
                                       const HyperCycle& c);

// tr(c, step) = (a, b) with (e_step)_a = v_{step-1} and (e_step)_b = v_step.
// step is 1-based. Throws InputError when step is out of range or the cycle
// does not pass through the edge's coordinates.
std::pair<Position, Position> trace(const DirectedHypergraph& h,
                                    const HyperCycle& c, std::size_t step);

// Color of each vertex, 0-based.
using Coloring = std::vector<int>;

bool is_proper_coloring(const DirectedHypergraph& h, const Coloring& coloring);
int color_count(const Coloring& coloring);

struct ChromaticResult {
  int chromatic_number = 0;
  Coloring coloring;
  std::uint64_t nodes = 0;
};

// Exact chromatic number by iterative deepening on the color count with a
// DSATUR-ordered backtracking search. Throws BudgetExceeded (carrying the
// best known bounds) when the budget runs out.
ChromaticResult chromatic_number_exact(const DirectedHypergraph& h,
                                       SearchBudget budget = {});

// Greedy coloring along `order` (all vertices, each once). An empty order
// means index order.
Coloring greedy_coloring(const DirectedHypergraph& h,
                         const std::vector<VertexId>& order = {});
int chromatic_upper_greedy(const DirectedHypergraph& h,
                           const std::vector<VertexId>& order = {});

// Calls visit on every cycle of length <= max_len exactly once, in the
// rotation that is lexicographically least when encoded as
// (v_0, e_1, v_1, ..., e_n). Stops early when visit returns false.
void enumerate_cycles(const DirectedHypergraph& h, std::size_t max_len,
                      const std::function<bool(const HyperCycle&)>& visit);

// Lexicographically least rotation of c.
HyperCycle canonical_rotation(const HyperCycle& c);

// P_n: vertices 1..n+1, edges (i, i+1).
DirectedHypergraph path_digraph(std::size_t n);

// Digraph (k = 2) with vertices 1..n and the given 0-based arcs.
DirectedHypergraph digraph_from_arcs(
    std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& arcs);

}  // namespace badcycle

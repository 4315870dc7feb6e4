#include "badcycle/corpus.hpp"

#include <algorithm>

namespace badcycle {

std::uint64_t uniform(Rng& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Machine random_machine(Rng& rng, int k, std::size_t states, bool cycling,
                       int density_percent, int max_targets) {
  std::vector<std::string> names;
  for (std::size_t s = 0; s < states; ++s) names.push_back("q" + std::to_string(s));
  Machine m(k, names);
  for (StateId s = 0; s < states; ++s) {
    for (Position i = 1; i <= k; ++i) {
      for (Position j = 1; j <= k; ++j) {
        for (int slot = 0; slot < max_targets; ++slot) {
          if (uniform(rng, 100) < static_cast<std::uint64_t>(density_percent)) {
            m.add_transition(s, i, j, uniform(rng, states));
          }
        }
      }
    }
  }
  if (cycling) {
    for (StateId s = 0; s < states; ++s) m.add_bad(s, s);
  } else if (states > 1) {
    std::size_t count = 1 + uniform(rng, states);
    for (std::size_t n = 0; n < count; ++n) {
      StateId s = uniform(rng, states);
      StateId t = uniform(rng, states - 1);
      if (t >= s) ++t;
      m.add_bad(s, t);
    }
  }
  return m;
}

DirectedHypergraph random_hypergraph(Rng& rng, int k, std::size_t vertices,
                                     std::size_t edges) {
  auto h = DirectedHypergraph::with_vertex_count(k, vertices);
  if (vertices < static_cast<std::size_t>(k)) return h;
  for (std::size_t n = 0; n < edges; ++n) {
    std::vector<VertexId> pool(vertices);
    for (std::size_t v = 0; v < vertices; ++v) pool[v] = v;
    std::vector<VertexId> edge;
    for (int c = 0; c < k; ++c) {
      std::size_t pick = c + uniform(rng, vertices - static_cast<std::size_t>(c));
      std::swap(pool[static_cast<std::size_t>(c)], pool[pick]);
      edge.push_back(pool[static_cast<std::size_t>(c)]);
    }
    h.add_edge(std::move(edge));
  }
  return h;
}

DirectedHypergraph random_digraph(Rng& rng, std::size_t vertices, int arc_percent) {
  auto g = DirectedHypergraph::with_vertex_count(2, vertices);
  for (VertexId a = 0; a < vertices; ++a) {
    for (VertexId b = 0; b < vertices; ++b) {
      if (a != b && uniform(rng, 100) < static_cast<std::uint64_t>(arc_percent)) {
        g.add_edge({a, b});
      }
    }
  }
  return g;
}

CnfInstance random_cnf(Rng& rng, std::size_t variables, std::size_t clauses) {
  CnfInstance phi;
  for (std::size_t v = 0; v < variables; ++v) phi.variables.push_back("x" + std::to_string(v + 1));
  for (std::size_t c = 0; c < clauses; ++c) {
    std::array<Literal, 3> clause;
    for (auto& l : clause) l = {uniform(rng, variables), uniform(rng, 2) == 1};
    phi.clauses.push_back(clause);
  }
  return phi;
}

CnfInstance all_sign_patterns_cnf() {
  CnfInstance phi;
  phi.variables = {"x", "y", "z"};
  for (int signs = 0; signs < 8; ++signs) {
    phi.clauses.push_back({Literal{0, (signs & 1) != 0}, Literal{1, (signs & 2) != 0},
                           Literal{2, (signs & 4) != 0}});
  }
  return phi;
}

}  // namespace badcycle

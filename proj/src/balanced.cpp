#include "badcycle/balanced.hpp"

#include <algorithm>
#include <numeric>

#include "badcycle/generators.hpp"
#include "badcycle/goodness.hpp"
#include "badcycle/graph_kernels.hpp"

namespace badcycle {

std::size_t OrientedCycle::forward_count() const {
  return static_cast<std::size_t>(std::count(forward.begin(), forward.end(), true));
}

std::size_t OrientedCycle::backward_count() const {
  return forward.size() - forward_count();
}

namespace {

void require_digraph(const DirectedHypergraph& g) {
  if (g.k() != 2) throw InputError("expected a digraph (k = 2)");
}

void require_alpha(const Rational& alpha) {
  if (alpha <= 1) throw InputError("alpha must be greater than 1");
}

// Arc 2e runs along edge e, arc 2e+1 against it.
WeightedDigraph doubled(const DirectedHypergraph& g, const Rational& forward,
                        const Rational& backward) {
  WeightedDigraph d(g.num_vertices());
  for (const auto& e : g.edges()) {
    d.add_arc(e[0], e[1], forward);
    d.add_arc(e[1], e[0], backward);
  }
  return d;
}

OrientedCycle cycle_from_arcs(const WeightedDigraph& d,
                              const std::vector<std::size_t>& arcs) {
  OrientedCycle c;
  for (std::size_t a : arcs) {
    c.vertices.push_back(d.arcs[a].from);
    c.edges.push_back(a / 2);
    c.forward.push_back(a % 2 == 0);
  }
  if (!arcs.empty()) c.vertices.push_back(d.arcs[arcs.back()].to);
  return c;
}

}  // namespace

BalanceVerdict is_alpha_balanced(const DirectedHypergraph& g, const Rational& alpha) {
  require_digraph(g);
  require_alpha(alpha);
  auto d = doubled(g, Rational(alpha.numerator()), Rational(-alpha.denominator()));
  BalanceVerdict verdict;
  auto cycle = min_mean_cycle(d);
  if (cycle && cycle->mean <= 0) {
    verdict.balanced = false;
    verdict.witness = cycle_from_arcs(d, cycle->arcs);
  }
  return verdict;
}

bool is_violating_cycle(const DirectedHypergraph& g, const Rational& alpha,
                        const OrientedCycle& c) {
  if (c.edges.empty() || c.forward.size() != c.edges.size() ||
      c.vertices.size() != c.edges.size() + 1 || c.vertices.front() != c.vertices.back()) {
    return false;
  }
  for (std::size_t n = 0; n < c.edges.size(); ++n) {
    if (c.edges[n] >= g.num_edges()) return false;
    const auto& e = g.edge(c.edges[n]);
    VertexId from = c.forward[n] ? e[0] : e[1];
    VertexId to = c.forward[n] ? e[1] : e[0];
    if (c.vertices[n] != from || c.vertices[n + 1] != to) return false;
  }
  return Rational(static_cast<std::int64_t>(c.backward_count())) >=
         alpha * static_cast<std::int64_t>(c.forward_count());
}

BalancedColoring balanced_coloring(const DirectedHypergraph& g, const Rational& alpha) {
  require_digraph(g);
  require_alpha(alpha);
  BalancedColoring out;
  out.alpha_ceiling = ceil(alpha);
  const std::int64_t a = out.alpha_ceiling;
  const std::size_t n = g.num_vertices();

  auto verdict = is_alpha_balanced(g, alpha);
  if (!verdict.balanced) throw UnbalancedError(*verdict.witness);

  // Weak components, each handled from its least vertex.
  std::vector<std::size_t> comp(n, n);
  std::vector<std::vector<VertexId>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  out.potential.assign(n, 0);
  out.coloring.assign(n, 0);
  for (VertexId root = 0; root < n; ++root) {
    if (comp[root] != n) continue;
    std::vector<VertexId> members{root};
    comp[root] = root;
    for (std::size_t q = 0; q < members.size(); ++q) {
      for (VertexId w : adj[members[q]]) {
        if (comp[w] == n) {
          comp[w] = root;
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<std::size_t> local(n, 0);
    for (std::size_t q = 0; q < members.size(); ++q) local[members[q]] = q;
    WeightedDigraph d(members.size());
    for (const auto& e : g.edges()) {
      if (comp[e[0]] != root) continue;
      d.add_arc(local[e[0]], local[e[1]], Rational(1));
      d.add_arc(local[e[1]], local[e[0]], Rational(-a));
    }
    auto result = longest_walk_potentials(d, 0);
    if (auto* walk = std::get_if<UnboundedWalk>(&result)) {
      OrientedCycle c = cycle_from_arcs(d, walk->cycle);
      for (auto& v : c.vertices) v = members[v];
      // Local arc 2q or 2q+1 belongs to the q-th edge of this component.
      std::vector<EdgeId> component_edges;
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (comp[g.edge(e)[0]] == root) component_edges.push_back(e);
      }
      for (std::size_t s = 0; s < walk->cycle.size(); ++s) {
        c.edges[s] = component_edges[walk->cycle[s] / 2];
      }
      throw UnbalancedError(c);
    }
    const auto& pot = std::get<Potentials>(result);
    for (std::size_t q = 0; q < members.size(); ++q) {
      std::int64_t l = pot[q].numerator();
      out.potential[members[q]] = l;
      out.coloring[members[q]] = static_cast<int>(((l % (a + 1)) + (a + 1)) % (a + 1));
    }
  }
  return out;
}

TwoBalancedComparison check_two_balanced_equivalence(const DirectedHypergraph& g,
                                                     int n_max) {
  require_digraph(g);
  if (n_max <= 0) n_max = 2 * static_cast<int>(g.num_edges()) + 2;
  TwoBalancedComparison out;
  out.balanced = is_alpha_balanced(g, Rational(2)).balanced;
  out.good_for_all = true;
  for (int n = 1; n <= n_max; ++n) {
    if (!is_good(g, gen_counter_machine(n), Semantics::cycling).good) {
      out.good_for_all = false;
      out.first_bad_n = n;
      break;
    }
  }
  return out;
}

}  // namespace badcycle

#include "badcycle/goodness.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace badcycle {

AuxiliaryDigraph build_auxiliary(const DirectedHypergraph& h, const Machine& m) {
  if (h.k() != m.k()) {
    throw InputError("hypergraph uniformity " + std::to_string(h.k()) +
                     " differs from machine uniformity " +
                     std::to_string(m.k()));
  }
  AuxiliaryDigraph aux;
  aux.num_states = m.num_states();
  aux.graph = Digraph(h.num_vertices() * m.num_states());
  aux.origin.assign(aux.graph.size(), {});
  const auto transitions = m.transition_list();
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto& coords = h.edge(e);
    for (const auto& tr : transitions) {
      if (tr.i < 1 || tr.i > h.k() || tr.j < 1 || tr.j > h.k()) continue;
      std::size_t from = aux.node(coords[tr.i - 1], tr.from);
      std::size_t to = aux.node(coords[tr.j - 1], tr.to);
      aux.graph.add_arc(from, to);
      aux.origin[from].push_back({e, tr.i, tr.j, tr.from, tr.to});
    }
  }
  return aux;
}

std::optional<std::string> replay_witness(const DirectedHypergraph& h,
                                          const Machine& m,
                                          const BadCycleWitness& w,
                                          Semantics semantics) {
  if (auto problem = check_cycle(h, w.cycle)) return problem;
  if (w.states.size() != w.cycle.length() + 1) {
    return std::string("state sequence length does not match the cycle");
  }
  for (StateId s : w.states) {
    if (s >= m.num_states()) return std::string("unknown state in witness");
  }
  if (semantics == Semantics::cycling && w.cycle.length() == 0) {
    return std::string("cycling semantics ignores empty cycles");
  }
  for (std::size_t i = 1; i <= w.cycle.length(); ++i) {
    auto [a, b] = trace(h, w.cycle, i);
    const auto& next = m.step(w.states[i - 1], a, b);
    if (!std::binary_search(next.begin(), next.end(), w.states[i])) {
      return "state " + m.state_name(w.states[i]) + " at step " +
             std::to_string(i) + " is not a successor";
    }
  }
  if (!m.is_bad(w.states.front(), w.states.back())) {
    return std::string("end states are not a bad pair");
  }
  return std::nullopt;
}

namespace {

struct ProductStep {
  std::size_t node;   // source node
  std::size_t index;  // position in graph.out[node]
};

BadCycleWitness to_witness(const AuxiliaryDigraph& aux, std::size_t start,
                           const std::vector<ProductStep>& steps) {
  BadCycleWitness w;
  w.cycle.vertices.push_back(aux.vertex_of(start));
  w.states.push_back(aux.state_of(start));
  for (const auto& st : steps) {
    std::size_t to = aux.graph.out[st.node][st.index];
    w.cycle.edges.push_back(aux.origin[st.node][st.index].edge);
    w.cycle.vertices.push_back(aux.vertex_of(to));
    w.states.push_back(aux.state_of(to));
  }
  return w;
}

// Breadth-first search from `start` restricted to nodes accepted by `allowed`.
// Returns the parent step of each reached node.
std::vector<std::optional<ProductStep>> bfs_parents(
    const AuxiliaryDigraph& aux, std::size_t start,
    const std::vector<bool>* allowed, std::vector<std::size_t>& dist) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  const auto& g = aux.graph;
  std::vector<std::optional<ProductStep>> parent(g.size());
  dist.assign(g.size(), kInf);
  std::deque<std::size_t> queue{start};
  dist[start] = 0;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t n = 0; n < g.out[v].size(); ++n) {
      std::size_t w = g.out[v][n];
      if (allowed && !(*allowed)[w]) continue;
      if (dist[w] != kInf) continue;
      dist[w] = dist[v] + 1;
      parent[w] = ProductStep{v, n};
      queue.push_back(w);
    }
  }
  return parent;
}

std::vector<ProductStep> path_to(
    const std::vector<std::optional<ProductStep>>& parent, std::size_t start,
    std::size_t target) {
  std::vector<ProductStep> steps;
  for (std::size_t v = target; v != start; v = parent[v]->node) {
    steps.push_back(*parent[v]);
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

// Shortest closed walk of positive length inside the component.
BadCycleWitness shortest_closed_walk(const AuxiliaryDigraph& aux,
                                     const std::vector<std::size_t>& members) {
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::vector<bool> allowed(aux.graph.size(), false);
  for (std::size_t v : members) allowed[v] = true;
  // Trying every member is quadratic; large components use the first only.
  const std::size_t tries = members.size() <= 256 ? members.size() : 1;
  std::optional<BadCycleWitness> best;
  std::vector<std::size_t> dist;
  for (std::size_t t = 0; t < tries; ++t) {
    std::size_t start = members[t];
    auto parent = bfs_parents(aux, start, &allowed, dist);
    std::size_t best_len = kInf;
    std::optional<ProductStep> closing;
    for (std::size_t v : members) {
      if (dist[v] == kInf) continue;
      const auto& out = aux.graph.out[v];
      for (std::size_t n = 0; n < out.size(); ++n) {
        if (out[n] == start && dist[v] + 1 < best_len) {
          best_len = dist[v] + 1;
          closing = ProductStep{v, n};
        }
      }
    }
    if (!closing) continue;
    if (best && best->cycle.length() <= best_len) continue;
    auto steps = path_to(parent, start, closing->node);
    steps.push_back(*closing);
    best = to_witness(aux, start, steps);
  }
  return *best;
}

}  // namespace

GoodnessVerdict is_good(const DirectedHypergraph& h, const Machine& m,
                        Semantics semantics) {
  require_valid(m, semantics);
  const auto aux = build_auxiliary(h, m);
  const auto scc = strong_components(aux.graph);
  GoodnessVerdict verdict;

  if (semantics == Semantics::cycling) {
    for (std::size_t c = 0; c < scc.count(); ++c) {
      if (!scc.has_cycle[c]) continue;
      verdict.good = false;
      verdict.witness = shortest_closed_walk(aux, scc.members[c]);
      return verdict;
    }
    return verdict;
  }

  const ComponentReachability reach(scc);
  std::vector<std::size_t> offending_sources;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    for (const auto& [s, t] : m.bad()) {
      if (reach(scc.component[aux.node(v, s)], scc.component[aux.node(v, t)])) {
        offending_sources.push_back(aux.node(v, s));
      }
    }
  }
  if (offending_sources.empty()) return verdict;

  std::sort(offending_sources.begin(), offending_sources.end());
  offending_sources.erase(
      std::unique(offending_sources.begin(), offending_sources.end()),
      offending_sources.end());
  constexpr auto kInf = std::numeric_limits<std::size_t>::max();
  std::size_t best_len = kInf;
  std::vector<std::size_t> dist;
  for (std::size_t start : offending_sources) {
    auto parent = bfs_parents(aux, start, nullptr, dist);
    VertexId v = aux.vertex_of(start);
    StateId s = aux.state_of(start);
    for (StateId t = 0; t < m.num_states(); ++t) {
      std::size_t target = aux.node(v, t);
      if (!m.is_bad(s, t) || dist[target] == kInf) continue;
      if (dist[target] < best_len) {
        best_len = dist[target];
        verdict.witness = to_witness(aux, start, path_to(parent, start, target));
      }
    }
  }
  verdict.good = false;
  return verdict;
}

GoodnessVerdict is_good(const DirectedHypergraph& h, const Machine& m) {
  return is_good(h, m, natural_semantics(m));
}

BruteForceVerdict brute_force_is_good(const DirectedHypergraph& h,
                                      const Machine& m, std::size_t max_len,
                                      Semantics semantics,
                                      SearchBudget budget) {
  require_valid(m, semantics);
  if (h.k() != m.k()) throw InputError("uniformity mismatch");
  const std::size_t n_states = m.num_states();
  if (n_states > 64) {
    throw InputError("brute-force oracle supports at most 64 states");
  }
  using Mask = std::uint64_t;
  auto successors = [&](Mask from, Position a, Position b) {
    Mask out = 0;
    for (StateId s = 0; s < n_states; ++s) {
      if (!((from >> s) & 1U)) continue;
      for (StateId t : m.step(s, a, b)) out |= Mask{1} << t;
    }
    return out;
  };
  const auto inc = h.incidence();

  struct Node {
    VertexId vertex;
    std::vector<Mask> reach;  // per start state
    std::size_t parent;
    EdgeId via;
    std::size_t depth;
  };

  // Walk ending with (parent node, edge, last vertex), then one accepting run
  // from s0 to t chosen backwards along it.
  auto rebuild = [&](const std::vector<Node>& nodes, std::size_t parent,
                     EdgeId last_edge, VertexId last_vertex, StateId s0,
                     StateId t) {
    BadCycleWitness w;
    std::vector<std::size_t> chain;
    for (std::size_t i = parent; i != 0; i = nodes[i].parent) chain.push_back(i);
    std::reverse(chain.begin(), chain.end());
    w.cycle.vertices.push_back(nodes[0].vertex);
    for (std::size_t i : chain) {
      w.cycle.edges.push_back(nodes[i].via);
      w.cycle.vertices.push_back(nodes[i].vertex);
    }
    w.cycle.edges.push_back(last_edge);
    w.cycle.vertices.push_back(last_vertex);
    const std::size_t len = w.cycle.length();
    std::vector<Mask> forward(len + 1);
    forward[0] = Mask{1} << s0;
    for (std::size_t i = 1; i <= len; ++i) {
      auto [a, b] = trace(h, w.cycle, i);
      forward[i] = successors(forward[i - 1], a, b);
    }
    w.states.assign(len + 1, 0);
    w.states[len] = t;
    for (std::size_t i = len; i >= 1; --i) {
      auto [a, b] = trace(h, w.cycle, i);
      for (StateId p = 0; p < n_states; ++p) {
        if (!((forward[i - 1] >> p) & 1U)) continue;
        const auto& next_states = m.step(p, a, b);
        if (std::binary_search(next_states.begin(), next_states.end(),
                               w.states[i])) {
          w.states[i - 1] = p;
          break;
        }
      }
    }
    return w;
  };

  BruteForceVerdict verdict;
  for (VertexId start = 0; start < h.num_vertices(); ++start) {
    std::vector<Node> nodes;
    std::set<std::pair<VertexId, std::vector<Mask>>> seen;
    Node root{start, std::vector<Mask>(n_states), 0, 0, 0};
    for (StateId s = 0; s < n_states; ++s) root.reach[s] = Mask{1} << s;
    seen.emplace(start, root.reach);
    nodes.push_back(root);
    for (std::size_t head = 0; head < nodes.size(); ++head) {
      if (!budget.tick()) {
        verdict.outcome = BruteForceVerdict::Outcome::budget_exhausted;
        return verdict;
      }
      const Node current = nodes[head];
      if (current.depth == max_len) continue;
      for (EdgeId e : inc[current.vertex]) {
        Position a = *h.position_of(e, current.vertex);
        for (VertexId next : h.edge(e)) {
          Position b = *h.position_of(e, next);
          Node child{next, std::vector<Mask>(n_states), head, e,
                     current.depth + 1};
          bool alive = false;
          for (StateId s = 0; s < n_states; ++s) {
            child.reach[s] = successors(current.reach[s], a, b);
            alive = alive || child.reach[s] != 0;
          }
          if (!alive) continue;
          if (next == start) {
            for (StateId s0 = 0; s0 < n_states; ++s0) {
              for (StateId t = 0; t < n_states; ++t) {
                if (((child.reach[s0] >> t) & 1U) && m.is_bad(s0, t)) {
                  verdict.outcome = BruteForceVerdict::Outcome::bad;
                  verdict.witness = rebuild(nodes, head, e, next, s0, t);
                  return verdict;
                }
              }
            }
          }
          if (seen.emplace(next, child.reach).second) nodes.push_back(child);
        }
      }
    }
  }
  return verdict;
}

std::vector<OrderSystem> induced_order_system_coloring(
    const DirectedHypergraph& h, const Machine& m) {
  auto verdict = is_good(h, m);
  if (!verdict.good) throw NotGoodError(*verdict.witness);
  const auto aux = build_auxiliary(h, m);
  const auto scc = strong_components(aux.graph);
  const ComponentReachability reach(scc);
  std::vector<OrderSystem> out;
  out.reserve(h.num_vertices());
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    std::map<std::size_t, std::vector<std::size_t>> by_component;
    for (StateId s = 0; s < m.num_states(); ++s) {
      by_component[scc.component[aux.node(v, s)]].push_back(s);
    }
    OrderSystem os;
    os.carrier_size = m.num_states();
    // Topological sort of v's components under reachability, breaking ties
    // by least member state.
    std::vector<std::size_t> pending;
    for (auto& [c, members] : by_component) pending.push_back(c);
    std::vector<std::size_t> comps;
    while (!pending.empty()) {
      std::size_t pick = pending.size();
      for (std::size_t x = 0; x < pending.size(); ++x) {
        bool minimal = true;
        for (std::size_t y = 0; y < pending.size() && minimal; ++y) {
          if (y != x && reach(pending[y], pending[x])) minimal = false;
        }
        if (minimal && (pick == pending.size() ||
                        by_component[pending[x]].front() <
                            by_component[pending[pick]].front())) {
          pick = x;
        }
      }
      comps.push_back(pending[pick]);
      os.classes.push_back(by_component[pending[pick]]);
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    for (std::size_t a = 0; a < comps.size(); ++a) {
      os.linear.push_back(a);
      for (std::size_t b = a + 1; b < comps.size(); ++b) {
        if (reach(comps[a], comps[b])) os.partial.emplace_back(a, b);
      }
    }
    out.push_back(std::move(os));
  }
  return out;
}

}  // namespace badcycle

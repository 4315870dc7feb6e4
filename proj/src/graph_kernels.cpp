#include "badcycle/graph_kernels.hpp"

#include <algorithm>
#include <limits>

#include "badcycle/errors.hpp"

namespace badcycle {

std::size_t Digraph::arc_count() const {
  std::size_t n = 0;
  for (const auto& row : out) n += row.size();
  return n;
}

Digraph WeightedDigraph::skeleton() const {
  Digraph g(vertex_count);
  for (const auto& a : arcs) g.add_arc(a.from, a.to);
  return g;
}

StrongComponents strong_components(const Digraph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> found;  // reverse topological order
  std::size_t next_index = 0;

  // Iterative Tarjan; each frame is (vertex, next arc position).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < g.out[v].size()) {
        std::size_t w = g.out[v][pos++];
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<std::size_t> members;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          members.push_back(w);
        } while (w != done);
        std::sort(members.begin(), members.end());
        found.push_back(std::move(members));
      }
    }
  }

  StrongComponents scc;
  const std::size_t count = found.size();
  scc.members.resize(count);
  scc.component.assign(n, 0);
  for (std::size_t c = 0; c < count; ++c) {
    scc.members[c] = std::move(found[count - 1 - c]);
    for (std::size_t v : scc.members[c]) scc.component[v] = c;
  }
  scc.condensation.assign(count, {});
  scc.has_cycle.assign(count, false);
  for (std::size_t c = 0; c < count; ++c) {
    scc.has_cycle[c] = scc.members[c].size() > 1;
  }
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : g.out[v]) {
      std::size_t a = scc.component[v], b = scc.component[w];
      if (a == b) {
        scc.has_cycle[a] = true;
      } else {
        scc.condensation[a].push_back(b);
      }
    }
  }
  for (auto& row : scc.condensation) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return scc;
}

std::vector<bool> reachable_set(const Digraph& g, std::size_t from) {
  if (from >= g.size()) throw InputError("unknown vertex in reachability query");
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : g.out[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

bool reachable(const Digraph& g, std::size_t from, std::size_t to) {
  if (to >= g.size()) throw InputError("unknown vertex in reachability query");
  return reachable_set(g, from)[to];
}

ComponentReachability::ComponentReachability(const StrongComponents& scc) {
  const std::size_t n = scc.count();
  const std::size_t words = (n + 63) / 64;
  rows_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t c = n; c-- > 0;) {
    rows_[c][c / 64] |= std::uint64_t{1} << (c % 64);
    for (std::size_t d : scc.condensation[c]) {
      for (std::size_t w = 0; w < words; ++w) rows_[c][w] |= rows_[d][w];
    }
  }
}

namespace {

// Karp's minimum cycle mean on one strongly connected vertex set.
// `local` maps global vertex ids to 0..m-1 for members, -1 otherwise.
Rational karp_component(const WeightedDigraph& g,
                        const std::vector<std::size_t>& members,
                        const std::vector<long>& local) {
  const std::size_t m = members.size();
  std::vector<const WeightedArc*> arcs;
  for (const auto& a : g.arcs) {
    if (local[a.from] >= 0 && local[a.to] >= 0) arcs.push_back(&a);
  }
  // best[k][v]: minimum weight of a walk with exactly k arcs from member 0.
  std::vector<std::vector<std::optional<Rational>>> best(
      m + 1, std::vector<std::optional<Rational>>(m));
  best[0][0] = Rational(0);
  for (std::size_t k = 1; k <= m; ++k) {
    for (const WeightedArc* a : arcs) {
      const auto& prev = best[k - 1][local[a->from]];
      if (!prev) continue;
      Rational cand = *prev + a->weight;
      auto& slot = best[k][local[a->to]];
      if (!slot || cand < *slot) slot = cand;
    }
  }
  std::optional<Rational> answer;
  for (std::size_t v = 0; v < m; ++v) {
    if (!best[m][v]) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < m; ++k) {
      if (!best[k][v]) continue;
      Rational value = (*best[m][v] - *best[k][v]) /
                       static_cast<std::int64_t>(m - k);
      if (!worst || value > *worst) worst = value;
    }
    if (worst && (!answer || *worst < *answer)) answer = worst;
  }
  return *answer;
}

}  // namespace

std::optional<Rational> min_cycle_mean(const WeightedDigraph& g) {
  const auto scc = strong_components(g.skeleton());
  std::optional<Rational> result;
  std::vector<long> local(g.size(), -1);
  for (std::size_t c = 0; c < scc.count(); ++c) {
    if (!scc.has_cycle[c]) continue;
    const auto& members = scc.members[c];
    for (std::size_t i = 0; i < members.size(); ++i) {
      local[members[i]] = static_cast<long>(i);
    }
    Rational value = karp_component(g, members, local);
    for (std::size_t v : members) local[v] = -1;
    if (!result || value < *result) result = value;
  }
  return result;
}

std::optional<Rational> max_cycle_mean(const WeightedDigraph& g) {
  WeightedDigraph negated = g;
  for (auto& a : negated.arcs) a.weight = -a.weight;
  auto value = min_cycle_mean(negated);
  if (!value) return std::nullopt;
  return -*value;
}

std::optional<MeanCycle> min_mean_cycle(const WeightedDigraph& g) {
  auto mean = min_cycle_mean(g);
  if (!mean) return std::nullopt;
  const std::size_t n = g.size();
  // Shortest distances from a virtual source under w - mean; no negative
  // cycles exist, so n rounds suffice.
  std::vector<Rational> dist(n, Rational(0));
  for (std::size_t round = 0; round < n; ++round) {
    bool changed = false;
    for (const auto& a : g.arcs) {
      Rational cand = dist[a.from] + a.weight - *mean;
      if (cand < dist[a.to]) {
        dist[a.to] = cand;
        changed = true;
      }
    }
    if (!changed) break;
  }
  // Every cycle made of tight arcs has mean exactly `mean`.
  std::vector<std::vector<std::size_t>> tight(n);
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    const auto& a = g.arcs[i];
    if (dist[a.from] + a.weight - *mean == dist[a.to]) {
      tight[a.from].push_back(i);
    }
  }
  std::vector<int> state(n, 0);  // 0 new, 1 on path, 2 done
  std::vector<std::size_t> path_arcs;
  std::vector<std::size_t> path_vertices;
  for (std::size_t root = 0; root < n; ++root) {
    if (state[root] != 0) continue;
    std::vector<std::pair<std::size_t, std::size_t>> frames{{root, 0}};
    state[root] = 1;
    path_vertices = {root};
    path_arcs.clear();
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < tight[v].size()) {
        std::size_t arc = tight[v][pos++];
        std::size_t w = g.arcs[arc].to;
        if (state[w] == 1) {
          auto it = std::find(path_vertices.begin(), path_vertices.end(), w);
          std::size_t start = static_cast<std::size_t>(it - path_vertices.begin());
          MeanCycle cycle{*mean, {}};
          cycle.arcs.assign(path_arcs.begin() + static_cast<long>(start),
                            path_arcs.end());
          cycle.arcs.push_back(arc);
          return cycle;
        }
        if (state[w] == 0) {
          state[w] = 1;
          frames.emplace_back(w, 0);
          path_vertices.push_back(w);
          path_arcs.push_back(arc);
        }
        continue;
      }
      state[v] = 2;
      frames.pop_back();
      path_vertices.pop_back();
      if (!path_arcs.empty() && !frames.empty()) path_arcs.pop_back();
    }
  }
  return std::nullopt;  // unreachable: a minimum-mean cycle is always tight
}

std::variant<Potentials, UnboundedWalk> longest_walk_potentials(
    const WeightedDigraph& g, std::size_t source) {
  const std::size_t n = g.size();
  if (source >= n) throw InputError("unknown source vertex");
  auto seen = reachable_set(g.skeleton(), source);
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) {
      throw InputError("vertex " + std::to_string(v) +
                       " is unreachable from the source");
    }
  }
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::optional<Rational>> best(n);
  std::vector<std::size_t> via(n, kNone);
  best[source] = Rational(0);
  // Cycle of the predecessor graph, if any. Such a cycle has positive
  // weight, and once the values keep growing past round n one must appear.
  auto predecessor_cycle = [&]() -> std::optional<std::vector<std::size_t>> {
    std::vector<int> state(n, 0);  // 0 new, 1 on current chain, 2 done
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<std::size_t> chain;
      std::size_t v = start;
      while (state[v] == 0) {
        state[v] = 1;
        chain.push_back(v);
        if (via[v] == kNone) break;
        v = g.arcs[via[v]].from;
      }
      if (state[v] == 1 && via[v] != kNone) {
        std::vector<std::size_t> cycle;
        std::size_t u = v;
        do {
          cycle.push_back(via[u]);
          u = g.arcs[via[u]].from;
        } while (u != v);
        std::reverse(cycle.begin(), cycle.end());
        return cycle;
      }
      for (auto c : chain) state[c] = 2;
    }
    return std::nullopt;
  };
  for (std::size_t round = 1;; ++round) {
    bool relaxed = false;
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
      const auto& a = g.arcs[i];
      if (!best[a.from]) continue;
      Rational cand = *best[a.from] + a.weight;
      if (!best[a.to] || cand > *best[a.to]) {
        best[a.to] = cand;
        via[a.to] = i;
        relaxed = true;
      }
    }
    if (!relaxed) break;
    if (round >= n) {
      if (auto cycle = predecessor_cycle()) return UnboundedWalk{*cycle};
    }
  }
  Potentials out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = *best[v];
  return out;
}

}  // namespace badcycle

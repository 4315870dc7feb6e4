#include "badcycle/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace badcycle {

DirectedHypergraph::DirectedHypergraph(int k, std::vector<std::string> vertices)
    : k_(k), vertices_(std::move(vertices)) {
  if (k_ < 1) throw InputError("uniformity must be positive");
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (!index_.emplace(vertices_[v], v).second) {
      throw InputError("duplicate vertex name '" + vertices_[v] + "'");
    }
  }
}

DirectedHypergraph DirectedHypergraph::with_vertex_count(int k, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return DirectedHypergraph(k, std::move(names));
}

std::optional<VertexId> DirectedHypergraph::find_vertex(
    std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId DirectedHypergraph::vertex_id(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

EdgeId DirectedHypergraph::add_edge(std::vector<VertexId> edge) {
  if (edge.size() != static_cast<std::size_t>(k_)) {
    throw InputError("edge has " + std::to_string(edge.size()) +
                     " coordinates, expected " + std::to_string(k_));
  }
  for (std::size_t a = 0; a < edge.size(); ++a) {
    if (edge[a] >= vertices_.size()) {
      throw InputError("edge coordinate " + std::to_string(edge[a]) +
                       " is not a vertex");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (edge[a] == edge[b]) {
        throw InputError("edge repeats vertex '" + vertices_[edge[a]] + "'");
      }
    }
  }
  edges_.push_back(std::move(edge));
  return edges_.size() - 1;
}

std::optional<Position> DirectedHypergraph::position_of(EdgeId e,
                                                        VertexId v) const {
  const auto& coords = edges_.at(e);
  for (std::size_t a = 0; a < coords.size(); ++a) {
    if (coords[a] == v) return static_cast<Position>(a + 1);
  }
  return std::nullopt;
}

std::vector<std::vector<EdgeId>> DirectedHypergraph::incidence() const {
  std::vector<std::vector<EdgeId>> inc(vertices_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    for (VertexId v : edges_[e]) inc[v].push_back(e);
  }
  return inc;
}

std::optional<std::string> check_cycle(const DirectedHypergraph& h,
                                       const HyperCycle& c) {
  if (c.vertices.size() != c.edges.size() + 1) {
    return "cycle needs exactly one more vertex than edges";
  }
  if (c.vertices.front() != c.vertices.back()) {
    return "cycle does not return to its first vertex";
  }
  for (VertexId v : c.vertices) {
    if (v >= h.num_vertices()) return "cycle visits an unknown vertex";
  }
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    if (c.edges[i] >= h.num_edges()) return "cycle uses an unknown edge";
    if (!h.position_of(c.edges[i], c.vertices[i]) ||
        !h.position_of(c.edges[i], c.vertices[i + 1])) {
      return "step " + std::to_string(i + 1) +
             " leaves the coordinates of its edge";
    }
  }
  return std::nullopt;
}

std::pair<Position, Position> trace(const DirectedHypergraph& h,
                                    const HyperCycle& c, std::size_t step) {
  if (step < 1 || step > c.length()) {
    throw InputError("trace step " + std::to_string(step) + " outside 1.." +
                     std::to_string(c.length()));
  }
  EdgeId e = c.edges.at(step - 1);
  if (e >= h.num_edges()) throw InputError("cycle uses an unknown edge");
  auto a = h.position_of(e, c.vertices.at(step - 1));
  auto b = h.position_of(e, c.vertices.at(step));
  if (!a || !b) {
    throw InputError("step " + std::to_string(step) +
                     " leaves the coordinates of its edge");
  }
  return {*a, *b};
}

bool is_proper_coloring(const DirectedHypergraph& h, const Coloring& coloring) {
  if (coloring.size() != h.num_vertices()) return false;
  if (std::any_of(coloring.begin(), coloring.end(),
                  [](int c) { return c < 0; })) {
    return false;
  }
  for (const auto& e : h.edges()) {
    bool mono = std::all_of(e.begin(), e.end(), [&](VertexId v) {
      return coloring[v] == coloring[e.front()];
    });
    if (mono) return false;
  }
  return true;
}

int color_count(const Coloring& coloring) {
  std::set<int> used(coloring.begin(), coloring.end());
  return static_cast<int>(used.size());
}

namespace {

// Colors forbidden for v by edges whose other coordinates are colored alike.
std::vector<bool> blocked_colors(const DirectedHypergraph& h,
                                 const std::vector<std::vector<EdgeId>>& inc,
                                 const Coloring& coloring, VertexId v,
                                 int palette) {
  std::vector<bool> blocked(palette + 1, false);
  for (EdgeId e : inc[v]) {
    int common = -1;
    bool alike = true;
    for (VertexId u : h.edge(e)) {
      if (u == v) continue;
      if (coloring[u] < 0 || (common >= 0 && coloring[u] != common)) {
        alike = false;
        break;
      }
      common = coloring[u];
    }
    if (alike && common >= 0 && common <= palette) blocked[common] = true;
  }
  return blocked;
}

// Backtracking search for a proper coloring with a fixed number of colors.
// Vertices are chosen by saturation (DSATUR), colors are tried in increasing
// order and never beyond one past the largest color in use.
class FixedPaletteSearch {
 public:
  FixedPaletteSearch(const DirectedHypergraph& h,
                     const std::vector<bool>& active, int colors,
                     SearchBudget& budget)
      : h_(h),
        k_(h.k()),
        colors_(colors),
        budget_(budget),
        color_(h.num_vertices(), -1),
        forbid_(h.num_vertices(), std::vector<int>(colors, 0)),
        saturation_(h.num_vertices(), 0),
        degree_(h.num_vertices(), 0),
        inc_(h.num_vertices()),
        colored_in_edge_(h.num_edges(), 0),
        count_in_edge_(h.num_edges(), std::vector<int>(colors, 0)) {
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      const auto& coords = h.edge(e);
      if (!std::all_of(coords.begin(), coords.end(),
                       [&](VertexId v) { return active[v]; })) {
        continue;
      }
      for (VertexId v : coords) {
        inc_[v].push_back(e);
        ++degree_[v];
      }
    }
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
      if (active[v]) vertices_.push_back(v);
    }
  }

  // Throws BudgetExceeded when the budget runs out.
  std::optional<Coloring> run() {
    if (search(0, -1)) return color_;
    return std::nullopt;
  }

 private:
  VertexId pick() const {
    VertexId best = vertices_.front();
    int best_sat = -1;
    int best_deg = -1;
    for (VertexId v : vertices_) {
      if (color_[v] >= 0) continue;
      if (saturation_[v] > best_sat ||
          (saturation_[v] == best_sat && degree_[v] > best_deg)) {
        best = v;
        best_sat = saturation_[v];
        best_deg = degree_[v];
      }
    }
    return best;
  }

  VertexId uncolored_coordinate(EdgeId e) const {
    for (VertexId u : h_.edge(e)) {
      if (color_[u] < 0) return u;
    }
    return h_.edge(e).front();
  }

  void assign(VertexId v, int c) {
    color_[v] = c;
    for (EdgeId e : inc_[v]) {
      ++colored_in_edge_[e];
      ++count_in_edge_[e][c];
      if (colored_in_edge_[e] == k_ - 1 && count_in_edge_[e][c] == k_ - 1) {
        VertexId u = uncolored_coordinate(e);
        if (forbid_[u][c]++ == 0) ++saturation_[u];
      }
    }
  }

  void unassign(VertexId v, int c) {
    for (auto it = inc_[v].rbegin(); it != inc_[v].rend(); ++it) {
      EdgeId e = *it;
      if (colored_in_edge_[e] == k_ - 1 && count_in_edge_[e][c] == k_ - 1) {
        VertexId u = uncolored_coordinate(e);
        if (--forbid_[u][c] == 0) --saturation_[u];
      }
      --colored_in_edge_[e];
      --count_in_edge_[e][c];
    }
    color_[v] = -1;
  }

  bool search(std::size_t done, int max_used) {
    if (done == vertices_.size()) return true;
    if (!budget_.tick()) throw BudgetExceeded("coloring search budget exhausted");
    VertexId v = pick();
    if (saturation_[v] >= colors_) return false;
    int top = std::min(max_used + 1, colors_ - 1);
    for (int c = 0; c <= top; ++c) {
      if (forbid_[v][c] != 0) continue;
      assign(v, c);
      if (search(done + 1, std::max(max_used, c))) return true;
      unassign(v, c);
    }
    return false;
  }

  const DirectedHypergraph& h_;
  int k_;
  int colors_;
  SearchBudget& budget_;
  Coloring color_;
  std::vector<std::vector<int>> forbid_;
  std::vector<int> saturation_;
  std::vector<int> degree_;
  std::vector<std::vector<EdgeId>> inc_;
  std::vector<int> colored_in_edge_;
  std::vector<std::vector<int>> count_in_edge_;
  std::vector<VertexId> vertices_;
};

// Repeatedly removes vertices lying on fewer than `colors` remaining edges.
// Such a vertex can always be colored after the rest, since each edge rules
// out at most one color for it. Returns the removal order.
std::vector<VertexId> peel(const DirectedHypergraph& h, int colors,
                           std::vector<bool>& active) {
  const auto inc = h.incidence();
  std::vector<bool> edge_alive(h.num_edges(), true);
  std::vector<int> degree(h.num_vertices(), 0);
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    degree[v] = static_cast<int>(inc[v].size());
  }
  std::vector<VertexId> removed;
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (degree[v] < colors) queue.push_back(v);
  }
  while (!queue.empty()) {
    VertexId v = queue.back();
    queue.pop_back();
    if (!active[v]) continue;
    active[v] = false;
    removed.push_back(v);
    for (EdgeId e : inc[v]) {
      if (!edge_alive[e]) continue;
      edge_alive[e] = false;
      for (VertexId u : h.edge(e)) {
        if (u != v && active[u] && --degree[u] == colors - 1) {
          queue.push_back(u);
        }
      }
    }
  }
  return removed;
}

std::optional<Coloring> color_with(const DirectedHypergraph& h, int colors,
                                   SearchBudget& budget) {
  std::vector<bool> active(h.num_vertices(), true);
  auto removed = peel(h, colors, active);
  Coloring coloring(h.num_vertices(), -1);
  if (std::any_of(active.begin(), active.end(), [](bool a) { return a; })) {
    FixedPaletteSearch search(h, active, colors, budget);
    auto core = search.run();
    if (!core) return std::nullopt;
    coloring = *core;
  }
  const auto inc = h.incidence();
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    auto blocked = blocked_colors(h, inc, coloring, *it, colors);
    int c = 0;
    while (blocked[c]) ++c;
    coloring[*it] = c;
  }
  return coloring;
}

int clique_lower_bound(const DirectedHypergraph& h) {
  if (h.num_edges() == 0) return h.num_vertices() == 0 ? 0 : 1;
  if (h.k() != 2) return 2;
  std::vector<std::set<VertexId>> adj(h.num_vertices());
  for (const auto& e : h.edges()) {
    adj[e[0]].insert(e[1]);
    adj[e[1]].insert(e[0]);
  }
  std::size_t best = 2;
  for (VertexId start = 0; start < h.num_vertices(); ++start) {
    std::vector<VertexId> clique{start};
    std::vector<VertexId> candidates(adj[start].begin(), adj[start].end());
    std::sort(candidates.begin(), candidates.end(), [&](VertexId a, VertexId b) {
      return adj[a].size() > adj[b].size();
    });
    for (VertexId c : candidates) {
      if (std::all_of(clique.begin(), clique.end(),
                      [&](VertexId m) { return adj[c].contains(m); })) {
        clique.push_back(c);
      }
    }
    best = std::max(best, clique.size());
  }
  return static_cast<int>(best);
}

}  // namespace

Coloring greedy_coloring(const DirectedHypergraph& h,
                         const std::vector<VertexId>& order) {
  std::vector<VertexId> sequence = order;
  if (sequence.empty()) {
    sequence.resize(h.num_vertices());
    std::iota(sequence.begin(), sequence.end(), VertexId{0});
  }
  if (sequence.size() != h.num_vertices()) {
    throw InputError("greedy order must list every vertex once");
  }
  const auto inc = h.incidence();
  Coloring coloring(h.num_vertices(), -1);
  const int palette = static_cast<int>(h.num_vertices()) + 1;
  for (VertexId v : sequence) {
    if (v >= h.num_vertices() || coloring[v] >= 0) {
      throw InputError("greedy order must list every vertex once");
    }
    auto blocked = blocked_colors(h, inc, coloring, v, palette);
    int c = 0;
    while (blocked[c]) ++c;
    coloring[v] = c;
  }
  return coloring;
}

int chromatic_upper_greedy(const DirectedHypergraph& h,
                           const std::vector<VertexId>& order) {
  return color_count(greedy_coloring(h, order));
}

ChromaticResult chromatic_number_exact(const DirectedHypergraph& h,
                                       SearchBudget budget) {
  ChromaticResult result;
  if (h.num_vertices() == 0) return result;
  Coloring best = greedy_coloring(h);
  int upper = color_count(best);
  int lower = clique_lower_bound(h);
  for (int colors = lower; colors < upper; ++colors) {
    std::optional<Coloring> found;
    try {
      found = color_with(h, colors, budget);
    } catch (const BudgetExceeded&) {
      throw BudgetExceeded("chromatic number search budget exhausted", colors,
                           upper);
    }
    if (found) {
      best = *found;
      upper = colors;
      break;
    }
  }
  result.chromatic_number = upper;
  result.coloring = std::move(best);
  result.nodes = budget.used();
  return result;
}

namespace {

// Encoding (v_0, e_1, v_1, ..., e_n) used to compare rotations.
std::vector<std::size_t> encode(const HyperCycle& c) {
  std::vector<std::size_t> code;
  code.reserve(2 * c.length() + 1);
  for (std::size_t i = 0; i < c.length(); ++i) {
    code.push_back(c.vertices[i]);
    code.push_back(c.edges[i]);
  }
  if (c.length() == 0) code.push_back(c.vertices.front());
  return code;
}

HyperCycle rotate(const HyperCycle& c, std::size_t shift) {
  const std::size_t n = c.length();
  HyperCycle out;
  out.vertices.reserve(n + 1);
  out.edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.vertices.push_back(c.vertices[(i + shift) % n]);
    out.edges.push_back(c.edges[(i + shift) % n]);
  }
  out.vertices.push_back(out.vertices.front());
  return out;
}

bool is_least_rotation(const HyperCycle& c) {
  const std::size_t n = c.length();
  if (n <= 1) return true;
  const auto code = encode(c);
  for (std::size_t shift = 1; shift < n; ++shift) {
    for (std::size_t i = 0; i < code.size(); ++i) {
      std::size_t a = code[i];
      std::size_t b = code[(i + 2 * shift) % code.size()];
      if (b < a) return false;
      if (b > a) break;
    }
  }
  return true;
}

}  // namespace

HyperCycle canonical_rotation(const HyperCycle& c) {
  HyperCycle best = c;
  for (std::size_t shift = 1; shift < c.length(); ++shift) {
    HyperCycle r = rotate(c, shift);
    if (encode(r) < encode(best)) best = std::move(r);
  }
  return best;
}

void enumerate_cycles(const DirectedHypergraph& h, std::size_t max_len,
                      const std::function<bool(const HyperCycle&)>& visit) {
  const auto inc = h.incidence();
  HyperCycle walk;
  bool stopped = false;

  // The least rotation starts at the smallest vertex on the cycle, so only
  // walks that never drop below their start vertex are extended.
  std::function<void(VertexId)> extend = [&](VertexId start) {
    if (stopped) return;
    VertexId here = walk.vertices.back();
    if (!walk.edges.empty() && here == start && is_least_rotation(walk)) {
      if (!visit(walk)) {
        stopped = true;
        return;
      }
    }
    if (walk.edges.size() == max_len) return;
    for (EdgeId e : inc[here]) {
      for (VertexId next : h.edge(e)) {
        if (next < start) continue;
        walk.edges.push_back(e);
        walk.vertices.push_back(next);
        extend(start);
        walk.edges.pop_back();
        walk.vertices.pop_back();
        if (stopped) return;
      }
    }
  };

  for (VertexId v = 0; v < h.num_vertices() && !stopped; ++v) {
    HyperCycle trivial{{v}, {}};
    if (!visit(trivial)) return;
    walk = trivial;
    extend(v);
  }
}

DirectedHypergraph path_digraph(std::size_t n) {
  auto h = DirectedHypergraph::with_vertex_count(2, n + 1);
  for (VertexId i = 0; i < n; ++i) h.add_edge({i, i + 1});
  return h;
}

DirectedHypergraph digraph_from_arcs(
    std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& arcs) {
  auto h = DirectedHypergraph::with_vertex_count(2, n);
  for (const auto& [a, b] : arcs) h.add_edge({a, b});
  return h;
}

}  // namespace badcycle

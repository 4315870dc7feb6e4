#include "badcycle/relations.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>

namespace badcycle {

int Relation::size() const { return std::popcount(bits); }

std::vector<std::pair<int, int>> Relation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (has(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

Relation make_relation(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 1 || n > 8) throw InputError("relations need 1 <= n <= 8");
  Relation r{n, 0};
  for (const auto& [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw InputError("relation pair out of range");
    r.set(a, b);
  }
  return r;
}

Relation identity_relation(int n) {
  Relation r = make_relation(n, {});
  for (int a = 0; a < n; ++a) r.set(a, a);
  return r;
}

Relation full_relation(int n) {
  Relation r = make_relation(n, {});
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) r.set(a, b);
  }
  return r;
}

std::string to_string(const Relation& r) {
  std::string out = "{";
  bool first = true;
  for (const auto& [a, b] : r.pairs()) {
    if (!first) out += ',';
    first = false;
    out += "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
  }
  return out + "}";
}

bool is_subdirect(const Relation& r) {
  for (int a = 0; a < r.n; ++a) {
    bool out = false, in = false;
    for (int b = 0; b < r.n; ++b) {
      out = out || r.has(a, b);
      in = in || r.has(b, a);
    }
    if (!out || !in) return false;
  }
  return true;
}

bool contains(const Relation& s, const Relation& r) {
  return s.n == r.n && (r.bits & ~s.bits) == 0;
}

Relation compose(const Relation& r, const Relation& s) {
  if (r.n != s.n) throw InputError("cannot compose relations on different sets");
  const int n = r.n;
  const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
  Relation out{n, 0};
  for (int a = 0; a < n; ++a) {
    std::uint64_t row = 0;
    for (int b = 0; b < n; ++b) {
      if (r.has(a, b)) row |= (s.bits >> (b * n)) & row_mask;
    }
    out.bits |= row << (a * n);
  }
  return out;
}

Relation reverse(const Relation& r) {
  Relation out{r.n, 0};
  for (const auto& [a, b] : r.pairs()) out.set(b, a);
  return out;
}

Relation power(const Relation& r, int e) {
  Relation out = identity_relation(r.n);
  for (int i = 0; i < e; ++i) out = compose(out, r);
  return out;
}

std::vector<Relation> semigroup_closure(const std::vector<Relation>& generators) {
  std::set<Relation> seen;
  std::vector<Relation> list;
  auto add = [&](const Relation& r) {
    if (seen.insert(r).second) list.push_back(r);
  };
  for (const auto& g : generators) add(g);
  for (std::size_t x = 0; x < list.size(); ++x) {
    add(reverse(list[x]));
    for (std::size_t y = 0; y <= x; ++y) {
      add(compose(list[x], list[y]));
      add(compose(list[y], list[x]));
    }
  }
  return {seen.begin(), seen.end()};
}

PqVerdict is_pq_compatible(const std::vector<Relation>& set) {
  PqVerdict verdict;
  std::set<Relation> members(set.begin(), set.end());
  for (const auto& p : set) {
    if (!members.contains(reverse(p))) {
      verdict.violations.push_back("not closed under reversal: " + to_string(p));
    }
    for (const auto& q : set) {
      if (!members.contains(compose(p, q))) {
        verdict.violations.push_back("not closed under composition: " + to_string(p) +
                                     " o " + to_string(q));
      }
    }
  }
  for (std::size_t p = 0; p < set.size(); ++p) {
    for (std::size_t q = 0; q < set.size(); ++q) {
      const Relation step = compose(set[q], set[p]);
      const Relation diag = identity_relation(set[p].n);
      Relation x = set[p];
      std::set<Relation> visited;
      int j = 0;
      bool found = false;
      while (visited.insert(x).second) {
        if (contains(x, diag)) {
          found = true;
          break;
        }
        x = compose(x, step);
        ++j;
      }
      if (found) {
        verdict.witnesses.push_back({p, q, j});
      } else {
        verdict.violations.push_back("no j puts the identity inside P o (Q o P)^j for P = " +
                                     to_string(set[p]) + ", Q = " + to_string(set[q]));
      }
    }
  }
  verdict.compatible = verdict.violations.empty();
  return verdict;
}

Relation corollary_relation() { return make_relation(3, {{0, 1}, {0, 2}, {1, 2}, {2, 0}}); }

std::vector<Relation> corollary_s_set() {
  // Word automaton: empty word, alternating words (first and last letter
  // recorded, letter 0 = R, 1 = R^-) and words containing a doubled letter.
  struct Word {
    int kind;  // 0 empty, 1 alternating, 2 doubled
    int first;
    int last;
    auto operator<=>(const Word&) const = default;
  };
  auto extend = [](Word w, int letter) {
    if (w.kind == 0) return Word{1, letter, letter};
    if (w.kind == 2 || w.last == letter) return Word{2, 0, 0};
    return Word{1, w.first, letter};
  };
  auto accepting = [](Word w) { return w.kind != 1 || w.first != w.last; };
  const Relation r = corollary_relation();
  const Relation letters[2] = {r, reverse(r)};
  std::set<std::pair<Relation, Word>> seen;
  std::deque<std::pair<Relation, Word>> queue;
  auto push = [&](const Relation& rel, Word w) {
    if (seen.insert({rel, w}).second) queue.emplace_back(rel, w);
  };
  push(identity_relation(3), Word{0, 0, 0});
  std::set<Relation> out;
  while (!queue.empty()) {
    auto [rel, w] = queue.front();
    queue.pop_front();
    if (accepting(w)) out.insert(rel);
    for (int letter = 0; letter < 2; ++letter) {
      push(compose(rel, letters[letter]), extend(w, letter));
    }
  }
  return {out.begin(), out.end()};
}

RelationAssignment binary_projections(const Relation& r) {
  return {{{1, 2}, r}, {{2, 1}, reverse(r)}};
}

RelationMachine build_relation_machine(const std::vector<Relation>& s_set, int k,
                                       const RelationAssignment& pi) {
  if (k < 2) throw InputError("relation machine needs k >= 2");
  if (pi.empty()) throw InputError("pi is empty");
  const int n = pi.begin()->second.n;
  for (Position i = 1; i <= k; ++i) {
    for (Position j = 1; j <= k; ++j) {
      if (i == j) continue;
      auto it = pi.find({i, j});
      if (it == pi.end()) {
        throw InputError("pi(" + std::to_string(i) + "," + std::to_string(j) + ") missing");
      }
      if (it->second.n != n) throw InputError("pi mixes relations on different sets");
    }
  }
  const Relation diag = identity_relation(n);
  std::set<Relation> in_s(s_set.begin(), s_set.end());
  if (!in_s.contains(diag)) {
    throw InputError("identity is not in the S-set, so (identity, identity) would be bad");
  }
  std::vector<Relation> states{diag};
  std::map<Relation, StateId> index{{diag, 0}};
  std::vector<std::tuple<StateId, Position, Position, StateId>> arcs;
  for (std::size_t x = 0; x < states.size(); ++x) {
    for (const auto& [ij, rel] : pi) {
      if (ij.first == ij.second) continue;
      Relation next = compose(states[x], rel);
      auto [it, fresh] = index.emplace(next, states.size());
      if (fresh) states.push_back(next);
      arcs.emplace_back(x, ij.first, ij.second, it->second);
    }
  }
  std::vector<std::string> names;
  for (const auto& s : states) names.push_back(to_string(s));
  RelationMachine out{Machine(k, names), states};
  for (const auto& [from, i, j, to] : arcs) out.machine.add_transition(from, i, j, to);
  for (StateId s = 0; s < states.size(); ++s) {
    if (!in_s.contains(states[s])) out.machine.add_bad(0, s);
  }
  out.machine.declare_deterministic(true);
  return out;
}

RelationMachine corollary_machine() {
  return build_relation_machine(corollary_s_set(), 2, binary_projections(corollary_relation()));
}

std::optional<HyperCycle> detect_odd_alternating_cycle(const DirectedHypergraph& g) {
  if (g.k() != 2) throw InputError("expected a digraph (k = 2)");
  const std::size_t n = g.num_vertices();
  // (vertex, edge) steps out of each vertex, forward and backward.
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> fwd(n), bwd(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edge(e);
    fwd[edge[0]].emplace_back(edge[1], e);
    bwd[edge[1]].emplace_back(edge[0], e);
  }
  std::optional<HyperCycle> best;
  for (VertexId start = 0; start < n; ++start) {
    for (int first = 0; first < 2; ++first) {
      // Node 2v+p: at v after a number of steps with parity p. The next step
      // is forward iff (p == 0) == (first == 0).
      const std::size_t none = static_cast<std::size_t>(-1);
      std::vector<std::size_t> parent(2 * n, none);
      std::vector<EdgeId> via(2 * n, 0);
      std::vector<bool> seen(2 * n, false);
      std::deque<std::size_t> queue{2 * start};
      seen[2 * start] = true;
      const std::size_t target = 2 * start + 1;
      while (!queue.empty() && !seen[target]) {
        std::size_t node = queue.front();
        queue.pop_front();
        VertexId v = node / 2;
        std::size_t p = node % 2;
        bool forward = (p == 0) == (first == 0);
        for (const auto& [w, e] : forward ? fwd[v] : bwd[v]) {
          std::size_t next = 2 * w + (1 - p);
          if (seen[next]) continue;
          seen[next] = true;
          parent[next] = node;
          via[next] = e;
          queue.push_back(next);
        }
      }
      if (!seen[target]) continue;
      HyperCycle c;
      for (std::size_t node = target; node != 2 * start; node = parent[node]) {
        c.vertices.push_back(node / 2);
        c.edges.push_back(via[node]);
      }
      c.vertices.push_back(start);
      std::reverse(c.vertices.begin(), c.vertices.end());
      std::reverse(c.edges.begin(), c.edges.end());
      if (!best || c.length() < best->length()) best = c;
    }
  }
  return best;
}

bool is_smooth(const Relation& r) { return is_subdirect(r); }

bool is_weakly_connected(const Relation& r) {
  std::vector<bool> seen(static_cast<std::size_t>(r.n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int b = 0; b < r.n; ++b) {
      if ((r.has(a, b) || r.has(b, a)) && !seen[static_cast<std::size_t>(b)]) {
        seen[static_cast<std::size_t>(b)] = true;
        ++count;
        stack.push_back(b);
      }
    }
  }
  return count == r.n;
}

int algebraic_length(const Relation& r) {
  const auto n = static_cast<std::size_t>(r.n);
  std::vector<long> potential(n, 0);
  std::vector<bool> seen(n, false);
  long g = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::vector<int> stack{static_cast<int>(root)};
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < r.n; ++b) {
        auto ub = static_cast<std::size_t>(b);
        if (r.has(a, b) && !seen[ub]) {
          seen[ub] = true;
          potential[ub] = potential[static_cast<std::size_t>(a)] + 1;
          stack.push_back(b);
        } else if (r.has(b, a) && !seen[ub]) {
          seen[ub] = true;
          potential[ub] = potential[static_cast<std::size_t>(a)] - 1;
          stack.push_back(b);
        }
      }
    }
  }
  for (const auto& [a, b] : r.pairs()) {
    long d = potential[static_cast<std::size_t>(a)] + 1 - potential[static_cast<std::size_t>(b)];
    g = std::gcd(g, d < 0 ? -d : d);
  }
  return static_cast<int>(g);
}

LoopLemmaResult loop_lemma_exponent(const Relation& r, int k_max) {
  if (!is_smooth(r)) {
    throw PreconditionError("smooth", "relation is not smooth: some vertex lacks an "
                                      "incoming or outgoing edge");
  }
  if (!is_weakly_connected(r)) {
    throw PreconditionError("weakly connected", "relation is not weakly connected");
  }
  LoopLemmaResult out;
  out.algebraic_length = algebraic_length(r);
  if (out.algebraic_length != 1) {
    throw PreconditionError("algebraic length", "relation has algebraic length " +
                                                    std::to_string(out.algebraic_length) +
                                                    ", not 1");
  }
  if (k_max < 1) throw InputError("k_max must be at least 1");

  std::map<Relation, int> first_seen;
  Relation x = r;
  for (int l = 1;; ++l) {
    auto [it, fresh] = first_seen.emplace(x, l);
    if (!fresh) {
      out.preperiod = it->second;
      out.period = l - it->second;
      break;
    }
    x = compose(x, r);
  }

  const int top = std::max(k_max, 1);
  std::vector<Relation> pos(static_cast<std::size_t>(top + 1)), neg(pos.size());
  const Relation rev = reverse(r);
  pos[0] = neg[0] = identity_relation(r.n);
  for (int l = 1; l <= top; ++l) {
    pos[static_cast<std::size_t>(l)] = compose(pos[static_cast<std::size_t>(l - 1)], r);
    neg[static_cast<std::size_t>(l)] = compose(neg[static_cast<std::size_t>(l - 1)], rev);
  }
  const Relation all = full_relation(r.n);
  for (int k = 1; k <= k_max && !out.k; ++k) {
    bool holds = true;
    for (int l = k; l <= k_max && holds; ++l) {
      for (int m = k; m <= k_max && holds; ++m) {
        Relation base = compose(pos[static_cast<std::size_t>(l)], neg[static_cast<std::size_t>(m)]);
        holds = power(base, k) == all;
      }
    }
    if (holds) out.k = k;
  }
  if (out.k) {
    out.window_conclusive = k_max >= std::max(*out.k, out.preperiod) + out.period - 1;
  }
  return out;
}

}  // namespace badcycle

#include "badcycle/generators.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace badcycle {

std::string subset_name(const std::vector<int>& elements) {
  std::string out = "{";
  for (std::size_t n = 0; n < elements.size(); ++n) {
    if (n) out += ',';
    out += std::to_string(elements[n]);
  }
  return out + "}";
}

namespace {

std::vector<int> members(std::uint64_t mask) {
  std::vector<int> out;
  for (int b = 0; b < 64; ++b) {
    if ((mask >> b) & 1U) out.push_back(b + 1);
  }
  return out;
}

std::string pair_name(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Visits the size-r subsets of {0..n-1} as sorted index vectors in
// lexicographic order.
template <typename Visit>
void for_each_combination(int n, int r, Visit&& visit) {
  if (r > n || r < 0) return;
  std::vector<int> c(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    visit(c);
    int i = r - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

Machine gen_hasse_machine() {
  Machine m(2, {"s", "t", "u", "v"});
  m.add_transition(0, 1, 2, 1);
  m.add_transition(1, 1, 2, 1);
  m.add_transition(1, 2, 1, 2);
  m.add_transition(2, 1, 2, 3);
  m.add_bad(0, 1);
  m.add_bad(0, 3);
  m.declare_deterministic(true);
  return m;
}

Machine gen_counter_machine(int n) {
  if (n < 0) throw InputError("counter machine needs n >= 0");
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back(std::to_string(i));
  Machine m(2, names);
  for (int i = 0; i <= n; ++i) {
    auto s = static_cast<StateId>(i);
    m.add_transition(s, 1, 2, static_cast<StateId>(std::min(i + 1, n)));
    if (i >= 2) m.add_transition(s, 2, 1, static_cast<StateId>(i - 2));
    m.add_bad(s, s);
  }
  m.declare_deterministic(true);
  return m;
}

CompatibleOrder counter_machine_order(int n) {
  if (n < 0) throw InputError("counter machine needs n >= 0");
  // Twice the embedding -i for (i,1) and -j+3/2 for (j,2).
  CompatibleOrder order;
  std::vector<std::pair<int, StatePosition>> keyed;
  for (int i = 0; i <= n; ++i) {
    keyed.push_back({-2 * i, {static_cast<StateId>(i), 1}});
    keyed.push_back({-2 * i + 3, {static_cast<StateId>(i), 2}});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [key, sp] : keyed) order.push_back(sp);
  return order;
}

Machine gen_example3_machine() {
  Machine m(2, {"0", "1"});
  m.add_transition(0, 1, 2, 1);
  m.add_transition(0, 2, 1, 1);
  m.add_transition(1, 1, 2, 0);
  m.add_bad(0, 1);
  return m;
}

OrderSystem example3_order_system() {
  const int k = 2;
  OrderSystem os;
  os.carrier_size = 4;
  os.classes = {{carrier_index(0, 1, k)},
                {carrier_index(0, 2, k), carrier_index(1, 1, k)},
                {carrier_index(1, 2, k)}};
  std::sort(os.classes[1].begin(), os.classes[1].end());
  os.linear = {0, 1, 2};
  os.partial = {{0, 2}};
  return os;
}

namespace {

// a_i is state i+k, b_j is state 2k+1+j.
StateId a_state(int k, int i) { return static_cast<StateId>(i + k); }
StateId b_state(int k, int j) { return static_cast<StateId>(2 * k + 1 + j); }

}  // namespace

Machine gen_unbalanced_machine(int k) {
  if (k < 1) throw InputError("unbalanced machine needs k >= 1");
  std::vector<std::string> names;
  for (int i = -k; i <= k; ++i) names.push_back("a" + std::to_string(i));
  for (int j = 0; j <= k; ++j) names.push_back("b" + std::to_string(j));
  Machine m(2, names);
  for (int i = -k; i < k; ++i) m.add_transition(a_state(k, i), 1, 2, a_state(k, i + 1));
  for (int i = -k + 1; i <= k; ++i) m.add_transition(a_state(k, i), 2, 1, a_state(k, i - 1));
  m.add_transition(a_state(k, k), 1, 2, b_state(k, 0));
  for (int j = 0; j < k; ++j) m.add_transition(b_state(k, j), 2, 1, b_state(k, j + 1));
  for (int j = 1; j <= k; ++j) m.add_transition(b_state(k, j), 1, 2, b_state(k, j - 1));
  m.add_transition(b_state(k, 0), 1, 2, b_state(k, 0));
  const StateId a0 = a_state(k, 0);
  for (StateId t = 0; t < m.num_states(); ++t) {
    if (t != a0) m.add_bad(a0, t);
  }
  m.declare_deterministic(true);
  return m;
}

OrderSystem unbalanced_order_system(int k) {
  if (k < 1) throw InputError("unbalanced machine needs k >= 1");
  const int copies = 2;
  auto at = [&](StateId s, Position p) { return carrier_index(s, p, copies); };
  OrderSystem os;
  os.carrier_size = static_cast<std::size_t>(3 * k + 2) * copies;
  // Per class: whether it holds a states, and one (index, position) member.
  struct Tag {
    bool is_a;
    int index;
    Position position;
  };
  std::vector<Tag> tags;
  os.classes.push_back({at(a_state(k, -k), 2)});
  tags.push_back({true, -k, 2});
  for (int i = -k; i < k; ++i) {
    os.classes.push_back({at(a_state(k, i), 1), at(a_state(k, i + 1), 2)});
    tags.push_back({true, i, 1});
  }
  os.classes.push_back({at(a_state(k, k), 1)});
  tags.push_back({true, k, 1});
  os.classes.push_back({at(b_state(k, 0), 1)});
  tags.push_back({false, 0, 1});
  for (int j = 0; j < k; ++j) {
    os.classes.push_back({at(b_state(k, j), 2), at(b_state(k, j + 1), 1)});
    tags.push_back({false, j, 2});
  }
  os.classes.push_back({at(b_state(k, k), 2)});
  tags.push_back({false, k, 2});
  for (auto& cls : os.classes) std::sort(cls.begin(), cls.end());

  const std::size_t count = os.classes.size();
  for (std::size_t c = 0; c < count; ++c) os.linear.push_back(c);
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = x + 1; y < count; ++y) {
      const Tag& p = tags[x];
      const Tag& q = tags[y];
      if (p.is_a && q.is_a) continue;
      if (!p.is_a && !q.is_a) {
        os.partial.emplace_back(x, y);
        continue;
      }
      if (p.index + q.index > k + p.position - q.position) os.partial.emplace_back(x, y);
    }
  }
  return os;
}

DirectedHypergraph gen_explicit_hasse_digraph(int n) {
  if (n < 1 || n > 5) throw InputError("explicit Hasse digraph supports 1 <= n <= 5");
  const int top = 1 << n;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::string> names;
  for (int a = 1; a <= top; ++a) {
    for (int b = a + 1; b <= top; ++b) {
      pairs.emplace_back(a, b);
      names.push_back(subset_name({a, b}));
    }
  }
  auto below = [&](std::size_t p, std::size_t q) {
    return p != q && pairs[p].second <= pairs[q].first;
  };
  DirectedHypergraph h(2, names);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      if (!below(p, q)) continue;
      bool cover = true;
      for (std::size_t r = 0; r < pairs.size() && cover; ++r) {
        if (below(p, r) && below(r, q)) cover = false;
      }
      if (cover) h.add_edge({p, q});
    }
  }
  return h;
}

DirectedHypergraph gen_cycling_construction(const Machine& m,
                                            const CompatibleOrder& order,
                                            int ground) {
  auto verdict = verify_compatible_order(m, order);
  if (!verdict.ok) {
    throw InputError("order is not compatible: " + verdict.violations.front());
  }
  const int k = m.k();
  const int states = static_cast<int>(m.num_states());
  if (ground < k * states) throw InputError("ground set smaller than k*|S|");
  if (ground > 30) throw InputError("ground set larger than 30");

  std::vector<std::string> names;
  std::unordered_map<std::uint32_t, VertexId> index;
  for_each_combination(ground, states, [&](const std::vector<int>& c) {
    std::uint32_t mask = 0;
    std::vector<int> elements;
    for (int x : c) {
      mask |= std::uint32_t{1} << x;
      elements.push_back(x + 1);
    }
    index.emplace(mask, names.size());
    names.push_back(subset_name(elements));
  });
  DirectedHypergraph h(k, names);

  std::vector<std::size_t> rank(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    rank[carrier_index(order[r].state, order[r].position, k)] = r;
  }
  for_each_combination(ground, k * states, [&](const std::vector<int>& c) {
    std::vector<VertexId> edge;
    for (Position i = 1; i <= k; ++i) {
      std::uint32_t mask = 0;
      for (StateId s = 0; s < m.num_states(); ++s) {
        mask |= std::uint32_t{1} << c[rank[carrier_index(s, i, k)]];
      }
      edge.push_back(index.at(mask));
    }
    h.add_edge(std::move(edge));
  });
  return h;
}

DirectedHypergraph gen_incomparable_pairs_digraph(int m) {
  if (m < 2 || m > 4) throw InputError("incomparable pairs digraph supports 2 <= m <= 4");
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  auto subset = [](std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; };
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<std::string> names;
  for (std::uint32_t a = 0; a <= full; ++a) {
    for (std::uint32_t b = 0; b <= full; ++b) {
      if (subset(a, b) || subset(b, a)) continue;
      pairs.emplace_back(a, b);
      names.push_back("(" + subset_name(members(a)) + "," + subset_name(members(b)) + ")");
    }
  }
  DirectedHypergraph h(2, names);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      auto [a, b] = pairs[p];
      auto [b2, c] = pairs[q];
      if (b == b2 && subset(a, c) && a != c) h.add_edge({p, q});
    }
  }
  return h;
}

DirectedHypergraph gen_shift_digraph(int m) {
  if (m < 2 || m > 64) throw InputError("shift digraph supports 2 <= m <= 64");
  std::vector<std::string> names;
  std::vector<std::vector<VertexId>> id(static_cast<std::size_t>(m + 1),
                                        std::vector<VertexId>(static_cast<std::size_t>(m + 1)));
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      id[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = names.size();
      names.push_back(pair_name(a, b));
    }
  }
  DirectedHypergraph h(2, names);
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      for (int c = b + 1; c <= m; ++c) {
        h.add_edge({id[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)],
                    id[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)]});
      }
    }
  }
  return h;
}

}  // namespace badcycle

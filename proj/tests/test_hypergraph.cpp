#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "badcycle/corpus.hpp"
#include "badcycle/generators.hpp"
#include "badcycle/hypergraph.hpp"
#include "oracles.hpp"

using namespace badcycle;

namespace {

DirectedHypergraph complete_digraph(std::size_t n) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) arcs.emplace_back(a, b);
  }
  return digraph_from_arcs(n, arcs);
}

DirectedHypergraph transitive_triangle() { return digraph_from_arcs(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Least rotation of the (v0, e1, v1, ..., en) encoding, computed naively.
std::vector<std::size_t> least_rotation(const HyperCycle& c) {
  const std::size_t n = c.edges.size();
  if (n == 0) return {c.vertices[0]};
  std::vector<std::size_t> best;
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::size_t> enc;
    for (std::size_t s = 0; s < n; ++s) {
      enc.push_back(c.vertices[(r + s) % n]);
      enc.push_back(c.edges[(r + s) % n]);
    }
    if (best.empty() || enc < best) best = enc;
  }
  return best;
}

}  // namespace

TEST_CASE("edges need k distinct known coordinates") {
  DirectedHypergraph h(3, {"a", "b", "c", "d"});
  CHECK(h.add_edge({0, 1, 2}) == 0);
  CHECK_THROWS_AS(h.add_edge({0, 1}), InputError);
  CHECK_THROWS_AS(h.add_edge({0, 0, 1}), InputError);
  CHECK_THROWS_AS(h.add_edge({0, 1, 7}), InputError);
  CHECK_THROWS_AS(DirectedHypergraph(2, {"a", "a"}), InputError);
  CHECK(h.position_of(0, 2) == 3);
  CHECK_FALSE(h.position_of(0, 3).has_value());
}

TEST_CASE("trace") {
  auto g = digraph_from_arcs(2, {{0, 1}});
  HyperCycle back{{0, 1, 0}, {0, 0}};
  CHECK(trace(g, back, 1) == std::pair<Position, Position>{1, 2});
  CHECK(trace(g, back, 2) == std::pair<Position, Position>{2, 1});
  HyperCycle stay{{0, 0}, {0}};
  CHECK(trace(g, stay, 1) == std::pair<Position, Position>{1, 1});
  CHECK_THROWS_AS(trace(g, back, 0), InputError);
  CHECK_THROWS_AS(trace(g, back, 3), InputError);

  DirectedHypergraph h(3, {"a", "b", "c"});
  h.add_edge({0, 1, 2});
  HyperCycle ac{{0, 2, 0}, {0, 0}};
  CHECK(trace(h, ac, 1) == std::pair<Position, Position>{1, 3});
  CHECK(trace(h, ac, 2) == std::pair<Position, Position>{3, 1});
}

TEST_CASE("check_cycle") {
  auto g = digraph_from_arcs(3, {{0, 1}});
  CHECK_FALSE(check_cycle(g, HyperCycle{{0, 1, 0}, {0, 0}}).has_value());
  CHECK(check_cycle(g, HyperCycle{{0, 2, 0}, {0, 0}}).has_value());
  CHECK(check_cycle(g, HyperCycle{{0, 1}, {0}}).has_value());
}

TEST_CASE("exact chromatic number") {
  CHECK(chromatic_number_exact(path_digraph(3)).chromatic_number == 2);
  CHECK(chromatic_number_exact(complete_digraph(4)).chromatic_number == 4);
  CHECK(chromatic_number_exact(gen_explicit_hasse_digraph(3)).chromatic_number == 3);
  CHECK(chromatic_number_exact(digraph_from_arcs(3, {})).chromatic_number == 1);
  CHECK(chromatic_number_exact(DirectedHypergraph(2, {})).chromatic_number == 0);

  DirectedHypergraph h(3, {"1", "2", "3", "4"});
  h.add_edge({0, 1, 2});
  h.add_edge({1, 2, 3});
  CHECK(chromatic_number_exact(h).chromatic_number == 2);
}

TEST_CASE("exact solver agrees with brute force on small random hypergraphs") {
  Rng rng(17);
  for (int round = 0; round < 60; ++round) {
    int k = 2 + static_cast<int>(uniform(rng, 2));
    std::size_t n = 3 + uniform(rng, 4);
    auto h = random_hypergraph(rng, k, n, 2 + uniform(rng, 10));
    auto exact = chromatic_number_exact(h);
    CHECK(exact.chromatic_number == oracle::chromatic_number(h));
    CHECK(is_proper_coloring(h, exact.coloring));
    CHECK(color_count(exact.coloring) == exact.chromatic_number);
    CHECK(exact.chromatic_number <= chromatic_upper_greedy(h));
  }
}

TEST_CASE("exact solver reports bounds when the budget runs out") {
  auto g = gen_shift_digraph(16);
  try {
    chromatic_number_exact(g, SearchBudget(1));
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    REQUIRE(e.lower_bound.has_value());
    REQUIRE(e.upper_bound.has_value());
    CHECK(*e.lower_bound <= 4);
    CHECK(*e.upper_bound >= 4);
  }
}

TEST_CASE("greedy coloring") {
  CHECK(chromatic_upper_greedy(digraph_from_arcs(5, {})) == 1);
  auto k4 = complete_digraph(4);
  CHECK(chromatic_upper_greedy(k4) == 4);
  CHECK(chromatic_upper_greedy(k4, {3, 1, 0, 2}) == 4);
  auto hasse = gen_explicit_hasse_digraph(3);
  CHECK(chromatic_upper_greedy(hasse) >= 3);
  CHECK(is_proper_coloring(hasse, greedy_coloring(hasse)));
  CHECK_THROWS_AS(greedy_coloring(k4, {0, 1, 2}), InputError);
  CHECK_THROWS_AS(greedy_coloring(k4, {0, 1, 2, 2}), InputError);
}

TEST_CASE("proper coloring verifier") {
  auto p = path_digraph(2);
  CHECK(is_proper_coloring(p, {0, 1, 0}));
  CHECK_FALSE(is_proper_coloring(p, {0, 0, 1}));
  CHECK_FALSE(is_proper_coloring(p, {0, 1}));
  CHECK(color_count({0, 2, 2}) == 2);

  DirectedHypergraph h(3, {"a", "b", "c"});
  h.add_edge({0, 1, 2});
  CHECK(is_proper_coloring(h, {0, 0, 1}));
  CHECK_FALSE(is_proper_coloring(h, {1, 1, 1}));
}

TEST_CASE("enumerate_cycles on a single edge") {
  auto g = digraph_from_arcs(2, {{0, 1}});
  std::vector<HyperCycle> seen;
  enumerate_cycles(g, 2, [&](const HyperCycle& c) {
    seen.push_back(c);
    return true;
  });
  auto has = [&](HyperCycle c) { return std::find(seen.begin(), seen.end(), c) != seen.end(); };
  CHECK(has({{0}, {}}));
  CHECK(has({{1}, {}}));
  CHECK(has({{0, 0}, {0}}));
  CHECK(has({{1, 1}, {0}}));
  CHECK(has({{0, 1, 0}, {0, 0}}));
  CHECK_FALSE(has({{1, 0, 1}, {0, 0}}));
  CHECK(has({{0, 0, 0}, {0, 0}}));
  CHECK(has({{1, 1, 1}, {0, 0}}));
  CHECK(seen.size() == 7);
}

TEST_CASE("enumerate_cycles on an edgeless graph") {
  std::size_t count = 0;
  enumerate_cycles(digraph_from_arcs(4, {}), 5, [&](const HyperCycle& c) {
    CHECK(c.length() == 0);
    ++count;
    return true;
  });
  CHECK(count == 4);
}

TEST_CASE("enumerate_cycles matches an independent enumeration") {
  std::vector<DirectedHypergraph> graphs{transitive_triangle(),
                                         digraph_from_arcs(3, {{0, 1}, {1, 2}, {2, 0}})};
  DirectedHypergraph h(3, {"a", "b", "c", "d"});
  h.add_edge({0, 1, 2});
  h.add_edge({3, 2, 1});
  graphs.push_back(h);
  for (const auto& g : graphs) {
    for (std::size_t max_len : {0, 1, 2, 3}) {
      std::set<std::vector<std::size_t>> expected;
      oracle::for_each_cycle(g, max_len, [&](const HyperCycle& c) { expected.insert(least_rotation(c)); });
      std::set<std::vector<std::size_t>> got;
      std::size_t yielded = 0;
      enumerate_cycles(g, max_len, [&](const HyperCycle& c) {
        CHECK_FALSE(check_cycle(g, c).has_value());
        CHECK(c == canonical_rotation(c));
        got.insert(least_rotation(c));
        ++yielded;
        return true;
      });
      CHECK(yielded == got.size());
      CHECK(got == expected);
    }
  }
}

TEST_CASE("enumerate_cycles stops when asked") {
  std::size_t count = 0;
  enumerate_cycles(transitive_triangle(), 3, [&](const HyperCycle&) { return ++count < 3; });
  CHECK(count == 3);
}

TEST_CASE("path digraph") {
  CHECK(path_digraph(0).num_vertices() == 1);
  CHECK(path_digraph(0).num_edges() == 0);
  auto p1 = path_digraph(1);
  REQUIRE(p1.num_edges() == 1);
  CHECK(p1.vertex_name(p1.edge(0)[0]) == "1");
  CHECK(p1.vertex_name(p1.edge(0)[1]) == "2");
  CHECK(path_digraph(3).num_vertices() == 4);
  CHECK(path_digraph(3).num_edges() == 3);
}

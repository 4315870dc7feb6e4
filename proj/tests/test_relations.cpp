#include <doctest.h>

#include <algorithm>
#include <set>

#include "badcycle/corpus.hpp"
#include "badcycle/generators.hpp"
#include "badcycle/goodness.hpp"
#include "badcycle/relations.hpp"
#include "oracles.hpp"

using namespace badcycle;

namespace {

constexpr int x = 0, y = 1, z = 2;

oracle::PairSet pair_set(const Relation& r) {
  auto p = r.pairs();
  return {p.begin(), p.end()};
}

Relation random_relation(Rng& rng, int n) {
  Relation r{n, 0};
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (uniform(rng, 3) == 0) r.set(a, b);
    }
  }
  return r;
}

DirectedHypergraph digraph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  std::size_t bit = 0;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (a == b) continue;
      if ((mask >> bit++) & 1U) arcs.emplace_back(a, b);
    }
  }
  return digraph_from_arcs(n, arcs);
}

}  // namespace

TEST_CASE("relation basics") {
  auto r = make_relation(3, {{0, 1}, {2, 2}});
  CHECK(r.size() == 2);
  CHECK(r.has(0, 1));
  CHECK_FALSE(r.has(1, 0));
  CHECK(to_string(r) == "{(1,2),(3,3)}");
  CHECK(identity_relation(3).size() == 3);
  CHECK(full_relation(3).size() == 9);
  CHECK_THROWS_AS(make_relation(9, {}), InputError);
  CHECK_THROWS_AS(make_relation(2, {{0, 2}}), InputError);
  CHECK(is_subdirect(identity_relation(4)));
  CHECK_FALSE(is_subdirect(r));
  CHECK(contains(full_relation(3), r));
  CHECK_FALSE(contains(r, full_relation(3)));
}

TEST_CASE("composition and reversal") {
  Rng rng(2);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(uniform(rng, 4));
    auto a = random_relation(rng, n), b = random_relation(rng, n), c = random_relation(rng, n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, identity_relation(n)) == a);
    CHECK(compose(identity_relation(n), a) == a);
    CHECK(pair_set(compose(a, b)) == oracle::compose(pair_set(a), pair_set(b)));
    CHECK(pair_set(reverse(a)) == oracle::reverse(pair_set(a)));
    CHECK(reverse(reverse(a)) == a);
    CHECK(power(a, 0) == identity_relation(n));
    CHECK(power(a, 3) == compose(a, compose(a, a)));
  }
  CHECK(reverse(identity_relation(3)) == identity_relation(3));
  CHECK_THROWS_AS(compose(identity_relation(2), identity_relation(3)), InputError);
}

TEST_CASE("corollary relation displays") {
  auto r = corollary_relation();
  CHECK(r == make_relation(3, {{x, y}, {x, z}, {y, z}, {z, x}}));
  CHECK(reverse(r).size() == 4);

  auto rrr = compose(compose(r, r), r);
  CHECK(rrr == make_relation(3, {{x, x}, {x, y}, {x, z}, {y, y}, {y, z}, {z, x}, {z, z}}));

  auto rev = reverse(r);
  auto middle = compose(compose(compose(rev, r), r), rev);
  CHECK(middle == make_relation(3, {{x, x}, {x, y}, {y, x}, {y, y}, {y, z}, {z, x}, {z, y}, {z, z}}));
}

TEST_CASE("semigroup closure") {
  CHECK(semigroup_closure({identity_relation(3)}) == std::vector<Relation>{identity_relation(3)});

  auto r = corollary_relation();
  auto closure = semigroup_closure({r, reverse(r)});
  CHECK(closure.size() == 30);
  CHECK(std::is_sorted(closure.begin(), closure.end()));
  auto has = [&](const Relation& q) { return std::binary_search(closure.begin(), closure.end(), q); };
  CHECK(has(compose(compose(r, r), r)));
  for (const auto& p : closure) {
    CHECK(is_subdirect(p));
    CHECK(has(reverse(p)));
    for (const auto& q : closure) CHECK(has(compose(p, q)));
  }
}

TEST_CASE("pq-compatibility") {
  auto delta = is_pq_compatible({identity_relation(3)});
  CHECK(delta.compatible);
  REQUIRE(delta.witnesses.size() == 1);
  CHECK(delta.witnesses[0].j == 0);

  auto r = corollary_relation();
  auto alone = is_pq_compatible({r});
  CHECK_FALSE(alone.compatible);
  CHECK_FALSE(alone.violations.empty());

  auto s = corollary_s_set();
  auto verdict = is_pq_compatible(s);
  CHECK(verdict.compatible);
  CHECK(verdict.witnesses.size() == s.size() * s.size());
  for (const auto& w : verdict.witnesses) {
    auto qp = compose(s[w.q], s[w.p]);
    CHECK(contains(compose(s[w.p], power(qp, w.j)), identity_relation(3)));
  }
}

TEST_CASE("corollary S-set") {
  auto s = corollary_s_set();
  CHECK(s.size() == 27);
  CHECK(std::is_sorted(s.begin(), s.end()));
  const auto delta = identity_relation(3);
  const auto cyc = make_relation(3, {{x, y}, {y, z}, {z, x}});
  const auto cyc2 = compose(cyc, cyc);
  auto r = corollary_relation();
  auto in_s = [&](const Relation& q) { return std::binary_search(s.begin(), s.end(), q); };
  for (const auto& q : s) {
    CHECK((contains(q, delta) || contains(q, cyc) || contains(q, cyc2)));
  }
  CHECK(in_s(delta));
  CHECK(in_s(compose(r, r)));
  CHECK(in_s(compose(r, reverse(r))));
  CHECK(in_s(compose(reverse(r), reverse(r))));
  auto closure = semigroup_closure({r, reverse(r)});
  // the identity comes from the empty word, every other element from a nonempty one
  for (const auto& q : s) {
    if (q == delta) continue;
    CHECK(std::binary_search(closure.begin(), closure.end(), q));
  }
}

TEST_CASE("relation machines") {
  auto pi_delta = binary_projections(identity_relation(2));
  auto trivial = build_relation_machine({identity_relation(2)}, 2, pi_delta);
  CHECK(trivial.machine.num_states() == 1);
  CHECK(trivial.machine.bad().empty());

  auto cm = corollary_machine();
  CHECK(validate_machine(cm.machine, Semantics::general).ok());
  CHECK(cm.machine.is_deterministic());
  CHECK(cm.states[0] == identity_relation(3));
  auto r = corollary_relation();
  for (const auto& t : cm.machine.transition_list()) {
    auto step = t.i == 1 ? r : reverse(r);
    CHECK(cm.states[t.to] == compose(cm.states[t.from], step));
  }
  auto s = corollary_s_set();
  for (const auto& [a, b] : cm.machine.bad()) {
    CHECK(a == 0);
    CHECK_FALSE(std::binary_search(s.begin(), s.end(), cm.states[b]));
  }

  CHECK_THROWS_AS(build_relation_machine({r}, 2, binary_projections(r)), InputError);
  CHECK_THROWS_AS(build_relation_machine({identity_relation(3)}, 2, {}), InputError);
}

TEST_CASE("odd alternating cycles") {
  CHECK_FALSE(detect_odd_alternating_cycle(digraph_from_arcs(3, {{0, 1}, {1, 2}, {2, 0}})).has_value());
  // 0->1<-2->3<-4->0: alternating everywhere but at vertex 0
  auto five = digraph_from_arcs(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 0}});
  auto w = detect_odd_alternating_cycle(five);
  REQUIRE(w.has_value());
  CHECK(w->length() == 5);
  CHECK_FALSE(check_cycle(five, *w).has_value());
  for (int m = 2; m <= 8; ++m) CHECK_FALSE(detect_odd_alternating_cycle(gen_shift_digraph(m)).has_value());
  CHECK_THROWS_AS(detect_odd_alternating_cycle(DirectedHypergraph(3, {"a"})), InputError);
}

TEST_CASE("detector agrees with walk enumeration") {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    auto g = digraph_from_mask(3, mask);
    auto w = detect_odd_alternating_cycle(g);
    CHECK(w.has_value() == oracle::has_odd_alternating_cycle(g, 7));
    if (w) CHECK(oracle::has_odd_alternating_cycle(g, w->length()));
  }
  Rng rng(47);
  for (int round = 0; round < 150; ++round) {
    auto g = random_digraph(rng, 4, 25);
    auto w = detect_odd_alternating_cycle(g);
    CHECK(w.has_value() == oracle::has_odd_alternating_cycle(g, 9));
  }
}

TEST_CASE("corollary machine goodness matches the detector") {
  const Machine m = corollary_machine().machine;
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t arcs = n * (n - 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arcs); ++mask) {
      auto g = digraph_from_mask(n, mask);
      CHECK(is_good(g, m).good == !detect_odd_alternating_cycle(g).has_value());
    }
  }
  Rng rng(53);
  for (int round = 0; round < 2000; ++round) {
    auto g = digraph_from_mask(5, uniform(rng, std::uint64_t{1} << 20));
    CHECK(is_good(g, m).good == !detect_odd_alternating_cycle(g).has_value());
  }
}

TEST_CASE("loop lemma preconditions") {
  CHECK(is_smooth(full_relation(2)));
  CHECK_FALSE(is_smooth(make_relation(2, {{0, 1}})));
  CHECK(is_weakly_connected(corollary_relation()));
  CHECK_FALSE(is_weakly_connected(identity_relation(2)));
  CHECK(algebraic_length(make_relation(2, {{0, 1}, {1, 0}})) == 2);
  CHECK(algebraic_length(corollary_relation()) == 1);

  auto property_of = [](const Relation& r) -> std::string {
    try {
      loop_lemma_exponent(r, 6);
    } catch (const PreconditionError& e) {
      return e.property;
    }
    return "";
  };
  CHECK(property_of(make_relation(2, {{0, 1}})) == "smooth");
  CHECK(property_of(identity_relation(2)) == "weakly connected");
  CHECK(property_of(make_relation(2, {{0, 1}, {1, 0}})) == "algebraic length");
}

TEST_CASE("loop lemma exponent") {
  auto full = loop_lemma_exponent(full_relation(2), 4);
  CHECK(full.k == std::optional<int>{1});
  CHECK(full.window_conclusive);

  auto r = corollary_relation();
  auto res = loop_lemma_exponent(r, 12);
  REQUIRE(res.k.has_value());
  CHECK(*res.k == 2);
  CHECK(res.preperiod == 5);
  CHECK(res.period == 1);
  CHECK(res.window_conclusive);
  CHECK(res.algebraic_length == 1);
  const auto all = full_relation(3);
  for (int l = *res.k; l <= 12; ++l) {
    for (int m = *res.k; m <= 12; ++m) {
      CHECK(power(compose(power(r, l), power(reverse(r), m)), *res.k) == all);
    }
  }
  auto once = compose(power(r, 1), power(reverse(r), 1));
  CHECK_FALSE(once == all);
}

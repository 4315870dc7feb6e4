#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "badcycle/balanced.hpp"
#include "badcycle/corpus.hpp"
#include "badcycle/generators.hpp"
#include "badcycle/goodness.hpp"
#include "badcycle/order_theory.hpp"

using namespace badcycle;

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("good hypergraphs of order-free cycling machines have small chromatic number") {
  Rng rng(101);
  int machines = 0, graphs = 0;
  for (int round = 0; round < 400 && machines < 25; ++round) {
    Machine m = random_machine(rng, 2, 1 + uniform(rng, 3), true, 40, 2);
    if (find_compatible_order(m)) continue;
    ++machines;
    const auto bound = static_cast<int>(factorial(m.num_states()));
    for (int g = 0; g < 40; ++g) {
      auto h = random_digraph(rng, 3 + uniform(rng, 5), 35);
      if (!is_good(h, m).good) continue;
      ++graphs;
      CHECK(chromatic_number_exact(h).chromatic_number <= bound);
    }
  }
  CHECK(machines > 0);
  CHECK(graphs > 0);
}

TEST_CASE("good hypergraphs of machines without order systems have small chromatic number") {
  Rng rng(103);
  int machines = 0, graphs = 0;
  for (int round = 0; round < 400 && machines < 25; ++round) {
    Machine m = random_machine(rng, 2, 2 + uniform(rng, 2), false, 40, 2);
    if (!find_order_system(m).systems.empty()) continue;
    ++machines;
    const auto bound = static_cast<int>(count_order_systems(m.num_states()));
    for (int g = 0; g < 40; ++g) {
      auto h = random_digraph(rng, 3 + uniform(rng, 5), 35);
      if (!is_good(h, m).good) continue;
      ++graphs;
      auto coloring = induced_order_system_coloring(h, m);
      // Coloring each vertex by its induced system is proper.
      for (const auto& e : h.edges()) CHECK_FALSE(canonical(coloring[e[0]]) == canonical(coloring[e[1]]));
      CHECK(chromatic_number_exact(h).chromatic_number <= bound);
    }
  }
  CHECK(machines > 0);
  CHECK(graphs > 0);
}

TEST_CASE("a negative decision shows up on a short path") {
  Rng rng(107);
  int negative = 0;
  for (int round = 0; round < 400; ++round) {
    Machine m = random_machine(rng, 2, 1 + uniform(rng, 3), true, 35, 2);
    const std::size_t n_max = 4 * m.num_states() * m.num_states();
    auto paths = check_paths_good(m, n_max);
    if (decide_cycling_2machine(m)) {
      CHECK_FALSE(paths.first_bad.has_value());
    } else {
      ++negative;
      CHECK(paths.first_bad.has_value());
    }
  }
  CHECK(negative > 20);
}

TEST_CASE("verification accepts what the searches return") {
  Rng rng(109);
  for (int round = 0; round < 150; ++round) {
    const int k = 2 + static_cast<int>(uniform(rng, 2));
    Machine cyc = random_machine(rng, k, 1 + uniform(rng, 3), true, 30, 2);
    if (auto order = find_compatible_order(cyc)) CHECK(verify_compatible_order(cyc, *order).ok);

    Machine gen = random_machine(rng, 2, 1 + uniform(rng, 3), false, 30, 2);
    for (const auto& os : find_order_system(gen, true).systems) CHECK(verify_order_system(gen, os).ok);

    auto h = random_hypergraph(rng, k, 3 + uniform(rng, 5), uniform(rng, 8));
    auto chi = chromatic_number_exact(h);
    CHECK(is_proper_coloring(h, chi.coloring));
    std::vector<VertexId> order(h.num_vertices());
    std::iota(order.begin(), order.end(), VertexId{0});
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(chi.chromatic_number <= chromatic_upper_greedy(h, order));
  }
}

TEST_CASE("balance is monotone in alpha and matches finite potentials") {
  Rng rng(113);
  const std::vector<Rational> alphas{Rational(6, 5), Rational(3, 2), Rational(2), Rational(5, 2),
                                     Rational(3), Rational(7, 2), Rational(5)};
  for (int round = 0; round < 200; ++round) {
    auto g = random_digraph(rng, 2 + uniform(rng, 5), 25);
    bool was_balanced = false;
    for (const auto& alpha : alphas) {
      const bool balanced = is_alpha_balanced(g, alpha).balanced;
      if (was_balanced) CHECK(balanced);
      was_balanced = balanced;
      bool colored = true;
      try {
        auto c = balanced_coloring(g, alpha);
        CHECK(is_proper_coloring(g, c.coloring));
        CHECK(color_count(c.coloring) <= c.alpha_ceiling + 1);
      } catch (const UnbalancedError&) {
        colored = false;
      }
      CHECK(colored == balanced);
    }
  }
}

TEST_CASE("generated machines validate for their semantics") {
  for (int n = 0; n <= 6; ++n) CHECK(validate_machine(gen_counter_machine(n), Semantics::cycling).ok());
  CHECK(validate_machine(gen_hasse_machine(), Semantics::general).ok());
  CHECK(validate_machine(gen_example3_machine(), Semantics::general).ok());
  for (int k = 1; k <= 4; ++k) CHECK(validate_machine(gen_unbalanced_machine(k), Semantics::general).ok());
  Rng rng(127);
  for (int round = 0; round < 50; ++round) {
    auto phi = random_cnf(rng, 3 + uniform(rng, 3), 1 + uniform(rng, 6));
    CHECK(validate_machine(sat_to_machine(phi), Semantics::cycling).ok());
  }
}

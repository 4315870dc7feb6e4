#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "badcycle/corpus.hpp"
#include "badcycle/order_theory.hpp"
#include "badcycle/reductions.hpp"
#include "oracles.hpp"

using namespace badcycle;

namespace {

CnfInstance xyz() {
  CnfInstance phi;
  phi.variables = {"x", "y", "z"};
  phi.clauses.push_back({Literal{0, false}, Literal{1, false}, Literal{2, false}});
  return phi;
}

CnfInstance dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

}  // namespace

TEST_CASE("single clause machine") {
  CnfInstance phi = xyz();
  Machine m = sat_to_machine(phi);
  CHECK(m.num_states() == 6);
  CHECK(m.k() == 3);
  CHECK(m.transition_count() == 3);
  CHECK(validate_machine(m, Semantics::cycling).ok());
  CHECK(m.state_name(literal_state({0, false})) == "x");
  CHECK(m.state_name(literal_state({0, true})) == "-x");
  // f(x,(1,2)) = -y, f(y,(2,3)) = -z, f(z,(3,1)) = -x
  CHECK(m.step(m.state_id("x"), 1, 2) == std::vector<StateId>{m.state_id("-y")});
  CHECK(m.step(m.state_id("y"), 2, 3) == std::vector<StateId>{m.state_id("-z")});
  CHECK(m.step(m.state_id("z"), 3, 1) == std::vector<StateId>{m.state_id("-x")});
}

TEST_CASE("empty instances are rejected") {
  CnfInstance phi;
  phi.variables = {"x"};
  CHECK_THROWS_AS(sat_to_machine(phi), InputError);
}

TEST_CASE("two clauses use separate position blocks") {
  CnfInstance phi = xyz();
  phi.clauses.push_back({Literal{2, true}, Literal{0, false}, Literal{1, true}});
  Machine m = sat_to_machine(phi);
  CHECK(m.k() == 6);
  auto list = m.transition_list();
  REQUIRE(list.size() == 6);
  std::set<std::pair<Position, Position>> pairs;
  for (const auto& t : list) pairs.emplace(t.i, t.j);
  CHECK(pairs == std::set<std::pair<Position, Position>>{{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
  CHECK(m.step(m.state_id("-z"), 4, 5) == std::vector<StateId>{m.state_id("-x")});
  CHECK(m.step(m.state_id("x"), 5, 6) == std::vector<StateId>{m.state_id("y")});
  CHECK(m.step(m.state_id("-y"), 6, 4) == std::vector<StateId>{m.state_id("z")});
}

TEST_CASE("orders and assignments") {
  CnfInstance phi = xyz();
  Machine m = sat_to_machine(phi);
  auto order = find_compatible_order(m);
  REQUIRE(order.has_value());
  auto a = order_to_assignment(*order, phi);
  CHECK(satisfies(phi, a));

  const auto x = literal_state({0, false}), not_x = literal_state({0, true});
  auto pos = [&](const CompatibleOrder& o, StateId s) {
    return std::find(o.begin(), o.end(), StatePosition{s, 1}) - o.begin();
  };
  CHECK(a[0] == (pos(*order, x) < pos(*order, not_x)));

  Assignment all_true{true, true, true};
  auto built = assignment_to_order(all_true, phi);
  CHECK(verify_compatible_order(m, built).ok);
  CHECK(order_to_assignment(built, phi) == all_true);
  CHECK_THROWS_AS(assignment_to_order({false, false, false}, phi), InputError);

  auto reversed = built;
  std::reverse(reversed.begin(), reversed.end());
  CHECK_THROWS_AS(order_to_assignment(reversed, phi), InputError);
}

TEST_CASE("every satisfying assignment round trips") {
  Rng rng(37);
  for (int round = 0; round < 40; ++round) {
    auto phi = random_cnf(rng, 2 + uniform(rng, 4), 1 + uniform(rng, 5));
    Machine m = sat_to_machine(phi);
    const std::size_t n = phi.variables.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      Assignment a(n);
      for (std::size_t v = 0; v < n; ++v) a[v] = (bits >> v) & 1U;
      if (!satisfies(phi, a)) continue;
      auto order = assignment_to_order(a, phi);
      CHECK(verify_compatible_order(m, order).ok);
      CHECK(satisfies(phi, order_to_assignment(order, phi)));
    }
  }
}

TEST_CASE("satisfiable exactly when an order exists") {
  Rng rng(43);
  for (int round = 0; round < 40; ++round) {
    auto phi = random_cnf(rng, 3 + uniform(rng, 3), 2 + uniform(rng, 5));
    CHECK(find_compatible_order(sat_to_machine(phi)).has_value() == oracle::satisfiable(phi));
  }
  auto unsat = all_sign_patterns_cnf();
  CHECK(unsat.clauses.size() == 8);
  CHECK_FALSE(oracle::satisfiable(unsat));
  CHECK_FALSE(find_compatible_order(sat_to_machine(unsat)).has_value());
}

TEST_CASE("cnf validation") {
  CnfInstance phi = xyz();
  CHECK_NOTHROW(validate_cnf(phi));
  phi.clauses[0][1].variable = 5;
  CHECK_THROWS_AS(validate_cnf(phi), InputError);
  CnfInstance twice = xyz();
  twice.variables[2] = "x";
  CHECK_THROWS_AS(validate_cnf(twice), InputError);
}

TEST_CASE("dimacs") {
  auto phi = dimacs("c example\np cnf 4 2\n1 -2 3 0\n-4 2\n1 0\n");
  CHECK(phi.variables == std::vector<std::string>{"1", "2", "3", "4"});
  REQUIRE(phi.clauses.size() == 2);
  CHECK(phi.clauses[0][1] == Literal{1, true});
  CHECK(phi.clauses[1][0] == Literal{3, true});
  CHECK(phi.clauses[1][2] == Literal{0, false});

  CHECK_THROWS_AS(dimacs("p cnf 3 1\n1 2 0\n"), InputError);
  CHECK_THROWS_AS(dimacs("p cnf 3 1\n1 2 4 0\n"), InputError);
  CHECK_THROWS_AS(dimacs("1 2 3 0\n"), InputError);
  CHECK_THROWS_AS(dimacs("p cnf 3 2\n1 2 3 0\n"), InputError);
  CHECK_THROWS_AS(dimacs("p cnf 3 1\n1 2 3\n"), InputError);
  CHECK_THROWS_AS(dimacs("p cnf 3 1\n1 x 3 0\n"), InputError);
  CHECK_THROWS_AS(dimacs(""), InputError);
}

#include <doctest.h>

#include "badcycle/corpus.hpp"
#include "badcycle/generators.hpp"
#include "badcycle/io.hpp"

using namespace badcycle;

namespace {

Json parse(const char* text) { return parse_json(text); }

}  // namespace

TEST_CASE("machine documents") {
  auto j = parse(R"({"k": 2, "states": ["s", "t"],
                     "transitions": [{"from": "s", "i": 1, "j": 2, "to": ["t"]}],
                     "bad": [["s", "t"]]})");
  Machine m = machine_from_json(j);
  CHECK(m.k() == 2);
  CHECK(m.step(0, 1, 2) == std::vector<StateId>{1});
  CHECK(m.is_bad(0, 1));
  CHECK_FALSE(m.declared_deterministic().has_value());

  CHECK_THROWS_AS(machine_from_json(parse(R"({"k": 2, "states": ["s"], "transitions": [],
                                              "bad": [], "extra": 1})")),
                  InputError);
  CHECK_THROWS_AS(machine_from_json(parse(R"({"k": 2, "states": ["s"], "transitions": []})")),
                  InputError);
  CHECK_THROWS_AS(machine_from_json(parse(R"({"k": 2, "states": ["s"],
      "transitions": [{"from": "q", "i": 1, "j": 2, "to": ["s"]}], "bad": []})")),
                  InputError);
  CHECK_THROWS_AS(machine_from_json(parse(R"({"k": 2, "states": ["s"],
      "transitions": [{"from": "s", "i": 1, "j": 3, "to": ["s"]}], "bad": []})")),
                  InputError);
  CHECK_THROWS_AS(machine_from_json(parse(R"({"k": "2", "states": [], "transitions": [], "bad": []})")),
                  InputError);
}

TEST_CASE("machine round trips") {
  for (const auto& m : {gen_hasse_machine(), gen_counter_machine(4), gen_example3_machine(),
                        gen_unbalanced_machine(2)}) {
    auto back = machine_from_json(parse_json(dump(machine_to_json(m))));
    CHECK(back == m);
    CHECK(back.declared_deterministic() == m.declared_deterministic());
  }
  Rng rng(59);
  for (int round = 0; round < 100; ++round) {
    Machine m = random_machine(rng, 2 + static_cast<int>(uniform(rng, 3)), 1 + uniform(rng, 4),
                               uniform(rng, 2) == 0);
    CHECK(machine_from_json(machine_to_json(m)) == m);
  }
}

TEST_CASE("hypergraph documents") {
  auto h = hypergraph_from_json(parse(R"({"k": 3, "vertices": ["a", "b", "c"],
                                          "edges": [["a", "b", "c"]]})"));
  CHECK(h.num_edges() == 1);
  CHECK(hypergraph_from_json(hypergraph_to_json(h)) == h);
  CHECK_THROWS_AS(hypergraph_from_json(parse(R"({"k": 2, "vertices": ["a", "b"],
                                                 "edges": [["a", "a"]]})")),
                  InputError);
  CHECK_THROWS_AS(hypergraph_from_json(parse(R"({"k": 2, "vertices": ["a", "b"],
                                                 "edges": [["a", "c"]]})")),
                  InputError);
  CHECK_THROWS_AS(hypergraph_from_json(parse(R"({"k": 2, "vertices": ["a"], "edges": [],
                                                 "name": "x"})")),
                  InputError);
  Rng rng(61);
  for (int round = 0; round < 50; ++round) {
    auto g = random_hypergraph(rng, 2 + static_cast<int>(uniform(rng, 2)), 4, uniform(rng, 6));
    CHECK(hypergraph_from_json(parse_json(dump(hypergraph_to_json(g)))) == g);
  }
}

TEST_CASE("orders and order systems") {
  Machine m = gen_counter_machine(3);
  auto order = counter_machine_order(3);
  auto j = order_to_json(order, m);
  CHECK(j[0] == parse(R"(["3", 1])"));
  CHECK(order_from_json(j, m) == order);
  CHECK_THROWS_AS(order_from_json(parse(R"([["9", 1]])"), m), InputError);
  CHECK_THROWS_AS(order_from_json(parse(R"([["1", 3]])"), m), InputError);

  Machine e = gen_example3_machine();
  auto os = example3_order_system();
  auto doc = order_system_to_json(os, e);
  CHECK(doc["classes"][1] == parse(R"([["0", 2], ["1", 1]])"));
  CHECK(order_system_from_json(doc, e) == os);
  doc["extra"] = 1;
  CHECK_THROWS_AS(order_system_from_json(doc, e), InputError);
}

TEST_CASE("witness documents") {
  auto g = digraph_from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
  Machine m = gen_hasse_machine();
  BadCycleWitness w{{{0, 1, 2, 0}, {0, 1, 2}}, {0, 1, 1, 1}};
  auto j = witness_to_json(w, g, m);
  CHECK(j["vertices"] == parse(R"(["1", "2", "3", "1"])"));
  CHECK(j["states"] == parse(R"(["s", "t", "t", "t"])"));
  auto back = witness_from_json(j, g, m);
  CHECK(back.cycle == w.cycle);
  CHECK(back.states == w.states);
}

TEST_CASE("relation documents") {
  auto r = relation_from_json(parse(R"({"n": 3, "pairs": [[1, 2], [3, 1]]})"));
  CHECK(r == make_relation(3, {{0, 1}, {2, 0}}));
  CHECK(relation_from_json(relation_to_json(r)) == r);
  CHECK_THROWS_AS(relation_from_json(parse(R"({"n": 3, "pairs": [[0, 2]]})")), InputError);
  CHECK_THROWS_AS(relation_from_json(parse(R"({"n": 3, "pairs": [[1, 4]]})")), InputError);
}

TEST_CASE("cnf documents") {
  auto phi = parse_cnf(R"({"variables": ["x", "y", "z"], "clauses": [["x", "-y", "z"]]})");
  REQUIRE(phi.clauses.size() == 1);
  CHECK(phi.clauses[0][1] == Literal{1, true});
  auto again = cnf_from_json(cnf_to_json(phi));
  CHECK(again.variables == phi.variables);
  CHECK(again.clauses == phi.clauses);

  auto dimacs = parse_cnf("c comment\np cnf 3 1\n1 -2 3 0\n");
  CHECK(dimacs.variables == std::vector<std::string>{"1", "2", "3"});
  CHECK(dimacs.clauses == phi.clauses);

  CHECK_THROWS_AS(parse_cnf(R"({"variables": ["x"], "clauses": [["x", "x"]]})"), InputError);
  CHECK_THROWS_AS(parse_cnf(R"({"variables": ["x"], "clauses": [["x", "x", "w"]]})"), InputError);
}

TEST_CASE("json text") {
  CHECK_THROWS_AS(parse_json("{", "test"), InputError);
  CHECK(dump(parse("[1]")) == "[\n  1\n]\n");
  CHECK_THROWS_AS(read_text_file("/nonexistent/file"), InputError);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("5/2") == Rational(5, 2));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK(to_string(Rational(5, 2)) == "5/2");
  CHECK(to_string(Rational(3)) == "3");
  CHECK(ceil(Rational(5, 2)) == 3);
  CHECK(ceil(Rational(-5, 2)) == -2);
  CHECK(ceil(Rational(2)) == 2);
}

#include <doctest.h>

#include <algorithm>
#include <string>

#include "badcycle/generators.hpp"
#include "badcycle/machine.hpp"

using namespace badcycle;

namespace {

bool mentions(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

}  // namespace

TEST_CASE("hasse machine validates as deterministic general machine") {
  Machine m = gen_hasse_machine();
  auto report = validate_machine(m, Semantics::general);
  CHECK(report.ok());
  CHECK(report.deterministic);
  CHECK_FALSE(report.cycling);
  CHECK(m.bad().size() == 2);
  CHECK(m.is_bad(m.state_id("s"), m.state_id("t")));
  CHECK(m.is_bad(m.state_id("s"), m.state_id("v")));
}

TEST_CASE("diagonal bad pair is rejected under general semantics") {
  Machine m(2, {"s", "t"});
  m.add_bad(0, 0);
  auto report = validate_machine(m, Semantics::general);
  CHECK_FALSE(report.ok());
  CHECK(mentions(report, "diagonal bad pair"));
  CHECK_THROWS_AS(require_valid(m, Semantics::general), InputError);
}

TEST_CASE("deterministic claim with an (i,i) transition") {
  Machine m(2, {"s", "t"});
  m.add_transition(0, 1, 1, 1);
  m.declare_deterministic(true);
  auto report = validate_machine(m, Semantics::general);
  CHECK(mentions(report, "diagonal position pair in deterministic machine"));
  CHECK_FALSE(m.is_deterministic());

  m.declare_deterministic(std::nullopt);
  CHECK(validate_machine(m, Semantics::general).ok());
}

TEST_CASE("deterministic claim with two targets") {
  Machine m(2, {"s", "t"});
  m.add_transition(0, 1, 2, 0);
  m.add_transition(0, 1, 2, 1);
  m.declare_deterministic(true);
  CHECK(mentions(validate_machine(m, Semantics::general), "multiple targets"));
}

TEST_CASE("step") {
  Machine h = gen_hasse_machine();
  const auto t = h.state_id("t");
  CHECK(h.step(t, 2, 1) == std::vector<StateId>{h.state_id("u")});
  CHECK(h.step(h.state_id("v"), 1, 2).empty());
  CHECK(h.step(h.state_id("s"), 1, 2) == std::vector<StateId>{t});

  Machine e = gen_example3_machine();
  CHECK(e.step(e.state_id("0"), 2, 1) == std::vector<StateId>{e.state_id("1")});
  CHECK(e.step(e.state_id("1"), 2, 1).empty());

  CHECK_THROWS_AS(h.step(4, 1, 2), InputError);
  CHECK_THROWS_AS(h.step(0, 0, 2), InputError);
  CHECK_THROWS_AS(h.step(0, 1, 3), InputError);
  CHECK_THROWS_AS(h.state_id("w"), InputError);
}

TEST_CASE("step stays inside S") {
  for (int n = 0; n <= 6; ++n) {
    Machine m = gen_counter_machine(n);
    for (StateId s = 0; s < m.num_states(); ++s) {
      for (Position i = 1; i <= 2; ++i) {
        for (Position j = 1; j <= 2; ++j) {
          for (StateId t : m.step(s, i, j)) CHECK(t < m.num_states());
        }
      }
    }
  }
}

TEST_CASE("cycling machines fail general validation") {
  Machine m = gen_counter_machine(2);
  CHECK(validate_machine(m, Semantics::cycling).ok());
  CHECK(m.is_cycling());
  auto general = validate_machine(m, Semantics::general);
  CHECK_FALSE(general.ok());
  CHECK(mentions(general, "diagonal bad pair"));
  CHECK(natural_semantics(m) == Semantics::cycling);
  CHECK(natural_semantics(gen_hasse_machine()) == Semantics::general);
}

TEST_CASE("cycling validation needs the full diagonal") {
  Machine m(2, {"a", "b"});
  m.add_bad(0, 0);
  CHECK_FALSE(m.is_cycling());
  CHECK(mentions(validate_machine(m, Semantics::cycling), "requires B to equal the diagonal"));
}

TEST_CASE("malformed entries are reported, not thrown") {
  Machine m(2, {"a", "b"});
  m.add_transition(0, 1, 3, 1);
  m.add_transition(5, 1, 2, 1);
  m.add_transition(0, 2, 1, 7);
  m.add_bad(0, 9);
  auto report = validate_machine(m, Semantics::general);
  CHECK(mentions(report, "position out of range"));
  CHECK(mentions(report, "unknown state in"));
  CHECK(mentions(report, "unknown target state"));
  CHECK(mentions(report, "unknown state in bad pair"));
  CHECK(report.violations.size() >= 4);
}

TEST_CASE("duplicate state names") {
  CHECK_THROWS_AS(Machine(2, {"a", "a"}), InputError);
}

TEST_CASE("transition list and counts") {
  Machine h = gen_hasse_machine();
  CHECK(h.transition_count() == 4);
  auto list = h.transition_list();
  REQUIRE(list.size() == 4);
  CHECK(std::is_sorted(list.begin(), list.end()));

  Machine n = gen_counter_machine(3);
  // f(i,(1,2)) for every i, f(i,(2,1)) for i >= 2
  CHECK(n.transition_count() == 4 + 2);
}

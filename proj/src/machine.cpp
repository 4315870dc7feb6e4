#include "badcycle/machine.hpp"

#include <algorithm>
#include <sstream>

#include "badcycle/errors.hpp"

namespace badcycle {

std::string_view to_string(Semantics s) {
  return s == Semantics::cycling ? "cycling" : "general";
}

Machine::Machine(int k, std::vector<std::string> states)
    : k_(k), states_(std::move(states)) {
  for (StateId s = 0; s < states_.size(); ++s) {
    if (!index_.emplace(states_[s], s).second) {
      throw InputError("duplicate state name '" + states_[s] + "'");
    }
  }
}

const std::string& Machine::state_name(StateId s) const {
  if (s >= states_.size()) {
    throw InputError("state index " + std::to_string(s) + " out of range");
  }
  return states_[s];
}

std::optional<StateId> Machine::find_state(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

StateId Machine::state_id(std::string_view name) const {
  if (auto s = find_state(name)) return *s;
  throw InputError("unknown state '" + std::string(name) + "'");
}

void Machine::add_transition(StateId from, Position i, Position j, StateId to) {
  auto& targets = transitions_[TransitionKey{from, i, j}];
  auto it = std::lower_bound(targets.begin(), targets.end(), to);
  if (it == targets.end() || *it != to) targets.insert(it, to);
}

void Machine::add_bad(StateId s, StateId t) { bad_.emplace(s, t); }

const std::vector<StateId>& Machine::step(StateId s, Position i,
                                          Position j) const {
  static const std::vector<StateId> kEmpty;
  if (s >= states_.size()) {
    throw InputError("unknown state index " + std::to_string(s));
  }
  if (i < 1 || i > k_ || j < 1 || j > k_) {
    throw InputError("position pair (" + std::to_string(i) + "," +
                     std::to_string(j) + ") outside [" + std::to_string(k_) +
                     "]");
  }
  auto it = transitions_.find(TransitionKey{s, i, j});
  return it == transitions_.end() ? kEmpty : it->second;
}

std::vector<Transition> Machine::transition_list() const {
  std::vector<Transition> out;
  for (const auto& [key, targets] : transitions_) {
    for (StateId t : targets) out.push_back({key.from, key.i, key.j, t});
  }
  return out;
}

std::size_t Machine::transition_count() const {
  std::size_t n = 0;
  for (const auto& [key, targets] : transitions_) n += targets.size();
  return n;
}

bool Machine::is_deterministic() const {
  return std::all_of(transitions_.begin(), transitions_.end(),
                     [](const auto& kv) {
                       const auto& [key, targets] = kv;
                       return targets.size() <= 1 &&
                              (key.i != key.j || targets.empty());
                     });
}

bool Machine::is_cycling() const {
  if (bad_.size() != states_.size()) return false;
  for (StateId s = 0; s < states_.size(); ++s) {
    if (!bad_.contains({s, s})) return false;
  }
  return true;
}

bool Machine::operator==(const Machine& other) const {
  auto non_empty = [](const Machine& m) {
    std::map<TransitionKey, std::vector<StateId>> out;
    for (const auto& [key, targets] : m.transitions_) {
      if (!targets.empty()) out.emplace(key, targets);
    }
    return out;
  };
  return k_ == other.k_ && states_ == other.states_ && bad_ == other.bad_ &&
         declared_deterministic_ == other.declared_deterministic_ &&
         non_empty(*this) == non_empty(other);
}

ValidationReport validate_machine(const Machine& m, Semantics semantics) {
  ValidationReport report;
  auto& v = report.violations;
  const auto n = m.num_states();
  auto state_ok = [n](StateId s) { return s < n; };
  auto name = [&m, &state_ok](StateId s) {
    return state_ok(s) ? m.states()[s] : "#" + std::to_string(s);
  };

  if (m.k() < 2) {
    v.push_back("uniformity k=" + std::to_string(m.k()) + " is below 2");
  }
  if (n == 0) v.push_back("machine has no states");

  for (const auto& [key, targets] : m.transitions()) {
    std::ostringstream where;
    where << "f(" << name(key.from) << ",(" << key.i << "," << key.j << "))";
    if (!state_ok(key.from)) v.push_back("unknown state in " + where.str());
    if (key.i < 1 || key.i > m.k() || key.j < 1 || key.j > m.k()) {
      v.push_back("position out of range in " + where.str());
    }
    for (StateId t : targets) {
      if (!state_ok(t)) {
        v.push_back("unknown target state " + name(t) + " in " + where.str());
      }
    }
    if (m.declared_deterministic().value_or(false)) {
      if (targets.size() > 1) {
        v.push_back("multiple targets in deterministic machine at " +
                    where.str());
      }
      if (key.i == key.j && !targets.empty()) {
        v.push_back("diagonal position pair in deterministic machine at " +
                    where.str());
      }
    }
  }

  bool diagonal_bad = false;
  for (const auto& [s, t] : m.bad()) {
    if (!state_ok(s) || !state_ok(t)) {
      v.push_back("unknown state in bad pair (" + name(s) + "," + name(t) +
                  ")");
    }
    if (s == t) diagonal_bad = true;
  }

  report.deterministic = m.is_deterministic();
  report.cycling = m.is_cycling();
  if (semantics == Semantics::cycling && !report.cycling) {
    v.push_back("cycling semantics requires B to equal the diagonal");
  }
  if (semantics == Semantics::general && diagonal_bad) {
    for (const auto& [s, t] : m.bad()) {
      if (s == t) v.push_back("diagonal bad pair (" + name(s) + "," + name(t) + ")");
    }
  }
  return report;
}

Semantics natural_semantics(const Machine& m) {
  return m.is_cycling() ? Semantics::cycling : Semantics::general;
}

void require_valid(const Machine& m, Semantics semantics) {
  auto report = validate_machine(m, semantics);
  if (report.ok()) return;
  std::string msg = "invalid machine for " + std::string(to_string(semantics)) +
                    " semantics:";
  for (const auto& line : report.violations) msg += "\n  " + line;
  throw InputError(msg);
}

}  // namespace badcycle

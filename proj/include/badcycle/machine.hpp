#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace badcycle {

using StateId = std::size_t;
// Edge coordinates are 1-based throughout: a k-uniform edge has positions 1..k.
using Position = int;

enum class Semantics {
  cycling,  // B is the diagonal; only nonempty cycles count
  general,  // B must avoid the diagonal
};

std::string_view to_string(Semantics s);

struct TransitionKey {
  StateId from;
  Position i;
  Position j;
  auto operator<=>(const TransitionKey&) const = default;
};

// One (source, position pair, target) entry of the transition relation.
struct Transition {
  StateId from;
  Position i;
  Position j;
  StateId to;
  auto operator<=>(const Transition&) const = default;
};

struct StatePosition {
  StateId state;
  Position position;
  auto operator<=>(const StatePosition&) const = default;
};

// A finite-state k-machine (S, f, B). States are named; their index order is
// fixed at construction and drives every enumeration in the library.
//
// Transition and bad-pair entries are stored as given. Nothing is
// range-checked on insertion so that validate_machine() can report malformed
// machines instead of the builder throwing halfway through.
class Machine {
 public:
  Machine() = default;
  Machine(int k, std::vector<std::string> states);

  int k() const { return k_; }
  std::size_t num_states() const { return states_.size(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::string& state_name(StateId s) const;

  // Throws InputError for unknown names.
  StateId state_id(std::string_view name) const;
  std::optional<StateId> find_state(std::string_view name) const;

  void add_transition(StateId from, Position i, Position j, StateId to);
  void add_bad(StateId s, StateId t);
  void set_bad(std::set<std::pair<StateId, StateId>> bad) { bad_ = std::move(bad); }

  // f(s,(i,j)); the empty set when unspecified. Throws InputError if s is not
  // a state or i, j are outside [k].
  const std::vector<StateId>& step(StateId s, Position i, Position j) const;

  const std::map<TransitionKey, std::vector<StateId>>& transitions() const {
    return transitions_;
  }
  // All (s,i,j,t) entries in key order.
  std::vector<Transition> transition_list() const;
  std::size_t transition_count() const;

  const std::set<std::pair<StateId, StateId>>& bad() const { return bad_; }
  bool is_bad(StateId s, StateId t) const { return bad_.contains({s, t}); }

  // Every f value has at most one element and every (s,i,i) value is empty.
  bool is_deterministic() const;
  // B equals the diagonal of S.
  bool is_cycling() const;

  // Optional claim that the machine is deterministic. validate_machine()
  // reports every entry that breaks a true claim.
  std::optional<bool> declared_deterministic() const { return declared_deterministic_; }
  void declare_deterministic(std::optional<bool> claim) { declared_deterministic_ = claim; }

  bool operator==(const Machine& other) const;

 private:
  int k_ = 2;
  std::vector<std::string> states_;
  std::unordered_map<std::string, StateId> index_;
  std::map<TransitionKey, std::vector<StateId>> transitions_;
  std::set<std::pair<StateId, StateId>> bad_;
  std::optional<bool> declared_deterministic_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool deterministic = false;
  bool cycling = false;

  bool ok() const { return violations.empty(); }
};

// Collects every structural problem of m for the given semantics. Nothing
// is thrown.
ValidationReport validate_machine(const Machine& m, Semantics semantics);

// Cycling when B is the diagonal, general otherwise.
Semantics natural_semantics(const Machine& m);

// Throws InputError listing the violations if validation fails.
void require_valid(const Machine& m, Semantics semantics);

}  // namespace badcycle

#include "badcycle/reductions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace badcycle {

void validate_cnf(const CnfInstance& phi) {
  std::set<std::string> names(phi.variables.begin(), phi.variables.end());
  if (names.size() != phi.variables.size()) throw InputError("repeated variable name");
  for (const auto& clause : phi.clauses) {
    for (const auto& l : clause) {
      if (l.variable >= phi.variables.size()) {
        throw InputError("literal refers to an undeclared variable");
      }
    }
  }
}

CnfInstance parse_dimacs(std::istream& in) {
  CnfInstance phi;
  std::string line;
  long declared_clauses = -1;
  std::vector<Literal> pending;
  bool header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c" || first[0] == 'c' || first == "%") continue;
    if (first == "p") {
      std::string format;
      long vars = 0;
      if (!(ls >> format >> vars >> declared_clauses) || format != "cnf" || vars < 0 ||
          declared_clauses < 0) {
        throw InputError("line " + std::to_string(line_no) + ": malformed problem line");
      }
      for (long v = 1; v <= vars; ++v) phi.variables.push_back(std::to_string(v));
      header = true;
      continue;
    }
    if (!header) throw InputError("clause before the problem line");
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      long value = 0;
      try {
        std::size_t used = 0;
        value = std::stol(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line_no) + ": bad literal '" + token + "'");
      }
      if (value == 0) {
        if (pending.size() != 3) {
          throw InputError("line " + std::to_string(line_no) +
                           ": clause does not have exactly three literals");
        }
        phi.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      long var = value < 0 ? -value : value;
      if (var > static_cast<long>(phi.variables.size())) {
        throw InputError("line " + std::to_string(line_no) + ": variable out of range");
      }
      pending.push_back({static_cast<std::size_t>(var - 1), value < 0});
    }
  }
  if (!pending.empty()) throw InputError("unterminated clause");
  if (!header) throw InputError("missing problem line");
  if (static_cast<long>(phi.clauses.size()) != declared_clauses) {
    throw InputError("clause count differs from the problem line");
  }
  return phi;
}

bool satisfies(const CnfInstance& phi, const Assignment& a) {
  if (a.size() != phi.variables.size()) return false;
  return std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const auto& clause) {
    return std::any_of(clause.begin(), clause.end(),
                       [&](const Literal& l) { return a[l.variable] != l.negated; });
  });
}

StateId literal_state(const Literal& l) { return 2 * l.variable + (l.negated ? 1 : 0); }

namespace {

StateId negation(StateId s) { return s ^ 1U; }

}  // namespace

Machine sat_to_machine(const CnfInstance& phi) {
  validate_cnf(phi);
  if (phi.clauses.empty()) throw InputError("instance has no clauses (k would be 0)");
  std::vector<std::string> names;
  for (const auto& v : phi.variables) {
    names.push_back(v);
    names.push_back("-" + v);
  }
  const int k = 3 * static_cast<int>(phi.clauses.size());
  Machine m(k, names);
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    const int i = static_cast<int>(c) + 1;
    StateId a = literal_state(phi.clauses[c][0]);
    StateId b = literal_state(phi.clauses[c][1]);
    StateId d = literal_state(phi.clauses[c][2]);
    m.add_transition(a, 3 * i - 2, 3 * i - 1, negation(b));
    m.add_transition(b, 3 * i - 1, 3 * i, negation(d));
    m.add_transition(d, 3 * i, 3 * i - 2, negation(a));
  }
  for (StateId s = 0; s < m.num_states(); ++s) m.add_bad(s, s);
  return m;
}

Assignment order_to_assignment(const CompatibleOrder& order, const CnfInstance& phi) {
  Machine m = sat_to_machine(phi);
  auto verdict = verify_compatible_order(m, order);
  if (!verdict.ok) throw InputError("order is not compatible: " + verdict.violations.front());
  std::vector<std::size_t> rank(m.num_states());
  std::size_t r = 0;
  for (const auto& sp : order) {
    if (sp.position == 1) rank[sp.state] = r++;
  }
  Assignment a(phi.variables.size());
  for (std::size_t v = 0; v < a.size(); ++v) a[v] = rank[2 * v] < rank[2 * v + 1];
  return a;
}

CompatibleOrder assignment_to_order(const Assignment& a, const CnfInstance& phi) {
  if (!satisfies(phi, a)) throw InputError("assignment does not satisfy the instance");
  Machine m = sat_to_machine(phi);
  const int k = m.k();
  std::vector<StateId> state_order;
  for (int pass = 0; pass < 2; ++pass) {
    for (StateId s = 0; s < m.num_states(); ++s) {
      bool literal_true = a[s / 2] != (s % 2 == 1);
      if (literal_true == (pass == 0)) state_order.push_back(s);
    }
  }
  std::vector<std::vector<std::size_t>> preds(m.num_states() * static_cast<std::size_t>(k));
  for (const auto& tr : m.transition_list()) {
    preds[carrier_index(tr.to, tr.j, k)].push_back(carrier_index(tr.from, tr.i, k));
  }
  std::vector<std::size_t> next(static_cast<std::size_t>(k), 0);
  std::vector<bool> placed(preds.size(), false);
  CompatibleOrder order;
  while (order.size() < preds.size()) {
    bool progressed = false;
    for (Position i = 1; i <= k && !progressed; ++i) {
      auto& pos = next[static_cast<std::size_t>(i - 1)];
      if (pos == state_order.size()) continue;
      std::size_t x = carrier_index(state_order[pos], i, k);
      if (std::all_of(preds[x].begin(), preds[x].end(),
                      [&](std::size_t p) { return placed[p]; })) {
        placed[x] = true;
        order.push_back({state_order[pos], i});
        ++pos;
        progressed = true;
      }
    }
    if (!progressed) throw std::logic_error("satisfying assignment did not yield an order");
  }
  return order;
}

}  // namespace badcycle

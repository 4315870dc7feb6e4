#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "badcycle/machine.hpp"
#include "badcycle/order_theory.hpp"

namespace badcycle {

struct Literal {
  std::size_t variable = 0;
  bool negated = false;

  bool operator==(const Literal&) const = default;
};

struct CnfInstance {
  std::vector<std::string> variables;
  std::vector<std::array<Literal, 3>> clauses;
};

// Throws InputError when a literal names an undeclared variable or variable
// names repeat.
void validate_cnf(const CnfInstance& phi);

// DIMACS "p cnf V C" text. Every clause must have exactly three literals;
// variables are named "1".."V".
CnfInstance parse_dimacs(std::istream& in);

using Assignment = std::vector<bool>;

bool satisfies(const CnfInstance& phi, const Assignment& a);

// State of a literal: 2*variable for x, 2*variable+1 for -x.
StateId literal_state(const Literal& l);

// States are the literals ("x" and "-x"), k = 3|C|, B = diagonal. Clause i
// with literals a, b, c gives f(a,(3i-2,3i-1)) = -b, f(b,(3i-1,3i)) = -c and
// f(c,(3i,3i-2)) = -a. Throws InputError for an invalid or empty instance.
Machine sat_to_machine(const CnfInstance& phi);

// Variable x is true iff (x,1) precedes (-x,1). Throws InputError if the
// order is not compatible with sat_to_machine(phi).
Assignment order_to_assignment(const CompatibleOrder& order, const CnfInstance& phi);

// Orders the true literals before the false ones (each group by state index)
// and merges the copies. Throws InputError if a does not satisfy phi.
CompatibleOrder assignment_to_order(const Assignment& a, const CnfInstance& phi);

}  // namespace badcycle

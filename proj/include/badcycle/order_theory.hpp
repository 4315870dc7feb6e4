#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "badcycle/errors.hpp"
#include "badcycle/graph_kernels.hpp"
#include "badcycle/hypergraph.hpp"
#include "badcycle/machine.hpp"

namespace badcycle {

// An equivalence relation on a carrier 0..n-1, a strict partial order on its
// classes and a linear order of the classes extending it.
struct OrderSystem {
  std::size_t carrier_size = 0;
  std::vector<std::vector<std::size_t>> classes;
  // Pairs (a, b) of class indices with a strictly below b.
  std::vector<std::pair<std::size_t, std::size_t>> partial;
  // Class indices from lowest to highest.
  std::vector<std::size_t> linear;

  bool operator==(const OrderSystem&) const = default;
};

// Structural problems (not a partition, partial not a strict order, linear
// not a permutation extending partial). Empty when well formed.
std::vector<std::string> order_system_problems(const OrderSystem& os);

// Same triple with classes listed in linear order, members sorted and pairs
// sorted. Two systems describe the same relations iff their canonical forms
// are equal.
OrderSystem canonical(const OrderSystem& os);

// Lookup tables over a well-formed order system.
class OrderSystemView {
 public:
  explicit OrderSystemView(const OrderSystem& os);

  std::size_t class_of(std::size_t x) const { return class_of_[x]; }
  // Position of x's class in the linear order.
  std::size_t rank(std::size_t x) const { return rank_[class_of_[x]]; }
  bool equivalent(std::size_t x, std::size_t y) const {
    return class_of_[x] == class_of_[y];
  }
  // Class of x is below or equal to class of y in the partial order.
  bool preceq(std::size_t x, std::size_t y) const;
  bool leq(std::size_t x, std::size_t y) const { return rank(x) <= rank(y); }

 private:
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> rank_;
  std::vector<std::vector<bool>> below_;
};

// The carrier S x [k] is numbered state-major: (s, i) -> s*k + (i-1).
inline std::size_t carrier_index(StateId s, Position i, int k) {
  return s * static_cast<std::size_t>(k) + static_cast<std::size_t>(i - 1);
}
inline StatePosition carrier_element(std::size_t x, int k) {
  return {x / static_cast<std::size_t>(k),
          static_cast<Position>(x % static_cast<std::size_t>(k)) + 1};
}

// Restriction of os (on S x [k]) to the copy S x {i}, as a system on S.
OrderSystem induced_on_copy(const OrderSystem& os, std::size_t num_states,
                            int k, Position i);

// A total order on S x [k], listed from lowest to highest.
using CompatibleOrder = std::vector<StatePosition>;

struct Verdict {
  bool ok = false;
  std::vector<std::string> violations;
};

// Checks that every copy S x {i} is ordered alike and every transition
// t in f(s,(i,j)) has (s,i) before (t,j). Throws InputError if `order` is
// not a total order of S x [k].
Verdict verify_compatible_order(const Machine& m, const CompatibleOrder& order);

// Canonically first compatible order, or nullopt if none exists. State
// orders are tried in lexicographic order of their index sequences; for each,
// the copies are merged by repeatedly taking the lowest-numbered copy whose
// next element has all its required predecessors placed. Throws
// BudgetExceeded.
std::optional<CompatibleOrder> find_compatible_order(const Machine& m,
                                                     SearchBudget budget = {});

// Compatibility of an order system on S x [k] with m: transitions weakly
// increase, the copies induce one and the same system on S, and no pair s, t
// with s below-or-equal t in that system is bad. Throws InputError when the
// carrier is not S x [k] or the system is malformed.
Verdict verify_order_system(const Machine& m, const OrderSystem& os);

struct OrderSystemSearch {
  std::vector<OrderSystem> systems;
  std::uint64_t nodes = 0;
};

// Enumerates compatible order systems on S x [k] in canonical order: set
// partitions of S as restricted growth strings, block orders
// lexicographically, partial orders built element by element from down-sets
// (in increasing bit-mask order), then merges of the k copies (copy subsets
// in increasing bit-mask order) and the partial order on the merged classes.
// Returns the first one, or all of them when `all` is set. Throws InputError
// for machines invalid under general semantics, BudgetExceeded on budget
// exhaustion.
OrderSystemSearch find_order_system(const Machine& m, bool all = false,
                                    SearchBudget budget = {});

// Singleton classes ordered by `order` with the partial order equal to it.
OrderSystem order_system_from_compatible_order(const Machine& m,
                                               const CompatibleOrder& order);

// Weighted digraph on S: t in f(s,(i,j)) gives an arc s -> t of weight j-i.
WeightedDigraph cycling_weight_graph(const Machine& m);

// Polynomial decision for cycling 2-machines: a compatible order exists iff
// no strong component of the weight graph has a closed walk of total weight
// 0, i.e. iff no component has both a cycle of mean <= 0 and one of mean
// >= 0. Throws InputError unless k = 2 and m is cycling.
bool decide_cycling_2machine(const Machine& m);

struct PathCheck {
  // First n with P_n not good, if any up to n_max.
  std::optional<std::size_t> first_bad;
};

// Runs the goodness decision on P_1..P_{n_max}.
PathCheck check_paths_good(const Machine& m, std::size_t n_max);

// Number of order systems on an n-element set, by enumeration.
std::uint64_t count_order_systems(std::size_t n);

}  // namespace badcycle

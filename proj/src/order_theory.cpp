#include "badcycle/order_theory.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "badcycle/goodness.hpp"

namespace badcycle {

std::vector<std::string> order_system_problems(const OrderSystem& os) {
  std::vector<std::string> problems;
  const std::size_t m = os.classes.size();
  std::vector<int> seen(os.carrier_size, 0);
  for (const auto& cls : os.classes) {
    if (cls.empty()) problems.push_back("empty class");
    for (std::size_t x : cls) {
      if (x >= os.carrier_size) {
        problems.push_back("class member " + std::to_string(x) +
                           " outside the carrier");
      } else {
        ++seen[x];
      }
    }
  }
  for (std::size_t x = 0; x < os.carrier_size; ++x) {
    if (seen[x] != 1) {
      problems.push_back("element " + std::to_string(x) + " lies in " +
                         std::to_string(seen[x]) + " classes");
    }
  }
  std::vector<std::size_t> rank(m, m);
  if (os.linear.size() != m) {
    problems.push_back("linear order does not list every class once");
  } else {
    for (std::size_t r = 0; r < m; ++r) {
      if (os.linear[r] >= m || rank[os.linear[r]] != m) {
        problems.push_back("linear order does not list every class once");
        break;
      }
      rank[os.linear[r]] = r;
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [a, b] : os.partial) {
    if (a >= m || b >= m) {
      problems.push_back("partial order names an unknown class");
      continue;
    }
    if (a == b) problems.push_back("partial order is not irreflexive");
    if (rank[a] < m && rank[b] < m && rank[a] >= rank[b]) {
      problems.push_back("linear order does not extend the partial order");
    }
    pairs.emplace(a, b);
  }
  for (const auto& [a, b] : pairs) {
    for (auto it = pairs.lower_bound({b, 0}); it != pairs.end() && it->first == b;
         ++it) {
      if (!pairs.contains({a, it->second})) {
        problems.push_back("partial order is not transitive");
        return problems;
      }
    }
  }
  return problems;
}

OrderSystem canonical(const OrderSystem& os) {
  OrderSystem out;
  out.carrier_size = os.carrier_size;
  std::vector<std::size_t> rank(os.classes.size());
  for (std::size_t r = 0; r < os.linear.size(); ++r) rank[os.linear[r]] = r;
  for (std::size_t r = 0; r < os.linear.size(); ++r) {
    auto cls = os.classes[os.linear[r]];
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
    out.linear.push_back(r);
  }
  for (const auto& [a, b] : os.partial) out.partial.emplace_back(rank[a], rank[b]);
  std::sort(out.partial.begin(), out.partial.end());
  out.partial.erase(std::unique(out.partial.begin(), out.partial.end()),
                    out.partial.end());
  return out;
}

OrderSystemView::OrderSystemView(const OrderSystem& os)
    : class_of_(os.carrier_size, 0),
      rank_(os.classes.size(), 0),
      below_(os.classes.size(), std::vector<bool>(os.classes.size(), false)) {
  for (std::size_t c = 0; c < os.classes.size(); ++c) {
    for (std::size_t x : os.classes[c]) class_of_.at(x) = c;
  }
  for (std::size_t r = 0; r < os.linear.size(); ++r) rank_.at(os.linear[r]) = r;
  for (const auto& [a, b] : os.partial) below_.at(a).at(b) = true;
}

bool OrderSystemView::preceq(std::size_t x, std::size_t y) const {
  std::size_t a = class_of_[x], b = class_of_[y];
  return a == b || below_[a][b];
}

OrderSystem induced_on_copy(const OrderSystem& os, std::size_t num_states,
                            int k, Position i) {
  OrderSystemView view(os);
  std::vector<StateId> states(num_states);
  std::iota(states.begin(), states.end(), StateId{0});
  auto at = [&](StateId s) { return carrier_index(s, i, k); };
  std::stable_sort(states.begin(), states.end(), [&](StateId a, StateId b) {
    return view.rank(at(a)) < view.rank(at(b));
  });
  OrderSystem out;
  out.carrier_size = num_states;
  std::vector<StateId> representative;
  for (StateId s : states) {
    if (!out.classes.empty() && view.equivalent(at(s), at(representative.back()))) {
      out.classes.back().push_back(s);
    } else {
      out.classes.push_back({s});
      representative.push_back(s);
    }
  }
  for (std::size_t a = 0; a < out.classes.size(); ++a) {
    std::sort(out.classes[a].begin(), out.classes[a].end());
    out.linear.push_back(a);
    for (std::size_t b = a + 1; b < out.classes.size(); ++b) {
      if (view.preceq(at(representative[a]), at(representative[b]))) {
        out.partial.emplace_back(a, b);
      }
    }
  }
  return out;
}

namespace {

std::string describe(const Machine& m, StateId s, Position i) {
  return "(" + m.state_name(s) + "," + std::to_string(i) + ")";
}

}  // namespace

Verdict verify_compatible_order(const Machine& m, const CompatibleOrder& order) {
  require_valid(m, Semantics::cycling);
  const std::size_t n = m.num_states();
  const int k = m.k();
  const std::size_t total = n * static_cast<std::size_t>(k);
  if (order.size() != total) {
    throw InputError("order lists " + std::to_string(order.size()) +
                     " elements, expected " + std::to_string(total));
  }
  std::vector<std::size_t> rank(total, total);
  for (std::size_t r = 0; r < order.size(); ++r) {
    const auto& [s, i] = order[r];
    if (s >= n || i < 1 || i > k) {
      throw InputError("order element outside S x [k]");
    }
    std::size_t x = carrier_index(s, i, k);
    if (rank[x] != total) throw InputError("order repeats an element");
    rank[x] = r;
  }

  Verdict verdict;
  auto copy_sequence = [&](Position i) {
    std::vector<StateId> seq;
    for (const auto& sp : order) {
      if (sp.position == i) seq.push_back(sp.state);
    }
    return seq;
  };
  const auto first = copy_sequence(1);
  for (Position i = 2; i <= k; ++i) {
    if (copy_sequence(i) != first) {
      verdict.violations.push_back("copy " + std::to_string(i) +
                                   " is ordered differently from copy 1");
    }
  }
  for (const auto& tr : m.transition_list()) {
    if (rank[carrier_index(tr.from, tr.i, k)] >=
        rank[carrier_index(tr.to, tr.j, k)]) {
      verdict.violations.push_back(
          "f(" + m.state_name(tr.from) + ",(" + std::to_string(tr.i) + "," +
          std::to_string(tr.j) + ")) contains " + m.state_name(tr.to) +
          " but " + describe(m, tr.from, tr.i) + " is not below " +
          describe(m, tr.to, tr.j));
    }
  }
  verdict.ok = verdict.violations.empty();
  return verdict;
}

namespace {

// Precedence constraints on S x [k] for a (possibly partial) state order.
class InterleavingCheck {
 public:
  explicit InterleavingCheck(const Machine& m)
      : n_(m.num_states()), k_(m.k()), total_(n_ * static_cast<std::size_t>(k_)) {
    preds_.assign(total_, {});
    succ_.assign(total_, {});
    for (const auto& tr : m.transition_list()) {
      std::size_t from = carrier_index(tr.from, tr.i, k_);
      std::size_t to = carrier_index(tr.to, tr.j, k_);
      succ_[from].push_back(to);
      preds_[to].push_back(from);
    }
  }

  // Whether the constraints stay acyclic when the states in `prefix` come
  // first, in that order, in every copy and all remaining states follow.
  bool feasible(const std::vector<StateId>& prefix,
                const std::vector<bool>& placed) const {
    std::vector<int> indegree(total_, 0);
    std::vector<std::vector<std::size_t>> extra(total_);
    for (std::size_t x = 0; x < total_; ++x) {
      for (std::size_t y : succ_[x]) ++indegree[y];
    }
    for (Position i = 1; i <= k_; ++i) {
      for (std::size_t r = 1; r < prefix.size(); ++r) {
        extra[carrier_index(prefix[r - 1], i, k_)].push_back(
            carrier_index(prefix[r], i, k_));
      }
      if (prefix.empty() || prefix.size() == n_) continue;
      std::size_t last = carrier_index(prefix.back(), i, k_);
      for (StateId s = 0; s < n_; ++s) {
        if (!placed[s]) extra[last].push_back(carrier_index(s, i, k_));
      }
    }
    for (const auto& row : extra) {
      for (std::size_t y : row) ++indegree[y];
    }
    std::vector<std::size_t> ready;
    for (std::size_t x = 0; x < total_; ++x) {
      if (indegree[x] == 0) ready.push_back(x);
    }
    std::size_t done = 0;
    while (!ready.empty()) {
      std::size_t x = ready.back();
      ready.pop_back();
      ++done;
      for (std::size_t y : succ_[x]) {
        if (--indegree[y] == 0) ready.push_back(y);
      }
      for (std::size_t y : extra[x]) {
        if (--indegree[y] == 0) ready.push_back(y);
      }
    }
    return done == total_;
  }

  // Merges the k copies of a full state order: repeatedly emit the next
  // element of the lowest-numbered copy whose transition predecessors are
  // all placed. Returns nullopt if the merge gets stuck.
  std::optional<CompatibleOrder> merge(const std::vector<StateId>& order) const {
    std::vector<std::size_t> next(static_cast<std::size_t>(k_), 0);
    std::vector<bool> emitted(total_, false);
    CompatibleOrder out;
    while (out.size() < total_) {
      bool progressed = false;
      for (Position i = 1; i <= k_; ++i) {
        auto& pos = next[static_cast<std::size_t>(i - 1)];
        if (pos == n_) continue;
        std::size_t x = carrier_index(order[pos], i, k_);
        bool ready = std::all_of(preds_[x].begin(), preds_[x].end(),
                                 [&](std::size_t p) { return emitted[p]; });
        if (!ready) continue;
        emitted[x] = true;
        out.push_back({order[pos], i});
        ++pos;
        progressed = true;
        break;
      }
      if (!progressed) return std::nullopt;
    }
    return out;
  }

 private:
  std::size_t n_;
  int k_;
  std::size_t total_;
  std::vector<std::vector<std::size_t>> preds_;
  std::vector<std::vector<std::size_t>> succ_;
};

}  // namespace

std::optional<CompatibleOrder> find_compatible_order(const Machine& m,
                                                     SearchBudget budget) {
  require_valid(m, Semantics::cycling);
  const std::size_t n = m.num_states();
  InterleavingCheck check(m);
  std::vector<StateId> prefix;
  std::vector<bool> placed(n, false);
  std::optional<CompatibleOrder> result;

  auto dfs = [&](auto&& self) -> bool {
    if (!budget.tick()) {
      throw BudgetExceeded("compatible order search budget exhausted");
    }
    if (!check.feasible(prefix, placed)) return false;
    if (prefix.size() == n) {
      result = check.merge(prefix);
      return result.has_value();
    }
    for (StateId s = 0; s < n; ++s) {
      if (placed[s]) continue;
      placed[s] = true;
      prefix.push_back(s);
      if (self(self)) return true;
      prefix.pop_back();
      placed[s] = false;
    }
    return false;
  };
  dfs(dfs);
  return result;
}

Verdict verify_order_system(const Machine& m, const OrderSystem& os) {
  const std::size_t n = m.num_states();
  const int k = m.k();
  if (os.carrier_size != n * static_cast<std::size_t>(k)) {
    throw InputError("order system carrier has " +
                     std::to_string(os.carrier_size) + " elements, expected |S|*k = " +
                     std::to_string(n * static_cast<std::size_t>(k)));
  }
  if (auto problems = order_system_problems(os); !problems.empty()) {
    throw InputError("malformed order system: " + problems.front());
  }
  OrderSystemView view(os);
  Verdict verdict;
  for (const auto& tr : m.transition_list()) {
    if (tr.i < 1 || tr.i > k || tr.j < 1 || tr.j > k) continue;
    if (!view.preceq(carrier_index(tr.from, tr.i, k),
                     carrier_index(tr.to, tr.j, k))) {
      verdict.violations.push_back(
          "transition f(" + m.state_name(tr.from) + ",(" + std::to_string(tr.i) +
          "," + std::to_string(tr.j) + ")) -> " + m.state_name(tr.to) +
          " decreases: class of " + describe(m, tr.from, tr.i) +
          " is not below class of " + describe(m, tr.to, tr.j));
    }
  }
  const OrderSystem first = induced_on_copy(os, n, k, 1);
  for (Position i = 2; i <= k; ++i) {
    if (induced_on_copy(os, n, k, i) != first) {
      verdict.violations.push_back("copy " + std::to_string(i) +
                                   " induces a different order system than copy 1");
    }
  }
  for (StateId s = 0; s < n; ++s) {
    for (StateId t = 0; t < n; ++t) {
      if (m.is_bad(s, t) &&
          view.preceq(carrier_index(s, 1, k), carrier_index(t, 1, k))) {
        verdict.violations.push_back("bad pair (" + m.state_name(s) + "," +
                                     m.state_name(t) +
                                     ") is ordered in the induced system");
      }
    }
  }
  verdict.ok = verdict.violations.empty();
  return verdict;
}

namespace {

using Mask = std::uint32_t;

// Calls visit(mask) for every subset D of {0..b-1} (as a bit mask, in
// increasing numeric order) that is closed downwards under `below`, contains
// `required` and avoids `forbidden`. below[a] is the mask of elements
// strictly below a.
template <typename Visit>
bool for_each_down_set(std::size_t b, const std::vector<Mask>& below,
                       Mask required, Mask forbidden, Visit&& visit) {
  for (Mask d = 0; d < (Mask{1} << b); ++d) {
    if ((d & required) != required || (d & forbidden) != 0) continue;
    bool closed = true;
    for (std::size_t a = 0; a < b && closed; ++a) {
      if (((d >> a) & 1U) && (below[a] & ~d) != 0) closed = false;
    }
    if (closed && !visit(d)) return false;
  }
  return true;
}

// Restricted growth strings of length n, lexicographic.
template <typename Visit>
bool for_each_partition(std::size_t n, Visit&& visit) {
  std::vector<std::size_t> rgs(n, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t blocks) -> bool {
    if (pos == n) return visit(rgs, blocks);
    for (std::size_t b = 0; b <= blocks && b <= pos; ++b) {
      rgs[pos] = b;
      if (!self(self, pos + 1, std::max(blocks, b + 1))) return false;
    }
    return true;
  };
  if (n == 0) return visit(rgs, 0);
  return rec(rec, 0, 0);
}

// Naturally labelled strict partial orders on 0..m-1 (a < b whenever a is
// below b), built one element at a time by choosing its down-set.
// required[b] / forbidden[b] constrain the down-set of b.
template <typename Visit>
bool for_each_labelled_poset(std::size_t m, const std::vector<Mask>& required,
                             const std::vector<Mask>& forbidden,
                             SearchBudget& budget, Visit&& visit) {
  std::vector<Mask> below(m, 0);
  auto rec = [&](auto&& self, std::size_t b) -> bool {
    if (!budget.tick()) {
      throw BudgetExceeded("order system search budget exhausted");
    }
    if (b == m) return visit(below);
    return for_each_down_set(b, below, required[b], forbidden[b], [&](Mask d) {
      below[b] = d;
      return self(self, b + 1);
    });
  };
  return rec(rec, 0);
}

class OrderSystemEnumerator {
 public:
  OrderSystemEnumerator(const Machine& m, bool all, SearchBudget& budget)
      : m_(m),
        n_(m.num_states()),
        k_(m.k()),
        all_(all),
        budget_(budget),
        transitions_(m.transition_list()) {}

  std::vector<OrderSystem> run() {
    for_each_partition(n_, [&](const std::vector<std::size_t>& rgs,
                               std::size_t blocks) { return on_partition(rgs, blocks); });
    return std::move(found_);
  }

 private:
  bool on_partition(const std::vector<std::size_t>& rgs, std::size_t blocks) {
    if (!budget_.tick()) {
      throw BudgetExceeded("order system search budget exhausted");
    }
    for (const auto& [s, t] : m_.bad()) {
      if (rgs[s] == rgs[t]) return true;  // s ~ t would make s below-or-equal t
    }
    block_of_ = rgs;
    std::vector<std::size_t> perm(blocks);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
      // perm[r] is the block at rank r.
      state_rank_.assign(n_, 0);
      std::vector<std::size_t> rank_of_block(blocks);
      for (std::size_t r = 0; r < blocks; ++r) rank_of_block[perm[r]] = r;
      for (StateId s = 0; s < n_; ++s) state_rank_[s] = rank_of_block[rgs[s]];
      if (!on_block_order(blocks)) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
  }

  bool on_block_order(std::size_t blocks) {
    std::vector<Mask> required(blocks, 0), forbidden(blocks, 0);
    for (const auto& [s, t] : m_.bad()) {
      std::size_t a = state_rank_[s], b = state_rank_[t];
      if (a < b) forbidden[b] |= Mask{1} << a;
    }
    for (const auto& tr : transitions_) {
      if (tr.i != tr.j) continue;
      std::size_t a = state_rank_[tr.from], b = state_rank_[tr.to];
      if (a > b) return true;
      if (a < b) required[b] |= Mask{1} << a;
    }
    return for_each_labelled_poset(blocks, required, forbidden, budget_,
                                   [&](const std::vector<Mask>& below) {
                                     induced_below_ = below;
                                     return lift(blocks);
                                   });
  }

  // Merges the k copies of the block chain into lifted classes. Each lifted
  // class takes the next block of a nonempty set of copies.
  bool lift(std::size_t blocks) {
    lifted_.clear();
    next_.assign(static_cast<std::size_t>(k_), 0);
    class_of_.assign(n_ * static_cast<std::size_t>(k_), kNone);
    return merge_step(blocks);
  }

  bool merge_step(std::size_t blocks) {
    if (!budget_.tick()) {
      throw BudgetExceeded("order system search budget exhausted");
    }
    const auto copies = static_cast<std::size_t>(k_);
    bool finished = std::all_of(next_.begin(), next_.end(),
                                [&](std::size_t p) { return p == blocks; });
    if (finished) return relate_classes();
    Mask open = 0;
    for (std::size_t i = 0; i < copies; ++i) {
      if (next_[i] < blocks) open |= Mask{1} << i;
    }
    for (Mask pick = 1; pick < (Mask{1} << copies); ++pick) {
      if ((pick & open) != pick) continue;
      const std::size_t c = lifted_.size();
      std::vector<std::pair<std::size_t, Position>> members;  // (rank, copy)
      for (std::size_t i = 0; i < copies; ++i) {
        if ((pick >> i) & 1U) members.emplace_back(next_[i], static_cast<Position>(i + 1));
      }
      for (const auto& [r, i] : members) {
        for (StateId s = 0; s < n_; ++s) {
          if (state_rank_[s] == r) class_of_[carrier_index(s, i, k_)] = c;
        }
      }
      if (transitions_respect_linear()) {
        lifted_.push_back(members);
        for (const auto& [r, i] : members) ++next_[static_cast<std::size_t>(i - 1)];
        bool go_on = merge_step(blocks);
        for (const auto& [r, i] : members) --next_[static_cast<std::size_t>(i - 1)];
        lifted_.pop_back();
        if (!go_on) return false;
      }
      for (const auto& [r, i] : members) {
        for (StateId s = 0; s < n_; ++s) {
          if (state_rank_[s] == r) class_of_[carrier_index(s, i, k_)] = kNone;
        }
      }
    }
    return true;
  }

  // A transition target may not be placed in a class before its source.
  bool transitions_respect_linear() const {
    for (const auto& tr : transitions_) {
      std::size_t to = class_of_[carrier_index(tr.to, tr.j, k_)];
      if (to == kNone) continue;
      std::size_t from = class_of_[carrier_index(tr.from, tr.i, k_)];
      if (from == kNone || from > to) return false;
    }
    return true;
  }

  bool relate_classes() {
    const std::size_t count = lifted_.size();
    std::vector<Mask> required(count, 0), forbidden(count, 0);
    // Within one copy the relation must reproduce the induced partial order.
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = a + 1; b < count; ++b) {
        for (const auto& [ra, ia] : lifted_[a]) {
          for (const auto& [rb, ib] : lifted_[b]) {
            if (ia != ib) continue;
            if ((induced_below_[rb] >> ra) & 1U) {
              required[b] |= Mask{1} << a;
            } else {
              forbidden[b] |= Mask{1} << a;
            }
          }
        }
      }
    }
    for (const auto& tr : transitions_) {
      std::size_t a = class_of_[carrier_index(tr.from, tr.i, k_)];
      std::size_t b = class_of_[carrier_index(tr.to, tr.j, k_)];
      if (a != b) required[b] |= Mask{1} << a;
    }
    for (std::size_t b = 0; b < count; ++b) {
      if (required[b] & forbidden[b]) return true;
    }
    return for_each_labelled_poset(count, required, forbidden, budget_,
                                   [&](const std::vector<Mask>& below) {
                                     found_.push_back(build(below));
                                     return all_;
                                   });
  }

  OrderSystem build(const std::vector<Mask>& below) const {
    OrderSystem os;
    os.carrier_size = n_ * static_cast<std::size_t>(k_);
    os.classes.assign(lifted_.size(), {});
    for (std::size_t x = 0; x < os.carrier_size; ++x) {
      os.classes[class_of_[x]].push_back(x);
    }
    for (std::size_t b = 0; b < lifted_.size(); ++b) {
      os.linear.push_back(b);
      for (std::size_t a = 0; a < b; ++a) {
        if ((below[b] >> a) & 1U) os.partial.emplace_back(a, b);
      }
    }
    std::sort(os.partial.begin(), os.partial.end());
    return os;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  const Machine& m_;
  std::size_t n_;
  int k_;
  bool all_;
  SearchBudget& budget_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> block_of_;
  std::vector<std::size_t> state_rank_;
  std::vector<Mask> induced_below_;
  std::vector<std::vector<std::pair<std::size_t, Position>>> lifted_;
  std::vector<std::size_t> next_;
  std::vector<std::size_t> class_of_;
  std::vector<OrderSystem> found_;
};

}  // namespace

OrderSystemSearch find_order_system(const Machine& m, bool all,
                                    SearchBudget budget) {
  require_valid(m, Semantics::general);
  if (m.num_states() * static_cast<std::size_t>(m.k()) > 31) {
    throw InputError("order system search supports |S|*k <= 31");
  }
  OrderSystemEnumerator enumerator(m, all, budget);
  OrderSystemSearch result;
  result.systems = enumerator.run();
  result.nodes = budget.used();
  return result;
}

OrderSystem order_system_from_compatible_order(const Machine& m,
                                               const CompatibleOrder& order) {
  OrderSystem os;
  os.carrier_size = m.num_states() * static_cast<std::size_t>(m.k());
  for (std::size_t r = 0; r < order.size(); ++r) {
    os.classes.push_back({carrier_index(order[r].state, order[r].position, m.k())});
    os.linear.push_back(r);
    for (std::size_t q = 0; q < r; ++q) os.partial.emplace_back(q, r);
  }
  std::sort(os.partial.begin(), os.partial.end());
  return os;
}

WeightedDigraph cycling_weight_graph(const Machine& m) {
  WeightedDigraph g(m.num_states());
  for (const auto& tr : m.transition_list()) {
    g.add_arc(tr.from, tr.to, Rational(tr.j - tr.i));
  }
  return g;
}

bool decide_cycling_2machine(const Machine& m) {
  if (m.k() != 2) throw InputError("decision procedure needs a 2-machine");
  require_valid(m, Semantics::cycling);
  const auto g = cycling_weight_graph(m);
  const auto scc = strong_components(g.skeleton());
  for (std::size_t c = 0; c < scc.count(); ++c) {
    if (!scc.has_cycle[c]) continue;
    WeightedDigraph part(g.size());
    for (const auto& a : g.arcs) {
      if (scc.component[a.from] == c && scc.component[a.to] == c) {
        part.arcs.push_back(a);
      }
    }
    auto low = min_cycle_mean(part);
    auto high = max_cycle_mean(part);
    if (*low <= 0 && *high >= 0) return false;
  }
  return true;
}

PathCheck check_paths_good(const Machine& m, std::size_t n_max) {
  if (m.k() != 2) throw InputError("path check needs a 2-machine");
  require_valid(m, Semantics::cycling);
  PathCheck out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (!is_good(path_digraph(n), m, Semantics::cycling).good) {
      out.first_bad = n;
      break;
    }
  }
  return out;
}

std::uint64_t count_order_systems(std::size_t n) {
  std::uint64_t count = 0;
  SearchBudget budget = SearchBudget::unlimited();
  for_each_partition(n, [&](const std::vector<std::size_t>&, std::size_t blocks) {
    std::uint64_t orders = 1;
    for (std::size_t b = 2; b <= blocks; ++b) orders *= b;
    std::uint64_t posets = 0;
    std::vector<Mask> none(blocks, 0);
    for_each_labelled_poset(blocks, none, none, budget,
                            [&](const std::vector<Mask>&) {
                              ++posets;
                              return true;
                            });
    count += orders * posets;
    return true;
  });
  return count;
}

}  // namespace badcycle

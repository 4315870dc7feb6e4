#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace badcycle {

// Malformed input: unknown names, out-of-range positions, bad file syntax,
// violated preconditions.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive search ran out of node expansions before reaching a verdict.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what,
                          std::optional<long> lower = std::nullopt,
                          std::optional<long> upper = std::nullopt)
      : std::runtime_error(what), lower_bound(lower), upper_bound(upper) {}

  std::optional<long> lower_bound;
  std::optional<long> upper_bound;
};

// Counts node expansions of a search. A limit of zero means unlimited.
class SearchBudget {
 public:
  SearchBudget() : limit_(default_limit()) {}
  explicit SearchBudget(std::uint64_t limit) : limit_(limit) {}

  static SearchBudget unlimited() { return SearchBudget(0); }

  // Reads BADCYCLE_BUDGET, falling back to 2^32 expansions.
  static std::uint64_t default_limit() {
    if (const char* env = std::getenv("BADCYCLE_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0') return v;
    }
    return std::uint64_t{1} << 32;
  }

  // Returns false once the limit is reached.
  bool tick() {
    ++used_;
    return limit_ == 0 || used_ <= limit_;
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace badcycle

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recamp/instance.hpp"

namespace recamp {

struct SolveStatistics {
  std::uint64_t nodes = 0;        // search nodes (brute force, cover search)
  std::uint64_t evaluations = 0;  // district elections evaluated
  std::size_t universe_size = 0;  // cover system |U|
  std::size_t cover_members = 0;  // cover system |S|
  bool system_built = false;
};

struct SolveResult {
  std::optional<Assignment> assignment;  // engaged iff the answer is Yes
  std::string algorithm;
  SolveStatistics stats;
  std::optional<std::int64_t> cost;  // placement cost of a Yes on a priced instance

  [[nodiscard]] bool yes() const noexcept { return assignment.has_value(); }
};

// Bound must be AtMost(1) (kWrongVariant otherwise). Unpriced instances use
// zero weights and no budget.
[[nodiscard]] SolveResult solve_crc1(const RecampaignInstance& inst);

// Rule must be TrivialScoring (kWrongVariant otherwise); any bound.
[[nodiscard]] SolveResult solve_trivial_scoring(const RecampaignInstance& inst);

struct CoverMember {
  std::size_t district = 0;
  std::uint64_t candidates = 0;  // bitmask over A in name order
  std::int64_t weight = 0;
};

struct CoverSystem {
  std::size_t candidate_count = 0;
  std::size_t district_count = 0;
  std::vector<CoverMember> members;  // grouped by district, ascending
  std::int64_t cap = 0;

  [[nodiscard]] std::size_t universe_size() const noexcept {
    return candidate_count + district_count;
  }
};

// Members A' ∪ {i}: the empty A', plus every nonempty A' with |A'| <= ell
// that district i accepts (all of A' win, at most ell winners) and whose
// price fits the budget. Unpriced instances are lifted to unit prices first.
// Throws kWrongVariant when unbounded and kResource when the enumeration
// would exceed the node budget or |A| > 64.
[[nodiscard]] CoverSystem build_exact_cover_system(const RecampaignInstance& inst);
[[nodiscard]] CoverSystem build_exact_cover_system(const RecampaignInstance& inst,
                                                   std::uint64_t node_budget);

// Rejects when n > k * ell without building the system.
[[nodiscard]] SolveResult solve_fpt(const RecampaignInstance& inst);

// The node budget from RECAMP_NODE_BUDGET, else 10^7.
[[nodiscard]] std::uint64_t default_node_budget();

// Lexicographically first accepted placement (first candidate in name order
// is the most significant digit, districts ascending). Throws kResource when
// k^n exceeds the budget.
[[nodiscard]] SolveResult solve_brute(const RecampaignInstance& inst);
[[nodiscard]] SolveResult solve_brute(const RecampaignInstance& inst, std::uint64_t node_budget);

// AllIfThree, AtMost(3), unpriced; kWrongVariant otherwise.
[[nodiscard]] SolveResult solve_all_if_three_bounded(const RecampaignInstance& inst);

// AllIfFourElsePlurality, unbounded, unpriced; kWrongVariant otherwise.
[[nodiscard]] SolveResult solve_all_if_four_unbounded(const RecampaignInstance& inst);

// Specials, then trivial scoring, then AtMost(1) matching, then the cover
// search when bounded, then brute force.
[[nodiscard]] SolveResult solve_auto(const RecampaignInstance& inst);

}  // namespace recamp

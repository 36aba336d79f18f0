#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "recamp/election.hpp"

namespace recamp {

// One predrawn district. Ballots rank (or approve from) the district's own
// candidates together with every additional candidate of the instance; the
// election after a placement is obtained by restricting them to C_i ∪ A_i.
struct District {
  CandidateSet candidates;
  std::vector<Vote> votes;
  friend bool operator==(const District&, const District&) = default;
};

class WinnerBound {
 public:
  [[nodiscard]] static WinnerBound unbounded() { return WinnerBound{}; }
  // Throws kPrecondition when ell == 0.
  [[nodiscard]] static WinnerBound at_most(std::size_t ell);

  [[nodiscard]] bool bounded() const noexcept { return ell_.has_value(); }
  // Only meaningful when bounded().
  [[nodiscard]] std::size_t limit() const noexcept { return ell_.value_or(0); }
  [[nodiscard]] bool admits(std::size_t winner_count) const noexcept {
    return !ell_ || winner_count <= *ell_;
  }
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const WinnerBound&, const WinnerBound&) = default;

 private:
  std::optional<std::size_t> ell_;
};

struct Pricing {
  // prices[i][j]: cost of placing the j-th additional candidate (name order)
  // into district i. Zero is allowed.
  std::vector<std::vector<std::int64_t>> prices;
  std::int64_t budget = 0;
  friend bool operator==(const Pricing&, const Pricing&) = default;
};

class RecampaignInstance {
 public:
  // Validates: k >= 1; A disjoint from every district; ballots are
  // permutations of (subsets of) C_i ∪ A; ballot types suit the rule; prices
  // are total, nonnegative, and the budget is nonnegative.
  RecampaignInstance(VotingRuleSpec rule, std::vector<District> districts,
                     CandidateSet additional, WinnerBound bound,
                     std::optional<Pricing> pricing = std::nullopt);

  [[nodiscard]] const VotingRuleSpec& rule() const noexcept { return rule_; }
  [[nodiscard]] const std::vector<District>& districts() const noexcept { return districts_; }
  [[nodiscard]] const CandidateSet& additional() const noexcept { return additional_; }
  [[nodiscard]] const WinnerBound& bound() const noexcept { return bound_; }
  [[nodiscard]] const std::optional<Pricing>& pricing() const noexcept { return pricing_; }

  [[nodiscard]] std::size_t district_count() const noexcept { return districts_.size(); }
  [[nodiscard]] std::size_t additional_count() const noexcept { return additional_.size(); }

  // Additional candidates in name order; positions are the "candidate
  // indices" used by prices and the solvers.
  [[nodiscard]] const std::vector<CandidateId>& additional_order() const noexcept {
    return additional_order_;
  }
  // Throws kUnknownCandidate.
  [[nodiscard]] std::size_t index_of(const CandidateId& a) const;
  // Zero for unpriced instances.
  [[nodiscard]] std::int64_t price(std::size_t district, std::size_t candidate) const;

  [[nodiscard]] RecampaignInstance with_bound(WinnerBound bound) const;
  [[nodiscard]] RecampaignInstance with_pricing(std::optional<Pricing> pricing) const;

  friend bool operator==(const RecampaignInstance& a, const RecampaignInstance& b) {
    return a.rule_ == b.rule_ && a.districts_ == b.districts_ &&
           a.additional_ == b.additional_ && a.bound_ == b.bound_ && a.pricing_ == b.pricing_;
  }

 private:
  VotingRuleSpec rule_;
  std::vector<District> districts_;
  CandidateSet additional_;
  WinnerBound bound_;
  std::optional<Pricing> pricing_;
  std::vector<CandidateId> additional_order_;
};

// Placement of each additional candidate into a district, by zero-based
// district position. Documents and reports number districts 1..k.
struct Assignment {
  std::map<CandidateId, std::size_t> placement;
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

enum class ViolationKind { kLosingCandidate, kWinnerBoundExceeded, kBudgetExceeded };

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::optional<std::size_t> district;  // zero-based
  std::optional<CandidateId> candidate;
  std::string message;
};

struct VerificationReport {
  bool valid = false;
  // Winners of every district after placement (untouched districts included).
  std::vector<WinnerSet> district_winners;
  std::vector<Violation> violations;
  std::optional<std::int64_t> total_cost;
};

// The election held in district i once `placed` (⊆ A) has been added.
[[nodiscard]] Election placed_election(const RecampaignInstance& inst, std::size_t district,
                                       const CandidateSet& placed);

// Throws kShape unless the assignment is total on A with in-range districts.
[[nodiscard]] VerificationReport verify(const RecampaignInstance& inst, const Assignment& asg);

// Single district (C - {p}, V), A = {p}, unbounded, unpriced.
[[nodiscard]] RecampaignInstance from_winner_problem(const Election& e, const CandidateId& p,
                                                     const VotingRuleSpec& rule);

// Same instance with unit prices and budget |A|. Throws kPrecondition if priced.
[[nodiscard]] RecampaignInstance lift_to_priced(const RecampaignInstance& inst);

struct RandomInstanceParams {
  std::size_t districts = 1;
  std::size_t additional = 0;
  VotingRuleSpec rule = rules::TApproval{1};
  std::size_t min_district_candidates = 0;
  std::size_t max_district_candidates = 3;
  std::size_t max_votes = 5;
  WinnerBound bound = WinnerBound::unbounded();
  bool priced = false;
};

// Deterministic for a fixed seed. Ballots are uniform random rankings; prices
// uniform in [0, 10]; budget uniform in [0, 10n].
[[nodiscard]] RecampaignInstance random_instance(const RandomInstanceParams& params,
                                                 std::uint64_t seed);

}  // namespace recamp

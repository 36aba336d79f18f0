#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "recamp/instance.hpp"

namespace recamp {

struct X3CInstance {
  CandidateSet universe;
  std::vector<CandidateSet> triples;  // repeats allowed

  // Throws kShape unless |universe| is a multiple of 3 and every triple is a
  // 3-subset of it.
  void validate() const;
  [[nodiscard]] std::size_t m() const noexcept { return universe.size() / 3; }
};

// W, X, Y in input order; new elements are appended by the padding step.
struct ThreeDimMatching {
  std::vector<CandidateId> w;
  std::vector<CandidateId> x;
  std::vector<CandidateId> y;
  std::vector<std::array<CandidateId, 3>> triples;  // (w, x, y)

  [[nodiscard]] std::size_t k() const noexcept { return w.size(); }
  // Throws kShape: sides disjoint, of equal size, no repeated elements or
  // triples, every triple in W x X x Y, each element in at most 3 triples.
  void validate_restricted() const;
  // validate_restricted() plus every element in exactly 3 triples.
  void validate_exactly3() const;
  [[nodiscard]] bool is_exactly3() const;
};

// Monotone formula; each clause is a 3-set of variables. Satisfied when
// exactly one variable of every clause is true.
struct OneInThreeSat {
  std::vector<CandidateId> variables;
  std::vector<CandidateSet> clauses;

  // Throws kShape unless every clause has 3 declared variables and every
  // variable occurs in exactly 3 clauses.
  void validate() const;
};

// The deciders throw kResource when their search passes the node budget.
[[nodiscard]] bool decide_x3c(const X3CInstance& inst);
[[nodiscard]] bool decide_x3c(const X3CInstance& inst, std::uint64_t node_budget);
[[nodiscard]] bool decide_3dm(const ThreeDimMatching& inst);
[[nodiscard]] bool decide_3dm(const ThreeDimMatching& inst, std::uint64_t node_budget);
[[nodiscard]] bool decide_one_in_three_sat(const OneInThreeSat& f);
[[nodiscard]] bool decide_one_in_three_sat(const OneInThreeSat& f, std::uint64_t node_budget);

// Pads a restricted instance until every element sits in exactly three
// triples. `steps`, when given, receives the number of padding rounds.
[[nodiscard]] ThreeDimMatching pad_to_exactly3(const ThreeDimMatching& inst,
                                               std::size_t* steps = nullptr);

// One empty district per triple under all-if-three, bound at-most(3);
// placing a candidate outside its triple's district costs more than the
// whole budget.
[[nodiscard]] RecampaignInstance x3c_to_all_if_three_priced(const X3CInstance& inst);

// One candidate-free district per y under 1-approval, bound at-most(2),
// A = W ∪ X. Requires an exactly-3 instance (kShape otherwise).
[[nodiscard]] RecampaignInstance matching_to_plurality(const ThreeDimMatching& inst);

struct NontrivialVector {
  std::size_t m = 0;      // candidate count of the first nontrivial vector
  std::size_t split = 0;  // alpha_1 = ... = alpha_split > alpha_{split+1}
  friend bool operator==(const NontrivialVector&, const NontrivialVector&) = default;
};

// Scans m = 1..max_m; kTriviality when every vector is constant up to max_m,
// kUnsupportedRule for non-scoring rules.
[[nodiscard]] NontrivialVector find_nontrivial_vector(const VotingRuleSpec& rule,
                                                      std::size_t max_m = 64);

// matching_to_plurality's ballots wrapped with filler candidates so that the
// same pair lemma holds for an arbitrary nontrivial scoring rule.
[[nodiscard]] RecampaignInstance matching_to_scoring(const ThreeDimMatching& inst,
                                                     const VotingRuleSpec& rule);

// One district per triple under t-approval / t-veto, A = universe. Requires
// m > 1 and more than one triple (kPrecondition).
[[nodiscard]] RecampaignInstance x3c_to_approval(const X3CInstance& inst, int t,
                                                 WinnerBound bound);
[[nodiscard]] RecampaignInstance x3c_to_veto(const X3CInstance& inst, int t, WinnerBound bound);

// Two districts under t-approval, unbounded; true variables go to the first
// district. Requires more than 3 clauses and more than 1 variable.
[[nodiscard]] RecampaignInstance sat_to_approval(const OneInThreeSat& f, int t);

}  // namespace recamp

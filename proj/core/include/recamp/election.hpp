#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace recamp {

// A candidate name: a non-empty token without whitespace or commas. Ordering
// is byte-wise lexicographic on the name; every "predetermined order" the
// gadgets need (ascending tails, reversed clause orders) uses it.
class CandidateId {
 public:
  explicit CandidateId(std::string name);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }

  friend auto operator<=>(const CandidateId&, const CandidateId&) = default;

 private:
  std::string name_;
};

std::ostream& operator<<(std::ostream& os, const CandidateId& id);

[[nodiscard]] bool is_valid_token(std::string_view name) noexcept;

using CandidateSet = std::set<CandidateId>;
using WinnerSet = CandidateSet;

struct Ranking {
  std::vector<CandidateId> order;  // best first
  friend bool operator==(const Ranking&, const Ranking&) = default;
};

struct ApprovalBallot {
  CandidateSet approved;
  friend bool operator==(const ApprovalBallot&, const ApprovalBallot&) = default;
};

using Vote = std::variant<Ranking, ApprovalBallot>;

class Election {
 public:
  Election() = default;
  // Throws kShape when a ranking is not a permutation of `candidates` or an
  // approval ballot names a non-candidate.
  Election(CandidateSet candidates, std::vector<Vote> votes);

  [[nodiscard]] const CandidateSet& candidates() const noexcept { return candidates_; }
  [[nodiscard]] const std::vector<Vote>& votes() const noexcept { return votes_; }

  // The election over `keep` with every ballot restricted to it; rankings keep
  // their relative order.
  [[nodiscard]] Election restricted_to(const CandidateSet& keep) const;

  friend bool operator==(const Election&, const Election&) = default;

 private:
  CandidateSet candidates_;
  std::vector<Vote> votes_;
};

using ScoringVector = std::vector<std::int64_t>;
using ScoreTable = std::map<CandidateId, std::int64_t>;

namespace rules {

struct TApproval {
  int t = 1;
  friend bool operator==(const TApproval&, const TApproval&) = default;
};

struct TVeto {
  int t = 1;
  friend bool operator==(const TVeto&, const TVeto&) = default;
};

struct Borda {
  friend bool operator==(const Borda&, const Borda&) = default;
};

// Constant scoring vector; elects every candidate.
struct TrivialScoring {
  friend bool operator==(const TrivialScoring&, const TrivialScoring&) = default;
};

// A pure scoring family given by its vectors s_1..s_M.
class ExplicitScoring {
 public:
  ExplicitScoring() = default;
  // Throws kPrecondition unless the table is pure.
  static ExplicitScoring from_vectors(std::vector<ScoringVector> vectors);

  // vectors()[m - 1] is the vector for m candidates.
  [[nodiscard]] const std::vector<ScoringVector>& vectors() const noexcept { return vectors_; }

  friend bool operator==(const ExplicitScoring&, const ExplicitScoring&) = default;

 private:
  std::vector<ScoringVector> vectors_;
};

// Pairwise-majority winner, if any. At most one winner.
struct Condorcet {
  friend bool operator==(const Condorcet&, const Condorcet&) = default;
};

// Elects all of C when |C| = 3 and nobody otherwise. Ignores ballots.
struct AllIfThree {
  friend bool operator==(const AllIfThree&, const AllIfThree&) = default;
};

// Elects all of C when |C| >= 4, otherwise the 1-approval winners. Rankings only.
struct AllIfFourElsePlurality {
  friend bool operator==(const AllIfFourElsePlurality&,
                         const AllIfFourElsePlurality&) = default;
};

}  // namespace rules

using VotingRuleSpec =
    std::variant<rules::TApproval, rules::TVeto, rules::Borda, rules::TrivialScoring,
                 rules::ExplicitScoring, rules::Condorcet, rules::AllIfThree,
                 rules::AllIfFourElsePlurality>;

[[nodiscard]] bool is_scoring(const VotingRuleSpec& spec) noexcept;
[[nodiscard]] bool accepts_approval_ballots(const VotingRuleSpec& spec) noexcept;
[[nodiscard]] std::string describe(const VotingRuleSpec& spec);

// s_m for a scoring variant.
[[nodiscard]] ScoringVector scoring_vector(const VotingRuleSpec& spec, std::size_t m);

[[nodiscard]] ScoreTable tally(const VotingRuleSpec& spec, const Election& e);
[[nodiscard]] WinnerSet winners(const VotingRuleSpec& spec, const Election& e);

// p wins and there are at most k winners.
[[nodiscard]] bool is_k_winner(const VotingRuleSpec& spec, const Election& e,
                               const CandidateId& p, std::size_t k);

// True iff table[0..m_max) are nonincreasing, table[j] has j + 1 entries, and
// each vector is its predecessor with exactly one value inserted.
[[nodiscard]] bool validate_purity(std::span<const ScoringVector> table, std::size_t m_max);

// Candidates as indices [0, candidate_count). Rules are implemented once, on
// this form; the name-based functions above and the solvers both go through it.
struct Profile {
  std::size_t candidate_count = 0;
  std::vector<std::vector<std::uint32_t>> rankings;
  std::vector<std::vector<std::uint32_t>> approvals;
};

[[nodiscard]] Profile make_profile(const Election& e);
[[nodiscard]] std::vector<std::int64_t> tally_indices(const VotingRuleSpec& spec,
                                                      const Profile& profile);
// Sorted ascending.
[[nodiscard]] std::vector<std::uint32_t> winner_indices(const VotingRuleSpec& spec,
                                                        const Profile& profile);

}  // namespace recamp

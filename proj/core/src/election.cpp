#include "recamp/election.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "recamp/error.hpp"

namespace recamp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUnsupportedRule: return "unsupported-rule";
    case ErrorKind::kMissingVector: return "missing-vector";
    case ErrorKind::kBallotType: return "ballot-type";
    case ErrorKind::kUnknownCandidate: return "unknown-candidate";
    case ErrorKind::kShape: return "shape";
    case ErrorKind::kPrecondition: return "precondition";
    case ErrorKind::kWrongVariant: return "wrong-variant";
    case ErrorKind::kResource: return "resource";
    case ErrorKind::kTriviality: return "triviality";
    case ErrorKind::kOverflow: return "overflow";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

bool is_valid_token(std::string_view name) noexcept {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  });
}

CandidateId::CandidateId(std::string name) : name_(std::move(name)) {
  if (!is_valid_token(name_)) {
    throw Error(ErrorKind::kShape, "invalid candidate name '" + name_ + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const CandidateId& id) { return os << id.name(); }

Election::Election(CandidateSet candidates, std::vector<Vote> votes)
    : candidates_(std::move(candidates)), votes_(std::move(votes)) {
  for (const Vote& vote : votes_) {
    if (const auto* ranking = std::get_if<Ranking>(&vote)) {
      if (ranking->order.size() != candidates_.size()) {
        throw Error(ErrorKind::kShape, "ranking does not list every candidate exactly once");
      }
      CandidateSet seen;
      for (const CandidateId& c : ranking->order) {
        if (!candidates_.contains(c) || !seen.insert(c).second) {
          throw Error(ErrorKind::kShape,
                      "ranking is not a permutation of the candidates (at '" + c.name() + "')");
        }
      }
    } else {
      for (const CandidateId& c : std::get<ApprovalBallot>(vote).approved) {
        if (!candidates_.contains(c)) {
          throw Error(ErrorKind::kShape, "approval ballot names non-candidate '" + c.name() + "'");
        }
      }
    }
  }
}

Election Election::restricted_to(const CandidateSet& keep) const {
  for (const CandidateId& c : keep) {
    if (!candidates_.contains(c)) {
      throw Error(ErrorKind::kUnknownCandidate, "'" + c.name() + "' is not a candidate");
    }
  }
  std::vector<Vote> votes;
  votes.reserve(votes_.size());
  for (const Vote& vote : votes_) {
    if (const auto* ranking = std::get_if<Ranking>(&vote)) {
      Ranking r;
      r.order.reserve(keep.size());
      for (const CandidateId& c : ranking->order) {
        if (keep.contains(c)) r.order.push_back(c);
      }
      votes.emplace_back(std::move(r));
    } else {
      ApprovalBallot b;
      for (const CandidateId& c : std::get<ApprovalBallot>(vote).approved) {
        if (keep.contains(c)) b.approved.insert(c);
      }
      votes.emplace_back(std::move(b));
    }
  }
  Election out;
  out.candidates_ = keep;
  out.votes_ = std::move(votes);
  return out;
}

namespace rules {

ExplicitScoring ExplicitScoring::from_vectors(std::vector<ScoringVector> vectors) {
  if (!validate_purity(vectors, vectors.size())) {
    throw Error(ErrorKind::kPrecondition, "explicit scoring family is not a pure scoring rule");
  }
  ExplicitScoring family;
  family.vectors_ = std::move(vectors);
  return family;
}

}  // namespace rules

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::kOverflow, "score overflow");
  }
  return out;
}

void require_rankings(const Profile& profile, const VotingRuleSpec& spec) {
  if (!profile.approvals.empty()) {
    throw Error(ErrorKind::kBallotType, describe(spec) + " requires ranked ballots");
  }
}

std::vector<std::uint32_t> argmax(std::span<const std::int64_t> scores) {
  std::vector<std::uint32_t> out;
  if (scores.empty()) return out;
  const std::int64_t best = *std::max_element(scores.begin(), scores.end());
  for (std::size_t c = 0; c < scores.size(); ++c) {
    if (scores[c] == best) out.push_back(static_cast<std::uint32_t>(c));
  }
  return out;
}

std::vector<std::uint32_t> condorcet_winner(const Profile& profile) {
  const std::size_t m = profile.candidate_count;
  // prefer[c * m + d]: voters ranking c above d
  std::vector<std::size_t> prefer(m * m, 0);
  std::vector<std::size_t> position(m);
  for (const auto& ranking : profile.rankings) {
    for (std::size_t p = 0; p < ranking.size(); ++p) position[ranking[p]] = p;
    for (std::size_t c = 0; c < m; ++c) {
      for (std::size_t d = 0; d < m; ++d) {
        if (position[c] < position[d]) ++prefer[c * m + d];
      }
    }
  }
  for (std::size_t c = 0; c < m; ++c) {
    bool beats_all = true;
    for (std::size_t d = 0; d < m && beats_all; ++d) {
      if (d != c && prefer[c * m + d] <= prefer[d * m + c]) beats_all = false;
    }
    if (beats_all) return {static_cast<std::uint32_t>(c)};
  }
  return {};
}

std::vector<std::uint32_t> everyone(std::size_t m) {
  std::vector<std::uint32_t> out(m);
  for (std::size_t c = 0; c < m; ++c) out[c] = static_cast<std::uint32_t>(c);
  return out;
}

}  // namespace

bool is_scoring(const VotingRuleSpec& spec) noexcept {
  return std::holds_alternative<rules::TApproval>(spec) ||
         std::holds_alternative<rules::TVeto>(spec) ||
         std::holds_alternative<rules::Borda>(spec) ||
         std::holds_alternative<rules::TrivialScoring>(spec) ||
         std::holds_alternative<rules::ExplicitScoring>(spec);
}

bool accepts_approval_ballots(const VotingRuleSpec& spec) noexcept {
  return std::holds_alternative<rules::AllIfThree>(spec);
}

std::string describe(const VotingRuleSpec& spec) {
  return std::visit(
      Overloaded{
          [](const rules::TApproval& r) { return "t-approval(" + std::to_string(r.t) + ")"; },
          [](const rules::TVeto& r) { return "t-veto(" + std::to_string(r.t) + ")"; },
          [](const rules::Borda&) { return std::string("borda"); },
          [](const rules::TrivialScoring&) { return std::string("trivial"); },
          [](const rules::ExplicitScoring& r) {
            return "explicit(" + std::to_string(r.vectors().size()) + " vectors)";
          },
          [](const rules::Condorcet&) { return std::string("condorcet"); },
          [](const rules::AllIfThree&) { return std::string("all-if-three"); },
          [](const rules::AllIfFourElsePlurality&) {
            return std::string("all-if-four-else-plurality");
          },
      },
      spec);
}

ScoringVector scoring_vector(const VotingRuleSpec& spec, std::size_t m) {
  auto positive_t = [](int t) {
    if (t < 1) throw Error(ErrorKind::kPrecondition, "t must be positive");
    return static_cast<std::size_t>(t);
  };
  return std::visit(
      Overloaded{
          [&](const rules::TApproval& r) {
            ScoringVector v(m, 0);
            std::fill_n(v.begin(), std::min(positive_t(r.t), m), 1);
            return v;
          },
          [&](const rules::TVeto& r) {
            const std::size_t t = positive_t(r.t);
            ScoringVector v(m, 0);
            if (m > t) std::fill_n(v.begin(), m - t, 1);
            return v;
          },
          [&](const rules::Borda&) {
            ScoringVector v(m);
            for (std::size_t p = 0; p < m; ++p) v[p] = static_cast<std::int64_t>(m - 1 - p);
            return v;
          },
          [&](const rules::TrivialScoring&) { return ScoringVector(m, 0); },
          [&](const rules::ExplicitScoring& r) {
            if (m == 0) return ScoringVector{};
            if (m > r.vectors().size()) {
              throw Error(ErrorKind::kMissingVector,
                          "explicit scoring family has no vector for " + std::to_string(m) +
                              " candidates");
            }
            return r.vectors()[m - 1];
          },
          [&](const auto&) -> ScoringVector {
            throw Error(ErrorKind::kUnsupportedRule, describe(spec) + " is not a scoring rule");
          },
      },
      spec);
}

bool validate_purity(std::span<const ScoringVector> table, std::size_t m_max) {
  if (table.size() < m_max) return false;
  for (std::size_t j = 0; j < m_max; ++j) {
    const ScoringVector& v = table[j];
    if (v.size() != j + 1) return false;
    if (!std::is_sorted(v.begin(), v.end(), std::greater<>{})) return false;
    if (j == 0) continue;
    const ScoringVector& prev = table[j - 1];
    // v must equal prev with one value inserted: skip the first mismatch
    const auto split = std::mismatch(prev.begin(), prev.end(), v.begin());
    const auto offset = static_cast<std::size_t>(split.first - prev.begin());
    if (!std::equal(prev.begin() + static_cast<std::ptrdiff_t>(offset), prev.end(),
                    v.begin() + static_cast<std::ptrdiff_t>(offset) + 1)) {
      return false;
    }
  }
  return true;
}

Profile make_profile(const Election& e) {
  Profile profile;
  profile.candidate_count = e.candidates().size();
  auto index_of = [&](const CandidateId& c) {
    return static_cast<std::uint32_t>(
        std::distance(e.candidates().begin(), e.candidates().find(c)));
  };
  for (const Vote& vote : e.votes()) {
    std::vector<std::uint32_t> ids;
    if (const auto* ranking = std::get_if<Ranking>(&vote)) {
      ids.reserve(ranking->order.size());
      for (const CandidateId& c : ranking->order) ids.push_back(index_of(c));
      profile.rankings.push_back(std::move(ids));
    } else {
      for (const CandidateId& c : std::get<ApprovalBallot>(vote).approved) {
        ids.push_back(index_of(c));
      }
      profile.approvals.push_back(std::move(ids));
    }
  }
  return profile;
}

std::vector<std::int64_t> tally_indices(const VotingRuleSpec& spec, const Profile& profile) {
  const ScoringVector alpha = scoring_vector(spec, profile.candidate_count);
  require_rankings(profile, spec);
  std::vector<std::int64_t> scores(profile.candidate_count, 0);
  for (const auto& ranking : profile.rankings) {
    for (std::size_t p = 0; p < ranking.size(); ++p) {
      scores[ranking[p]] = checked_add(scores[ranking[p]], alpha[p]);
    }
  }
  return scores;
}

std::vector<std::uint32_t> winner_indices(const VotingRuleSpec& spec, const Profile& profile) {
  const std::size_t m = profile.candidate_count;
  return std::visit(
      Overloaded{
          [&](const rules::Condorcet&) {
            require_rankings(profile, spec);
            return condorcet_winner(profile);
          },
          [&](const rules::AllIfThree&) {
            return m == 3 ? everyone(m) : std::vector<std::uint32_t>{};
          },
          [&](const rules::AllIfFourElsePlurality&) {
            require_rankings(profile, spec);
            if (m >= 4) return everyone(m);
            return argmax(tally_indices(rules::TApproval{1}, profile));
          },
          [&](const auto&) { return argmax(tally_indices(spec, profile)); },
      },
      spec);
}

ScoreTable tally(const VotingRuleSpec& spec, const Election& e) {
  const std::vector<std::int64_t> scores = tally_indices(spec, make_profile(e));
  ScoreTable table;
  std::size_t i = 0;
  for (const CandidateId& c : e.candidates()) table.emplace(c, scores[i++]);
  return table;
}

WinnerSet winners(const VotingRuleSpec& spec, const Election& e) {
  const std::vector<std::uint32_t> ids = winner_indices(spec, make_profile(e));
  std::vector<CandidateId> ordered(e.candidates().begin(), e.candidates().end());
  WinnerSet out;
  for (std::uint32_t id : ids) out.insert(ordered[id]);
  return out;
}

bool is_k_winner(const VotingRuleSpec& spec, const Election& e, const CandidateId& p,
                 std::size_t k) {
  if (!e.candidates().contains(p)) {
    throw Error(ErrorKind::kUnknownCandidate, "'" + p.name() + "' is not a candidate");
  }
  if (k == 0) throw Error(ErrorKind::kPrecondition, "k must be positive");
  const WinnerSet w = winners(spec, e);
  return w.contains(p) && w.size() <= k;
}

}  // namespace recamp

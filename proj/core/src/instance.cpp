#include "recamp/instance.hpp"

#include <algorithm>
#include <random>

#include "district_evaluator.hpp"
#include "recamp/error.hpp"

namespace recamp {

WinnerBound WinnerBound::at_most(std::size_t ell) {
  if (ell == 0) throw Error(ErrorKind::kPrecondition, "winner bound must be at least 1");
  WinnerBound b;
  b.ell_ = ell;
  return b;
}

std::string WinnerBound::describe() const {
  return ell_ ? "at-most(" + std::to_string(*ell_) + ")" : "unbounded";
}

namespace {

void validate_district(const District& d, std::size_t index, const CandidateSet& additional,
                       const VotingRuleSpec& rule) {
  const std::string where = "district " + std::to_string(index + 1);
  for (const CandidateId& a : additional) {
    if (d.candidates.contains(a)) {
      throw Error(ErrorKind::kShape,
                  where + " already contains additional candidate '" + a.name() + "'");
    }
  }
  auto in_pool = [&](const CandidateId& c) {
    return d.candidates.contains(c) || additional.contains(c);
  };
  const std::size_t pool = d.candidates.size() + additional.size();
  for (const Vote& vote : d.votes) {
    if (const auto* ranking = std::get_if<Ranking>(&vote)) {
      CandidateSet seen;
      for (const CandidateId& c : ranking->order) {
        if (!in_pool(c) || !seen.insert(c).second) {
          throw Error(ErrorKind::kShape, where + ": ranking is not a permutation of C_i ∪ A (at '" +
                                             c.name() + "')");
        }
      }
      if (seen.size() != pool) {
        throw Error(ErrorKind::kShape, where + ": ranking must list every candidate of C_i ∪ A");
      }
    } else {
      if (!accepts_approval_ballots(rule)) {
        throw Error(ErrorKind::kBallotType,
                    where + ": " + describe(rule) + " requires ranked ballots");
      }
      for (const CandidateId& c : std::get<ApprovalBallot>(vote).approved) {
        if (!in_pool(c)) {
          throw Error(ErrorKind::kShape, where + ": approval names unknown '" + c.name() + "'");
        }
      }
    }
  }
}

}  // namespace

RecampaignInstance::RecampaignInstance(VotingRuleSpec rule, std::vector<District> districts,
                                       CandidateSet additional, WinnerBound bound,
                                       std::optional<Pricing> pricing)
    : rule_(std::move(rule)),
      districts_(std::move(districts)),
      additional_(std::move(additional)),
      bound_(bound),
      pricing_(std::move(pricing)),
      additional_order_(additional_.begin(), additional_.end()) {
  if (districts_.empty()) throw Error(ErrorKind::kShape, "an instance needs at least one district");
  if (const auto* r = std::get_if<rules::TApproval>(&rule_); r && r->t < 1) {
    throw Error(ErrorKind::kPrecondition, "t-approval needs t >= 1");
  }
  if (const auto* r = std::get_if<rules::TVeto>(&rule_); r && r->t < 1) {
    throw Error(ErrorKind::kPrecondition, "t-veto needs t >= 1");
  }
  for (std::size_t i = 0; i < districts_.size(); ++i) {
    validate_district(districts_[i], i, additional_, rule_);
  }
  if (pricing_) {
    if (pricing_->budget < 0) throw Error(ErrorKind::kShape, "budget must be nonnegative");
    if (pricing_->prices.size() != districts_.size()) {
      throw Error(ErrorKind::kShape, "price table must have one row per district");
    }
    for (const auto& row : pricing_->prices) {
      if (row.size() != additional_.size()) {
        throw Error(ErrorKind::kShape, "price table must have one column per additional candidate");
      }
      if (std::any_of(row.begin(), row.end(), [](std::int64_t p) { return p < 0; })) {
        throw Error(ErrorKind::kShape, "prices must be nonnegative");
      }
    }
  }
}

std::size_t RecampaignInstance::index_of(const CandidateId& a) const {
  auto it = std::lower_bound(additional_order_.begin(), additional_order_.end(), a);
  if (it == additional_order_.end() || *it != a) {
    throw Error(ErrorKind::kUnknownCandidate, "'" + a.name() + "' is not an additional candidate");
  }
  return static_cast<std::size_t>(it - additional_order_.begin());
}

std::int64_t RecampaignInstance::price(std::size_t district, std::size_t candidate) const {
  if (!pricing_) return 0;
  return pricing_->prices.at(district).at(candidate);
}

RecampaignInstance RecampaignInstance::with_bound(WinnerBound bound) const {
  RecampaignInstance copy = *this;
  copy.bound_ = bound;
  return copy;
}

RecampaignInstance RecampaignInstance::with_pricing(std::optional<Pricing> pricing) const {
  return RecampaignInstance(rule_, districts_, additional_, bound_, std::move(pricing));
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kLosingCandidate: return "losing candidate";
    case ViolationKind::kWinnerBoundExceeded: return "winner bound exceeded";
    case ViolationKind::kBudgetExceeded: return "budget exceeded";
  }
  return "unknown";
}

Election placed_election(const RecampaignInstance& inst, std::size_t district,
                         const CandidateSet& placed) {
  const District& d = inst.districts().at(district);
  CandidateSet pool = d.candidates;
  pool.insert(inst.additional().begin(), inst.additional().end());
  CandidateSet keep = d.candidates;
  for (const CandidateId& a : placed) {
    if (!inst.additional().contains(a)) {
      throw Error(ErrorKind::kUnknownCandidate, "'" + a.name() + "' is not an additional candidate");
    }
    keep.insert(a);
  }
  return Election(std::move(pool), d.votes).restricted_to(keep);
}

VerificationReport verify(const RecampaignInstance& inst, const Assignment& asg) {
  const std::size_t k = inst.district_count();
  if (asg.placement.size() != inst.additional_count()) {
    throw Error(ErrorKind::kShape, "assignment must place every additional candidate exactly once");
  }
  std::vector<std::vector<std::uint32_t>> placed(k);
  for (const auto& [candidate, district] : asg.placement) {
    if (!inst.additional().contains(candidate)) {
      throw Error(ErrorKind::kShape, "assignment places unknown candidate '" + candidate.name() + "'");
    }
    if (district >= k) {
      throw Error(ErrorKind::kShape, "assignment uses district " + std::to_string(district + 1) +
                                         " of " + std::to_string(k));
    }
    placed[district].push_back(static_cast<std::uint32_t>(inst.index_of(candidate)));
  }

  detail::DistrictEvaluator evaluator(inst);
  VerificationReport report;
  report.district_winners.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::sort(placed[i].begin(), placed[i].end());
    const auto outcome = evaluator.evaluate(i, placed[i]);
    const District& d = inst.districts()[i];
    const std::vector<CandidateId> own(d.candidates.begin(), d.candidates.end());
    for (std::uint32_t w : outcome.own_winners) report.district_winners[i].insert(own[w]);
    for (std::uint32_t w : outcome.additional_winners) {
      report.district_winners[i].insert(inst.additional_order()[w]);
    }
    if (placed[i].empty()) continue;
    for (std::uint32_t a : placed[i]) {
      if (!std::binary_search(outcome.additional_winners.begin(),
                              outcome.additional_winners.end(), a)) {
        const CandidateId& name = inst.additional_order()[a];
        report.violations.push_back({ViolationKind::kLosingCandidate, i, name,
                                     "'" + name.name() + "' does not win district " +
                                         std::to_string(i + 1)});
      }
    }
    if (!inst.bound().admits(outcome.winner_count())) {
      report.violations.push_back(
          {ViolationKind::kWinnerBoundExceeded, i, std::nullopt,
           "district " + std::to_string(i + 1) + " has " +
               std::to_string(outcome.winner_count()) + " winners, bound is " +
               std::to_string(inst.bound().limit())});
    }
  }
  if (inst.pricing()) {
    std::int64_t cost = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::uint32_t a : placed[i]) cost += inst.price(i, a);
    }
    report.total_cost = cost;
    if (cost > inst.pricing()->budget) {
      report.violations.push_back({ViolationKind::kBudgetExceeded, std::nullopt, std::nullopt,
                                   "cost " + std::to_string(cost) + " exceeds budget " +
                                       std::to_string(inst.pricing()->budget)});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

RecampaignInstance from_winner_problem(const Election& e, const CandidateId& p,
                                       const VotingRuleSpec& rule) {
  if (!e.candidates().contains(p)) {
    throw Error(ErrorKind::kUnknownCandidate, "'" + p.name() + "' is not a candidate");
  }
  District d;
  d.candidates = e.candidates();
  d.candidates.erase(p);
  d.votes = e.votes();
  return RecampaignInstance(rule, {std::move(d)}, CandidateSet{p}, WinnerBound::unbounded());
}

RecampaignInstance lift_to_priced(const RecampaignInstance& inst) {
  if (inst.pricing()) throw Error(ErrorKind::kPrecondition, "instance is already priced");
  Pricing pricing;
  pricing.prices.assign(inst.district_count(),
                        std::vector<std::int64_t>(inst.additional_count(), 1));
  pricing.budget = static_cast<std::int64_t>(inst.additional_count());
  return inst.with_pricing(std::move(pricing));
}

RecampaignInstance random_instance(const RandomInstanceParams& params, std::uint64_t seed) {
  if (params.districts == 0) throw Error(ErrorKind::kPrecondition, "need at least one district");
  if (params.min_district_candidates > params.max_district_candidates) {
    throw Error(ErrorKind::kPrecondition, "min district candidates exceeds max");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };

  CandidateSet additional;
  for (std::size_t j = 1; j <= params.additional; ++j) {
    additional.insert(CandidateId("a" + std::to_string(j)));
  }

  std::vector<District> districts;
  districts.reserve(params.districts);
  for (std::size_t i = 1; i <= params.districts; ++i) {
    District d;
    const auto own = uniform(static_cast<std::int64_t>(params.min_district_candidates),
                             static_cast<std::int64_t>(params.max_district_candidates));
    for (std::int64_t c = 1; c <= own; ++c) {
      d.candidates.insert(CandidateId("d" + std::to_string(i) + "c" + std::to_string(c)));
    }
    std::vector<CandidateId> pool(d.candidates.begin(), d.candidates.end());
    pool.insert(pool.end(), additional.begin(), additional.end());
    const auto votes = uniform(0, static_cast<std::int64_t>(params.max_votes));
    for (std::int64_t v = 0; v < votes; ++v) {
      std::shuffle(pool.begin(), pool.end(), rng);
      d.votes.emplace_back(Ranking{pool});
    }
    districts.push_back(std::move(d));
  }

  std::optional<Pricing> pricing;
  if (params.priced) {
    Pricing p;
    p.prices.assign(params.districts, std::vector<std::int64_t>(params.additional, 0));
    for (auto& row : p.prices) {
      for (auto& price : row) price = uniform(0, 10);
    }
    p.budget = uniform(0, 10 * static_cast<std::int64_t>(params.additional));
    pricing = std::move(p);
  }
  return RecampaignInstance(params.rule, std::move(districts), std::move(additional),
                            params.bound, std::move(pricing));
}

}  // namespace recamp

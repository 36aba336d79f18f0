#include "district_evaluator.hpp"

#include <algorithm>

#include "recamp/error.hpp"

namespace recamp::detail {

namespace {

constexpr std::uint32_t kAbsent = 0xffffffffu;

}  // namespace

DistrictEvaluator::DistrictEvaluator(const RecampaignInstance& inst)
    : inst_(&inst), memo_(inst.district_count()) {
  const std::size_t n = inst.additional_count();
  districts_.reserve(inst.district_count());
  for (const District& d : inst.districts()) {
    CompiledDistrict compiled;
    compiled.own = d.candidates.size();
    auto local_id = [&](const CandidateId& c) -> std::uint32_t {
      if (auto it = d.candidates.find(c); it != d.candidates.end()) {
        return static_cast<std::uint32_t>(std::distance(d.candidates.begin(), it));
      }
      return static_cast<std::uint32_t>(compiled.own + inst.index_of(c));
    };
    for (const Vote& vote : d.votes) {
      std::vector<std::uint32_t> ids;
      if (const auto* ranking = std::get_if<Ranking>(&vote)) {
        ids.reserve(compiled.own + n);
        for (const CandidateId& c : ranking->order) ids.push_back(local_id(c));
        compiled.rankings.push_back(std::move(ids));
      } else {
        for (const CandidateId& c : std::get<ApprovalBallot>(vote).approved) {
          ids.push_back(local_id(c));
        }
        compiled.approvals.push_back(std::move(ids));
      }
    }
    districts_.push_back(std::move(compiled));
  }
}

DistrictEvaluator::Outcome DistrictEvaluator::evaluate(
    std::size_t district, std::span<const std::uint32_t> placed) const {
  ++evaluations_;
  const CompiledDistrict& d = districts_.at(district);
  const std::size_t pool = d.own + inst_->additional_count();

  // Map district-local ids onto the election's candidate indices [0, own + |placed|).
  std::vector<std::uint32_t> remap(pool, kAbsent);
  for (std::size_t c = 0; c < d.own; ++c) remap[c] = static_cast<std::uint32_t>(c);
  for (std::size_t j = 0; j < placed.size(); ++j) {
    remap[d.own + placed[j]] = static_cast<std::uint32_t>(d.own + j);
  }

  Profile profile;
  profile.candidate_count = d.own + placed.size();
  profile.rankings.reserve(d.rankings.size());
  for (const auto& ranking : d.rankings) {
    std::vector<std::uint32_t> restricted;
    restricted.reserve(profile.candidate_count);
    for (std::uint32_t id : ranking) {
      if (remap[id] != kAbsent) restricted.push_back(remap[id]);
    }
    profile.rankings.push_back(std::move(restricted));
  }
  for (const auto& approval : d.approvals) {
    std::vector<std::uint32_t> restricted;
    for (std::uint32_t id : approval) {
      if (remap[id] != kAbsent) restricted.push_back(remap[id]);
    }
    std::sort(restricted.begin(), restricted.end());
    profile.approvals.push_back(std::move(restricted));
  }

  Outcome out;
  for (std::uint32_t w : winner_indices(inst_->rule(), profile)) {
    if (w < d.own) {
      out.own_winners.push_back(w);
    } else {
      out.additional_winners.push_back(placed[w - d.own]);
    }
  }
  return out;
}

bool DistrictEvaluator::accepts(std::size_t district,
                                std::span<const std::uint32_t> placed) const {
  if (placed.empty()) return true;
  const Outcome out = evaluate(district, placed);
  // winners among the placed come back in placed order, so equality is a subset check
  return out.additional_winners.size() == placed.size() &&
         inst_->bound().admits(out.winner_count());
}

bool DistrictEvaluator::accepts_mask(std::size_t district, std::uint64_t placed) {
  if (placed == 0) return true;
  auto& memo = memo_.at(district);
  if (auto it = memo.find(placed); it != memo.end()) return it->second;
  const std::vector<std::uint32_t> members = mask_members(placed);
  const bool ok = accepts(district, members);
  memo.emplace(placed, ok);
  return ok;
}

std::vector<std::uint32_t> mask_members(std::uint64_t mask) {
  std::vector<std::uint32_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::uint32_t>(__builtin_ctzll(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace recamp::detail

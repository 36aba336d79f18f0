#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "recamp/instance.hpp"

namespace recamp::detail {

// Precompiled district ballots over local ids: [0, |C_i|) are the district's
// own candidates in name order, |C_i| + j is the j-th additional candidate.
class DistrictEvaluator {
 public:
  struct Outcome {
    std::vector<std::uint32_t> own_winners;         // indices into C_i (name order)
    std::vector<std::uint32_t> additional_winners;  // indices into A (name order)
    [[nodiscard]] std::size_t winner_count() const noexcept {
      return own_winners.size() + additional_winners.size();
    }
  };

  explicit DistrictEvaluator(const RecampaignInstance& inst);

  // `placed` is sorted ascending, indices into A.
  [[nodiscard]] Outcome evaluate(std::size_t district,
                                 std::span<const std::uint32_t> placed) const;

  // Every placed candidate wins and, when bounded, the district has at most
  // ell winners. An empty placement is always acceptable.
  [[nodiscard]] bool accepts(std::size_t district, std::span<const std::uint32_t> placed) const;

  // accepts() keyed by a bitmask over A, memoized. Requires |A| <= 64.
  [[nodiscard]] bool accepts_mask(std::size_t district, std::uint64_t placed);

  [[nodiscard]] std::size_t evaluations() const noexcept { return evaluations_; }

 private:
  struct CompiledDistrict {
    std::size_t own = 0;
    std::vector<std::vector<std::uint32_t>> rankings;
    std::vector<std::vector<std::uint32_t>> approvals;
  };

  const RecampaignInstance* inst_;
  std::vector<CompiledDistrict> districts_;
  std::vector<std::unordered_map<std::uint64_t, bool>> memo_;
  mutable std::size_t evaluations_ = 0;
};

[[nodiscard]] std::vector<std::uint32_t> mask_members(std::uint64_t mask);

}  // namespace recamp::detail

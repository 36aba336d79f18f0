#pragma once

#include <string>

#include "recamp/error.hpp"
#include "recamp/solvers.hpp"

namespace recamp::detail {

inline void require_variant(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kWrongVariant, what);
}

inline std::int64_t placement_cost(const RecampaignInstance& inst, const Assignment& asg) {
  std::int64_t cost = 0;
  for (const auto& [candidate, district] : asg.placement) {
    cost += inst.price(district, inst.index_of(candidate));
  }
  return cost;
}

inline SolveResult make_result(const RecampaignInstance& inst, std::optional<Assignment> asg,
                               std::string algorithm, SolveStatistics stats) {
  SolveResult result;
  if (asg && inst.pricing()) result.cost = placement_cost(inst, *asg);
  result.assignment = std::move(asg);
  result.algorithm = std::move(algorithm);
  result.stats = stats;
  return result;
}

}  // namespace recamp::detail

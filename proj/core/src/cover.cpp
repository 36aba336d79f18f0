#include <bit>

#include "district_evaluator.hpp"
#include "recamp/solvers.hpp"
#include "solver_support.hpp"

namespace recamp {

using detail::make_result;
using detail::require_variant;

namespace {

std::uint64_t subsets_up_to(std::size_t n, std::size_t ell) {
  // sum_{j <= ell} C(n, j), saturating
  std::uint64_t total = 0;
  std::uint64_t term = 1;
  for (std::size_t j = 0; j <= ell && j <= n; ++j) {
    total += term;
    if (total > (1ull << 56) || term > (1ull << 56)) return 1ull << 62;
    term = term * (n - j) / (j + 1);
  }
  return total;
}

// Calls visit(mask) for every nonempty subset of {0..n-1} with at most `ell`
// members, in lexicographic order of the sorted member lists.
template <typename Visit>
void for_each_small_subset(std::size_t n, std::size_t ell, std::size_t from, std::uint64_t mask,
                           std::size_t size, Visit& visit) {
  for (std::size_t j = from; j < n; ++j) {
    const std::uint64_t next = mask | (std::uint64_t{1} << j);
    visit(next);
    if (size + 1 < ell) for_each_small_subset(n, ell, j + 1, next, size + 1, visit);
  }
}

CoverSystem build_system(const RecampaignInstance& priced, std::uint64_t node_budget,
                         detail::DistrictEvaluator& evaluator) {
  const std::size_t n = priced.additional_count();
  const std::size_t k = priced.district_count();
  const std::size_t ell = priced.bound().limit();
  if (n > 64) throw Error(ErrorKind::kResource, "cover systems support at most 64 candidates");
  const std::uint64_t per_district = subsets_up_to(n, ell);
  if (per_district > node_budget / k) {
    throw Error(ErrorKind::kResource, "cover system enumeration exceeds the node budget");
  }

  CoverSystem system;
  system.candidate_count = n;
  system.district_count = k;
  system.cap = priced.pricing()->budget;
  for (std::size_t i = 0; i < k; ++i) {
    system.members.push_back({i, 0, 0});
    auto visit = [&](std::uint64_t mask) {
      std::int64_t weight = 0;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        weight += priced.price(i, static_cast<std::size_t>(std::countr_zero(rest)));
      }
      if (weight > system.cap) return;
      if (evaluator.accepts_mask(i, mask)) system.members.push_back({i, mask, weight});
    };
    for_each_small_subset(n, ell, 0, 0, 0, visit);
  }
  return system;
}

}  // namespace

CoverSystem build_exact_cover_system(const RecampaignInstance& inst) {
  return build_exact_cover_system(inst, default_node_budget());
}

CoverSystem build_exact_cover_system(const RecampaignInstance& inst, std::uint64_t node_budget) {
  require_variant(inst.bound().bounded(), "cover systems need a bounded instance");
  const RecampaignInstance priced = inst.pricing() ? inst : lift_to_priced(inst);
  detail::DistrictEvaluator evaluator(priced);
  return build_system(priced, node_budget, evaluator);
}

SolveResult solve_fpt(const RecampaignInstance& inst) {
  require_variant(inst.bound().bounded(), "the cover solver needs a bounded instance");
  const std::size_t n = inst.additional_count();
  const std::size_t k = inst.district_count();
  const std::size_t ell = inst.bound().limit();
  SolveStatistics stats;
  if (n > k * ell) return make_result(inst, std::nullopt, "fpt", stats);

  const RecampaignInstance priced = inst.pricing() ? inst : lift_to_priced(inst);
  detail::DistrictEvaluator evaluator(priced);
  const CoverSystem system = build_system(priced, default_node_budget(), evaluator);
  stats.system_built = true;
  stats.universe_size = system.universe_size();
  stats.cover_members = system.members.size();
  stats.evaluations = evaluator.evaluations();

  std::vector<std::size_t> group_start(k + 1, system.members.size());
  for (std::size_t m = system.members.size(); m-- > 0;) {
    group_start[system.members[m].district] = m;
  }
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  // One member per district tag, pairwise disjoint, covering A within budget.
  std::vector<std::size_t> chosen(k);
  auto search = [&](auto& self, std::size_t i, std::uint64_t used, std::int64_t weight) -> bool {
    ++stats.nodes;
    if (i == k) return used == full;
    const auto remaining = static_cast<std::size_t>(std::popcount(full & ~used));
    if (remaining > (k - i) * ell) return false;
    for (std::size_t m = group_start[i]; m < group_start[i + 1]; ++m) {
      const CoverMember& member = system.members[m];
      if ((member.candidates & used) != 0 || weight + member.weight > system.cap) continue;
      chosen[i] = m;
      if (self(self, i + 1, used | member.candidates, weight + member.weight)) return true;
    }
    return false;
  };

  std::optional<Assignment> asg;
  if (search(search, 0, 0, 0)) {
    asg.emplace();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::uint64_t rest = system.members[chosen[i]].candidates; rest != 0;
           rest &= rest - 1) {
        asg->placement.emplace(inst.additional_order()[std::countr_zero(rest)], i);
      }
    }
  }
  return make_result(inst, std::move(asg), "fpt", stats);
}

}  // namespace recamp

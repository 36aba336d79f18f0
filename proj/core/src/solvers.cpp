#include "recamp/solvers.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>

#include "district_evaluator.hpp"
#include "recamp/matching.hpp"
#include "solver_support.hpp"

namespace recamp {

using detail::make_result;
using detail::require_variant;

SolveResult solve_crc1(const RecampaignInstance& inst) {
  require_variant(inst.bound().bounded() && inst.bound().limit() == 1,
                  "the single-winner matching solver needs bound at-most(1)");
  const std::size_t n = inst.additional_count();
  const std::size_t k = inst.district_count();
  detail::DistrictEvaluator evaluator(inst);

  BipartiteMultigraph g;
  g.left_count = n;
  g.right_count = k;
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t placed[] = {a};
      if (evaluator.accepts(i, placed)) g.edges.push_back({a, i, inst.price(i, a), 1});
    }
  }
  const MatchingResult m = min_cost_max_cardinality_matching(g);

  SolveStatistics stats;
  stats.evaluations = evaluator.evaluations();
  std::optional<Assignment> asg;
  const bool fits = !inst.pricing() || m.total_weight <= inst.pricing()->budget;
  if (m.cardinality == static_cast<std::int64_t>(n) && fits) {
    asg.emplace();
    for (const auto& chosen : m.chosen) {
      const BipartiteEdge& e = g.edges[chosen.edge];
      asg->placement.emplace(inst.additional_order()[e.left], e.right);
    }
  }
  return make_result(inst, std::move(asg), "crc1-matching", stats);
}

SolveResult solve_trivial_scoring(const RecampaignInstance& inst) {
  require_variant(std::holds_alternative<rules::TrivialScoring>(inst.rule()),
                  "the b-matching solver needs the trivial scoring rule");
  const std::size_t n = inst.additional_count();
  const std::size_t k = inst.district_count();

  std::size_t ell = 0;
  if (inst.bound().bounded()) {
    ell = inst.bound().limit();
  } else {
    std::size_t largest = 0;
    for (const District& d : inst.districts()) largest = std::max(largest, d.candidates.size());
    ell = n + largest;
  }

  // Left: the additional candidates, then the slack vertex s. Right: districts.
  BipartiteMultigraph g;
  g.left_count = n + 1;
  g.right_count = k;
  DegreeConstraint b;
  b.left.assign(n + 1, 1);
  b.right.resize(k);
  std::int64_t total_slack = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t own = inst.districts()[i].candidates.size();
    b.right[i] = own >= ell ? 0 : static_cast<std::int64_t>(ell - own);
    total_slack += b.right[i];
  }
  b.left[n] = std::max<std::int64_t>(0, total_slack - static_cast<std::int64_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < k; ++i) g.edges.push_back({a, i, inst.price(i, a), 1});
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (b.right[i] > 0) g.edges.push_back({n, i, 0, b.right[i]});
  }

  const std::int64_t cap =
      inst.pricing() ? inst.pricing()->budget : std::numeric_limits<std::int64_t>::max();
  std::optional<Assignment> asg;
  if (auto m = min_weight_perfect_b_matching(g, b, cap)) {
    asg.emplace();
    for (const auto& chosen : m->chosen) {
      const BipartiteEdge& e = g.edges[chosen.edge];
      if (e.left < n) asg->placement.emplace(inst.additional_order()[e.left], e.right);
    }
  }
  return make_result(inst, std::move(asg), "b-matching", {});
}

std::uint64_t default_node_budget() {
  constexpr std::uint64_t kDefault = 10'000'000;
  const char* env = std::getenv("RECAMP_NODE_BUDGET");
  if (env == nullptr) return kDefault;
  std::uint64_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc{} || ptr != end) return kDefault;
  return value;
}

namespace {

std::uint64_t saturating_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    out *= base;
  }
  return out;
}

class BruteSearch {
 public:
  explicit BruteSearch(const RecampaignInstance& inst)
      : inst_(inst),
        evaluator_(inst),
        n_(inst.additional_count()),
        k_(inst.district_count()),
        placed_(k_),
        masks_(k_, 0),
        where_(n_, 0) {}

  std::optional<Assignment> run() {
    if (!dfs(0)) return std::nullopt;
    Assignment asg;
    for (std::size_t j = 0; j < n_; ++j) asg.placement.emplace(inst_.additional_order()[j], where_[j]);
    return asg;
  }

  [[nodiscard]] SolveStatistics stats() const {
    SolveStatistics s;
    s.nodes = nodes_;
    s.evaluations = evaluator_.evaluations();
    return s;
  }

 private:
  bool leaf_accepts() {
    for (std::size_t i = 0; i < k_; ++i) {
      const bool ok =
          n_ <= 64 ? evaluator_.accepts_mask(i, masks_[i]) : evaluator_.accepts(i, placed_[i]);
      if (!ok) return false;
    }
    return true;
  }

  bool dfs(std::size_t j) {
    ++nodes_;
    if (j == n_) return leaf_accepts();
    const auto& bound = inst_.bound();
    for (std::size_t i = 0; i < k_; ++i) {
      const std::int64_t price = inst_.price(i, j);
      if (inst_.pricing() && cost_ + price > inst_.pricing()->budget) continue;
      if (!bound.admits(placed_[i].size() + 1)) continue;
      placed_[i].push_back(static_cast<std::uint32_t>(j));
      if (n_ <= 64) masks_[i] |= std::uint64_t{1} << j;
      where_[j] = i;
      cost_ += price;
      if (dfs(j + 1)) return true;
      cost_ -= price;
      if (n_ <= 64) masks_[i] &= ~(std::uint64_t{1} << j);
      placed_[i].pop_back();
    }
    return false;
  }

  const RecampaignInstance& inst_;
  detail::DistrictEvaluator evaluator_;
  std::size_t n_;
  std::size_t k_;
  std::vector<std::vector<std::uint32_t>> placed_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::size_t> where_;
  std::int64_t cost_ = 0;
  std::uint64_t nodes_ = 0;
};

SolveResult run_brute(const RecampaignInstance& inst, std::string algorithm) {
  BruteSearch search(inst);
  auto asg = search.run();
  return make_result(inst, std::move(asg), std::move(algorithm), search.stats());
}

}  // namespace

SolveResult solve_brute(const RecampaignInstance& inst) {
  return solve_brute(inst, default_node_budget());
}

SolveResult solve_brute(const RecampaignInstance& inst, std::uint64_t node_budget) {
  const std::uint64_t leaves = saturating_power(inst.district_count(), inst.additional_count());
  if (leaves > node_budget) {
    throw Error(ErrorKind::kResource,
                "brute force needs " + std::to_string(inst.district_count()) + "^" +
                    std::to_string(inst.additional_count()) + " placements, budget is " +
                    std::to_string(node_budget));
  }
  return run_brute(inst, "brute");
}

SolveResult solve_all_if_three_bounded(const RecampaignInstance& inst) {
  require_variant(std::holds_alternative<rules::AllIfThree>(inst.rule()),
                  "this solver needs the all-if-three rule");
  require_variant(inst.bound().bounded() && inst.bound().limit() == 3,
                  "this solver needs bound at-most(3)");
  require_variant(!inst.pricing(), "this solver handles unpriced instances only");

  // open[s]: districts that take exactly s more candidates (s = 1, 2, 3).
  std::vector<std::size_t> open[4];
  for (std::size_t i = 0; i < inst.district_count(); ++i) {
    const std::size_t own = inst.districts()[i].candidates.size();
    if (own < 3) open[3 - own].push_back(i);
  }
  const std::size_t n = inst.additional_count();
  SolveStatistics stats;
  for (std::size_t ones = 0; ones <= open[1].size(); ++ones) {
    for (std::size_t twos = 0; twos <= open[2].size(); ++twos) {
      ++stats.nodes;
      if (ones + 2 * twos > n) continue;
      const std::size_t rest = n - ones - 2 * twos;
      if (rest % 3 != 0 || rest / 3 > open[3].size()) continue;
      const std::size_t take[4] = {0, ones, twos, rest / 3};
      Assignment asg;
      std::size_t next = 0;
      for (std::size_t s = 1; s <= 3; ++s) {
        for (std::size_t d = 0; d < take[s]; ++d) {
          for (std::size_t c = 0; c < s; ++c) {
            asg.placement.emplace(inst.additional_order()[next++], open[s][d]);
          }
        }
      }
      return make_result(inst, std::move(asg), "all-if-three-slack", stats);
    }
  }
  return make_result(inst, std::nullopt, "all-if-three-slack", stats);
}

SolveResult solve_all_if_four_unbounded(const RecampaignInstance& inst) {
  require_variant(std::holds_alternative<rules::AllIfFourElsePlurality>(inst.rule()),
                  "this solver needs the all-if-four-else-plurality rule");
  require_variant(!inst.bound().bounded(), "this solver needs an unbounded instance");
  require_variant(!inst.pricing(), "this solver handles unpriced instances only");

  if (inst.additional_count() >= 4) {
    Assignment asg;
    for (const CandidateId& a : inst.additional()) asg.placement.emplace(a, 0);
    SolveStatistics stats;
    stats.nodes = 1;
    if (!verify(inst, asg).valid) return make_result(inst, std::nullopt, "all-if-four", stats);
    return make_result(inst, std::move(asg), "all-if-four", stats);
  }
  return run_brute(inst, "all-if-four");
}

SolveResult solve_auto(const RecampaignInstance& inst) {
  const auto& rule = inst.rule();
  const auto& bound = inst.bound();
  if (std::holds_alternative<rules::AllIfThree>(rule) && bound.bounded() && bound.limit() == 3 &&
      !inst.pricing()) {
    return solve_all_if_three_bounded(inst);
  }
  if (std::holds_alternative<rules::AllIfFourElsePlurality>(rule) && !bound.bounded() &&
      !inst.pricing()) {
    return solve_all_if_four_unbounded(inst);
  }
  if (std::holds_alternative<rules::TrivialScoring>(rule)) return solve_trivial_scoring(inst);
  if (bound.bounded() && bound.limit() == 1) return solve_crc1(inst);
  if (bound.bounded()) return solve_fpt(inst);
  return solve_brute(inst);
}

}  // namespace recamp

#include "doctest.h"
#include "generators.hpp"
#include "oracles.hpp"
#include "recamp/error.hpp"
#include "recamp/instance.hpp"

using namespace recamp;
using gen::id;
using gen::ids;
using gen::rank;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::kParse;
}

// Two districts under plurality; a wins in the first, b only in the second.
RecampaignInstance small_instance(WinnerBound bound, std::optional<Pricing> pricing = std::nullopt) {
  District d1{ids({"c"}), {rank({"a", "c", "b"}), rank({"a", "b", "c"}), rank({"c", "b", "a"})}};
  District d2{ids({"e"}), {rank({"b", "a", "e"}), rank({"e", "b", "a"})}};
  return RecampaignInstance(rules::TApproval{1}, {d1, d2}, ids({"a", "b"}), bound, pricing);
}

Assignment place(std::initializer_list<std::pair<const char*, std::size_t>> entries) {
  Assignment asg;
  for (const auto& [name, d] : entries) asg.placement.emplace(name, d);
  return asg;
}

}  // namespace

TEST_CASE("winner bound") {
  CHECK(WinnerBound::at_most(2).admits(2));
  CHECK_FALSE(WinnerBound::at_most(2).admits(3));
  CHECK(WinnerBound::unbounded().admits(1000));
  CHECK(WinnerBound::at_most(3).describe() == "at-most(3)");
  CHECK(WinnerBound::unbounded().describe() == "unbounded");
  CHECK(kind_of([] { (void)WinnerBound::at_most(0); }) == ErrorKind::kPrecondition);
}

TEST_CASE("instance validation") {
  CHECK(kind_of([] {
          RecampaignInstance(rules::Borda{}, {}, ids({"a"}), WinnerBound::unbounded());
        }) == ErrorKind::kShape);
  CHECK(kind_of([] {
          RecampaignInstance(rules::Borda{}, {District{ids({"a"}), {}}}, ids({"a"}),
                             WinnerBound::unbounded());
        }) == ErrorKind::kShape);
  CHECK(kind_of([] {
          RecampaignInstance(rules::Borda{}, {District{ids({"c"}), {rank({"c"})}}}, ids({"a"}),
                             WinnerBound::unbounded());
        }) == ErrorKind::kShape);
  CHECK(kind_of([] {
          RecampaignInstance(rules::Borda{}, {District{ids({"c"}), {ApprovalBallot{ids({"c"})}}}},
                             ids({"a"}), WinnerBound::unbounded());
        }) == ErrorKind::kBallotType);
  CHECK_NOTHROW(RecampaignInstance(rules::AllIfThree{},
                                   {District{ids({"c"}), {ApprovalBallot{ids({"c", "a"})}}}},
                                   ids({"a"}), WinnerBound::unbounded()));
  CHECK(kind_of([] { (void)small_instance(WinnerBound::unbounded(), Pricing{{{1, 1}}, 3}); }) ==
        ErrorKind::kShape);
  CHECK(kind_of([] {
          (void)small_instance(WinnerBound::unbounded(), Pricing{{{1, -1}, {1, 1}}, 3});
        }) == ErrorKind::kShape);
  CHECK(kind_of([] {
          (void)small_instance(WinnerBound::unbounded(), Pricing{{{1, 1}, {1, 1}}, -1});
        }) == ErrorKind::kShape);
}

TEST_CASE("accessors") {
  const auto inst = small_instance(WinnerBound::at_most(1), Pricing{{{1, 2}, {3, 4}}, 5});
  CHECK(inst.index_of(id("b")) == 1);
  CHECK(kind_of([&] { (void)inst.index_of(id("c")); }) == ErrorKind::kUnknownCandidate);
  CHECK(inst.price(1, 0) == 3);
  CHECK(inst.with_pricing(std::nullopt).price(1, 0) == 0);
  CHECK(inst.with_bound(WinnerBound::unbounded()).bound() == WinnerBound::unbounded());
  const Election e = placed_election(inst, 0, ids({"b"}));
  CHECK(e.candidates() == ids({"b", "c"}));
  CHECK(std::get<Ranking>(e.votes()[0]) == rank({"c", "b"}));
}

TEST_CASE("verification examples") {
  const auto inst = small_instance(WinnerBound::unbounded());
  const auto ok = verify(inst, place({{"a", 0}, {"b", 1}}));
  CHECK(ok.valid);
  CHECK(ok.violations.empty());
  CHECK(ok.district_winners == std::vector<WinnerSet>{ids({"a"}), ids({"b", "e"})});
  CHECK_FALSE(ok.total_cost.has_value());

  // b ties with e in the second district.
  const auto bounded = verify(inst.with_bound(WinnerBound::at_most(1)), place({{"a", 0}, {"b", 1}}));
  CHECK_FALSE(bounded.valid);
  REQUIRE(bounded.violations.size() == 1);
  CHECK(bounded.violations[0].kind == ViolationKind::kWinnerBoundExceeded);
  CHECK(bounded.violations[0].district == 1);

  const auto losing = verify(inst, place({{"a", 1}, {"b", 1}}));
  CHECK_FALSE(losing.valid);
  REQUIRE_FALSE(losing.violations.empty());
  CHECK(losing.violations[0].kind == ViolationKind::kLosingCandidate);

  const auto priced = small_instance(WinnerBound::unbounded(), Pricing{{{2, 2}, {2, 2}}, 3});
  const auto over = verify(priced, place({{"a", 0}, {"b", 1}}));
  CHECK_FALSE(over.valid);
  CHECK(over.total_cost == 4);
  CHECK(over.violations.back().kind == ViolationKind::kBudgetExceeded);

  CHECK(kind_of([&] { (void)verify(inst, place({{"a", 0}})); }) == ErrorKind::kShape);
  CHECK(kind_of([&] { (void)verify(inst, place({{"a", 0}, {"b", 2}})); }) == ErrorKind::kShape);
  CHECK(kind_of([&] { (void)verify(inst, place({{"a", 0}, {"b", 0}, {"z", 0}})); }) ==
        ErrorKind::kShape);
  CHECK(to_string(ViolationKind::kWinnerBoundExceeded) == "winner bound exceeded");
}

TEST_CASE("trivial scoring makes every candidate a winner") {
  const RecampaignInstance tied(rules::TrivialScoring{}, {District{ids({"c"}), {}}}, ids({"a"}),
                                WinnerBound::at_most(1));
  const auto t = verify(tied, place({{"a", 0}}));
  CHECK_FALSE(t.valid);
  REQUIRE(t.violations.size() == 1);
  CHECK(t.violations[0].kind == ViolationKind::kWinnerBoundExceeded);
  CHECK(verify(tied.with_bound(WinnerBound::at_most(2)), place({{"a", 0}})).valid);
}

TEST_CASE("winner problem embedding") {
  const Election e(ids({"a", "b", "c"}), {rank({"a", "b", "c"}), rank({"b", "a", "c"})});
  for (const auto& rule : gen::all_rules()) {
    if (std::holds_alternative<rules::ExplicitScoring>(rule)) continue;
    for (const CandidateId& p : e.candidates()) {
      const auto inst = from_winner_problem(e, p, rule);
      CHECK(inst.district_count() == 1);
      CHECK(inst.additional() == CandidateSet{p});
      CHECK(verify(inst, Assignment{{{p, 0}}}).valid == winners(rule, e).contains(p));
    }
  }
}

TEST_CASE("lifting to unit prices") {
  const auto inst = small_instance(WinnerBound::unbounded());
  const auto lifted = lift_to_priced(inst);
  REQUIRE(lifted.pricing());
  CHECK(lifted.pricing()->budget == 2);
  CHECK(lifted.price(1, 1) == 1);
  CHECK(kind_of([&] { (void)lift_to_priced(lifted); }) == ErrorKind::kPrecondition);
}

TEST_CASE("random instances are deterministic and valid") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rule = gen::all_rules()[gen::pick(rng, 0, gen::all_rules().size() - 1)];
    const auto p = gen::params(rng, rule, 3, 3, WinnerBound::at_most(2), trial % 2 == 0);
    const auto a = random_instance(p, static_cast<std::uint64_t>(trial));
    const auto b = random_instance(p, static_cast<std::uint64_t>(trial));
    CHECK(a == b);
    CHECK(a.district_count() == p.districts);
    CHECK(a.additional_count() == p.additional);
    CHECK(a.pricing().has_value() == p.priced);
  }
}

TEST_CASE("verify agrees with the reference on every placement") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const auto rule = gen::all_rules()[gen::pick(rng, 0, gen::all_rules().size() - 1)];
    const WinnerBound bound =
        trial % 3 == 0 ? WinnerBound::unbounded() : WinnerBound::at_most(gen::pick(rng, 1, 3));
    const auto inst = random_instance(gen::params(rng, rule, 3, 3, bound, trial % 2 == 1), rng());
    CAPTURE(describe(rule));
    oracle::for_each_placement(inst.additional_count(), inst.district_count(), [&](const auto& where) {
      const auto ref = oracle::check(inst, where);
      const auto r = verify(inst, oracle::to_assignment(inst, where));
      REQUIRE(r.valid == ref.valid);
      CHECK(r.valid == r.violations.empty());
      if (inst.pricing()) CHECK(r.total_cost == ref.cost);
      CHECK(r.district_winners.size() == inst.district_count());
      return true;
    });
  }
}

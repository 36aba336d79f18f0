#include "recamp/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "gadget_support.hpp"
#include "recamp/error.hpp"
#include "recamp/solvers.hpp"

namespace recamp {

void X3CInstance::validate() const {
  if (universe.size() % 3 != 0) {
    throw Error(ErrorKind::kShape, "X3C universe size must be a multiple of 3");
  }
  for (const CandidateSet& triple : triples) {
    if (triple.size() != 3) throw Error(ErrorKind::kShape, "X3C sets must have exactly 3 elements");
    for (const CandidateId& u : triple) {
      if (!universe.contains(u)) {
        throw Error(ErrorKind::kShape, "X3C set mentions '" + u.name() + "' outside the universe");
      }
    }
  }
}

namespace {

std::map<CandidateId, std::size_t> occurrences(const ThreeDimMatching& inst) {
  std::map<CandidateId, std::size_t> count;
  for (const auto* side : {&inst.w, &inst.x, &inst.y}) {
    for (const CandidateId& e : *side) count.emplace(e, 0);
  }
  for (const auto& t : inst.triples) {
    for (const CandidateId& e : t) ++count[e];
  }
  return count;
}

}  // namespace

void ThreeDimMatching::validate_restricted() const {
  if (w.size() != x.size() || x.size() != y.size()) {
    throw Error(ErrorKind::kShape, "W, X and Y must have the same size");
  }
  CandidateSet ws(w.begin(), w.end());
  CandidateSet xs(x.begin(), x.end());
  CandidateSet ys(y.begin(), y.end());
  if (ws.size() != w.size() || xs.size() != x.size() || ys.size() != y.size()) {
    throw Error(ErrorKind::kShape, "W, X and Y must not repeat elements");
  }
  CandidateSet all = ws;
  all.insert(xs.begin(), xs.end());
  all.insert(ys.begin(), ys.end());
  if (all.size() != 3 * w.size()) throw Error(ErrorKind::kShape, "W, X and Y must be disjoint");
  std::set<std::array<CandidateId, 3>> seen;
  for (const auto& t : triples) {
    if (!ws.contains(t[0]) || !xs.contains(t[1]) || !ys.contains(t[2])) {
      throw Error(ErrorKind::kShape, "triple (" + t[0].name() + ", " + t[1].name() + ", " +
                                         t[2].name() + ") is not in W x X x Y");
    }
    if (!seen.insert(t).second) throw Error(ErrorKind::kShape, "triples must not repeat");
  }
  for (const auto& [e, count] : occurrences(*this)) {
    if (count > 3) {
      throw Error(ErrorKind::kShape, "'" + e.name() + "' occurs in more than three triples");
    }
  }
}

void ThreeDimMatching::validate_exactly3() const {
  validate_restricted();
  for (const auto& [e, count] : occurrences(*this)) {
    if (count != 3) {
      throw Error(ErrorKind::kShape, "'" + e.name() + "' occurs in " + std::to_string(count) +
                                         " triples, expected exactly three");
    }
  }
}

bool ThreeDimMatching::is_exactly3() const {
  try {
    validate_exactly3();
  } catch (const Error&) {
    return false;
  }
  return true;
}

void OneInThreeSat::validate() const {
  CandidateSet declared(variables.begin(), variables.end());
  if (declared.size() != variables.size()) {
    throw Error(ErrorKind::kShape, "variables must not repeat");
  }
  std::map<CandidateId, std::size_t> count;
  for (const CandidateSet& clause : clauses) {
    if (clause.size() != 3) throw Error(ErrorKind::kShape, "clauses must have three variables");
    for (const CandidateId& v : clause) {
      if (!declared.contains(v)) {
        throw Error(ErrorKind::kShape, "clause mentions undeclared variable '" + v.name() + "'");
      }
      ++count[v];
    }
  }
  for (const CandidateId& v : variables) {
    if (count[v] != 3) {
      throw Error(ErrorKind::kShape, "variable '" + v.name() + "' must occur in exactly 3 clauses");
    }
  }
}

namespace {

void charge(std::uint64_t& nodes, std::uint64_t budget) {
  if (++nodes > budget) throw Error(ErrorKind::kResource, "search exceeded the node budget");
}

}  // namespace

bool decide_x3c(const X3CInstance& inst) { return decide_x3c(inst, default_node_budget()); }

bool decide_x3c(const X3CInstance& inst, std::uint64_t node_budget) {
  inst.validate();
  const std::vector<CandidateId> elements(inst.universe.begin(), inst.universe.end());
  auto index = [&](const CandidateId& u) {
    return static_cast<std::size_t>(std::lower_bound(elements.begin(), elements.end(), u) -
                                    elements.begin());
  };
  std::set<std::array<std::size_t, 3>> distinct;
  for (const CandidateSet& triple : inst.triples) {
    std::array<std::size_t, 3> t{};
    std::size_t j = 0;
    for (const CandidateId& u : triple) t[j++] = index(u);
    distinct.insert(t);
  }
  // by_first[e]: triples whose smallest element is e
  std::vector<std::vector<std::array<std::size_t, 3>>> by_first(elements.size());
  for (const auto& t : distinct) by_first[t[0]].push_back(t);

  std::vector<bool> covered(elements.size(), false);
  std::uint64_t nodes = 0;
  auto search = [&](auto& self, std::size_t from) -> bool {
    charge(nodes, node_budget);
    while (from < elements.size() && covered[from]) ++from;
    if (from == elements.size()) return true;
    // The first uncovered element must be the smallest member of its triple.
    for (const auto& t : by_first[from]) {
      if (covered[t[1]] || covered[t[2]]) continue;
      for (std::size_t e : t) covered[e] = true;
      const bool found = self(self, from + 1);
      for (std::size_t e : t) covered[e] = false;
      if (found) return true;
    }
    return false;
  };
  return search(search, 0);
}

bool decide_3dm(const ThreeDimMatching& inst) { return decide_3dm(inst, default_node_budget()); }

bool decide_3dm(const ThreeDimMatching& inst, std::uint64_t node_budget) {
  inst.validate_restricted();
  std::map<CandidateId, std::size_t> wpos;
  for (std::size_t j = 0; j < inst.w.size(); ++j) wpos.emplace(inst.w[j], j);
  std::vector<std::vector<std::size_t>> by_w(inst.w.size());
  for (std::size_t t = 0; t < inst.triples.size(); ++t) by_w[wpos.at(inst.triples[t][0])].push_back(t);

  CandidateSet used;
  std::uint64_t nodes = 0;
  auto search = [&](auto& self, std::size_t j) -> bool {
    charge(nodes, node_budget);
    if (j == inst.w.size()) return true;
    for (std::size_t t : by_w[j]) {
      const auto& triple = inst.triples[t];
      if (used.contains(triple[1]) || used.contains(triple[2])) continue;
      used.insert(triple[1]);
      used.insert(triple[2]);
      const bool found = self(self, j + 1);
      used.erase(triple[1]);
      used.erase(triple[2]);
      if (found) return true;
    }
    return false;
  };
  return search(search, 0);
}

bool decide_one_in_three_sat(const OneInThreeSat& f) {
  return decide_one_in_three_sat(f, default_node_budget());
}

bool decide_one_in_three_sat(const OneInThreeSat& f, std::uint64_t node_budget) {
  f.validate();
  const std::size_t n = f.variables.size();
  if (n >= 63 || (std::uint64_t{1} << n) > node_budget) {
    throw Error(ErrorKind::kResource, "2^" + std::to_string(n) + " truth assignments exceed the budget");
  }
  std::map<CandidateId, std::size_t> pos;
  for (std::size_t j = 0; j < n; ++j) pos.emplace(f.variables[j], j);
  std::vector<std::uint64_t> clause_masks;
  for (const CandidateSet& clause : f.clauses) {
    std::uint64_t mask = 0;
    for (const CandidateId& v : clause) mask |= std::uint64_t{1} << pos.at(v);
    clause_masks.push_back(mask);
  }
  for (std::uint64_t truth = 0; truth < (std::uint64_t{1} << n); ++truth) {
    const bool ok = std::all_of(clause_masks.begin(), clause_masks.end(), [&](std::uint64_t c) {
      return std::popcount(c & truth) == 1;
    });
    if (ok) return true;
  }
  return false;
}

ThreeDimMatching pad_to_exactly3(const ThreeDimMatching& inst, std::size_t* steps) {
  inst.validate_restricted();
  ThreeDimMatching out = inst;
  std::size_t rounds = 0;
  if (out.triples.size() != 3 * out.k()) {
    CandidateSet taken;
    std::map<CandidateId, std::size_t> count = occurrences(out);
    for (const auto& [e, c] : count) taken.insert(e);
    auto deficient = [&](const std::vector<CandidateId>& side) {
      return *std::find_if(side.begin(), side.end(),
                           [&](const CandidateId& e) { return count[e] < 3; });
    };
    while (out.triples.size() != 3 * out.k()) {
      const CandidateId w = deficient(out.w);
      const CandidateId x = deficient(out.x);
      const CandidateId y = deficient(out.y);
      const std::string tag = "^" + std::to_string(out.triples.size());
      const CandidateId wi = detail::fresh_name("w" + tag, taken);
      const CandidateId xi = detail::fresh_name("x" + tag, taken);
      const CandidateId yi = detail::fresh_name("y" + tag, taken);
      out.w.push_back(wi);
      out.x.push_back(xi);
      out.y.push_back(yi);
      out.triples.push_back({w, xi, yi});
      out.triples.push_back({wi, x, yi});
      out.triples.push_back({wi, xi, y});
      out.triples.push_back({wi, xi, yi});
      ++count[w];
      ++count[x];
      ++count[y];
      count[wi] = count[xi] = count[yi] = 3;
      ++rounds;
    }
  }
  if (steps != nullptr) *steps = rounds;
  return out;
}

RecampaignInstance x3c_to_all_if_three_priced(const X3CInstance& inst) {
  inst.validate();
  const std::size_t k = inst.triples.size();
  const auto m = static_cast<std::int64_t>(inst.m());
  if (k == 0) throw Error(ErrorKind::kPrecondition, "X3C instance has no sets");
  Pricing pricing;
  pricing.budget = 3 * m;
  for (const CandidateSet& triple : inst.triples) {
    std::vector<std::int64_t> row;
    for (const CandidateId& a : inst.universe) row.push_back(triple.contains(a) ? 1 : 3 * m + 1);
    pricing.prices.push_back(std::move(row));
  }
  return RecampaignInstance(rules::AllIfThree{}, std::vector<District>(k), inst.universe,
                            WinnerBound::at_most(3), std::move(pricing));
}

NontrivialVector find_nontrivial_vector(const VotingRuleSpec& rule, std::size_t max_m) {
  if (!is_scoring(rule)) {
    throw Error(ErrorKind::kUnsupportedRule, describe(rule) + " is not a scoring rule");
  }
  for (std::size_t m = 2; m <= max_m; ++m) {
    ScoringVector s;
    try {
      s = scoring_vector(rule, m);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kMissingVector) throw;
      break;
    }
    for (std::size_t i = 1; i < m; ++i) {
      if (s[i] != s[0]) return {m, i};
    }
  }
  throw Error(ErrorKind::kTriviality,
              describe(rule) + " has only constant scoring vectors up to m = " +
                  std::to_string(max_m));
}

}  // namespace recamp

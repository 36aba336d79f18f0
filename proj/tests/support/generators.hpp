#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "recamp/gadgets.hpp"
#include "recamp/instance.hpp"
#include "recamp/matching.hpp"

namespace gen {

using namespace recamp;
using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline CandidateId id(const std::string& name) { return CandidateId(name); }

inline CandidateSet ids(std::initializer_list<const char*> names) {
  CandidateSet out;
  for (const char* n : names) out.insert(CandidateId(n));
  return out;
}

inline Ranking rank(std::initializer_list<const char*> names) {
  Ranking r;
  for (const char* n : names) r.order.emplace_back(n);
  return r;
}

// A pure family that is neither approval, veto nor Borda, defined up to m = 8.
inline rules::ExplicitScoring sample_explicit() {
  return rules::ExplicitScoring::from_vectors({{0},
                                               {3, 0},
                                               {3, 1, 0},
                                               {3, 2, 1, 0},
                                               {5, 3, 2, 1, 0},
                                               {5, 3, 2, 1, 0, 0},
                                               {7, 5, 3, 2, 1, 0, 0},
                                               {7, 5, 3, 2, 1, 0, 0, 0}});
}

// Every rule variant, with a couple of parameter choices.
inline std::vector<VotingRuleSpec> all_rules() {
  return {rules::TApproval{1}, rules::TApproval{2}, rules::TVeto{1}, rules::TVeto{2},
          rules::Borda{},      rules::TrivialScoring{}, sample_explicit(), rules::Condorcet{},
          rules::AllIfThree{}, rules::AllIfFourElsePlurality{}};
}

inline Election random_election(Rng& rng, std::size_t max_candidates, std::size_t max_votes) {
  const std::size_t m = pick(rng, 1, max_candidates);
  std::vector<CandidateId> pool;
  for (std::size_t c = 0; c < m; ++c) pool.emplace_back(std::string(1, static_cast<char>('a' + c)));
  std::vector<Vote> votes;
  const std::size_t v = pick(rng, 0, max_votes);
  for (std::size_t i = 0; i < v; ++i) {
    std::shuffle(pool.begin(), pool.end(), rng);
    votes.emplace_back(Ranking{pool});
  }
  return Election(CandidateSet(pool.begin(), pool.end()), std::move(votes));
}

inline RandomInstanceParams params(Rng& rng, const VotingRuleSpec& rule, std::size_t max_k,
                                   std::size_t max_n, WinnerBound bound, bool priced) {
  RandomInstanceParams p;
  p.districts = pick(rng, 1, max_k);
  p.additional = pick(rng, 0, max_n);
  p.rule = rule;
  p.min_district_candidates = 0;
  p.max_district_candidates = 3;
  p.max_votes = 5;
  p.bound = bound;
  p.priced = priced;
  return p;
}

inline BipartiteMultigraph random_graph(Rng& rng, std::size_t max_vertices,
                                        std::int64_t max_multiplicity, std::size_t max_edges) {
  BipartiteMultigraph g;
  const std::size_t total = pick(rng, 0, max_vertices);
  g.left_count = pick(rng, 0, total);
  g.right_count = total - g.left_count;
  if (g.left_count == 0 || g.right_count == 0) return g;
  const std::size_t edges = pick(rng, 0, max_edges);
  for (std::size_t e = 0; e < edges; ++e) {
    g.edges.push_back({pick(rng, 0, g.left_count - 1), pick(rng, 0, g.right_count - 1),
                       static_cast<std::int64_t>(pick(rng, 0, 9)),
                       static_cast<std::int64_t>(pick(rng, 1, static_cast<std::size_t>(max_multiplicity)))});
  }
  return g;
}

inline DegreeConstraint random_degrees(Rng& rng, const BipartiteMultigraph& g, std::int64_t max_b) {
  DegreeConstraint b;
  for (std::size_t l = 0; l < g.left_count; ++l) b.left.push_back(static_cast<std::int64_t>(pick(rng, 0, static_cast<std::size_t>(max_b))));
  for (std::size_t r = 0; r < g.right_count; ++r) b.right.push_back(static_cast<std::int64_t>(pick(rng, 0, static_cast<std::size_t>(max_b))));
  return b;
}

inline CandidateSet universe(std::size_t size) {
  CandidateSet out;
  for (std::size_t i = 1; i <= size; ++i) out.insert(CandidateId("u" + std::to_string(i)));
  return out;
}

// All 3-subsets of the universe, in lexicographic order of their members.
inline std::vector<CandidateSet> all_triples(const CandidateSet& u) {
  const std::vector<CandidateId> e(u.begin(), u.end());
  std::vector<CandidateSet> out;
  for (std::size_t a = 0; a < e.size(); ++a) {
    for (std::size_t b = a + 1; b < e.size(); ++b) {
      for (std::size_t c = b + 1; c < e.size(); ++c) out.push_back({e[a], e[b], e[c]});
    }
  }
  return out;
}

// Every X3C instance over a 3m universe whose triples are `count` distinct
// 3-subsets; visit(X3CInstance).
template <typename Visit>
void for_each_x3c(std::size_t m, std::size_t count, Visit&& visit) {
  const CandidateSet u = universe(3 * m);
  const auto triples = all_triples(u);
  std::vector<std::size_t> chosen;
  auto rec = [&](auto& self, std::size_t from) -> void {
    if (chosen.size() == count) {
      X3CInstance inst{u, {}};
      for (std::size_t i : chosen) inst.triples.push_back(triples[i]);
      visit(inst);
      return;
    }
    for (std::size_t i = from; i < triples.size(); ++i) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

inline X3CInstance random_x3c(Rng& rng, std::size_t m, std::size_t count) {
  const CandidateSet u = universe(3 * m);
  auto triples = all_triples(u);
  std::shuffle(triples.begin(), triples.end(), rng);
  triples.resize(std::min(count, triples.size()));
  return {u, triples};
}

// Random restricted 3DM instance with k elements per side and `size` triples
// (fewer if the occurrence limit leaves no room).
inline ThreeDimMatching random_r3dm(Rng& rng, std::size_t k, std::size_t size) {
  ThreeDimMatching inst;
  for (std::size_t i = 1; i <= k; ++i) {
    inst.w.emplace_back("w" + std::to_string(i));
    inst.x.emplace_back("x" + std::to_string(i));
    inst.y.emplace_back("y" + std::to_string(i));
  }
  std::vector<std::array<std::size_t, 3>> all;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) all.push_back({a, b, c});
    }
  }
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<int> cw(k, 0), cx(k, 0), cy(k, 0);
  for (const auto& t : all) {
    if (inst.triples.size() == size) break;
    if (cw[t[0]] == 3 || cx[t[1]] == 3 || cy[t[2]] == 3) continue;
    ++cw[t[0]];
    ++cx[t[1]];
    ++cy[t[2]];
    inst.triples.push_back({inst.w[t[0]], inst.x[t[1]], inst.y[t[2]]});
  }
  return inst;
}

// Random formula with n variables, each in exactly three clauses, no clause
// repeating a variable. Retries the pairing until it fits; n >= 3.
inline OneInThreeSat random_sat(Rng& rng, std::size_t n) {
  OneInThreeSat f;
  for (std::size_t i = 1; i <= n; ++i) f.variables.emplace_back("v" + std::to_string(i));
  std::vector<std::size_t> slots;
  for (std::size_t i = 0; i < n; ++i) slots.insert(slots.end(), {i, i, i});
  for (;;) {
    std::shuffle(slots.begin(), slots.end(), rng);
    f.clauses.clear();
    bool ok = true;
    for (std::size_t c = 0; c < n && ok; ++c) {
      CandidateSet clause{f.variables[slots[3 * c]], f.variables[slots[3 * c + 1]],
                          f.variables[slots[3 * c + 2]]};
      ok = clause.size() == 3;
      f.clauses.push_back(std::move(clause));
    }
    if (ok) return f;
  }
}

// Every exactly-3 instance with k elements per side (sides w1.., x1.., y1..);
// visit(ThreeDimMatching).
template <typename Visit>
void for_each_exact3(std::size_t k, Visit&& visit) {
  ThreeDimMatching inst;
  for (std::size_t i = 1; i <= k; ++i) {
    inst.w.emplace_back("w" + std::to_string(i));
    inst.x.emplace_back("x" + std::to_string(i));
    inst.y.emplace_back("y" + std::to_string(i));
  }
  std::vector<std::array<std::size_t, 3>> all;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t c = 0; c < k; ++c) all.push_back({a, b, c});
    }
  }
  std::vector<int> cw(k, 0), cx(k, 0), cy(k, 0);
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (inst.triples.size() == 3 * k) {
      visit(inst);
      return;
    }
    if (all.size() - i < 3 * k - inst.triples.size()) return;
    const auto& t = all[i];
    if (cw[t[0]] < 3 && cx[t[1]] < 3 && cy[t[2]] < 3) {
      ++cw[t[0]];
      ++cx[t[1]];
      ++cy[t[2]];
      inst.triples.push_back({inst.w[t[0]], inst.x[t[1]], inst.y[t[2]]});
      self(self, i + 1);
      inst.triples.pop_back();
      --cw[t[0]];
      --cx[t[1]];
      --cy[t[2]];
    }
    self(self, i + 1);
  };
  rec(rec, 0);
}

}  // namespace gen

#include <algorithm>
#include <map>

#include "gadget_support.hpp"
#include "recamp/error.hpp"
#include "recamp/gadgets.hpp"

namespace recamp {

using detail::fresh_name;

namespace {

using Head = std::vector<CandidateId>;
using Trio = std::array<CandidateId, 3>;

// `head` followed by the rest of `pool` in name order.
Ranking complete(const Head& head, const CandidateSet& pool) {
  Ranking r{head};
  CandidateSet listed(head.begin(), head.end());
  for (const CandidateId& c : pool) {
    if (!listed.contains(c)) r.order.push_back(c);
  }
  return r;
}

std::vector<Head> one_w_three_x(const Trio& w, const Trio& x) {
  return {{w[0], x[0], x[1], x[2]}, {x[0], x[1], x[2], w[0]}};
}

std::vector<Head> paired_w_paired_x(const Trio& w, const Trio& x) {
  return {{w[2], x[1], w[0], x[0]},
          {w[2], w[0], x[1], x[0]},
          {x[0], w[0], w[2], x[1]},
          {x[1], x[0], w[2], w[0]}};
}

std::vector<Head> paired_w_three_x(const Trio& w, const Trio& x) {
  return {{w[2], w[0], x[2], x[0], x[1]},
          {x[2], w[0], w[2], x[1], x[0]},
          {w[2], x[0], x[1], x[2], w[0]},
          {x[2], x[0], x[1], w[2], w[0]}};
}

std::vector<Head> three_w_three_x(const Trio& w, const Trio& x) {
  return {{w[0], w[1], w[2], x[2], x[1], x[0]}, {w[0], x[1], x[2], w[2], w[1], x[0]},
          {x[0], w[1], w[2], x[2], x[1], w[0]}, {x[0], x[1], x[2], w[2], w[1], w[0]},
          {w[1], w[0], w[2], x[2], x[1], x[0]}, {w[1], x[0], x[2], w[2], x[1], w[0]},
          {x[1], w[0], w[2], x[2], w[1], x[0]}, {x[1], x[0], x[2], w[2], w[1], w[0]},
          {w[2], w[0], w[1], x[2], x[1], x[0]}, {w[2], x[0], x[1], x[2], w[1], w[0]},
          {x[2], w[0], w[1], w[2], x[1], x[0]}, {x[2], x[0], x[1], w[2], w[1], w[0]}};
}

std::size_t distinct(const Trio& t) { return CandidateSet(t.begin(), t.end()).size(); }

// The (first, second) positions holding equal values, third is the odd one.
std::array<std::size_t, 3> pair_layout(const Trio& t) {
  if (t[0] == t[1]) return {0, 1, 2};
  if (t[0] == t[2]) return {0, 2, 1};
  return {1, 2, 0};
}

Trio pick(const Trio& t, const std::array<std::size_t, 3>& order) {
  return {t[order[0]], t[order[1]], t[order[2]]};
}

// Ballot heads for the three triples through one y. Patterns the templates
// list only for W are handled by exchanging the roles of W and X.
std::vector<Head> district_heads(const Trio& w, const Trio& x) {
  const std::size_t dw = distinct(w);
  const std::size_t dx = distinct(x);
  if (dw == 1) return one_w_three_x(w, x);
  if (dx == 1) return one_w_three_x(x, w);
  if (dw == 2 && dx == 2) {
    const auto wp = pair_layout(w);
    const auto xp = pair_layout(x);
    // The two equal pairs share exactly one triple; it gets label 1.
    std::size_t shared = wp[0];
    if (shared != xp[0] && shared != xp[1]) shared = wp[1];
    const std::size_t w_other = wp[0] == shared ? wp[1] : wp[0];
    const std::size_t x_other = xp[0] == shared ? xp[1] : xp[0];
    const std::array<std::size_t, 3> order{shared, w_other, x_other};
    return paired_w_paired_x(pick(w, order), pick(x, order));
  }
  if (dw == 2) {
    const auto order = pair_layout(w);
    return paired_w_three_x(pick(w, order), pick(x, order));
  }
  if (dx == 2) {
    const auto order = pair_layout(x);
    return paired_w_three_x(pick(x, order), pick(w, order));
  }
  return three_w_three_x(w, x);
}

}  // namespace

RecampaignInstance matching_to_plurality(const ThreeDimMatching& inst) {
  return matching_to_scoring(inst, rules::TApproval{1});
}

RecampaignInstance matching_to_scoring(const ThreeDimMatching& inst, const VotingRuleSpec& rule) {
  inst.validate_exactly3();
  const NontrivialVector nv = find_nontrivial_vector(rule);

  CandidateSet additional(inst.w.begin(), inst.w.end());
  additional.insert(inst.x.begin(), inst.x.end());
  std::vector<District> districts;
  for (const CandidateId& y : inst.y) {
    Trio w{y, y, y};
    Trio x{y, y, y};
    std::size_t found = 0;
    for (const auto& t : inst.triples) {
      if (t[2] != y) continue;
      w[found] = t[0];
      x[found] = t[1];
      ++found;
    }

    // fillers holds s_1..s_{i-1}, s_{i+2}..s_m in index order
    District d;
    CandidateSet taken = additional;
    std::vector<CandidateId> fillers;
    for (std::size_t j = 1; j <= nv.m; ++j) {
      if (j == nv.split || j == nv.split + 1) continue;
      fillers.push_back(fresh_name(y.name() + ".s" + std::to_string(j), taken));
    }
    d.candidates.insert(fillers.begin(), fillers.end());
    const std::size_t leading = nv.split - 1;

    for (const Head& head : district_heads(w, x)) {
      const Ranking base = complete(head, additional);
      Head order(fillers.begin(), fillers.begin() + static_cast<std::ptrdiff_t>(leading));
      order.insert(order.end(), base.order.begin(), base.order.end());
      order.insert(order.end(), fillers.begin() + static_cast<std::ptrdiff_t>(leading),
                   fillers.end());
      d.votes.emplace_back(Ranking{std::move(order)});
    }
    for (std::size_t k = 1; k <= leading; ++k) {
      for (const Head& head : district_heads(w, x)) {
        Head order = complete(head, additional).order;
        for (std::size_t j = 0; j < fillers.size(); ++j) {
          if (j != k - 1) order.push_back(fillers[j]);
        }
        order.push_back(fillers[k - 1]);
        d.votes.emplace_back(Ranking{std::move(order)});
      }
    }
    districts.push_back(std::move(d));
  }
  return RecampaignInstance(rule, std::move(districts), std::move(additional),
                            WinnerBound::at_most(2));
}

namespace {

void require_x3c_shape(const X3CInstance& inst, int t) {
  inst.validate();
  if (inst.m() <= 1 || inst.triples.size() <= 1) {
    throw Error(ErrorKind::kPrecondition, "this construction needs m > 1 and more than one set");
  }
  if (t < 1) throw Error(ErrorKind::kPrecondition, "t must be at least 1");
}

}  // namespace

RecampaignInstance x3c_to_approval(const X3CInstance& inst, int t, WinnerBound bound) {
  require_x3c_shape(inst, t);
  std::vector<District> districts;
  for (std::size_t i = 0; i < inst.triples.size(); ++i) {
    const std::vector<CandidateId> xyz(inst.triples[i].begin(), inst.triples[i].end());
    const CandidateId& x = xyz[0];
    const CandidateId& y = xyz[1];
    const CandidateId& z = xyz[2];
    const std::string prefix = "D" + std::to_string(i + 1) + ".";
    CandidateSet taken = inst.universe;
    const CandidateId s = fresh_name(prefix + "s", taken);
    std::vector<Head> blocks(7);
    for (std::size_t j = 0; j < 7; ++j) {
      for (int l = 1; l < t; ++l) {
        blocks[j].push_back(
            fresh_name(prefix + "b" + std::to_string(j + 1) + "." + std::to_string(l), taken));
      }
    }

    District d;
    d.candidates.insert(s);
    for (const Head& block : blocks) d.candidates.insert(block.begin(), block.end());
    CandidateSet pool = d.candidates;
    pool.insert(inst.universe.begin(), inst.universe.end());

    const std::vector<Head> shapes = {{x, s, y, z}, {x, s, y, z}, {y, s, z, x}, {y, s, z, x},
                                      {z, s, x, y}, {z, s, x, y}, {s, x, y, z}};
    for (std::size_t j = 0; j < 7; ++j) {
      Head head = blocks[j];
      head.insert(head.end(), shapes[j].begin(), shapes[j].end());
      d.votes.emplace_back(complete(head, pool));
    }
    districts.push_back(std::move(d));
  }
  return RecampaignInstance(rules::TApproval{t}, std::move(districts), inst.universe, bound);
}

RecampaignInstance x3c_to_veto(const X3CInstance& inst, int t, WinnerBound bound) {
  require_x3c_shape(inst, t);
  std::vector<District> districts;
  for (std::size_t i = 0; i < inst.triples.size(); ++i) {
    const std::vector<CandidateId> xyz(inst.triples[i].begin(), inst.triples[i].end());
    const CandidateId& x = xyz[0];
    const CandidateId& y = xyz[1];
    const CandidateId& z = xyz[2];
    const std::string prefix = "D" + std::to_string(i + 1) + ".";
    CandidateSet taken = inst.universe;
    const CandidateId s = fresh_name(prefix + "s", taken);
    Head blockers;
    for (int l = 1; l < t; ++l) blockers.push_back(fresh_name(prefix + "b" + std::to_string(l), taken));

    District d;
    d.candidates.insert(s);
    d.candidates.insert(blockers.begin(), blockers.end());
    Head rest;  // A'_i in name order
    for (const CandidateId& a : inst.universe) {
      if (!inst.triples[i].contains(a)) rest.push_back(a);
    }
    const std::vector<Head> shapes = {
        {s, x, y, z}, {s, y, z, x}, {s, z, x, y}, {x, y, z, s}, {x, y, z, s}};
    for (const Head& shape : shapes) {
      Head order = shape;
      order.insert(order.end(), rest.begin(), rest.end());
      order.insert(order.end(), blockers.begin(), blockers.end());
      d.votes.emplace_back(Ranking{std::move(order)});
    }
    districts.push_back(std::move(d));
  }
  return RecampaignInstance(rules::TVeto{t}, std::move(districts), inst.universe, bound);
}

RecampaignInstance sat_to_approval(const OneInThreeSat& f, int t) {
  f.validate();
  if (f.clauses.size() <= 3 || f.variables.size() <= 1) {
    throw Error(ErrorKind::kPrecondition, "this construction needs more than 3 clauses and 1 variable");
  }
  if (t < 1) throw Error(ErrorKind::kPrecondition, "t must be at least 1");

  // Build everything over base names, then replace each name by its t copies.
  CandidateSet taken(f.variables.begin(), f.variables.end());
  std::vector<CandidateId> first_side;
  std::vector<CandidateId> second_side;
  for (std::size_t i = 1; i <= f.clauses.size(); ++i) {
    first_side.push_back(fresh_name("s" + std::to_string(i), taken));
    second_side.push_back(fresh_name("t" + std::to_string(i), taken));
  }
  std::map<CandidateId, std::vector<CandidateId>> copies;
  for (const CandidateId& base : CandidateSet(taken)) {
    if (t == 1) {
      copies[base] = {base};
      continue;
    }
    for (int c = 1; c <= t; ++c) {
      copies[base].push_back(fresh_name(base.name() + "#" + std::to_string(c), taken));
    }
  }
  auto expand = [&](const Ranking& base) {
    Ranking out;
    for (const CandidateId& c : base.order) {
      const auto& cs = copies.at(c);
      out.order.insert(out.order.end(), cs.begin(), cs.end());
    }
    return out;
  };
  auto expand_set = [&](const std::vector<CandidateId>& names) {
    CandidateSet out;
    for (const CandidateId& c : names) out.insert(copies.at(c).begin(), copies.at(c).end());
    return out;
  };

  const CandidateSet variables(f.variables.begin(), f.variables.end());
  auto build = [&](const std::vector<CandidateId>& own, bool both_directions) {
    CandidateSet pool(own.begin(), own.end());
    pool.insert(variables.begin(), variables.end());
    District d;
    d.candidates = expand_set(own);
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
      Head forward(f.clauses[i].begin(), f.clauses[i].end());
      forward.push_back(own[i]);
      d.votes.emplace_back(expand(complete(forward, pool)));
      if (both_directions) {
        Head backward(f.clauses[i].rbegin(), f.clauses[i].rend());
        backward.push_back(own[i]);
        d.votes.emplace_back(expand(complete(backward, pool)));
      }
      for (int r = 0; r < 3; ++r) d.votes.emplace_back(expand(complete({own[i]}, pool)));
    }
    return d;
  };

  std::vector<District> districts;
  districts.push_back(build(first_side, false));
  districts.push_back(build(second_side, true));
  return RecampaignInstance(rules::TApproval{t}, std::move(districts),
                            expand_set(f.variables), WinnerBound::unbounded());
}

}  // namespace recamp

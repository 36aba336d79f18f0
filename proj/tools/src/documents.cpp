#include "documents.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "recamp/error.hpp"

namespace recamp::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::kParse, what); }

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) malformed(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

template <typename F>
auto guarded(F&& parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const nlohmann::json::exception& e) {
    malformed(e.what());
  }
}

CandidateId name_from(const Json& j) {
  if (!j.is_string()) malformed("candidate names must be strings");
  return CandidateId(j.get<std::string>());
}

CandidateSet set_from(const Json& j) {
  if (!j.is_array()) malformed("expected an array of candidate names");
  CandidateSet out;
  for (const Json& e : j) {
    if (!out.insert(name_from(e)).second) malformed("repeated name '" + e.get<std::string>() + "'");
  }
  return out;
}

std::vector<CandidateId> list_from(const Json& j) {
  if (!j.is_array()) malformed("expected an array of names");
  std::vector<CandidateId> out;
  for (const Json& e : j) out.push_back(name_from(e));
  return out;
}

Json names(const auto& range) {
  Json out = Json::array();
  for (const CandidateId& c : range) out.push_back(c.name());
  return out;
}

Json vote_to_json(const Vote& vote) {
  if (const auto* r = std::get_if<Ranking>(&vote)) return names(r->order);
  Json out = Json::object();
  out["approve"] = names(std::get<ApprovalBallot>(vote).approved);
  return out;
}

Vote vote_from(const Json& j) {
  if (j.is_array()) return Ranking{list_from(j)};
  if (j.is_object() && j.contains("approve")) return ApprovalBallot{set_from(j.at("approve"))};
  malformed("a vote is an array of names or {\"approve\": [...]}");
}

std::vector<Vote> votes_from(const Json& j) {
  if (!j.is_array()) malformed("\"votes\" must be an array");
  std::vector<Vote> out;
  for (const Json& v : j) out.push_back(vote_from(v));
  return out;
}

Json with_format() {
  Json doc = Json::object();
  doc["format"] = kFormat;
  return doc;
}

void check_format(const Json& doc) {
  if (!doc.is_object()) malformed("document must be a JSON object");
  if (doc.contains("format") && doc.at("format") != kFormat) {
    malformed("unsupported format " + doc.at("format").dump());
  }
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    malformed(e.what());
  }
}

std::string render(const Json& doc) { return doc.dump(2) + "\n"; }

Json rule_to_json(const VotingRuleSpec& rule) {
  Json out = Json::object();
  std::visit(
      [&out](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, rules::TApproval>) {
          out["family"] = "t-approval";
          out["t"] = r.t;
        } else if constexpr (std::is_same_v<R, rules::TVeto>) {
          out["family"] = "t-veto";
          out["t"] = r.t;
        } else if constexpr (std::is_same_v<R, rules::Borda>) {
          out["family"] = "borda";
        } else if constexpr (std::is_same_v<R, rules::TrivialScoring>) {
          out["family"] = "trivial";
        } else if constexpr (std::is_same_v<R, rules::ExplicitScoring>) {
          out["family"] = "explicit";
          out["vectors"] = r.vectors();
        } else if constexpr (std::is_same_v<R, rules::Condorcet>) {
          out["family"] = "condorcet";
        } else if constexpr (std::is_same_v<R, rules::AllIfThree>) {
          out["family"] = "all-if-three";
        } else {
          out["family"] = "all-if-four-else-plurality";
        }
      },
      rule);
  return out;
}

VotingRuleSpec rule_from_json(const Json& doc) {
  return guarded([&]() -> VotingRuleSpec {
    const std::string family = field(doc, "family").get<std::string>();
    if (family == "t-approval") return rules::TApproval{field(doc, "t").get<int>()};
    if (family == "t-veto") return rules::TVeto{field(doc, "t").get<int>()};
    if (family == "borda") return rules::Borda{};
    if (family == "trivial") return rules::TrivialScoring{};
    if (family == "explicit") {
      return rules::ExplicitScoring::from_vectors(
          field(doc, "vectors").get<std::vector<ScoringVector>>());
    }
    if (family == "condorcet") return rules::Condorcet{};
    if (family == "all-if-three") return rules::AllIfThree{};
    if (family == "all-if-four-else-plurality") return rules::AllIfFourElsePlurality{};
    throw Error(ErrorKind::kUnsupportedRule, "unknown rule family '" + family + "'");
  });
}

VotingRuleSpec rule_from_string(const std::string& text) {
  const auto colon = text.find(':');
  const std::string family = text.substr(0, colon);
  Json doc = Json::object();
  doc["family"] = family;
  if (colon != std::string::npos) {
    const std::string arg = text.substr(colon + 1);
    int t = 0;
    std::istringstream in(arg);
    if (!(in >> t) || !in.eof()) malformed("rule parameter '" + arg + "' is not an integer");
    doc["t"] = t;
  } else if (family == "t-approval" || family == "t-veto") {
    doc["t"] = 1;
  }
  if (family == "all-if-four") doc["family"] = "all-if-four-else-plurality";
  return rule_from_json(doc);
}

Json instance_to_json(const RecampaignInstance& inst) {
  Json doc = with_format();
  doc["rule"] = rule_to_json(inst.rule());
  Json districts = Json::array();
  for (const District& d : inst.districts()) {
    Json dj = Json::object();
    dj["candidates"] = names(d.candidates);
    Json votes = Json::array();
    for (const Vote& v : d.votes) votes.push_back(vote_to_json(v));
    dj["votes"] = std::move(votes);
    districts.push_back(std::move(dj));
  }
  doc["districts"] = std::move(districts);
  doc["additional"] = names(inst.additional());
  if (inst.bound().bounded()) {
    doc["bound"] = Json::object({{"atMost", inst.bound().limit()}});
  } else {
    doc["bound"] = "unbounded";
  }
  if (const auto& pricing = inst.pricing()) {
    Json prices = Json::array();
    for (std::size_t i = 0; i < inst.district_count(); ++i) {
      for (std::size_t a = 0; a < inst.additional_count(); ++a) {
        prices.push_back(
            Json::array({i + 1, inst.additional_order()[a].name(), pricing->prices[i][a]}));
      }
    }
    Json pj = Json::object();
    pj["prices"] = std::move(prices);
    pj["budget"] = pricing->budget;
    doc["pricing"] = std::move(pj);
  }
  return doc;
}

RecampaignInstance instance_from_json(const Json& doc) {
  return guarded([&] {
    check_format(doc);
    const VotingRuleSpec rule = rule_from_json(field(doc, "rule"));
    std::vector<District> districts;
    const Json& dj = field(doc, "districts");
    if (!dj.is_array()) malformed("\"districts\" must be an array");
    for (const Json& d : dj) {
      districts.push_back({set_from(field(d, "candidates")), votes_from(field(d, "votes"))});
    }
    const CandidateSet additional = set_from(field(doc, "additional"));

    WinnerBound bound = WinnerBound::unbounded();
    const Json& bj = field(doc, "bound");
    if (bj.is_object()) {
      const auto ell = field(bj, "atMost").get<std::int64_t>();
      if (ell < 1) throw Error(ErrorKind::kPrecondition, "atMost must be at least 1");
      bound = WinnerBound::at_most(static_cast<std::size_t>(ell));
    } else if (bj != "unbounded") {
      malformed("\"bound\" must be {\"atMost\": l} or \"unbounded\"");
    }

    std::optional<Pricing> pricing;
    if (doc.contains("pricing") && !doc.at("pricing").is_null()) {
      const Json& pj = doc.at("pricing");
      const std::vector<CandidateId> order(additional.begin(), additional.end());
      std::map<CandidateId, std::size_t> column;
      for (std::size_t a = 0; a < order.size(); ++a) column.emplace(order[a], a);
      Pricing p;
      p.budget = field(pj, "budget").get<std::int64_t>();
      std::vector<std::vector<std::optional<std::int64_t>>> seen(
          districts.size(), std::vector<std::optional<std::int64_t>>(order.size()));
      for (const Json& entry : field(pj, "prices")) {
        if (!entry.is_array() || entry.size() != 3) malformed("a price entry is [district, candidate, price]");
        const auto i = entry[0].get<std::int64_t>();
        if (i < 1 || static_cast<std::size_t>(i) > districts.size()) {
          throw Error(ErrorKind::kShape, "price entry names district " + std::to_string(i));
        }
        const CandidateId a = name_from(entry[1]);
        auto it = column.find(a);
        if (it == column.end()) {
          throw Error(ErrorKind::kUnknownCandidate, "price entry names unknown '" + a.name() + "'");
        }
        auto& slot = seen[static_cast<std::size_t>(i - 1)][it->second];
        if (slot) throw Error(ErrorKind::kShape, "duplicate price for district " + std::to_string(i) + ", '" + a.name() + "'");
        slot = entry[2].get<std::int64_t>();
      }
      for (const auto& row : seen) {
        std::vector<std::int64_t> prices;
        for (const auto& slot : row) {
          if (!slot) throw Error(ErrorKind::kShape, "price table must cover every district and candidate");
          prices.push_back(*slot);
        }
        p.prices.push_back(std::move(prices));
      }
      pricing = std::move(p);
    }
    return RecampaignInstance(rule, std::move(districts), additional, bound, std::move(pricing));
  });
}

Json assignment_to_json(const Assignment& asg) {
  Json doc = with_format();
  Json placement = Json::object();
  for (const auto& [candidate, district] : asg.placement) placement[candidate.name()] = district + 1;
  doc["placement"] = std::move(placement);
  return doc;
}

Assignment assignment_from_json(const Json& doc) {
  return guarded([&] {
    check_format(doc);
    const Json* source = &doc;
    if (!doc.contains("placement") && doc.contains("assignment")) source = &doc.at("assignment");
    Assignment asg;
    const Json& placement = field(*source, "placement");
    if (!placement.is_object()) malformed("\"placement\" must be an object");
    for (const auto& [name, district] : placement.items()) {
      const auto i = district.get<std::int64_t>();
      if (i < 1) throw Error(ErrorKind::kShape, "districts are numbered from 1");
      asg.placement.emplace(CandidateId(name), static_cast<std::size_t>(i - 1));
    }
    return asg;
  });
}

Json election_to_json(const Election& e) {
  Json doc = with_format();
  doc["candidates"] = names(e.candidates());
  Json votes = Json::array();
  for (const Vote& v : e.votes()) votes.push_back(vote_to_json(v));
  doc["votes"] = std::move(votes);
  return doc;
}

Election election_from_json(const Json& doc) {
  return guarded([&] {
    check_format(doc);
    return Election(set_from(field(doc, "candidates")), votes_from(field(doc, "votes")));
  });
}

Json x3c_to_json(const X3CInstance& inst) {
  Json doc = with_format();
  doc["universe"] = names(inst.universe);
  Json triples = Json::array();
  for (const CandidateSet& t : inst.triples) triples.push_back(names(t));
  doc["triples"] = std::move(triples);
  return doc;
}

X3CInstance x3c_from_json(const Json& doc) {
  return guarded([&] {
    check_format(doc);
    X3CInstance inst;
    inst.universe = set_from(field(doc, "universe"));
    for (const Json& t : field(doc, "triples")) inst.triples.push_back(set_from(t));
    inst.validate();
    return inst;
  });
}

Json matching_to_json(const ThreeDimMatching& inst) {
  Json doc = with_format();
  doc["W"] = names(inst.w);
  doc["X"] = names(inst.x);
  doc["Y"] = names(inst.y);
  Json triples = Json::array();
  for (const auto& t : inst.triples) triples.push_back(names(t));
  doc["S"] = std::move(triples);
  return doc;
}

ThreeDimMatching matching_from_json(const Json& doc) {
  return guarded([&] {
    check_format(doc);
    ThreeDimMatching inst;
    inst.w = list_from(field(doc, "W"));
    inst.x = list_from(field(doc, "X"));
    inst.y = list_from(field(doc, "Y"));
    for (const Json& t : field(doc, "S")) {
      const auto members = list_from(t);
      if (members.size() != 3) malformed("a 3DM triple has exactly three entries");
      inst.triples.push_back({members[0], members[1], members[2]});
    }
    inst.validate_restricted();
    return inst;
  });
}

Json sat_to_json(const OneInThreeSat& f) {
  Json doc = with_format();
  doc["variables"] = names(f.variables);
  Json clauses = Json::array();
  for (const CandidateSet& c : f.clauses) clauses.push_back(names(c));
  doc["clauses"] = std::move(clauses);
  return doc;
}

OneInThreeSat sat_from_json(const Json& doc) {
  return guarded([&] {
    check_format(doc);
    OneInThreeSat f;
    f.variables = list_from(field(doc, "variables"));
    for (const Json& c : field(doc, "clauses")) f.clauses.push_back(set_from(c));
    f.validate();
    return f;
  });
}

Json report_to_json(const SolveResult& result, double wall_time_ms) {
  Json doc = with_format();
  doc["answer"] = result.yes() ? "YES" : "NO";
  doc["algorithm"] = result.algorithm;
  if (result.assignment) {
    Json placement = Json::object();
    for (const auto& [candidate, district] : result.assignment->placement) {
      placement[candidate.name()] = district + 1;
    }
    doc["assignment"] = Json::object({{"placement", std::move(placement)}});
  }
  if (result.cost) doc["cost"] = *result.cost;
  doc["wall_time_ms"] = wall_time_ms;
  Json stats = Json::object();
  stats["nodes"] = result.stats.nodes;
  stats["evaluations"] = result.stats.evaluations;
  stats["system_built"] = result.stats.system_built;
  stats["universe_size"] = result.stats.universe_size;
  stats["cover_members"] = result.stats.cover_members;
  doc["statistics"] = std::move(stats);
  return doc;
}

Json verification_to_json(const VerificationReport& report) {
  Json doc = with_format();
  doc["valid"] = report.valid;
  Json winners = Json::array();
  for (const WinnerSet& w : report.district_winners) winners.push_back(names(w));
  doc["district_winners"] = std::move(winners);
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    Json vj = Json::object();
    vj["kind"] = std::string(to_string(v.kind));
    if (v.district) vj["district"] = *v.district + 1;
    if (v.candidate) vj["candidate"] = v.candidate->name();
    vj["message"] = v.message;
    violations.push_back(std::move(vj));
  }
  doc["violations"] = std::move(violations);
  if (report.total_cost) doc["cost"] = *report.total_cost;
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kParse, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorKind::kParse, "cannot write '" + path + "'");
}

}  // namespace recamp::io

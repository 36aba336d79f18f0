#pragma once

#include <string>

#include "json.hpp"
#include "recamp/gadgets.hpp"
#include "recamp/instance.hpp"
#include "recamp/solvers.hpp"

namespace recamp::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormat = "recamp/1";

// Parsing throws Error(kParse) for malformed JSON or missing fields and lets
// model validation errors (kShape, ...) through.
[[nodiscard]] Json parse_json(const std::string& text);
// Two-space indentation, trailing newline.
[[nodiscard]] std::string render(const Json& doc);

[[nodiscard]] Json rule_to_json(const VotingRuleSpec& rule);
[[nodiscard]] VotingRuleSpec rule_from_json(const Json& doc);
// "t-approval:2", "t-veto:1", "borda", "trivial", "condorcet", "all-if-three",
// "all-if-four-else-plurality".
[[nodiscard]] VotingRuleSpec rule_from_string(const std::string& text);

[[nodiscard]] Json instance_to_json(const RecampaignInstance& inst);
[[nodiscard]] RecampaignInstance instance_from_json(const Json& doc);

// Districts are numbered from 1 in documents.
[[nodiscard]] Json assignment_to_json(const Assignment& asg);
// Accepts an assignment document or a solve report carrying one.
[[nodiscard]] Assignment assignment_from_json(const Json& doc);

[[nodiscard]] Json election_to_json(const Election& e);
[[nodiscard]] Election election_from_json(const Json& doc);

[[nodiscard]] Json x3c_to_json(const X3CInstance& inst);
[[nodiscard]] X3CInstance x3c_from_json(const Json& doc);
[[nodiscard]] Json matching_to_json(const ThreeDimMatching& inst);
[[nodiscard]] ThreeDimMatching matching_from_json(const Json& doc);
[[nodiscard]] Json sat_to_json(const OneInThreeSat& f);
[[nodiscard]] OneInThreeSat sat_from_json(const Json& doc);

[[nodiscard]] Json report_to_json(const SolveResult& result, double wall_time_ms);
[[nodiscard]] Json verification_to_json(const VerificationReport& report);

[[nodiscard]] std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace recamp::io

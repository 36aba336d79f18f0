#include "cli.hpp"

#include <chrono>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "documents.hpp"
#include "recamp/error.hpp"

namespace recamp::cli {

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

WinnerBound bound_from_string(const std::string& text) {
  if (text == "unbounded") return WinnerBound::unbounded();
  std::size_t used = 0;
  long long ell = 0;
  try {
    ell = std::stoll(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || ell < 1) {
    throw Error(ErrorKind::kParse, "bound must be \"unbounded\" or a positive integer, got '" + text + "'");
  }
  return WinnerBound::at_most(static_cast<std::size_t>(ell));
}

void emit(std::ostream& out, const std::string& path, const io::Json& doc) {
  if (path.empty() || path == "-") {
    out << io::render(doc);
  } else {
    io::write_file(path, io::render(doc));
  }
}

SolveResult dispatch(const RecampaignInstance& inst, const std::string& algorithm,
                     std::uint64_t budget) {
  if (algorithm == "auto") return solve_auto(inst);
  if (algorithm == "crc1") return solve_crc1(inst);
  if (algorithm == "bmatch") return solve_trivial_scoring(inst);
  if (algorithm == "fpt") return solve_fpt(inst);
  if (algorithm == "e1") return solve_all_if_three_bounded(inst);
  if (algorithm == "e2") return solve_all_if_four_unbounded(inst);
  return solve_brute(inst, budget);
}

int report_solve(std::ostream& out, const RecampaignInstance& inst,
                 const std::function<SolveResult()>& solve, const std::string& assignment_out) {
  const auto start = std::chrono::steady_clock::now();
  const SolveResult result = solve();
  const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - start;
  if (result.assignment && !verify(inst, *result.assignment).valid) {
    throw Error(ErrorKind::kPrecondition, "solver produced an assignment that fails verification");
  }
  out << io::render(io::report_to_json(result, elapsed.count()));
  if (result.assignment && !assignment_out.empty()) {
    io::write_file(assignment_out, io::render(io::assignment_to_json(*result.assignment)));
  }
  return result.yes() ? kYes : kNo;
}

struct Options {
  std::string instance;
  std::string assignment;
  std::string algorithm = "auto";
  std::uint64_t node_budget = 0;
  std::string assignment_out;

  std::string from;
  std::string to;
  std::string source;
  std::string rule;
  int t = 1;
  std::string bound;
  std::string output;

  std::size_t districts = 1;
  std::size_t additional = 0;
  std::size_t min_candidates = 0;
  std::size_t max_candidates = 3;
  std::size_t max_votes = 5;
  bool priced = false;
  std::uint64_t seed = 0;

  std::string election;
};

int reduce(const Options& o, std::ostream& out) {
  auto write_instance = [&](const RecampaignInstance& inst) {
    emit(out, o.output, io::instance_to_json(inst));
    return kYes;
  };
  const io::Json source = io::parse_json(io::read_file(o.source));
  const WinnerBound bound =
      o.bound.empty() ? WinnerBound::at_most(3) : bound_from_string(o.bound);

  if (o.from == "x3c") {
    const X3CInstance inst = io::x3c_from_json(source);
    if (o.to == "e1priced") return write_instance(x3c_to_all_if_three_priced(inst));
    if (o.to == "approvalL") return write_instance(x3c_to_approval(inst, o.t, bound));
    if (o.to == "vetoL") return write_instance(x3c_to_veto(inst, o.t, bound));
  } else if (o.from == "r3dm" || o.from == "e33dm") {
    ThreeDimMatching inst = io::matching_from_json(source);
    if (o.from == "r3dm") {
      inst = pad_to_exactly3(inst);
      if (o.to == "e33dm") {
        emit(out, o.output, io::matching_to_json(inst));
        return kYes;
      }
    }
    if (o.to == "approval2") return write_instance(matching_to_plurality(inst));
    if (o.to == "scoring2") {
      if (o.rule.empty()) throw Error(ErrorKind::kParse, "--to scoring2 needs --rule");
      return write_instance(matching_to_scoring(inst, io::rule_from_string(o.rule)));
    }
  } else if (o.from == "e3sat") {
    const OneInThreeSat f = io::sat_from_json(source);
    if (o.to == "sat2districts") return write_instance(sat_to_approval(f, o.t));
  }
  throw Error(ErrorKind::kParse, "unsupported reduction " + o.from + " -> " + o.to);
}

int gen(const Options& o, std::ostream& out) {
  RandomInstanceParams params;
  params.districts = o.districts;
  params.additional = o.additional;
  params.rule = o.rule.empty() ? VotingRuleSpec{rules::TApproval{1}} : io::rule_from_string(o.rule);
  params.min_district_candidates = o.min_candidates;
  params.max_district_candidates = o.max_candidates;
  params.max_votes = o.max_votes;
  params.bound = o.bound.empty() ? WinnerBound::unbounded() : bound_from_string(o.bound);
  params.priced = o.priced;
  emit(out, o.output, io::instance_to_json(random_instance(params, o.seed)));
  return kYes;
}

int winners_cmd(const Options& o, std::ostream& out) {
  const Election e = io::election_from_json(io::parse_json(io::read_file(o.election)));
  for (const CandidateId& w : winners(io::rule_from_string(o.rule), e)) out << w.name() << '\n';
  return kYes;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recampaigning solver: place additional candidates so that each wins its district"};
  app.name("recamp");
  app.require_subcommand(1);
  Options o;
  o.node_budget = default_node_budget();

  auto* solve = app.add_subcommand("solve", "Decide an instance and print a run report");
  solve->add_option("instance", o.instance, "Instance file")->required();
  solve->add_option("--algorithm,-a", o.algorithm, "Solver to use")
      ->check(CLI::IsMember({"auto", "crc1", "bmatch", "fpt", "e1", "e2", "brute"}));
  solve->add_option("--node-budget", o.node_budget, "Brute-force placement budget");
  solve->add_option("--assignment-out", o.assignment_out, "Write the assignment of a YES here");

  auto* verify_cmd = app.add_subcommand("verify", "Check an assignment against an instance");
  verify_cmd->add_option("instance", o.instance, "Instance file")->required();
  verify_cmd->add_option("assignment", o.assignment, "Assignment file or solve report")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Build a recampaigning instance from a source problem");
  reduce_cmd->add_option("--from", o.from, "Source problem")
      ->required()
      ->check(CLI::IsMember({"x3c", "r3dm", "e33dm", "e3sat"}));
  reduce_cmd->add_option("--to", o.to, "Target construction")
      ->required()
      ->check(CLI::IsMember(
          {"e1priced", "approval2", "scoring2", "approvalL", "vetoL", "sat2districts", "e33dm"}));
  reduce_cmd->add_option("source", o.source, "Source problem file")->required();
  reduce_cmd->add_option("--rule", o.rule, "Scoring rule for scoring2, e.g. borda or t-veto:2");
  reduce_cmd->add_option("--t", o.t, "Approval/veto parameter t")->check(CLI::PositiveNumber);
  reduce_cmd->add_option("--bound", o.bound, "Winner bound for approvalL/vetoL (default 3)");
  reduce_cmd->add_option("--output,-o", o.output, "Output file (default: standard output)");

  auto* oracle = app.add_subcommand("oracle", "Brute-force answer for an instance");
  oracle->add_option("instance", o.instance, "Instance file")->required();
  oracle->add_option("--node-budget", o.node_budget, "Placement budget");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--districts,-k", o.districts, "Number of districts")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--additional,-n", o.additional, "Number of additional candidates");
  gen_cmd->add_option("--rule", o.rule, "Voting rule (default t-approval:1)");
  gen_cmd->add_option("--bound", o.bound, "\"unbounded\" (default) or a positive integer");
  gen_cmd->add_flag("--priced", o.priced, "Attach random prices and budget");
  gen_cmd->add_option("--seed", o.seed, "Random seed");
  gen_cmd->add_option("--min-candidates", o.min_candidates, "Fewest own candidates per district");
  gen_cmd->add_option("--max-candidates", o.max_candidates, "Most own candidates per district");
  gen_cmd->add_option("--max-votes", o.max_votes, "Most votes per district");
  gen_cmd->add_option("--output,-o", o.output, "Output file (default: standard output)");

  auto* winners_sub = app.add_subcommand("winners", "Print the winners of an election");
  winners_sub->add_option("election", o.election, "Election file")->required();
  winners_sub->add_option("--rule", o.rule, "Voting rule")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kUsage;
  }

  try {
    if (solve->parsed()) {
      const RecampaignInstance inst = io::instance_from_json(io::parse_json(io::read_file(o.instance)));
      return report_solve(
          out, inst, [&] { return dispatch(inst, o.algorithm, o.node_budget); }, o.assignment_out);
    }
    if (oracle->parsed()) {
      const RecampaignInstance inst = io::instance_from_json(io::parse_json(io::read_file(o.instance)));
      return report_solve(out, inst, [&] { return solve_brute(inst, o.node_budget); }, "");
    }
    if (verify_cmd->parsed()) {
      const RecampaignInstance inst = io::instance_from_json(io::parse_json(io::read_file(o.instance)));
      const Assignment asg = io::assignment_from_json(io::parse_json(io::read_file(o.assignment)));
      const VerificationReport report = verify(inst, asg);
      out << io::render(io::verification_to_json(report));
      return report.valid ? kYes : kNo;
    }
    if (reduce_cmd->parsed()) return reduce(o, out);
    if (gen_cmd->parsed()) return gen(o, out);
    return winners_cmd(o, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::kResource ? kResource : kUsage;
  }
}

}  // namespace recamp::cli

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "documents.hpp"
#include "generators.hpp"
#include "recamp/error.hpp"

using namespace recamp;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "recamp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("recamp-cli-" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  [[nodiscard]] std::string file(const std::string& name, const std::string& text = {}) const {
    const auto p = (path_ / name).string();
    if (!text.empty()) io::write_file(p, text);
    return p;
  }

 private:
  fs::path path_;
};

const std::string kExample = std::string(RECAMP_DATA_DIR) + "/bmatch_example.json";

}  // namespace

TEST_CASE("instance documents round-trip") {
  gen::Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rules = gen::all_rules();
    const auto rule = rules[gen::pick(rng, 0, rules.size() - 1)];
    const WinnerBound bound =
        trial % 2 == 0 ? WinnerBound::unbounded() : WinnerBound::at_most(gen::pick(rng, 1, 4));
    const auto inst = random_instance(gen::params(rng, rule, 4, 4, bound, trial % 3 == 0), rng());
    const std::string text = io::render(io::instance_to_json(inst));
    CHECK(io::instance_from_json(io::parse_json(text)) == inst);
    CHECK(io::render(io::instance_to_json(io::instance_from_json(io::parse_json(text)))) == text);
  }
}

TEST_CASE("other documents round-trip") {
  gen::Rng rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = gen::random_x3c(rng, 2, 4);
    const auto xr = io::x3c_from_json(io::x3c_to_json(x));
    CHECK(xr.universe == x.universe);
    CHECK(xr.triples == x.triples);
    const auto d = gen::random_r3dm(rng, 3, 6);
    const auto dr = io::matching_from_json(io::matching_to_json(d));
    CHECK(dr.w == d.w);
    CHECK(dr.triples == d.triples);
    const auto f = gen::random_sat(rng, 5);
    const auto fr = io::sat_from_json(io::sat_to_json(f));
    CHECK(fr.variables == f.variables);
    CHECK(fr.clauses == f.clauses);
    const auto e = gen::random_election(rng, 4, 4);
    const auto er = io::election_from_json(io::election_to_json(e));
    CHECK(er.candidates() == e.candidates());
    CHECK(er.votes() == e.votes());
  }
  for (const auto& rule : gen::all_rules()) CHECK(io::rule_from_json(io::rule_to_json(rule)) == rule);
  CHECK(io::rule_from_string("t-veto:2") == VotingRuleSpec{rules::TVeto{2}});
  CHECK(io::rule_from_string("t-approval") == VotingRuleSpec{rules::TApproval{1}});
  CHECK(io::rule_from_string("all-if-four") == VotingRuleSpec{rules::AllIfFourElsePlurality{}});
  Assignment asg;
  asg.placement.emplace("a", 0);
  asg.placement.emplace("b", 2);
  const auto doc = io::assignment_to_json(asg);
  CHECK(io::assignment_from_json(doc) == asg);
}

TEST_CASE("malformed documents") {
  auto kind = [](const std::string& text) {
    try {
      (void)io::instance_from_json(io::parse_json(text));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kOverflow;
  };
  CHECK(kind("{") == ErrorKind::kParse);
  CHECK(kind("[]") == ErrorKind::kParse);
  CHECK(kind(R"({"format": "other/9"})") == ErrorKind::kParse);
  CHECK(kind(R"({"rule": {"family": "borda"}, "districts": [], "additional": [], "bound": "unbounded"})") ==
        ErrorKind::kShape);
}

TEST_CASE("solve, verify and oracle on the worked example") {
  TempDir tmp;
  const auto asg_path = tmp.file("asg.json");
  const auto solved = run({"solve", kExample, "--algorithm", "bmatch", "--assignment-out", asg_path});
  CHECK(solved.code == 0);
  const auto report = io::parse_json(solved.out);
  CHECK(report.at("answer") == "YES");
  CHECK(report.at("algorithm") == "b-matching");
  CHECK(report.at("cost") == 14);

  const auto verified = run({"verify", kExample, asg_path});
  CHECK(verified.code == 0);
  CHECK(io::parse_json(verified.out).at("valid") == true);
  CHECK(io::parse_json(verified.out).at("cost") == 14);

  const auto report_path = tmp.file("report.json", solved.out);
  CHECK(run({"verify", kExample, report_path}).code == 0);

  const auto oracle = run({"oracle", kExample});
  CHECK(oracle.code == 0);
  CHECK(io::parse_json(oracle.out).at("answer") == "YES");

  auto doc = io::parse_json(io::read_file(kExample));
  doc["pricing"]["budget"] = 13;
  const auto tight = tmp.file("tight.json", io::render(doc));
  const auto no = run({"solve", tight, "--algorithm", "bmatch"});
  CHECK(no.code == 1);
  CHECK(io::parse_json(no.out).at("answer") == "NO");
  CHECK(run({"verify", tight, asg_path}).code == 1);
}

TEST_CASE("exit codes") {
  TempDir tmp;
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"solve"}).code == 2);
  CHECK(run({"solve", tmp.file("missing.json")}).code == 2);
  CHECK(run({"solve", tmp.file("bad.json", "{not json")}).code == 2);
  CHECK(run({"solve", kExample, "--algorithm", "nope"}).code == 2);
  CHECK(run({"solve", kExample, "--algorithm", "crc1"}).code == 2);
  const auto big = run({"gen", "-k", "4", "-n", "12", "--seed", "1"});
  REQUIRE(big.code == 0);
  const auto big_path = tmp.file("big.json", big.out);
  const auto refused = run({"oracle", big_path, "--node-budget", "1000"});
  CHECK(refused.code == 3);
  CHECK(refused.err.find("resource") != std::string::npos);
}

TEST_CASE("gen is reproducible and solve agrees with oracle") {
  TempDir tmp;
  for (int seed = 0; seed < 20; ++seed) {
    const std::vector<std::string> args = {"gen",   "-k",     "3",  "-n",      "3",
                                           "--rule", "borda", "--bound", "2", "--seed",
                                           std::to_string(seed)};
    const auto first = run(args);
    REQUIRE(first.code == 0);
    CHECK(run(args).out == first.out);
    const auto path = tmp.file("g" + std::to_string(seed) + ".json", first.out);
    const auto solved = run({"solve", path});
    const auto oracle = run({"oracle", path});
    CHECK(solved.code == oracle.code);
    CHECK(io::parse_json(solved.out).at("algorithm") == "fpt");
  }
}

TEST_CASE("reduce produces solvable targets") {
  TempDir tmp;
  const X3CInstance x{gen::universe(6),
                      {gen::ids({"u1", "u2", "u3"}), gen::ids({"u4", "u5", "u6"}), gen::ids({"u1", "u4", "u5"})}};
  const auto src = tmp.file("x3c.json", io::render(io::x3c_to_json(x)));
  for (const std::string to : {"e1priced", "approvalL", "vetoL"}) {
    const auto out = tmp.file(to + ".json");
    REQUIRE(run({"reduce", "--from", "x3c", "--to", to, "--t", "2", src, "-o", out}).code == 0);
    CHECK(run({"oracle", out}).code == 0);
  }
  CHECK(run({"reduce", "--from", "x3c", "--to", "sat2districts", src}).code == 2);

  ThreeDimMatching m;
  for (const char* n : {"w1", "w2"}) m.w.emplace_back(n);
  for (const char* n : {"x1", "x2"}) m.x.emplace_back(n);
  for (const char* n : {"y1", "y2"}) m.y.emplace_back(n);
  m.triples = {{CandidateId("w1"), CandidateId("x1"), CandidateId("y1")},
               {CandidateId("w2"), CandidateId("x2"), CandidateId("y2")},
               {CandidateId("w1"), CandidateId("x2"), CandidateId("y2")},
               {CandidateId("w2"), CandidateId("x1"), CandidateId("y2")},
               {CandidateId("w2"), CandidateId("x2"), CandidateId("y1")}};
  const auto r3dm = tmp.file("r3dm.json", io::render(io::matching_to_json(m)));
  const auto padded = run({"reduce", "--from", "r3dm", "--to", "e33dm", r3dm});
  REQUIRE(padded.code == 0);
  CHECK(io::matching_from_json(io::parse_json(padded.out)).is_exactly3());
  const auto plurality = tmp.file("p.json");
  REQUIRE(run({"reduce", "--from", "r3dm", "--to", "approval2", r3dm, "-o", plurality}).code == 0);
  CHECK(run({"oracle", plurality}).code == 0);
  const auto borda = tmp.file("b.json");
  REQUIRE(run({"reduce", "--from", "r3dm", "--to", "scoring2", "--rule", "borda", r3dm, "-o", borda}).code == 0);
  CHECK(run({"solve", borda}).code == 0);
  CHECK(run({"reduce", "--from", "r3dm", "--to", "scoring2", r3dm}).code == 2);
}

TEST_CASE("winners command") {
  TempDir tmp;
  const Election e(gen::ids({"a", "b", "c"}),
                   {gen::rank({"a", "b", "c"}), gen::rank({"b", "a", "c"}), gen::rank({"a", "c", "b"})});
  const auto path = tmp.file("e.json", io::render(io::election_to_json(e)));
  const auto r = run({"winners", path, "--rule", "t-approval:1"});
  CHECK(r.code == 0);
  CHECK(r.out == "a\n");
  CHECK(run({"winners", path, "--rule", "borda"}).out == "a\n");
  CHECK(run({"winners", path, "--rule", "trivial"}).out == "a\nb\nc\n");
  CHECK(run({"winners", path, "--rule", "mystery"}).code == 2);
}

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hornrev/cli.hpp"
#include "hornrev/parse.hpp"
#include "hornrev/structured.hpp"
#include "support.hpp"

using namespace hornrev;
using namespace hornrev::test;

namespace {

struct TempKb {
  std::string path;
  explicit TempKb(const std::string& text) {
    static int counter = 0;
    path = "cli_test_kb_" + std::to_string(counter++) + ".kb";
    std::ofstream f(path);
    f << text;
  }
  ~TempKb() { std::remove(path.c_str()); }
};

struct RunOutcome {
  int status;
  std::string out;
  std::string err;
};

RunOutcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("revise: acyclic insertion of p re-adds a") {
  TempKb kb(kRoutesKbNoA);
  auto r = run_cli({"revise", "--kb", kb.path, "--algorithm", "acyclic",
                    "--insert", "p"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out.find("insert a") != std::string::npos);
}

TEST_CASE("revise: all solutions for the staff request") {
  TempKb kb(kStaffKb);
  auto r = run_cli({"revise", "--kb", kb.path, "--insert",
                    "staff_chair(delhibabu, aravindan)", "--all-solutions",
                    "--format", "structured"});
  CHECK(r.status == cli::kOk);
  auto records = parse_records(r.out);
  REQUIRE(!records.empty());
  CHECK(records[0].kind == "result");
  CHECK(records[0].get("status") == "ok");
  int transactions = 0;
  for (const auto& rec : records)
    if (rec.kind == "transaction") ++transactions;
  CHECK(transactions >= 2);
}

TEST_CASE("revise: intrinsically conflicting insert returns status 2") {
  TempKb kb(R"(
%% immutable
p :- a.
%% updatable
a.
%% constraints
:- p.
)");
  auto r = run_cli({"revise", "--kb", kb.path, "--insert", "p"});
  CHECK(r.status == cli::kNoRepair);
  CHECK(r.out.find("incompatible") != std::string::npos);
}

TEST_CASE("revise: parse errors give status 1") {
  TempKb kb("%% updatable\np(X).\n");
  auto r = run_cli({"revise", "--kb", kb.path, "--insert", "p"});
  CHECK(r.status == cli::kInputError);
  CHECK(r.err.find("parse error") != std::string::npos);
}

TEST_CASE("revise: missing file gives status 1") {
  auto r = run_cli({"revise", "--kb", "no_such_file.kb", "--insert", "p"});
  CHECK(r.status == cli::kInputError);
}

TEST_CASE("revise: base-atom insert needs the kernel algorithm") {
  TempKb kb(kRoutesKb);
  auto bad = run_cli({"revise", "--kb", kb.path, "--insert", "c",
                      "--algorithm", "acyclic"});
  CHECK(bad.status == cli::kInputError);
  auto ok = run_cli({"revise", "--kb", kb.path, "--insert", "c", "--algorithm",
                     "kernel"});
  CHECK(ok.status == cli::kOk);
  CHECK(ok.out.find("insert c") != std::string::npos);
}

TEST_CASE("revise: write-back emits a loadable KB") {
  TempKb kb(kRoutesKbNoA);
  std::string out_path = "cli_test_out.kb";
  auto r = run_cli({"revise", "--kb", kb.path, "--insert", "p", "--write-back",
                    out_path});
  REQUIRE(r.status == cli::kOk);
  std::ifstream f(out_path);
  std::ostringstream buf;
  buf << f.rdbuf();
  KnowledgeBase revised = parse_kb(buf.str());
  CHECK(revised.has_fact(atom("a")));
  std::remove(out_path.c_str());
}

TEST_CASE("explain: routes tree in structured form round-trips") {
  TempKb kb(kRoutesKb);
  auto r = run_cli({"explain", "--kb", kb.path, "--goal", "p", "--format",
                    "structured"});
  CHECK(r.status == cli::kOk);
  auto records = parse_records(r.out);
  int branches = 0, successes = 0;
  std::string success_side, failure_side;
  bool variants_equal = false;
  for (const auto& rec : records) {
    if (rec.kind == "branch") {
      ++branches;
      if (rec.get("status") == "success") ++successes;
    }
    if (rec.kind == "variant" && rec.get("name") == "algorithm-3") {
      success_side = rec.get("success_side");
      failure_side = rec.get("failure_side");
    }
    if (rec.kind == "variants") variants_equal = rec.get("equal") == "1";
  }
  CHECK(branches == 5);
  CHECK(successes == 3);
  CHECK(success_side == "a, e, f");
  CHECK(failure_side == "b");
  CHECK(variants_equal);
}

TEST_CASE("explain: undefined goal is one failing branch") {
  TempKb kb(kRoutesKb);
  auto r = run_cli({"explain", "--kb", kb.path, "--goal", "zz", "--format",
                    "structured"});
  CHECK(r.status == cli::kOk);
  auto records = parse_records(r.out);
  int branches = 0;
  for (const auto& rec : records)
    if (rec.kind == "branch") {
      ++branches;
      CHECK(rec.get("status") == "failure");
    }
  CHECK(branches == 1);
}

TEST_CASE("explain: cyclic KB names the cycle") {
  TempKb kb(R"(
%% immutable
p :- q.
q :- p.
%% updatable
%% constraints
)");
  auto r = run_cli({"explain", "--kb", kb.path, "--goal", "p"});
  CHECK(r.status == cli::kNoRepair);
  CHECK(r.out.find("cut-off") != std::string::npos);
  CHECK(r.out.find("p") != std::string::npos);
  CHECK(r.out.find("q") != std::string::npos);
}

TEST_CASE("check: acyclic run passes the postulate table") {
  TempKb kb(kRoutesKbNoA);
  auto r = run_cli({"check", "--kb", kb.path, "--insert", "p"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out.find("KB*2") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("check: structured postulate records parse back") {
  TempKb kb(kStaffKb);
  auto r = run_cli({"check", "--kb", kb.path, "--insert",
                    "staff_chair(delhibabu, aravindan)", "--format",
                    "structured"});
  CHECK(r.status == cli::kOk);
  int postulates = 0;
  for (const auto& rec : parse_records(r.out))
    if (rec.kind == "postulate") {
      ++postulates;
      CHECK(rec.get("verdict") != "fail");
    }
  CHECK(postulates == 11);
}

TEST_CASE("cli rejects unknown flags and missing subcommands") {
  CHECK(run_cli({}).status == cli::kInputError);
  CHECK(run_cli({"revise", "--bogus"}).status == cli::kInputError);
}

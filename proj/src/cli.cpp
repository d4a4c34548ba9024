#include "hornrev/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hornrev/abduction.hpp"
#include "hornrev/budget.hpp"
#include "hornrev/errors.hpp"
#include "hornrev/kb.hpp"
#include "hornrev/kernels.hpp"
#include "hornrev/oracle.hpp"
#include "hornrev/parse.hpp"
#include "hornrev/postulates.hpp"
#include "hornrev/revision.hpp"
#include "hornrev/sld.hpp"
#include "hornrev/structured.hpp"

namespace hornrev::cli {

namespace {

std::string join_atoms(const std::set<Atom>& atoms) {
  std::string s;
  for (const auto& a : atoms) {
    if (!s.empty()) s += ", ";
    s += to_string(a);
  }
  return s;
}

std::string join_clauses(const std::vector<HornClause>& cs) {
  std::string s;
  for (const auto& c : cs) {
    if (!s.empty()) s += "; ";
    s += to_string(c);
  }
  return s;
}

KnowledgeBase load_kb(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open KB file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_kb(buf.str());
}

enum class Algo { Auto, Generalized, PartialMeet, Acyclic, Kernel };

Algo parse_algo(const std::string& name) {
  if (name.empty() || name == "auto") return Algo::Auto;
  if (name == "generalized") return Algo::Generalized;
  if (name == "partial-meet") return Algo::PartialMeet;
  if (name == "acyclic") return Algo::Acyclic;
  if (name == "kernel") return Algo::Kernel;
  throw Error("unknown algorithm '" + name + "'");
}

IncisionStrategy parse_strategy(const std::string& name) {
  if (name.empty() || name == "minimal-lexicographic")
    return IncisionStrategy::MinimalLexicographic;
  if (name == "minimal-cardinality") return IncisionStrategy::MinimalCardinality;
  if (name == "maximal") return IncisionStrategy::Maximal;
  throw Error("unknown incision strategy '" + name + "'");
}

const char* algo_name(RevisionAlgorithm a) {
  switch (a) {
    case RevisionAlgorithm::Generalized:
      return "generalized";
    case RevisionAlgorithm::PartialMeet:
      return "partial-meet";
    case RevisionAlgorithm::AcyclicGeneralized:
      return "acyclic";
    case RevisionAlgorithm::Kernel:
      return "kernel";
  }
  return "?";
}

struct ReviseOpts {
  std::string kb_path;
  std::string insert_text;
  std::string algorithm;
  std::string strategy;
  int depth_bound = 0;
  bool all_solutions = false;
  std::string format = "text";
  std::string write_back;
  bool check_postulates_flag = false;
};

RevisionResult run_algorithm(const KnowledgeBase& kb, const Atom& atom,
                             Algo algo, IncisionStrategy strategy,
                             const Budget& budget) {
  bool is_view = kb.view_predicates().count(atom.pred) > 0;
  if (algo == Algo::Auto) algo = is_acyclic(kb) ? Algo::Acyclic : Algo::Generalized;

  switch (algo) {
    case Algo::Acyclic: {
      std::vector<Atom> cycle;
      if (!is_acyclic(kb, &cycle)) throw Error("KB is cyclic; 'acyclic' unusable");
      return acyclic_generalized_revision(kb, atom, budget);
    }
    case Algo::PartialMeet:
      return partial_meet_revision(kb, atom, budget);
    case Algo::Generalized:
      return generalized_revision(kb, HornClause::fact(atom), budget);
    case Algo::Kernel: {
      if (is_view)
        throw Error("kernel revision stores the fact; request a base atom");
      KnowledgeBase after = kernel_revision(kb, HornClause::fact(atom), strategy,
                                            budget);
      RevisionResult res;
      res.algorithm = RevisionAlgorithm::Kernel;
      res.kb_after = after;
      if (after == kb && !kb.has_fact(atom)) {
        res.status = RevisionStatus::Vacuity;
        return res;
      }
      res.status = RevisionStatus::Ok;
      for (const auto& c : after.updatable)
        if (c.is_fact() && !kb.has_fact(*c.head))
          res.transaction.insertions.insert(*c.head);
      for (const auto& c : kb.updatable)
        if (c.is_fact() && !after.has_fact(*c.head))
          res.transaction.deletions.insert(*c.head);
      return res;
    }
    case Algo::Auto:
      break;
  }
  throw Error("unreachable algorithm dispatch");
}

void require_request_shape(const KnowledgeBase& kb, const Atom& atom,
                           Algo algo) {
  if (!atom.ground()) throw Error("the requested atom must be ground");
  bool is_view = kb.view_predicates().count(atom.pred) > 0;
  if (algo != Algo::Kernel && algo != Algo::Generalized && !is_view)
    throw Error("insertion request must use a view predicate (got '" +
                atom.pred + "')");
}

int emit_revision(const KnowledgeBase& kb, const RevisionResult& res,
                  const ReviseOpts& opts, std::ostream& out) {
  bool structured = opts.format == "structured";
  auto txs = res.status == RevisionStatus::Ok
                 ? res.all_transactions()
                 : std::vector<Transaction>{};
  std::size_t shown = opts.all_solutions ? txs.size() : (txs.empty() ? 0 : 1);

  const char* status_text = res.status == RevisionStatus::Ok
                                ? "ok"
                                : res.status == RevisionStatus::Vacuity
                                      ? "vacuity"
                                      : "no-repair";
  if (structured) {
    Record r{"result",
             {{"status", status_text},
              {"algorithm", algo_name(res.algorithm)},
              {"solutions", std::to_string(txs.size())}}};
    out << emit_record(r) << '\n';
    for (std::size_t i = 0; i < shown; ++i) {
      Record t{"transaction",
               {{"rank", std::to_string(i)},
                {"insert", join_atoms(txs[i].insertions)},
                {"delete", join_atoms(txs[i].deletions)}}};
      out << emit_record(t) << '\n';
    }
  } else {
    out << "status: " << status_text << '\n';
    if (res.status == RevisionStatus::Vacuity)
      out << "request is incompatible with the rules and constraints; "
             "knowledge base unchanged\n";
    if (res.status == RevisionStatus::NoRepair) {
      out << "no transaction over the base atoms can realize the request\n";
      for (const auto& v : res.residual.items)
        out << "  unresolved constraint: " << to_string(v.constraint) << '\n';
    }
    for (std::size_t i = 0; i < shown; ++i)
      out << "transaction [" << i << "]: " << to_string(txs[i]) << '\n';
  }

  if (!opts.write_back.empty() && res.status == RevisionStatus::Ok) {
    std::ofstream f(opts.write_back);
    if (!f) throw Error("cannot write KB file: " + opts.write_back);
    f << serialize_kb(res.kb_after);
  }
  if (res.status == RevisionStatus::Ok) return kOk;
  return kNoRepair;
}

int emit_postulates(const KnowledgeBase& kb, const Atom& atom,
                    const RevisionResult& res, Algo algo,
                    IncisionStrategy strategy, const Budget& budget,
                    const std::string& format, std::ostream& out) {
  RevisionOp op = [&](const KnowledgeBase& b, const HornClause& a) {
    if (a.is_fact())
      return run_algorithm(b, *a.head, algo, strategy, budget).kb_after;
    return generalized_revision(b, a, budget).kb_after;
  };
  HornClause alpha = HornClause::fact(atom);
  PostulateReport report =
      check_postulates(kb, alpha, res.kb_after, op, budget);

  if (format == "structured") {
    for (const auto& r : report.results) {
      const char* v = r.verdict == Verdict::Pass
                          ? "pass"
                          : r.verdict == Verdict::Fail ? "fail" : "n/a";
      Record rec{"postulate",
                 {{"name", r.name}, {"verdict", v}, {"witness", r.witness}}};
      out << emit_record(rec) << '\n';
    }
  } else {
    out << report.table();
  }
  for (const auto& r : report.results)
    if (r.verdict == Verdict::Fail) return kNoRepair;
  return kOk;
}

int cmd_revise(const ReviseOpts& opts, bool with_check, std::ostream& out,
               std::ostream& err) {
  Budget budget = budget_from_env();
  KnowledgeBase kb = load_kb(opts.kb_path);
  Atom atom = parse_atom(opts.insert_text);
  Algo algo = parse_algo(opts.algorithm);
  IncisionStrategy strategy = parse_strategy(opts.strategy);
  require_request_shape(kb, atom, algo);

  RevisionResult res = run_algorithm(kb, atom, algo, strategy, budget);
  int status = emit_revision(kb, res, opts, out);
  if (with_check || opts.check_postulates_flag) {
    Algo effective = algo == Algo::Auto
                         ? (is_acyclic(kb) ? Algo::Acyclic : Algo::Generalized)
                         : algo;
    int check_status = emit_postulates(kb, atom, res, effective, strategy,
                                       budget, opts.format, out);
    if (status == kOk) status = check_status;
  }
  (void)err;
  return status;
}

int cmd_explain(const std::string& kb_path, const std::string& goal_text,
                int depth_bound, const std::string& format, std::ostream& out) {
  Budget budget = budget_from_env();
  KnowledgeBase kb = load_kb(kb_path);
  Atom goal = parse_atom(goal_text);
  SLDTree tree = sld_tree(kb, goal, depth_bound);
  bool structured = format == "structured";

  if (tree.has_cutoff()) {
    std::vector<Atom> cycle;
    is_acyclic(kb, &cycle);
    std::string path;
    for (const auto& a : cycle) {
      if (!path.empty()) path += " -> ";
      path += to_string(a);
    }
    if (structured) {
      out << emit_record(Record{"error",
                                {{"kind", "cut-off"}, {"cycle", path}}})
          << '\n';
    } else {
      out << "tree has cut-off branches (depth bound " << tree.depth_bound
          << ")\n";
      if (!path.empty()) out << "cycle: " << path << '\n';
    }
    return kNoRepair;
  }

  auto te3 = tree_explanations(tree, kb, TreeVariant::Algorithm3, budget);
  auto te4 = tree_explanations(tree, kb, TreeVariant::Algorithm4, budget);
  bool equal = te3.family.items.size() == te4.family.items.size();
  if (equal)
    for (std::size_t i = 0; i < te3.family.items.size(); ++i)
      if (!(te3.family.items[i].delta_plus == te4.family.items[i].delta_plus &&
            te3.family.items[i].delta_minus == te4.family.items[i].delta_minus))
        equal = false;

  std::set<int> viable(te3.viable_branches.begin(), te3.viable_branches.end());

  if (structured) {
    out << emit_record(Record{"tree",
                              {{"goal", to_string(goal)},
                               {"branches", std::to_string(tree.branches.size())},
                               {"depth_bound", std::to_string(tree.depth_bound)}}})
        << '\n';
    for (const auto& b : tree.branches) {
      const char* st = b.status == BranchStatus::Success ? "success" : "failure";
      Record r{"branch",
               {{"id", std::to_string(b.id)},
                {"status", st},
                {"viable", viable.count(b.id) ? "1" : "0"},
                {"support", join_atoms(b.support())},
                {"missing", join_atoms(b.missing)},
                {"answer", to_string(b.answer)},
                {"clauses", join_clauses(b.input_clauses)}}};
      out << emit_record(r) << '\n';
    }
    for (const auto* te : {&te3, &te4}) {
      const char* vn =
          te->variant == TreeVariant::Algorithm3 ? "algorithm-3" : "algorithm-4";
      out << emit_record(Record{"variant",
                                {{"name", vn},
                                 {"success_side", join_atoms(te->success_delta)},
                                 {"failure_side", join_atoms(te->failure_delta)}}})
          << '\n';
      for (const auto& e : te->family.items) {
        std::string ids;
        for (int id : e.branches) {
          if (!ids.empty()) ids += ",";
          ids += std::to_string(id);
        }
        out << emit_record(Record{"explanation",
                                  {{"variant", vn},
                                   {"plus", join_atoms(e.delta_plus)},
                                   {"minus", join_atoms(e.delta_minus)},
                                   {"branches", ids}}})
            << '\n';
      }
    }
    out << emit_record(Record{"variants", {{"equal", equal ? "1" : "0"}}})
        << '\n';
  } else {
    out << "SLD tree for <- " << to_string(goal) << " (depth bound "
        << tree.depth_bound << ")\n";
    out << render_tree(tree);
    for (const auto& b : tree.branches) {
      out << "branch " << b.id << ": "
          << (b.status == BranchStatus::Success ? "success" : "failure")
          << (viable.count(b.id) ? " [ok]" : " [ic-blocked]")
          << "  support {" << join_atoms(b.support()) << "}";
      if (!b.missing.empty()) out << "  missing {" << join_atoms(b.missing) << "}";
      out << '\n';
    }
    for (const auto* te : {&te3, &te4}) {
      const char* vn =
          te->variant == TreeVariant::Algorithm3 ? "algorithm-3" : "algorithm-4";
      out << vn << ": success side {" << join_atoms(te->success_delta)
          << "}  failure side {" << join_atoms(te->failure_delta) << "}\n";
      for (const auto& e : te->family.items) {
        out << "  explanation: hold {" << join_atoms(e.delta_plus) << "}";
        if (!e.delta_minus.empty())
          out << " retract {" << join_atoms(e.delta_minus) << "}";
        out << '\n';
      }
    }
    out << "variant families agree: " << (equal ? "yes" : "NO") << '\n';
  }
  return equal ? kOk : kNoRepair;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Horn knowledge base revision and deductive view updates"};
  app.require_subcommand(1);

  ReviseOpts ropts;
  auto* revise = app.add_subcommand("revise", "translate a view insertion "
                                              "into base-fact transactions");
  revise->add_option("--kb", ropts.kb_path, "knowledge base file")->required();
  revise->add_option("--insert", ropts.insert_text, "ground atom to insert")
      ->required();
  revise->add_option("--algorithm", ropts.algorithm,
                     "auto|generalized|partial-meet|acyclic|kernel");
  revise->add_option("--strategy", ropts.strategy,
                     "minimal-lexicographic|minimal-cardinality|maximal");
  revise->add_option("--depth-bound", ropts.depth_bound, "SLD depth bound")
      ->check(CLI::PositiveNumber);
  revise->add_flag("--all-solutions", ropts.all_solutions,
                   "print every minimal transaction");
  revise->add_option("--format", ropts.format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  revise->add_option("--write-back", ropts.write_back,
                     "write the revised KB to this path");
  revise->add_flag("--check-postulates", ropts.check_postulates_flag,
                   "audit the result against the rationality postulates");

  ReviseOpts copts;
  auto* check = app.add_subcommand("check", "revise and audit the result "
                                            "against the postulates");
  check->add_option("--kb", copts.kb_path, "knowledge base file")->required();
  check->add_option("--insert", copts.insert_text, "ground atom to insert")
      ->required();
  check->add_option("--algorithm", copts.algorithm,
                    "auto|generalized|partial-meet|acyclic|kernel");
  check->add_option("--strategy", copts.strategy,
                    "minimal-lexicographic|minimal-cardinality|maximal");
  check->add_option("--format", copts.format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string ekb, egoal, eformat = "text";
  int edepth = 0;
  auto* explain = app.add_subcommand("explain", "show the SLD tree and the "
                                                "abductive explanations");
  explain->add_option("--kb", ekb, "knowledge base file")->required();
  explain->add_option("--goal", egoal, "atom to explain")->required();
  explain->add_option("--depth-bound", edepth, "SLD depth bound")
      ->check(CLI::PositiveNumber);
  explain->add_option("--format", eformat, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (revise->parsed()) return cmd_revise(ropts, false, out, err);
    if (check->parsed()) return cmd_revise(copts, true, out, err);
    if (explain->parsed()) return cmd_explain(ekb, egoal, edepth, eformat, out);
  } catch (const BudgetError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const CycleError& e) {
    err << "cycle: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace hornrev::cli

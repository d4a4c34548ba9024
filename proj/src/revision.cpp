#include "hornrev/revision.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hornrev/errors.hpp"
#include "hornrev/hitting.hpp"

namespace hornrev {

std::string to_string(const Transaction& t) {
  std::ostringstream os;
  bool first = true;
  for (const auto& a : t.insertions) {
    if (!first) os << "; ";
    first = false;
    os << "insert " << to_string(a);
  }
  for (const auto& a : t.deletions) {
    if (!first) os << "; ";
    first = false;
    os << "delete " << to_string(a);
  }
  if (first) os << "no change";
  return os.str();
}

KnowledgeBase apply_transaction(const KnowledgeBase& kb, const Transaction& t) {
  KnowledgeBase out = kb;
  for (const auto& a : t.deletions) out.remove_fact(a);
  for (const auto& a : t.insertions) out.add_fact(a);
  return out;
}

bool transaction_leq(const Transaction& a, const Transaction& b) {
  return std::includes(b.insertions.begin(), b.insertions.end(),
                       a.insertions.begin(), a.insertions.end()) &&
         std::includes(b.deletions.begin(), b.deletions.end(),
                       a.deletions.begin(), a.deletions.end());
}

std::vector<Transaction> RevisionResult::all_transactions() const {
  std::vector<Transaction> out;
  out.push_back(transaction);
  out.insert(out.end(), alternatives.begin(), alternatives.end());
  return out;
}

KnowledgeBase expand(const KnowledgeBase& kb, const Atom& fact) {
  if (!fact.ground()) throw Error("expansion needs a ground fact");
  if (kb.view_predicates().count(fact.pred))
    throw Error("cannot store a fact over view predicate '" + fact.pred + "'");
  KnowledgeBase out = kb;
  out.add_fact(fact);
  return out;
}

bool is_acyclic(const KnowledgeBase& kb, std::vector<Atom>* cycle_out) {
  auto g = detail::ground_kb(kb);
  // Head -> body edges over ground atoms; a level mapping exists iff the
  // graph has no cycle.
  std::map<Atom, std::vector<Atom>> edges;
  for (const auto& r : g.rules)
    if (r.head)
      for (const auto& b : r.body) edges[*r.head].push_back(b);

  std::map<Atom, int> state;  // 0 unseen, 1 on stack, 2 done
  std::vector<Atom> stack;
  bool cyclic = false;

  std::function<void(const Atom&)> dfs = [&](const Atom& a) {
    if (cyclic) return;
    state[a] = 1;
    stack.push_back(a);
    auto it = edges.find(a);
    if (it != edges.end()) {
      for (const auto& next : it->second) {
        auto s = state.find(next);
        if (s != state.end() && s->second == 1) {
          cyclic = true;
          if (cycle_out) {
            cycle_out->clear();
            auto from = std::find(stack.begin(), stack.end(), next);
            cycle_out->assign(from, stack.end());
            cycle_out->push_back(next);
          }
          return;
        }
        if (s == state.end() || s->second == 0) dfs(next);
        if (cyclic) return;
      }
    }
    state[a] = 2;
    stack.pop_back();
  };

  for (const auto& [head, _] : edges) {
    if (state[head] == 0) dfs(head);
    if (cyclic) return false;
  }
  return true;
}

namespace {

// Deduplicates, keeps the componentwise-minimal transactions and ranks them
// by total size then rendered text.
std::vector<Transaction> finalize_transactions(std::vector<Transaction> cand) {
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::vector<Transaction> minimal;
  for (const auto& t : cand) {
    bool dominated = false;
    for (const auto& o : cand)
      if (!(o == t) && transaction_leq(o, t)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(t);
  }
  std::stable_sort(minimal.begin(), minimal.end(),
                   [](const Transaction& a, const Transaction& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return to_string(a) < to_string(b);
                   });
  return minimal;
}

RevisionResult pack_result(const KnowledgeBase& kb, RevisionAlgorithm algo,
                           std::vector<Transaction> txs,
                           const Atom* request_for_residual) {
  RevisionResult res;
  res.algorithm = algo;
  if (txs.empty()) {
    res.status = RevisionStatus::NoRepair;
    res.kb_after = kb;
    if (request_for_residual)
      res.residual = ic_violations(kb, {*request_for_residual});
    return res;
  }
  res.status = RevisionStatus::Ok;
  res.transaction = txs.front();
  res.alternatives.assign(txs.begin() + 1, txs.end());
  res.kb_after = apply_transaction(kb, res.transaction);
  return res;
}

RevisionResult vacuity_result(const KnowledgeBase& kb, RevisionAlgorithm algo) {
  RevisionResult res;
  res.algorithm = algo;
  res.status = RevisionStatus::Vacuity;
  res.kb_after = kb;
  return res;
}

// Transactions realizing one explanation: insert its missing part, then each
// minimal constraint repair.
void candidates_for_explanation(const detail::GroundKb& g,
                                const Explanation& e, const Budget& budget,
                                std::vector<Transaction>& out) {
  std::set<Atom> ins;
  for (const auto& a : e.delta_plus)
    if (!g.facts.count(a)) ins.insert(a);
  if (!e.delta_minus.empty()) {
    out.push_back(Transaction{ins, e.delta_minus});
    return;
  }
  for (auto& d : minimal_repair_deletions(g, e.delta_plus, budget))
    out.push_back(Transaction{ins, std::move(d)});
}

}  // namespace

RevisionResult generalized_revision(const KnowledgeBase& kb,
                                    const HornClause& alpha,
                                    const Budget& budget) {
  if (!alpha.ground() || (!alpha.is_fact() && !alpha.is_denial()))
    throw Error("revision needs a ground fact or ground denial");
  if (!alpha_consistent_with_core(kb, alpha))
    return vacuity_result(kb, RevisionAlgorithm::Generalized);

  if (alpha.is_fact()) {
    const Atom& target = *alpha.head;
    std::set<std::string> extra;
    target.collect_constants(extra);
    auto g = detail::ground_kb(kb, extra);

    auto family = minimal_explanations(kb, target, budget);
    std::vector<Transaction> cand;
    for (const auto& e : family.items) {
      if (!support_repairable(g, e.delta_plus)) continue;
      candidates_for_explanation(g, e, budget, cand);
    }
    return pack_result(kb, RevisionAlgorithm::Generalized,
                       finalize_transactions(std::move(cand)), &target);
  }

  // Denial: the body must stop being jointly derivable. Breaking any one
  // body atom suffices; every choice is enumerated and the dominance filter
  // keeps the minimal ones. Constraint consistency is restored alongside.
  auto g = detail::ground_kb(kb);
  std::set<Atom> model = g.closure();
  bool eqs_hold = std::all_of(
      alpha.equalities.begin(), alpha.equalities.end(), [](const EqLiteral& e) {
        bool equal = e.lhs == e.rhs;
        return e.negated ? !equal : equal;
      });
  bool body_holds =
      eqs_hold && std::all_of(alpha.body.begin(), alpha.body.end(),
                              [&](const Atom& b) { return model.count(b) > 0; });

  std::vector<Transaction> cand;
  if (!body_holds) {
    for (auto& d : minimal_repair_deletions(g, {}, budget))
      cand.push_back(Transaction{{}, std::move(d)});
  } else {
    for (const auto& b : alpha.body) {
      std::vector<std::set<Atom>> active;
      auto family = minimal_explanations(kb, b, budget);
      for (const auto& e : family.items) {
        bool stored =
            std::all_of(e.delta_plus.begin(), e.delta_plus.end(),
                        [&](const Atom& a) { return g.facts.count(a) > 0; });
        if (stored) active.push_back(e.delta_plus);
      }
      if (active.empty()) continue;  // atom not derivable after all
      for (auto& h : minimal_hitting_sets_of(active)) {
        detail::GroundKb g2 = g;
        for (const auto& a : h) g2.facts.erase(a);
        for (auto& d : minimal_repair_deletions(g2, {}, budget)) {
          std::set<Atom> dels = h;
          dels.insert(d.begin(), d.end());
          cand.push_back(Transaction{{}, std::move(dels)});
        }
      }
    }
  }
  return pack_result(kb, RevisionAlgorithm::Generalized,
                     finalize_transactions(std::move(cand)), nullptr);
}

KnowledgeBase kr_procedure(const KnowledgeBase& kb,
                           const std::set<Atom>& delta_plus,
                           const std::set<Atom>& delta_minus,
                           const Budget& budget) {
  std::set<Atom> p, n;
  for (const auto& e : delta_plus)
    if (!derives(kb, e)) p.insert(e);
  for (const auto& e : delta_minus)
    if (derives(kb, e)) n.insert(e);
  if (p.empty() && n.empty()) return kb;

  KnowledgeBase out = kb;

  // Insertions: one chosen explanation per requested atom.
  for (const auto& e : p) {
    auto tree = sld_tree(out, e);
    auto te = tree_explanations(tree, out, TreeVariant::Algorithm3, budget);
    if (te.family.items.empty())
      throw Error("no admissible explanation for '" + to_string(e) + "'");
    std::vector<Transaction> cand;
    std::set<std::string> extra;
    e.collect_constants(extra);
    auto g = detail::ground_kb(out, extra);
    for (const auto& expl : te.family.items)
      candidates_for_explanation(g, expl, budget, cand);
    auto txs = finalize_transactions(std::move(cand));
    out = apply_transaction(out, txs.front());
  }

  // Deletions: a minimal hitting set across the active explanation families.
  if (!n.empty()) {
    std::vector<std::set<Atom>> active;
    auto g = detail::ground_kb(out);
    for (const auto& e : n) {
      auto tree = sld_tree(out, e);
      auto te = tree_explanations(tree, out, TreeVariant::Algorithm3, budget);
      for (const auto& expl : te.family.items) {
        bool stored =
            std::all_of(expl.delta_plus.begin(), expl.delta_plus.end(),
                        [&](const Atom& a) { return g.facts.count(a); });
        if (stored) active.push_back(expl.delta_plus);
      }
    }
    auto hs = minimal_hitting_sets_of(active);
    if (!hs.empty())
      for (const auto& a : hs.front()) out.remove_fact(a);
  }
  return out;
}

KnowledgeBase levi_revision(const KnowledgeBase& kb, const Atom& fact,
                            const ContractionFn& contraction,
                            IncisionStrategy strategy) {
  HornClause alpha = HornClause::fact(fact);
  if (!alpha_consistent_with_core(kb, alpha)) return kb;

  HornClause negation = HornClause::denial({fact});
  KnowledgeBase contracted;
  if (contraction) {
    contracted = contraction(kb, negation);
  } else {
    // Default: cut the clash kernels of the incoming fact.
    KernelSet kernel = kernel_sets(kb, alpha);
    HittingSet cut = incision(kernel, kb, strategy);
    contracted = kb;
    std::erase_if(contracted.updatable, [&](const HornClause& c) {
      return cut.elements.count(c) > 0;
    });
  }
  contracted.add_fact(fact);
  return contracted;
}

RevisionResult acyclic_generalized_revision(const KnowledgeBase& ddb,
                                            const Atom& target,
                                            const Budget& budget) {
  if (!target.ground()) throw Error("update request must be ground");
  std::vector<Atom> cycle;
  if (!is_acyclic(ddb, &cycle)) {
    std::string path;
    for (const auto& a : cycle) {
      if (!path.empty()) path += " -> ";
      path += to_string(a);
    }
    throw CycleError("program is cyclic: " + path);
  }
  if (!alpha_consistent_with_core(ddb, HornClause::fact(target)))
    return vacuity_result(ddb, RevisionAlgorithm::AcyclicGeneralized);

  std::set<std::string> extra;
  target.collect_constants(extra);
  auto g = detail::ground_kb(ddb, extra);

  auto tree = sld_tree(g, target, 0);
  auto te = tree_explanations(tree, ddb, TreeVariant::Algorithm3, budget);
  std::vector<Transaction> cand;
  for (const auto& e : te.family.items)
    candidates_for_explanation(g, e, budget, cand);
  return pack_result(ddb, RevisionAlgorithm::AcyclicGeneralized,
                     finalize_transactions(std::move(cand)), &target);
}

namespace {

struct PartialMeetSearch {
  const KnowledgeBase& kb;
  const Budget& budget;
  std::set<std::pair<std::set<Atom>, std::set<Atom>>> visited;
  std::vector<Transaction> found;
  std::size_t state_budget;

  void run(const Atom& target) {
    recurse(target, {}, {});
  }

  void recurse(const Atom& target, std::set<Atom> ins, std::set<Atom> dels) {
    if (found.size() > state_budget || visited.size() > state_budget)
      throw BudgetError("partial meet search exceeded the state budget");
    if (!visited.insert({ins, dels}).second) return;

    KnowledgeBase cur = apply_transaction(kb, Transaction{ins, dels});
    std::set<std::string> extra;
    target.collect_constants(extra);
    auto g = detail::ground_kb(cur, extra);
    bool derivable = g.closure().count(target) > 0;
    bool consistent = g.consistent();

    if (derivable && consistent) {
      found.push_back(Transaction{std::move(ins), std::move(dels)});
      return;
    }

    if (!derivable) {
      // Candidate completions: one representative per branch support,
      // restricted to branches that can coexist with the constraints.
      auto tree = sld_tree(g, target, 0);
      if (tree.has_cutoff()) throw CycleError("cut-off branch in search tree");
      std::vector<std::set<Atom>> families;
      for (const auto& b : tree.branches) {
        if (b.stuck_view || b.missing.empty()) continue;
        if (!support_repairable(g, b.support())) continue;
        families.push_back(b.missing);
      }
      std::sort(families.begin(), families.end());
      families.erase(std::unique(families.begin(), families.end()),
                     families.end());
      if (families.empty()) return;  // dead end
      for (auto& pick : minimal_hitting_sets_of(families)) {
        bool clash = std::any_of(pick.begin(), pick.end(), [&](const Atom& a) {
          return dels.count(a) > 0;
        });
        if (clash) continue;
        std::set<Atom> ins2 = ins;
        ins2.insert(pick.begin(), pick.end());
        recurse(target, std::move(ins2), dels);
      }
      return;
    }

    // Derivable but inconsistent: retract one stored fact at a time.
    for (const auto& f : g.facts) {
      if (ins.count(f)) continue;
      std::set<Atom> dels2 = dels;
      dels2.insert(f);
      std::set<Atom> ins2 = ins;
      recurse(target, std::move(ins2), std::move(dels2));
    }
  }
};

}  // namespace

RevisionResult partial_meet_revision(const KnowledgeBase& ddb,
                                     const Atom& target, const Budget& budget) {
  if (!target.ground()) throw Error("update request must be ground");
  if (!ddb.view_predicates().count(target.pred))
    throw Error("partial meet revision expects a view atom");
  if (!alpha_consistent_with_core(ddb, HornClause::fact(target)))
    return vacuity_result(ddb, RevisionAlgorithm::PartialMeet);

  PartialMeetSearch search{ddb, budget, {}, {}, 4096};
  search.run(target);
  return pack_result(ddb, RevisionAlgorithm::PartialMeet,
                     finalize_transactions(std::move(search.found)), &target);
}

}  // namespace hornrev

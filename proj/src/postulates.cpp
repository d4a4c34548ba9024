#include "hornrev/postulates.hpp"

#include <algorithm>
#include <sstream>

#include "hornrev/errors.hpp"
#include "hornrev/inference.hpp"
#include "hornrev/kernels.hpp"
#include "hornrev/parse.hpp"

namespace hornrev {

const PostulateResult* PostulateReport::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

bool PostulateReport::all_pass(const std::vector<std::string>& names) const {
  for (const auto& n : names) {
    const auto* r = find(n);
    if (!r || r->verdict == Verdict::Fail) return false;
  }
  return true;
}

std::string PostulateReport::table() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.name;
    for (std::size_t i = r.name.size(); i < 10; ++i) os << ' ';
    switch (r.verdict) {
      case Verdict::Pass:
        os << "pass";
        break;
      case Verdict::Fail:
        os << "FAIL";
        break;
      case Verdict::NotApplicable:
        os << "n/a";
        break;
    }
    if (!r.witness.empty()) os << "  " << r.witness;
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<HornClause> all_clauses(const KnowledgeBase& kb) {
  std::vector<HornClause> out = kb.immutable;
  out.insert(out.end(), kb.updatable.begin(), kb.updatable.end());
  out.insert(out.end(), kb.constraints.begin(), kb.constraints.end());
  return out;
}

std::set<HornClause> clause_set(const KnowledgeBase& kb) {
  auto v = all_clauses(kb);
  return {v.begin(), v.end()};
}

bool same_kb(const KnowledgeBase& a, const KnowledgeBase& b) {
  auto part = [](const std::vector<HornClause>& v) {
    return std::set<HornClause>(v.begin(), v.end());
  };
  return part(a.immutable) == part(b.immutable) &&
         part(a.updatable) == part(b.updatable) &&
         part(a.constraints) == part(b.constraints);
}

// Consistency of (core + extra clauses + alpha), the recurring test of the
// relevance postulates.
bool consistent_with_alpha(const KnowledgeBase& kb_before,
                           const std::vector<HornClause>& extra,
                           const HornClause& alpha) {
  std::vector<HornClause> soup = kb_before.immutable;
  soup.insert(soup.end(), kb_before.constraints.begin(),
              kb_before.constraints.end());
  soup.insert(soup.end(), extra.begin(), extra.end());
  soup.push_back(alpha);
  return clauses_consistent(soup);
}

struct Checker {
  const KnowledgeBase& before;
  const HornClause& alpha;
  const KnowledgeBase& after;
  const RevisionOp& op;
  const Budget& budget;

  bool view_mode = false;
  bool alpha_ok = false;  // alpha consistent with rules + constraints
  PostulateReport report;

  void add(const std::string& name, Verdict v, std::string witness = "") {
    report.results.push_back({name, v, std::move(witness)});
  }

  void run() {
    const std::set<std::string> view = before.view_predicates();
    view_mode = alpha.is_fact() && view.count(alpha.head->pred) > 0;
    alpha_ok = alpha_consistent_with_core(before, alpha);

    check_closure();
    check_weak_success();
    check_inclusion();
    check_immutable_inclusion();
    check_vacuity1();
    check_vacuity2();
    check_consistency();
    check_preservation();
    check_relevance("KB*7.1", Relevance::Strong);
    check_relevance("KB*7.2", Relevance::Middle);
    check_relevance("KB*7.3", Relevance::Weak);
  }

  void check_closure() {
    auto v = validate(after);
    if (v.empty())
      add("KB*1", Verdict::Pass);
    else
      add("KB*1", Verdict::Fail, v.front().message +
              (v.front().clause_text.empty() ? "" : ": " + v.front().clause_text));
  }

  void check_weak_success() {
    if (!alpha_ok) {
      add("KB*2", Verdict::NotApplicable);
      return;
    }
    bool ok;
    if (view_mode) {
      ok = derives(after, *alpha.head);
    } else if (alpha.is_fact()) {
      ok = after.has_fact(*alpha.head);
    } else {
      ok = std::find(after.constraints.begin(), after.constraints.end(),
                     alpha) != after.constraints.end();
    }
    add("KB*2", ok ? Verdict::Pass : Verdict::Fail,
        ok ? "" : "alpha missing: " + to_string(alpha));
  }

  void check_inclusion() {
    std::set<HornClause> base = clause_set(before);
    base.insert(alpha);
    LeastModel lm;
    if (alpha.is_fact())
      lm = least_model(before, {*alpha.head});
    else
      lm = least_model(before);
    std::set<Atom> base_universe;
    if (view_mode) {
      std::set<std::string> extra;
      if (alpha.is_fact()) alpha.head->collect_constants(extra);
      auto u = ground_base_atoms(before, extra);
      base_universe.insert(u.begin(), u.end());
    }
    for (const auto& c : all_clauses(after)) {
      if (c.is_fact()) {
        if (base.count(c) || lm.contains(*c.head)) continue;
        if (view_mode && base_universe.count(*c.head)) continue;
        add("KB*3.1", Verdict::Fail, "not a consequence: " + to_string(c));
        return;
      }
      if (!base.count(c)) {
        add("KB*3.1", Verdict::Fail, "invented clause: " + to_string(c));
        return;
      }
    }
    add("KB*3.1", Verdict::Pass);
  }

  void check_immutable_inclusion() {
    auto part = [](const std::vector<HornClause>& v) {
      return std::set<HornClause>(v.begin(), v.end());
    };
    bool ok = part(before.immutable) == part(after.immutable);
    add("KB*3.2", ok ? Verdict::Pass : Verdict::Fail,
        ok ? "" : "immutable partition changed");
  }

  void check_vacuity1() {
    if (alpha_ok) {
      add("KB*4.1", Verdict::NotApplicable);
      return;
    }
    bool ok = same_kb(before, after);
    add("KB*4.1", ok ? Verdict::Pass : Verdict::Fail,
        ok ? "" : "alpha incompatible with core but KB changed");
  }

  void check_vacuity2() {
    if (view_mode) {
      bool guard =
          derives(before, *alpha.head) && ic_violations(before).empty();
      if (!guard) {
        add("KB*4.2", Verdict::NotApplicable);
        return;
      }
      bool ok = same_kb(before, after);
      add("KB*4.2", ok ? Verdict::Pass : Verdict::Fail,
          ok ? "" : "request already held but KB changed");
      return;
    }
    std::vector<HornClause> soup = all_clauses(before);
    soup.push_back(alpha);
    if (!clauses_consistent(soup)) {
      add("KB*4.2", Verdict::NotApplicable);
      return;
    }
    KnowledgeBase expected = before;
    if (alpha.is_fact()) {
      if (!expected.has_fact(*alpha.head)) expected.updatable.push_back(alpha);
    } else if (std::find(expected.constraints.begin(),
                         expected.constraints.end(),
                         alpha) == expected.constraints.end()) {
      expected.constraints.push_back(alpha);
    }
    bool ok = same_kb(expected, after);
    add("KB*4.2", ok ? Verdict::Pass : Verdict::Fail,
        ok ? "" : "KB u {alpha} consistent but result differs from it");
  }

  void check_consistency() {
    if (!alpha_ok) {
      add("KB*5", Verdict::NotApplicable);
      return;
    }
    bool ok = ic_violations(after).empty();
    add("KB*5", ok ? Verdict::Pass : Verdict::Fail,
        ok ? "" : "result violates a constraint");
  }

  void check_preservation() {
    if (!op || !alpha.is_fact()) {
      add("KB*6", Verdict::NotApplicable);
      return;
    }
    // Candidate partners and the equivalence universe: every ground atom in
    // sight. Fact sets E range over all of them, so equivalence is the full
    // indistinguishability relation.
    std::set<Atom> cand;
    auto g = detail::ground_kb(before);
    for (const auto& r : g.rules) {
      if (r.head) cand.insert(*r.head);
      for (const auto& b : r.body) cand.insert(b);
    }
    for (const auto& f : g.facts) cand.insert(f);
    std::set<std::string> extra;
    alpha.head->collect_constants(extra);
    for (const auto& a : ground_base_atoms(before, extra)) cand.insert(a);
    cand.erase(*alpha.head);

    std::vector<Atom> universe(cand.begin(), cand.end());
    universe.push_back(*alpha.head);
    if (universe.size() >= 62 ||
        (std::uint64_t{1} << universe.size()) > budget.relevance_limit) {
      add("KB*6", Verdict::NotApplicable, "universe too large");
      return;
    }
    for (const auto& beta : cand) {
      if (!kb_equivalent(before, *alpha.head, beta, universe, budget)) continue;
      KnowledgeBase rb;
      try {
        rb = op(before, HornClause::fact(beta));
      } catch (const Error&) {
        continue;
      }
      auto part = [](const std::vector<HornClause>& v) {
        return std::set<HornClause>(v.begin(), v.end());
      };
      if (part(rb.updatable) != part(after.updatable) ||
          part(rb.constraints) != part(after.constraints)) {
        add("KB*6", Verdict::Fail,
            "equivalent request '" + to_string(beta) + "' revises differently");
        return;
      }
    }
    add("KB*6", Verdict::Pass);
  }

  enum class Relevance { Strong, Middle, Weak };

  void check_relevance(const std::string& name, Relevance kind) {
    if (kind == Relevance::Strong) {
      // Success at derivability level under the consistency guard.
      if (!alpha_ok) {
        add(name, Verdict::NotApplicable);
        return;
      }
      bool ok = alpha.is_fact()
                    ? derives(after, *alpha.head) || after.has_fact(*alpha.head)
                    : denial_holds(after);
      add(name, ok ? Verdict::Pass : Verdict::Fail,
          ok ? "" : "alpha not recovered: " + to_string(alpha));
      return;
    }

    // Deleted clauses must be blamed on keeping alpha consistent.
    std::vector<HornClause> deleted;
    std::set<HornClause> after_set = clause_set(after);
    for (const auto& c : all_clauses(before))
      if (!after_set.count(c)) deleted.push_back(c);
    if (deleted.empty()) {
      add(name, Verdict::Pass);
      return;
    }

    for (const auto& beta : deleted) {
      if (!witness_exists(beta, kind == Relevance::Middle)) {
        add(name, Verdict::Fail,
            "no witness set for deleted clause: " + to_string(beta));
        return;
      }
    }
    add(name, Verdict::Pass);
  }

  bool denial_holds(const KnowledgeBase& kb) const {
    LeastModel lm = least_model(kb);
    for (const auto& b : alpha.body)
      if (!lm.contains(b)) return true;
    for (const auto& e : alpha.equalities) {
      bool equal = e.lhs == e.rhs;
      if (e.negated ? equal : !equal) return true;
    }
    return false;
  }

  // Searches for KB' (varying the updatable part, plus licensed base atoms
  // in view mode) with: KB' consistent with alpha; KB' + beta inconsistent
  // with alpha; and, for the middle variant, result subset of KB'.
  bool witness_exists(const HornClause& beta, bool lower_bound) {
    std::vector<HornClause> pool;
    for (const auto& c : before.updatable)
      if (!(c == beta)) pool.push_back(c);
    if (alpha.is_fact() && !view_mode) {
      HornClause af = alpha;
      if (std::find(pool.begin(), pool.end(), af) == pool.end())
        pool.push_back(af);
    }
    if (view_mode) {
      std::set<std::string> extra;
      alpha.head->collect_constants(extra);
      for (const auto& a : ground_base_atoms(before, extra)) {
        HornClause f = HornClause::fact(a);
        if (!(f == beta) &&
            std::find(pool.begin(), pool.end(), f) == pool.end())
          pool.push_back(f);
      }
    }

    std::set<HornClause> must;  // lower bound: updatable part of the result
    if (lower_bound)
      for (const auto& c : after.updatable)
        if (std::find(pool.begin(), pool.end(), c) != pool.end()) must.insert(c);

    // A minimal-change result usually witnesses itself: the outcome is
    // consistent with alpha and putting beta back breaks it.
    {
      std::vector<HornClause> chosen;
      for (const auto& c : after.updatable)
        if (std::find(pool.begin(), pool.end(), c) != pool.end())
          chosen.push_back(c);
      if (consistent_with_alpha(before, chosen, alpha)) {
        chosen.push_back(beta);
        if (!consistent_with_alpha(before, chosen, alpha)) return true;
      }
    }

    const std::size_t n = pool.size();
    if ((std::uint64_t{1} << std::min<std::size_t>(n, 62)) >
        budget.relevance_limit)
      throw BudgetError("relevance search over " + std::to_string(n) +
                        " clauses exceeds the budget");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<HornClause> chosen;
      bool has_must = true;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) chosen.push_back(pool[i]);
      if (lower_bound)
        for (const auto& m : must)
          if (std::find(chosen.begin(), chosen.end(), m) == chosen.end()) {
            has_must = false;
            break;
          }
      if (!has_must) continue;
      if (!consistent_with_alpha(before, chosen, alpha)) continue;
      chosen.push_back(beta);
      if (!consistent_with_alpha(before, chosen, alpha)) return true;
    }
    return false;
  }
};

}  // namespace

PostulateReport check_postulates(const KnowledgeBase& kb_before,
                                 const HornClause& alpha,
                                 const KnowledgeBase& kb_after,
                                 const RevisionOp& op, const Budget& budget) {
  if (!alpha.ground()) throw Error("postulate check needs a ground request");
  Checker c{kb_before, alpha, kb_after, op, budget};
  c.run();
  return c.report;
}

bool kb_equivalent(const KnowledgeBase& kb, const Atom& alpha, const Atom& beta,
                   const std::vector<Atom>& universe, const Budget& budget) {
  const std::size_t n = universe.size();
  if (n >= 62 || (std::uint64_t{1} << n) > budget.subset_limit)
    throw BudgetError("equivalence check universe too large");
  std::set<std::string> consts;
  for (const auto& a : universe) a.collect_constants(consts);
  alpha.collect_constants(consts);
  beta.collect_constants(consts);
  for (const auto& c : kb.constants()) consts.insert(c);
  auto rules = ground_instantiate(kb.immutable, consts);

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::set<Atom> e;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) e.insert(universe[i]);
    auto model = detail::closure_of(rules, e);
    if ((model.count(alpha) > 0) != (model.count(beta) > 0)) return false;
  }
  return true;
}

bool satisfies(const Interpretation& interp, const HornClause& clause) {
  auto holds = [&](const Atom& a) { return interp.true_atoms.count(a) > 0; };
  for (const auto& e : clause.equalities) {
    bool equal = e.lhs == e.rhs;
    bool lit = e.negated ? !equal : equal;
    if (!lit) return true;  // body literal false: clause satisfied
  }
  if (clause.is_denial()) {
    for (const auto& b : clause.body)
      if (!holds(b)) return true;
    return false;
  }
  if (clause.is_fact()) return holds(*clause.head);
  for (const auto& b : clause.body)
    if (!holds(b)) return true;
  return holds(*clause.head);
}

std::set<Interpretation> models_of(const std::vector<HornClause>& clauses,
                                   const std::vector<Atom>& universe) {
  if (universe.size() >= 62) throw Error("interpretation universe too large");
  std::set<Interpretation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size());
       ++mask) {
    Interpretation i;
    for (std::size_t k = 0; k < universe.size(); ++k)
      if (mask & (std::uint64_t{1} << k)) i.true_atoms.insert(universe[k]);
    bool ok = std::all_of(clauses.begin(), clauses.end(),
                          [&](const HornClause& c) { return satisfies(i, c); });
    if (ok) out.insert(std::move(i));
  }
  return out;
}

bool pmc_check(const std::vector<HornClause>& psi,
               const std::vector<HornClause>& phi,
               const std::vector<Atom>& universe, const Preorder& leq,
               const std::set<Interpretation>& revised_models) {
  if (universe.size() > 12) throw Error("universe above the 12-atom bound");
  std::vector<Interpretation> all;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size());
       ++mask) {
    Interpretation i;
    for (std::size_t k = 0; k < universe.size(); ++k)
      if (mask & (std::uint64_t{1} << k)) i.true_atoms.insert(universe[k]);
    all.push_back(std::move(i));
  }
  auto mod_psi = models_of(psi, universe);
  auto mod_phi = models_of(phi, universe);

  auto strictly_less = [&](const Interpretation& a, const Interpretation& b) {
    return leq(a, b) && !leq(b, a);
  };

  for (const auto& x : all)
    for (const auto& y : all) {
      if (!leq(x, y) && !leq(y, x))
        throw Error("preorder is not total (incomparable pair)");
    }

  // Faithfulness: flat on Mod(psi); psi-models strictly below the rest.
  for (const auto& x : mod_psi)
    for (const auto& y : mod_psi)
      if (strictly_less(x, y)) return false;
  for (const auto& x : mod_psi)
    for (const auto& y : all)
      if (!mod_psi.count(y) && !strictly_less(x, y)) return false;

  std::set<Interpretation> min;
  for (const auto& x : mod_phi) {
    bool minimal = true;
    for (const auto& y : mod_phi)
      if (strictly_less(y, x)) {
        minimal = false;
        break;
      }
    if (minimal) min.insert(x);
  }
  return min == revised_models;
}

Preorder dalal_preorder(const std::vector<HornClause>& psi,
                        const std::vector<Atom>& universe) {
  auto mod_psi = models_of(psi, universe);
  auto distance = [mod_psi](const Interpretation& i) {
    std::size_t best = SIZE_MAX;
    for (const auto& m : mod_psi) {
      std::vector<Atom> diff;
      std::set_symmetric_difference(i.true_atoms.begin(), i.true_atoms.end(),
                                    m.true_atoms.begin(), m.true_atoms.end(),
                                    std::back_inserter(diff));
      best = std::min(best, diff.size());
    }
    return best;
  };
  return [distance](const Interpretation& a, const Interpretation& b) {
    return distance(a) <= distance(b);
  };
}

}  // namespace hornrev

#include "hornrev/inference.hpp"

#include <algorithm>

namespace hornrev {

namespace detail {

std::set<Atom> closure_of(const std::vector<HornClause>& ground_rules,
                          const std::set<Atom>& facts) {
  std::set<Atom> model = facts;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : ground_rules) {
      if (!r.head || model.count(*r.head)) continue;
      bool fires = true;
      for (const auto& b : r.body)
        if (!model.count(b)) {
          fires = false;
          break;
        }
      if (fires) {
        model.insert(*r.head);
        changed = true;
      }
    }
  }
  return model;
}

namespace {

bool eq_literals_hold(const HornClause& denial, const Substitution& theta) {
  for (const auto& e : denial.equalities) {
    Term l = theta.apply(e.lhs);
    Term r = theta.apply(e.rhs);
    if (l.is_variable() || r.is_variable()) return false;  // unbound: no
    bool equal = l.name == r.name;
    if (e.negated ? equal : !equal) return false;
  }
  return true;
}

bool match_body(const HornClause& denial, std::size_t i,
                const std::set<Atom>& model, Substitution theta,
                Substitution* witness_out) {
  if (i == denial.body.size()) {
    if (!eq_literals_hold(denial, theta)) return false;
    if (witness_out) *witness_out = theta.restricted_to(denial.body);
    return true;
  }
  for (const auto& m : model) {
    auto ext = unify_into(denial.body[i], m, theta);
    if (ext && match_body(denial, i + 1, model, *ext, witness_out)) return true;
  }
  return false;
}

}  // namespace

bool denial_violated(const HornClause& denial, const std::set<Atom>& model,
                     Substitution* witness_out) {
  return match_body(denial, 0, model, Substitution{}, witness_out);
}

GroundKb ground_kb(const KnowledgeBase& kb,
                   const std::set<std::string>& extra_constants) {
  GroundKb g;
  g.constant_universe = kb.constants();
  g.constant_universe.insert(extra_constants.begin(), extra_constants.end());
  g.rules = ground_instantiate(kb.immutable, g.constant_universe);
  g.denials = ground_instantiate(kb.constraints, g.constant_universe);
  // Drop ground denial instances whose equality literals are already false.
  std::erase_if(g.denials, [](const HornClause& d) {
    for (const auto& e : d.equalities) {
      bool equal = e.lhs == e.rhs;
      if (e.negated ? equal : !equal) return true;
    }
    return false;
  });
  for (const auto& c : kb.updatable)
    if (c.is_fact()) g.facts.insert(*c.head);
  return g;
}

std::set<Atom> GroundKb::closure(const std::set<Atom>& extra) const {
  std::set<Atom> start = facts;
  start.insert(extra.begin(), extra.end());
  return closure_of(rules, start);
}

bool GroundKb::model_satisfies_denials(const std::set<Atom>& model) const {
  for (const auto& d : denials)
    if (denial_violated(d, model)) return false;
  return true;
}

bool GroundKb::consistent(const std::set<Atom>& extra) const {
  return model_satisfies_denials(closure(extra));
}

}  // namespace detail

LeastModel least_model(const KnowledgeBase& kb,
                       const std::set<Atom>& extra_facts) {
  std::set<std::string> extra_consts;
  for (const auto& a : extra_facts) a.collect_constants(extra_consts);
  auto g = detail::ground_kb(kb, extra_consts);
  return LeastModel{g.closure(extra_facts)};
}

bool derives(const KnowledgeBase& kb, const Atom& atom) {
  return least_model(kb).contains(atom);
}

ViolationSet ic_violations(const KnowledgeBase& kb,
                           const std::set<Atom>& extra_facts) {
  std::set<std::string> extra_consts;
  for (const auto& a : extra_facts) a.collect_constants(extra_consts);
  auto g = detail::ground_kb(kb, extra_consts);
  std::set<Atom> model = g.closure(extra_facts);

  ViolationSet out;
  for (const auto& c : kb.constraints) {
    Substitution witness;
    if (detail::denial_violated(c, model, &witness))
      out.items.push_back({c, witness});
  }
  return out;
}

bool clauses_consistent(const std::vector<HornClause>& clauses) {
  std::set<std::string> consts;
  for (const auto& c : clauses) c.collect_constants(consts);

  std::vector<HornClause> rules, denials;
  std::set<Atom> facts;
  for (const auto& c : clauses) {
    if (c.is_denial())
      denials.push_back(c);
    else if (c.is_fact())
      facts.insert(*c.head);
    else
      rules.push_back(c);
  }
  auto rules_g = ground_instantiate(rules, consts);
  auto denials_g = ground_instantiate(denials, consts);
  std::set<Atom> model = detail::closure_of(rules_g, facts);
  for (const auto& d : denials_g) {
    bool eq_ok = true;
    for (const auto& e : d.equalities) {
      bool equal = e.lhs == e.rhs;
      if (e.negated ? equal : !equal) {
        eq_ok = false;
        break;
      }
    }
    if (!eq_ok) continue;
    if (detail::denial_violated(d, model)) return false;
  }
  return true;
}

}  // namespace hornrev

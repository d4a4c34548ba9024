#ifndef HORNREV_INFERENCE_HPP
#define HORNREV_INFERENCE_HPP

#include <set>
#include <vector>

#include "hornrev/kb.hpp"

namespace hornrev {

struct LeastModel {
  std::set<Atom> atoms;
  bool contains(const Atom& a) const { return atoms.count(a) > 0; }
};

// Least Herbrand model of ground(immutable) + updatable + extra_facts,
// computed as the immediate-consequence fixpoint.
LeastModel least_model(const KnowledgeBase& kb,
                       const std::set<Atom>& extra_facts = {});

bool derives(const KnowledgeBase& kb, const Atom& atom);

struct ViolationWitness {
  HornClause constraint;
  Substitution witness;  // grounds the constraint body inside the model
};

struct ViolationSet {
  std::vector<ViolationWitness> items;
  bool empty() const { return items.empty(); }
};

// Constraints whose body is satisfiable in the least model, each with one
// witness substitution. Equalities hold iff both sides are the identical
// constant (resp. distinct constants for !=).
ViolationSet ic_violations(const KnowledgeBase& kb,
                           const std::set<Atom>& extra_facts = {});

// Consistency of an arbitrary ground clause soup: the closure of its rules
// and facts must satisfy every denial in it.
bool clauses_consistent(const std::vector<HornClause>& clauses);

namespace detail {

// Pre-grounded view of a KB, shared by the engines. Facts are kept as a set;
// rules and denials are ground instances over the given universe.
struct GroundKb {
  std::vector<HornClause> rules;
  std::vector<HornClause> denials;
  std::set<Atom> facts;
  std::set<std::string> constant_universe;

  std::set<Atom> closure(const std::set<Atom>& extra = {}) const;
  bool consistent(const std::set<Atom>& extra = {}) const;
  bool model_satisfies_denials(const std::set<Atom>& model) const;
};

GroundKb ground_kb(const KnowledgeBase& kb,
                   const std::set<std::string>& extra_constants = {});

// Closure of an explicit rule set over explicit facts.
std::set<Atom> closure_of(const std::vector<HornClause>& ground_rules,
                          const std::set<Atom>& facts);

// True when the model makes some ground instance of the denial body true.
bool denial_violated(const HornClause& denial, const std::set<Atom>& model,
                     Substitution* witness_out = nullptr);

}  // namespace detail

}  // namespace hornrev

#endif

#ifndef HORNREV_TESTS_SUPPORT_HPP
#define HORNREV_TESTS_SUPPORT_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "hornrev/inference.hpp"
#include "hornrev/kb.hpp"
#include "hornrev/parse.hpp"
#include "hornrev/revision.hpp"

namespace hornrev::test {

// Research-group database: one join view, four stored tuples, a one-chair
// constraint.
inline const char* kStaffKb = R"(
%% immutable
staff_chair(X, Y) :- staff_group(X, Z), group_chair(Z, Y).
%% updatable
group_chair(infor1, matthias).
group_chair(infor2, gerhard).
staff_group(delhibabu, infor1).
staff_group(aravindan, infor2).
%% constraints
:- group_chair(X, Y), group_chair(X, Z), Y != Z.
)";

// Propositional database with two routes to p and a banned atom b.
inline const char* kRoutesKb = R"(
%% immutable
p :- a, e.
q :- a, f.
p :- b, f.
q :- b, e.
p :- q.
q :- a.
%% updatable
a.
e.
f.
%% constraints
:- b.
)";

// Same rules with fact a removed: p stops being derivable.
inline const char* kRoutesKbNoA = R"(
%% immutable
p :- a, e.
q :- a, f.
p :- b, f.
q :- b, e.
p :- q.
q :- a.
%% updatable
e.
f.
%% constraints
:- b.
)";

// Three rules over two stored atoms, no constraints.
inline const char* kTwoRulesKb = R"(
%% immutable
p :- a, b.
p :- a.
q :- a, b.
%% updatable
a.
b.
%% constraints
)";

inline Atom atom(const std::string& s) { return parse_atom(s); }
inline HornClause fact(const std::string& s) {
  return HornClause::fact(parse_atom(s));
}
inline HornClause denial(const std::string& s) {
  return parse_clause(":- " + s + ".");
}
inline KnowledgeBase kb_of(const std::string& text) { return parse_kb(text); }

inline std::set<Atom> atoms(const std::vector<std::string>& names) {
  std::set<Atom> out;
  for (const auto& n : names) out.insert(parse_atom(n));
  return out;
}

// Random propositional KBs for the property suites: stratified rules (so the
// program is acyclic and non-recursive), stored facts over the base atoms,
// and an optional denial constraint. Initial states are kept consistent.
struct RandomKbConfig {
  int max_atoms = 8;
  int max_rules = 6;
  int max_body = 3;
  int max_facts = 4;
  int max_constraints = 1;
  bool force_constraint = false;
};

struct RandomInstance {
  KnowledgeBase kb;
  std::vector<Atom> view_atoms;
  std::vector<Atom> base_atoms;
};

inline RandomInstance random_kb(std::mt19937& rng, const RandomKbConfig& cfg) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };

  int n_atoms = 3 + pick(cfg.max_atoms - 2);
  std::vector<std::string> names;
  for (int i = 0; i < n_atoms; ++i) names.push_back(std::string(1, char('a' + i)));

  // A random stratum order keeps every rule head strictly above its body.
  std::vector<int> order(names.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::shuffle(order.begin(), order.end(), rng);

  KnowledgeBase kb;
  std::set<std::string> heads;
  int n_rules = 1 + pick(cfg.max_rules);
  for (int r = 0; r < n_rules; ++r) {
    int head_pos = 1 + pick(n_atoms - 1);
    std::string head = names[order[head_pos]];
    int body_size = 1 + pick(std::min(cfg.max_body, head_pos));
    std::set<std::string> body;
    while (static_cast<int>(body.size()) < body_size)
      body.insert(names[order[pick(head_pos)]]);
    std::vector<Atom> body_atoms;
    for (const auto& b : body) body_atoms.push_back(Atom{b, {}});
    HornClause rule = HornClause::rule(Atom{head, {}}, body_atoms);
    if (std::find(kb.immutable.begin(), kb.immutable.end(), rule) ==
        kb.immutable.end()) {
      kb.immutable.push_back(rule);
      heads.insert(head);
    }
  }

  std::vector<std::string> base;
  for (const auto& n : names)
    if (!heads.count(n)) base.push_back(n);
  if (base.empty()) {
    // Degenerate shuffle: make the lowest stratum atom a base atom.
    base.push_back(names[order[0]]);
    std::erase_if(kb.immutable, [&](const HornClause& r) {
      return r.head->pred == names[order[0]];
    });
    heads.erase(names[order[0]]);
  }

  int n_facts = pick(cfg.max_facts + 1);
  for (int i = 0; i < n_facts && !base.empty(); ++i)
    kb.add_fact(Atom{base[pick(static_cast<int>(base.size()))], {}});

  int n_cons = cfg.force_constraint ? cfg.max_constraints
                                    : pick(cfg.max_constraints + 1);
  for (int i = 0; i < n_cons; ++i) {
    int body_size = 1 + pick(2);
    std::set<std::string> body;
    while (static_cast<int>(body.size()) < body_size)
      body.insert(names[pick(n_atoms)]);
    std::vector<Atom> body_atoms;
    for (const auto& b : body) body_atoms.push_back(Atom{b, {}});
    HornClause d = HornClause::denial(body_atoms);
    if (std::find(kb.constraints.begin(), kb.constraints.end(), d) ==
        kb.constraints.end())
      kb.constraints.push_back(d);
  }

  // Keep the initial state consistent: drop stored facts until clean.
  while (!ic_violations(kb).empty() && !kb.updatable.empty())
    kb.updatable.erase(kb.updatable.begin() + pick(static_cast<int>(
                           kb.updatable.size())));

  RandomInstance inst;
  inst.kb = kb;
  for (const auto& h : heads) inst.view_atoms.push_back(Atom{h, {}});
  for (const auto& b : base) inst.base_atoms.push_back(Atom{b, {}});
  return inst;
}

}  // namespace hornrev::test

#endif

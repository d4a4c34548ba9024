#ifndef HORNREV_KB_HPP
#define HORNREV_KB_HPP

#include <set>
#include <string>
#include <vector>

#include "hornrev/clause.hpp"

namespace hornrev {

// Partitioned knowledge base: immutable rules, updatable ground facts, and
// denial constraints. Partitions are kept in source order; inserts use set
// semantics (duplicates are dropped).
struct KnowledgeBase {
  std::vector<HornClause> immutable;
  std::vector<HornClause> updatable;
  std::vector<HornClause> constraints;

  // Predicates occurring as rule heads.
  std::set<std::string> view_predicates() const;
  // Every other predicate occurring anywhere (facts, bodies, constraints).
  std::set<std::string> base_predicates() const;
  std::set<std::string> constants() const;

  bool has_fact(const Atom& a) const;
  void add_fact(const Atom& a);
  void remove_fact(const Atom& a);

  bool operator==(const KnowledgeBase&) const = default;
};

struct Violation {
  std::string message;
  std::string clause_text;  // offending clause, empty for KB-level issues
};

// Total: classifies every departure from the KB invariants without throwing.
std::vector<Violation> validate(const KnowledgeBase& kb);

// A requested insertion of a ground view atom.
struct UpdateRequest {
  Atom atom;
};

// All ground atoms over the base predicates of kb, with arities taken from
// their occurrences and arguments drawn from the KB constants plus extras.
std::vector<Atom> ground_base_atoms(const KnowledgeBase& kb,
                                    const std::set<std::string>& extra = {});

// KB constants extended with those of an atom (the grounding universe).
std::set<std::string> universe_constants(const KnowledgeBase& kb,
                                         const Atom& request);

}  // namespace hornrev

#endif

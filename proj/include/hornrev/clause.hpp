#ifndef HORNREV_CLAUSE_HPP
#define HORNREV_CLAUSE_HPP

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hornrev/term.hpp"

namespace hornrev {

// (In)equality literal between two terms; allowed in constraint bodies only.
struct EqLiteral {
  Term lhs;
  Term rhs;
  bool negated = false;  // true encodes lhs != rhs

  auto operator<=>(const EqLiteral&) const = default;
};

// One definite rule (head + non-empty body), fact (head only), or denial
// constraint (no head). Equality literals may appear only in denials.
struct HornClause {
  std::optional<Atom> head;
  std::vector<Atom> body;
  std::vector<EqLiteral> equalities;

  static HornClause fact(Atom a) {
    HornClause c;
    c.head = std::move(a);
    return c;
  }
  static HornClause rule(Atom h, std::vector<Atom> b) {
    HornClause c;
    c.head = std::move(h);
    c.body = std::move(b);
    return c;
  }
  static HornClause denial(std::vector<Atom> b,
                           std::vector<EqLiteral> eqs = {}) {
    HornClause c;
    c.body = std::move(b);
    c.equalities = std::move(eqs);
    return c;
  }

  bool is_fact() const { return head.has_value() && body.empty(); }
  bool is_rule() const { return head.has_value() && !body.empty(); }
  bool is_denial() const { return !head.has_value(); }

  bool ground() const;
  std::set<std::string> variables() const;
  void collect_constants(std::set<std::string>& out) const;

  auto operator<=>(const HornClause&) const = default;
};

std::string to_string(const HornClause& c);

HornClause apply(const Substitution& theta, const HornClause& c);
Atom apply(const Substitution& theta, const Atom& a);

// Renames every variable in the clause to a fresh name using the counter.
HornClause standardize_apart(const HornClause& c, int& counter);

// Every ground instance of every clause over the constant universe.
// Ground clauses pass through unchanged. Throws Error when a clause has
// variables and the universe is empty. The result is deduplicated but keeps
// clause source order, with bindings enumerated lexicographically.
std::vector<HornClause> ground_instantiate(
    const std::vector<HornClause>& clauses,
    const std::set<std::string>& universe);

}  // namespace hornrev

#endif

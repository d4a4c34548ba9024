#ifndef HORNREV_TERM_HPP
#define HORNREV_TERM_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hornrev {

// Function-free terms: a term is a constant (lowercase identifier) or a
// variable (uppercase identifier). The kind is fixed at construction.
enum class TermKind { Constant, Variable };

struct Term {
  TermKind kind = TermKind::Constant;
  std::string name;

  static Term constant(std::string n) {
    return Term{TermKind::Constant, std::move(n)};
  }
  static Term variable(std::string n) {
    return Term{TermKind::Variable, std::move(n)};
  }

  bool is_variable() const { return kind == TermKind::Variable; }
  bool is_constant() const { return kind == TermKind::Constant; }

  auto operator<=>(const Term&) const = default;
};

struct Atom {
  std::string pred;
  std::vector<Term> args;

  bool ground() const;
  void collect_variables(std::set<std::string>& out) const;
  void collect_constants(std::set<std::string>& out) const;
  int arity() const { return static_cast<int>(args.size()); }

  auto operator<=>(const Atom&) const = default;
};

std::string to_string(const Term& t);
std::string to_string(const Atom& a);

// Finite map from variable names to terms. Bindings are kept fully resolved,
// so applying twice equals applying once, and no variable maps to itself.
class Substitution {
 public:
  Substitution() = default;

  bool bind(const std::string& var, const Term& value);
  std::optional<Term> lookup(const std::string& var) const;

  Term apply(const Term& t) const;
  Atom apply(const Atom& a) const;

  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }
  const std::map<std::string, Term>& bindings() const { return map_; }

  // Restriction to the variables occurring in the given atoms.
  Substitution restricted_to(const std::vector<Atom>& atoms) const;

  auto operator<=>(const Substitution&) const = default;

 private:
  std::map<std::string, Term> map_;
};

std::string to_string(const Substitution& s);

// Most general unifier of two atoms, or nullopt when none exists.
std::optional<Substitution> unify(const Atom& a, const Atom& b);

// Extends theta so that theta(a) == theta(b); nullopt when impossible.
std::optional<Substitution> unify_into(const Atom& a, const Atom& b,
                                       Substitution theta);

}  // namespace hornrev

#endif

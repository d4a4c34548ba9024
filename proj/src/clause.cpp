#include "hornrev/clause.hpp"

#include <algorithm>
#include <sstream>

#include "hornrev/errors.hpp"

namespace hornrev {

bool HornClause::ground() const {
  if (head && !head->ground()) return false;
  for (const auto& a : body)
    if (!a.ground()) return false;
  for (const auto& e : equalities)
    if (e.lhs.is_variable() || e.rhs.is_variable()) return false;
  return true;
}

std::set<std::string> HornClause::variables() const {
  std::set<std::string> out;
  if (head) head->collect_variables(out);
  for (const auto& a : body) a.collect_variables(out);
  for (const auto& e : equalities) {
    if (e.lhs.is_variable()) out.insert(e.lhs.name);
    if (e.rhs.is_variable()) out.insert(e.rhs.name);
  }
  return out;
}

void HornClause::collect_constants(std::set<std::string>& out) const {
  if (head) head->collect_constants(out);
  for (const auto& a : body) a.collect_constants(out);
  for (const auto& e : equalities) {
    if (e.lhs.is_constant()) out.insert(e.lhs.name);
    if (e.rhs.is_constant()) out.insert(e.rhs.name);
  }
}

std::string to_string(const HornClause& c) {
  std::ostringstream os;
  if (c.head) os << to_string(*c.head);
  bool have_body = !c.body.empty() || !c.equalities.empty();
  if (have_body) {
    os << (c.head ? " :- " : ":- ");
    bool first = true;
    for (const auto& a : c.body) {
      if (!first) os << ", ";
      first = false;
      os << to_string(a);
    }
    for (const auto& e : c.equalities) {
      if (!first) os << ", ";
      first = false;
      os << e.lhs.name << (e.negated ? " != " : " = ") << e.rhs.name;
    }
  }
  os << '.';
  return os.str();
}

Atom apply(const Substitution& theta, const Atom& a) { return theta.apply(a); }

HornClause apply(const Substitution& theta, const HornClause& c) {
  HornClause out = c;
  if (out.head) *out.head = theta.apply(*out.head);
  for (auto& a : out.body) a = theta.apply(a);
  for (auto& e : out.equalities) {
    e.lhs = theta.apply(e.lhs);
    e.rhs = theta.apply(e.rhs);
  }
  return out;
}

HornClause standardize_apart(const HornClause& c, int& counter) {
  Substitution renaming;
  for (const auto& v : c.variables())
    renaming.bind(v, Term::variable("_V" + std::to_string(counter++)));
  return apply(renaming, c);
}

std::vector<HornClause> ground_instantiate(
    const std::vector<HornClause>& clauses,
    const std::set<std::string>& universe) {
  std::vector<HornClause> out;
  std::set<HornClause> seen;
  std::vector<std::string> consts(universe.begin(), universe.end());
  for (const auto& c : clauses) {
    const std::set<std::string> var_set = c.variables();
    std::vector<std::string> vars(var_set.begin(), var_set.end());
    if (vars.empty()) {
      if (seen.insert(c).second) out.push_back(c);
      continue;
    }
    if (consts.empty())
      throw Error("cannot ground clause over an empty constant universe: " +
                  to_string(c));
    // Odometer over the bindings, lexicographic in the sorted constants.
    std::vector<std::size_t> idx(vars.size(), 0);
    while (true) {
      Substitution theta;
      for (std::size_t i = 0; i < vars.size(); ++i)
        theta.bind(vars[i], Term::constant(consts[idx[i]]));
      HornClause inst = apply(theta, c);
      if (seen.insert(inst).second) out.push_back(inst);
      std::size_t k = vars.size();
      while (k > 0) {
        if (++idx[k - 1] < consts.size()) break;
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  return out;
}

}  // namespace hornrev

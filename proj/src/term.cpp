#include "hornrev/term.hpp"

#include <sstream>

namespace hornrev {

bool Atom::ground() const {
  for (const auto& t : args)
    if (t.is_variable()) return false;
  return true;
}

void Atom::collect_variables(std::set<std::string>& out) const {
  for (const auto& t : args)
    if (t.is_variable()) out.insert(t.name);
}

void Atom::collect_constants(std::set<std::string>& out) const {
  for (const auto& t : args)
    if (t.is_constant()) out.insert(t.name);
}

std::string to_string(const Term& t) { return t.name; }

std::string to_string(const Atom& a) {
  if (a.args.empty()) return a.pred;
  std::ostringstream os;
  os << a.pred << '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) os << ", ";
    os << a.args[i].name;
  }
  os << ')';
  return os.str();
}

bool Substitution::bind(const std::string& var, const Term& value) {
  Term resolved = apply(value);
  if (resolved.is_variable() && resolved.name == var) return true;  // no-op
  map_[var] = resolved;
  // Keep earlier bindings fully resolved so application is idempotent.
  for (auto& [v, t] : map_) {
    if (t.is_variable() && t.name == var) t = resolved;
  }
  return true;
}

std::optional<Term> Substitution::lookup(const std::string& var) const {
  auto it = map_.find(var);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

Term Substitution::apply(const Term& t) const {
  if (t.is_constant()) return t;
  Term cur = t;
  // Bindings are kept resolved, but walk defensively in case of chains.
  for (int guard = 0; guard < 1 + static_cast<int>(map_.size()); ++guard) {
    auto it = map_.find(cur.name);
    if (!cur.is_variable() || it == map_.end()) break;
    cur = it->second;
  }
  return cur;
}

Atom Substitution::apply(const Atom& a) const {
  Atom out = a;
  for (auto& t : out.args) t = apply(t);
  return out;
}

Substitution Substitution::restricted_to(const std::vector<Atom>& atoms) const {
  std::set<std::string> vars;
  for (const auto& a : atoms) a.collect_variables(vars);
  Substitution out;
  for (const auto& [v, t] : map_)
    if (vars.count(v)) out.map_[v] = t;
  return out;
}

std::string to_string(const Substitution& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [v, t] : s.bindings()) {
    if (!first) os << ", ";
    first = false;
    os << v << " -> " << t.name;
  }
  os << '}';
  return os.str();
}

std::optional<Substitution> unify_into(const Atom& a, const Atom& b,
                                       Substitution theta) {
  if (a.pred != b.pred || a.args.size() != b.args.size()) return std::nullopt;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    Term x = theta.apply(a.args[i]);
    Term y = theta.apply(b.args[i]);
    if (x == y) continue;
    if (x.is_variable()) {
      theta.bind(x.name, y);
    } else if (y.is_variable()) {
      theta.bind(y.name, x);
    } else {
      return std::nullopt;  // distinct constants
    }
  }
  return theta;
}

std::optional<Substitution> unify(const Atom& a, const Atom& b) {
  return unify_into(a, b, Substitution{});
}

}  // namespace hornrev

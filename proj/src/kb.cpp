#include "hornrev/kb.hpp"

#include <algorithm>
#include <map>

namespace hornrev {

std::set<std::string> KnowledgeBase::view_predicates() const {
  std::set<std::string> out;
  for (const auto& c : immutable)
    if (c.head) out.insert(c.head->pred);
  return out;
}

std::set<std::string> KnowledgeBase::base_predicates() const {
  std::set<std::string> view = view_predicates();
  std::set<std::string> out;
  auto take = [&](const Atom& a) {
    if (!view.count(a.pred)) out.insert(a.pred);
  };
  for (const auto& c : immutable) {
    if (c.head) take(*c.head);
    for (const auto& a : c.body) take(a);
  }
  for (const auto& c : updatable)
    if (c.head) take(*c.head);
  for (const auto& c : constraints)
    for (const auto& a : c.body) take(a);
  return out;
}

std::set<std::string> KnowledgeBase::constants() const {
  std::set<std::string> out;
  for (const auto& c : immutable) c.collect_constants(out);
  for (const auto& c : updatable) c.collect_constants(out);
  for (const auto& c : constraints) c.collect_constants(out);
  return out;
}

bool KnowledgeBase::has_fact(const Atom& a) const {
  for (const auto& c : updatable)
    if (c.is_fact() && *c.head == a) return true;
  return false;
}

void KnowledgeBase::add_fact(const Atom& a) {
  if (!has_fact(a)) updatable.push_back(HornClause::fact(a));
}

void KnowledgeBase::remove_fact(const Atom& a) {
  std::erase_if(updatable,
                [&](const HornClause& c) { return c.is_fact() && *c.head == a; });
}

namespace {

void check_arities(const KnowledgeBase& kb, std::vector<Violation>& out) {
  std::map<std::string, int> arity;
  auto visit = [&](const Atom& a, const HornClause& c) {
    auto [it, fresh] = arity.emplace(a.pred, a.arity());
    if (!fresh && it->second != a.arity())
      out.push_back({"predicate '" + a.pred + "' used with arities " +
                         std::to_string(it->second) + " and " +
                         std::to_string(a.arity()),
                     to_string(c)});
  };
  auto scan = [&](const std::vector<HornClause>& part) {
    for (const auto& c : part) {
      if (c.head) visit(*c.head, c);
      for (const auto& a : c.body) visit(a, c);
    }
  };
  scan(kb.immutable);
  scan(kb.updatable);
  scan(kb.constraints);
}

}  // namespace

std::vector<Violation> validate(const KnowledgeBase& kb) {
  std::vector<Violation> out;

  for (const auto& c : kb.immutable) {
    if (c.is_denial()) {
      out.push_back({"denial in immutable partition", to_string(c)});
      continue;
    }
    if (c.is_fact())
      out.push_back({"unit clause in immutable partition", to_string(c)});
    if (!c.equalities.empty())
      out.push_back({"equality literal outside a constraint", to_string(c)});
    if (c.is_rule() &&
        std::find(c.body.begin(), c.body.end(), *c.head) != c.body.end())
      out.push_back({"recursive immutable rule", to_string(c)});
  }

  for (const auto& c : kb.updatable) {
    if (!c.is_fact()) {
      out.push_back({"non-fact in updatable partition", to_string(c)});
      continue;
    }
    if (!c.ground())
      out.push_back({"non-ground updatable fact", to_string(c)});
  }

  for (const auto& c : kb.constraints) {
    if (!c.is_denial()) {
      out.push_back({"non-denial in constraints partition", to_string(c)});
      continue;
    }
    if (c.body.empty() && c.equalities.empty())
      out.push_back({"empty constraint", to_string(c)});
    // Equality variables must be bound by a regular body atom.
    std::set<std::string> bound;
    for (const auto& a : c.body) a.collect_variables(bound);
    for (const auto& e : c.equalities) {
      for (const Term* t : {&e.lhs, &e.rhs})
        if (t->is_variable() && !bound.count(t->name))
          out.push_back({"unbound variable '" + t->name +
                             "' in constraint equality",
                         to_string(c)});
    }
  }

  check_arities(kb, out);

  std::set<std::string> view = kb.view_predicates();
  for (const auto& c : kb.updatable)
    if (c.is_fact() && view.count(c.head->pred))
      out.push_back({"fact over view predicate '" + c.head->pred + "'",
                     to_string(c)});

  auto overlap = [&](const std::vector<HornClause>& a,
                     const std::vector<HornClause>& b, const char* names) {
    for (const auto& x : a)
      if (std::find(b.begin(), b.end(), x) != b.end())
        out.push_back({std::string("partitions not disjoint (") + names + ")",
                       to_string(x)});
  };
  overlap(kb.immutable, kb.updatable, "immutable/updatable");
  overlap(kb.updatable, kb.constraints, "updatable/constraints");
  overlap(kb.immutable, kb.constraints, "immutable/constraints");

  return out;
}

std::vector<Atom> ground_base_atoms(const KnowledgeBase& kb,
                                    const std::set<std::string>& extra) {
  std::set<std::string> consts = kb.constants();
  consts.insert(extra.begin(), extra.end());
  std::vector<std::string> cs(consts.begin(), consts.end());

  // Arity per base predicate from any occurrence.
  std::map<std::string, int> arity;
  std::set<std::string> base = kb.base_predicates();
  auto note = [&](const Atom& a) {
    if (base.count(a.pred)) arity.emplace(a.pred, a.arity());
  };
  for (const auto& c : kb.immutable) {
    if (c.head) note(*c.head);
    for (const auto& a : c.body) note(a);
  }
  for (const auto& c : kb.updatable)
    if (c.head) note(*c.head);
  for (const auto& c : kb.constraints)
    for (const auto& a : c.body) note(a);

  std::vector<Atom> out;
  for (const auto& [pred, n] : arity) {
    if (n == 0) {
      out.push_back(Atom{pred, {}});
      continue;
    }
    if (cs.empty()) continue;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      Atom a{pred, {}};
      for (int i = 0; i < n; ++i) a.args.push_back(Term::constant(cs[idx[i]]));
      out.push_back(std::move(a));
      int k = n;
      while (k > 0) {
        if (++idx[k - 1] < cs.size()) break;
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::string> universe_constants(const KnowledgeBase& kb,
                                         const Atom& request) {
  std::set<std::string> out = kb.constants();
  request.collect_constants(out);
  return out;
}

}  // namespace hornrev

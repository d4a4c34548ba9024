#include "hornrev/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hornrev/errors.hpp"

namespace hornrev::oracle {

namespace {

// Self-contained propositional projection of a ground program. The oracle
// keeps its own tiny evaluator instead of calling the engine code paths.
struct FlatProgram {
  std::vector<Atom> atoms;
  std::map<Atom, int> index;
  std::vector<std::pair<std::uint64_t, int>> rules;  // body mask -> head id
  std::vector<std::uint64_t> denials;                // body masks

  int id_of(const Atom& a) {
    auto it = index.find(a);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(atoms.size());
    if (id >= 63) throw BudgetError("oracle atom universe above 63 atoms");
    atoms.push_back(a);
    index.emplace(a, id);
    return id;
  }

  std::uint64_t mask_of(const std::vector<Atom>& body) {
    std::uint64_t m = 0;
    for (const auto& b : body) m |= std::uint64_t{1} << id_of(b);
    return m;
  }

  std::uint64_t close(std::uint64_t facts) const {
    std::uint64_t model = facts;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [body, head] : rules) {
        std::uint64_t bit = std::uint64_t{1} << head;
        if ((model & bit) == 0 && (model & body) == body) {
          model |= bit;
          changed = true;
        }
      }
    }
    return model;
  }

  bool consistent(std::uint64_t model) const {
    for (std::uint64_t d : denials)
      if ((model & d) == d) return false;
    return true;
  }
};

FlatProgram flatten(const KnowledgeBase& kb,
                    const std::set<std::string>& extra_constants) {
  std::set<std::string> consts = kb.constants();
  consts.insert(extra_constants.begin(), extra_constants.end());

  FlatProgram fp;
  for (const auto& r : ground_instantiate(kb.immutable, consts))
    fp.rules.emplace_back(fp.mask_of(r.body), fp.id_of(*r.head));
  for (const auto& d : ground_instantiate(kb.constraints, consts)) {
    bool eq_ok = true;
    for (const auto& e : d.equalities) {
      bool equal = e.lhs == e.rhs;
      if (e.negated ? equal : !equal) {
        eq_ok = false;
        break;
      }
    }
    if (eq_ok) fp.denials.push_back(fp.mask_of(d.body));
  }
  return fp;
}

std::uint64_t facts_mask(FlatProgram& fp, const KnowledgeBase& kb) {
  std::uint64_t m = 0;
  for (const auto& c : kb.updatable)
    if (c.is_fact()) m |= std::uint64_t{1} << fp.id_of(*c.head);
  return m;
}

std::vector<std::uint64_t> subsets_by_size(std::size_t n) {
  std::vector<std::uint64_t> masks;
  masks.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) {
                     return __builtin_popcountll(a) < __builtin_popcountll(b);
                   });
  return masks;
}

}  // namespace

KernelSet brute_kernels(const KnowledgeBase& kb, const HornClause& alpha) {
  if (!alpha.ground() || (!alpha.is_fact() && !alpha.is_denial()))
    throw Error("oracle kernels need a ground fact or ground denial");

  std::set<std::string> consts = kb.constants();
  alpha.collect_constants(consts);
  std::vector<HornClause> space = ground_instantiate(kb.immutable, consts);
  for (const auto& f : kb.updatable) space.push_back(f);
  if (space.size() > 20)
    throw BudgetError("oracle kernels limited to 20 ground clauses");

  std::vector<HornClause> yardstick = ground_instantiate(kb.constraints, consts);
  if (alpha.is_denial()) yardstick.push_back(alpha);

  // Local closure over explicit clause lists, separate from the engines.
  auto derives_all = [&](const std::vector<HornClause>& rules,
                         std::set<Atom> model) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& r : rules) {
        if (model.count(*r.head)) continue;
        bool fire = true;
        for (const auto& b : r.body)
          if (!model.count(b)) {
            fire = false;
            break;
          }
        if (fire) {
          model.insert(*r.head);
          changed = true;
        }
      }
    }
    return model;
  };

  auto inconsistent = [&](std::uint64_t mask) {
    std::vector<HornClause> rules;
    std::set<Atom> facts;
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      if (space[i].is_fact())
        facts.insert(*space[i].head);
      else
        rules.push_back(space[i]);
    }
    if (alpha.is_fact()) facts.insert(*alpha.head);
    std::set<Atom> model = derives_all(rules, facts);
    for (const auto& d : yardstick) {
      bool eq_ok = true;
      for (const auto& e : d.equalities) {
        bool equal = e.lhs == e.rhs;
        if (e.negated ? equal : !equal) {
          eq_ok = false;
          break;
        }
      }
      if (!eq_ok) continue;
      bool all = true;
      for (const auto& b : d.body)
        if (!model.count(b)) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  };

  KernelSet out;
  out.alpha = alpha;
  std::vector<std::uint64_t> found;
  for (std::uint64_t mask : subsets_by_size(space.size())) {
    bool dominated = false;
    for (std::uint64_t f : found)
      if ((f & mask) == f) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    if (!inconsistent(mask)) continue;
    found.push_back(mask);
    std::set<HornClause> member;
    for (std::size_t i = 0; i < space.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) member.insert(space[i]);
    out.members.push_back(std::move(member));
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::vector<Transaction> brute_transactions(const KnowledgeBase& kb,
                                            const Atom& target,
                                            int max_changes) {
  if (!target.ground()) throw Error("oracle target must be ground");
  std::set<std::string> extra;
  target.collect_constants(extra);

  FlatProgram fp = flatten(kb, extra);
  std::uint64_t stored = facts_mask(fp, kb);
  int target_id = fp.id_of(target);

  std::vector<Atom> universe = ground_base_atoms(kb, extra);
  std::vector<int> insertable, deletable;
  for (const auto& a : universe) {
    int id = fp.id_of(a);
    if (stored & (std::uint64_t{1} << id))
      deletable.push_back(id);
    else
      insertable.push_back(id);
  }

  // Rough enumeration count guard.
  double count = 0, c = 1;
  for (int k = 0; k <= max_changes; ++k) {
    count += c;
    c = c * (insertable.size() + deletable.size()) / (k + 1);
  }
  if (count > 4194304.0)
    throw BudgetError("oracle transaction enumeration too large");

  std::vector<Transaction> accepted;
  auto test = [&](std::uint64_t ins_mask, std::uint64_t del_mask) {
    std::uint64_t facts = (stored & ~del_mask) | ins_mask;
    std::uint64_t model = fp.close(facts);
    if (!(model & (std::uint64_t{1} << target_id))) return;
    if (!fp.consistent(model)) return;
    Transaction t;
    for (int id : insertable)
      if (ins_mask & (std::uint64_t{1} << id)) t.insertions.insert(fp.atoms[id]);
    for (int id : deletable)
      if (del_mask & (std::uint64_t{1} << id)) t.deletions.insert(fp.atoms[id]);
    accepted.push_back(std::move(t));
  };

  // Choose up to max_changes ids across the two pools.
  std::vector<int> pool = insertable;
  pool.insert(pool.end(), deletable.begin(), deletable.end());
  std::vector<int> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    std::uint64_t ins = 0, del = 0;
    for (int id : chosen) {
      std::uint64_t bit = std::uint64_t{1} << id;
      if (stored & bit)
        del |= bit;
      else
        ins |= bit;
    }
    test(ins, del);
    if (static_cast<int>(chosen.size()) == max_changes) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);

  // Componentwise-minimal survivors, deterministically ordered.
  std::sort(accepted.begin(), accepted.end());
  accepted.erase(std::unique(accepted.begin(), accepted.end()),
                 accepted.end());
  std::vector<Transaction> minimal;
  for (const auto& t : accepted) {
    bool dominated = false;
    for (const auto& o : accepted)
      if (!(o == t) && transaction_leq(o, t)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(t);
  }
  std::stable_sort(minimal.begin(), minimal.end(),
                   [](const Transaction& a, const Transaction& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return to_string(a) < to_string(b);
                   });
  return minimal;
}

BruteExplanations brute_explanations(const KnowledgeBase& kb,
                                     const Atom& target) {
  if (!target.ground()) throw Error("oracle target must be ground");
  if (!kb.view_predicates().count(target.pred))
    throw Error("oracle explanations expect a view atom");
  std::set<std::string> extra;
  target.collect_constants(extra);

  FlatProgram fp = flatten(kb, extra);
  int target_id = fp.id_of(target);
  std::vector<Atom> universe = ground_base_atoms(kb, extra);
  if (universe.size() > 16)
    throw BudgetError("oracle explanations limited to 16 base atoms");

  std::vector<int> ids;
  for (const auto& a : universe) ids.push_back(fp.id_of(a));

  BruteExplanations out;
  out.minimal.target = target;
  out.minimal.tag = FamilyTag::Minimal;
  out.locally_minimal.target = target;
  out.locally_minimal.tag = FamilyTag::LocallyMinimal;

  // Minimal explanations: subset-minimal fact sets deriving the target.
  std::vector<std::uint64_t> found;
  for (std::uint64_t mask : subsets_by_size(ids.size())) {
    bool dominated = false;
    for (std::uint64_t f : found)
      if ((f & mask) == f) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    std::uint64_t facts = 0;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) facts |= std::uint64_t{1} << ids[i];
    if (!(fp.close(facts) & (std::uint64_t{1} << target_id))) continue;
    found.push_back(mask);
    Explanation e;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) e.delta_plus.insert(fp.atoms[ids[i]]);
    out.minimal.items.push_back(std::move(e));
  }

  // Locally minimal: fact parts of subset-minimal supports (rules + facts).
  if (fp.rules.size() + ids.size() > 20)
    throw BudgetError("oracle support enumeration above 20 clauses");
  const std::size_t nr = fp.rules.size();
  const std::size_t total = nr + ids.size();
  std::set<std::set<Atom>> fact_parts;
  std::vector<std::uint64_t> min_supports;
  for (std::uint64_t mask : subsets_by_size(total)) {
    bool dominated = false;
    for (std::uint64_t f : min_supports)
      if ((f & mask) == f) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    std::uint64_t facts = 0;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (mask & (std::uint64_t{1} << (nr + i)))
        facts |= std::uint64_t{1} << ids[i];
    // Closure restricted to the chosen rules.
    std::uint64_t model = facts;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t r = 0; r < nr; ++r) {
        if (!(mask & (std::uint64_t{1} << r))) continue;
        auto [body, head] = fp.rules[r];
        std::uint64_t bit = std::uint64_t{1} << head;
        if ((model & bit) == 0 && (model & body) == body) {
          model |= bit;
          changed = true;
        }
      }
    }
    if (!(model & (std::uint64_t{1} << target_id))) continue;
    min_supports.push_back(mask);
    std::set<Atom> part;
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (mask & (std::uint64_t{1} << (nr + i))) part.insert(fp.atoms[ids[i]]);
    fact_parts.insert(std::move(part));
  }
  for (const auto& part : fact_parts)
    out.locally_minimal.items.push_back(Explanation{part, {}, {}});

  std::sort(out.minimal.items.begin(), out.minimal.items.end());
  std::sort(out.locally_minimal.items.begin(), out.locally_minimal.items.end());
  return out;
}

}  // namespace hornrev::oracle

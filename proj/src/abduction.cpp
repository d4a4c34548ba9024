#include "hornrev/abduction.hpp"

#include <algorithm>
#include <map>

#include "hornrev/errors.hpp"

namespace hornrev {

namespace {

std::vector<std::uint64_t> masks_by_popcount(std::size_t n) {
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

bool ExplanationFamily::contains_plus(const std::set<Atom>& dp) const {
  return std::any_of(items.begin(), items.end(),
                     [&](const Explanation& e) { return e.delta_plus == dp; });
}

ExplanationFamily minimal_explanations(const KnowledgeBase& kb,
                                       const Atom& target,
                                       const Budget& budget) {
  if (!target.ground()) throw Error("explanation target must be ground");

  std::set<std::string> extra;
  target.collect_constants(extra);
  auto g = detail::ground_kb(kb, extra);
  std::vector<Atom> universe = ground_base_atoms(kb, extra);
  // When the requested atom is outside the known vocabulary it is its own
  // only candidate.
  if (!std::binary_search(universe.begin(), universe.end(), target)) {
    std::set<std::string> view;
    for (const auto& r : g.rules)
      if (r.head) view.insert(r.head->pred);
    if (!view.count(target.pred)) universe.push_back(target);
  }

  const std::size_t n = universe.size();
  if (n > static_cast<std::size_t>(budget.max_subset_bits()))
    throw BudgetError("explanation enumeration over " + std::to_string(n) +
                      " base atoms exceeds the subset budget");

  ExplanationFamily family;
  family.target = target;
  family.tag = FamilyTag::Minimal;

  std::vector<std::uint64_t> found;
  for (std::uint64_t mask : masks_by_popcount(n)) {
    bool dominated = false;
    for (std::uint64_t f : found)
      if ((f & mask) == f) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    std::set<Atom> delta;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) delta.insert(universe[i]);
    if (!detail::closure_of(g.rules, delta).count(target)) continue;
    found.push_back(mask);
    family.items.push_back(Explanation{std::move(delta), {}, {}});
  }
  std::sort(family.items.begin(), family.items.end());
  return family;
}

bool locally_minimal(const KnowledgeBase& kb, const Atom& target,
                     const std::set<Atom>& delta, const Budget& budget) {
  std::set<std::string> extra;
  target.collect_constants(extra);
  for (const auto& a : delta) a.collect_constants(extra);
  auto g = detail::ground_kb(kb, extra);

  std::set<Atom> reach = detail::closure_of(g.rules, delta);
  if (!reach.count(target)) return false;

  // Restrict to rules usable in any derivation from delta.
  std::vector<HornClause> relevant;
  for (const auto& r : g.rules) {
    if (!r.head || !reach.count(*r.head)) continue;
    bool ok = true;
    for (const auto& b : r.body)
      if (!reach.count(b)) {
        ok = false;
        break;
      }
    if (ok) relevant.push_back(r);
  }

  std::vector<HornClause> space = relevant;
  for (const auto& a : delta) space.push_back(HornClause::fact(a));
  const std::size_t n = space.size();
  if (n > static_cast<std::size_t>(budget.max_subset_bits()))
    throw BudgetError("local-minimality check over " + std::to_string(n) +
                      " clauses exceeds the subset budget");

  auto derives_target = [&](std::uint64_t mask) {
    std::vector<HornClause> rules;
    std::set<Atom> facts;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      if (space[i].is_fact())
        facts.insert(*space[i].head);
      else
        rules.push_back(space[i]);
    }
    return detail::closure_of(rules, facts).count(target) > 0;
  };

  // Minimal supports in increasing size; delta qualifies when some minimal
  // support uses exactly delta as its fact part.
  std::vector<std::uint64_t> found;
  for (std::uint64_t mask : masks_by_popcount(n)) {
    bool dominated = false;
    for (std::uint64_t f : found)
      if ((f & mask) == f) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    if (!derives_target(mask)) continue;
    found.push_back(mask);
    std::set<Atom> fact_part;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask & (std::uint64_t{1} << i)) && space[i].is_fact())
        fact_part.insert(*space[i].head);
    if (fact_part == delta) return true;
  }
  return false;
}

ExplanationFamily locally_minimal_filter(const ExplanationFamily& family,
                                         const KnowledgeBase& kb,
                                         const Budget& budget) {
  ExplanationFamily out;
  out.target = family.target;
  out.tag = FamilyTag::LocallyMinimal;
  for (const auto& e : family.items)
    if (locally_minimal(kb, family.target, e.delta_plus, budget))
      out.items.push_back(e);
  return out;
}

bool support_repairable(const detail::GroundKb& g,
                        const std::set<Atom>& support) {
  // Deleting every stored fact outside the support is the most permissive
  // repair; if even that violates a constraint, nothing can.
  return g.model_satisfies_denials(detail::closure_of(g.rules, support));
}

std::vector<std::set<Atom>> minimal_repair_deletions(
    const detail::GroundKb& g, const std::set<Atom>& support,
    const Budget& budget) {
  std::vector<Atom> deletable;
  for (const auto& f : g.facts)
    if (!support.count(f)) deletable.push_back(f);

  const std::size_t n = deletable.size();
  if (n > static_cast<std::size_t>(budget.max_subset_bits()))
    throw BudgetError("repair enumeration over " + std::to_string(n) +
                      " stored facts exceeds the subset budget");

  auto consistent_after = [&](std::uint64_t del_mask) {
    std::set<Atom> facts = support;
    for (std::size_t i = 0; i < n; ++i)
      if (!(del_mask & (std::uint64_t{1} << i))) facts.insert(deletable[i]);
    return g.model_satisfies_denials(detail::closure_of(g.rules, facts));
  };

  std::vector<std::set<Atom>> out;
  std::vector<std::uint64_t> found;
  for (std::uint64_t mask : masks_by_popcount(n)) {
    bool dominated = false;
    for (std::uint64_t f : found)
      if ((f & mask) == f) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    if (!consistent_after(mask)) continue;
    found.push_back(mask);
    std::set<Atom> d;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) d.insert(deletable[i]);
    out.push_back(std::move(d));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TreeExplanations tree_explanations(const SLDTree& tree,
                                   const KnowledgeBase& kb, TreeVariant variant,
                                   const Budget& budget) {
  if (tree.has_cutoff())
    throw CycleError(
        "tree has cut-off branches; explanations need an acyclic program");
  if (tree.root_goal.size() != 1)
    throw Error("tree explanations expect a single-atom root goal");
  const Atom target = tree.root_goal.front();

  std::set<std::string> extra;
  target.collect_constants(extra);
  auto g = detail::ground_kb(kb, extra);

  TreeExplanations out;
  out.variant = variant;

  // Branch supports; hard-stuck branches carry no complete derivation.
  std::map<std::set<Atom>, std::vector<int>> support_branches;
  for (const auto& b : tree.branches) {
    if (b.stuck_view) continue;
    const bool viable = support_repairable(g, b.support());
    if (viable) out.viable_branches.push_back(b.id);

    if (variant == TreeVariant::Algorithm3) {
      if (b.status == BranchStatus::Success && viable)
        out.success_delta.insert(b.facts_used.begin(), b.facts_used.end());
      if (b.status == BranchStatus::Failure)
        out.failure_delta.insert(b.missing.begin(), b.missing.end());
      if (!viable) continue;  // constraint check runs before collection
    } else {
      auto s = b.support();
      out.success_delta.insert(s.begin(), s.end());
    }
    support_branches[b.support()].push_back(b.id);
  }
  if (variant == TreeVariant::Algorithm4) {
    for (const auto& a : out.success_delta)
      if (g.facts.count(a)) out.failure_delta.insert(a);
    // Collection ran first; the constraint filter prunes the family now.
    for (auto it = support_branches.begin(); it != support_branches.end();)
      it = support_repairable(g, it->first) ? std::next(it)
                                            : support_branches.erase(it);
  }

  ExplanationFamily family;
  family.target = target;
  family.tag = FamilyTag::DdbClosedLocallyMinimal;
  for (const auto& [support, ids] : support_branches) {
    if (!locally_minimal(kb, target, support, budget)) continue;
    auto repairs = minimal_repair_deletions(g, support, budget);
    for (auto& d : repairs) {
      Explanation e;
      e.delta_plus = support;
      e.delta_minus = std::move(d);
      e.branches = ids;
      family.items.push_back(std::move(e));
    }
  }
  std::sort(family.items.begin(), family.items.end());
  out.family = std::move(family);
  return out;
}

}  // namespace hornrev

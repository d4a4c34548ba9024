#include "hornrev/kernels.hpp"

#include <algorithm>

#include "hornrev/errors.hpp"
#include "hornrev/hitting.hpp"

namespace hornrev {

namespace {

std::vector<std::string> sorted_texts(const std::set<HornClause>& s) {
  std::vector<std::string> out;
  for (const auto& c : s) out.push_back(to_string(c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::set<HornClause> KernelSet::updatable_projection(
    const std::set<HornClause>& m, const KnowledgeBase& kb) const {
  std::set<HornClause> out;
  for (const auto& c : m)
    if (std::find(kb.updatable.begin(), kb.updatable.end(), c) !=
        kb.updatable.end())
      out.insert(c);
  return out;
}

std::set<HornClause> KernelSet::immutable_projection(
    const std::set<HornClause>& m, const KnowledgeBase& kb) const {
  std::set<HornClause> out;
  for (const auto& c : m) {
    if (c.is_fact()) continue;
    out.insert(c);
  }
  return out;
}

bool alpha_consistent_with_core(const KnowledgeBase& kb,
                                const HornClause& alpha) {
  std::vector<HornClause> soup = kb.immutable;
  soup.insert(soup.end(), kb.constraints.begin(), kb.constraints.end());
  soup.push_back(alpha);
  return clauses_consistent(soup);
}

KernelSet kernel_sets(const KnowledgeBase& kb, const HornClause& alpha,
                      const Budget& budget) {
  if (!alpha.ground() || (!alpha.is_fact() && !alpha.is_denial()))
    throw Error("kernel computation needs a ground fact or ground denial");

  std::set<std::string> universe = kb.constants();
  alpha.collect_constants(universe);

  // Enumeration space: ground rule instances plus the stored facts. The
  // constraints stay on the side as the yardstick of inconsistency.
  std::vector<HornClause> space = ground_instantiate(kb.immutable, universe);
  for (const auto& f : kb.updatable) space.push_back(f);

  std::vector<HornClause> yardstick =
      ground_instantiate(kb.constraints, universe);
  if (alpha.is_denial()) yardstick.push_back(alpha);

  const std::size_t n = space.size();
  if (n > static_cast<std::size_t>(budget.max_subset_bits()))
    throw BudgetError("kernel enumeration over " + std::to_string(n) +
                      " ground clauses exceeds the subset budget");

  auto inconsistent = [&](std::uint64_t mask) {
    std::vector<HornClause> rules;
    std::set<Atom> facts;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      if (space[i].is_fact())
        facts.insert(*space[i].head);
      else
        rules.push_back(space[i]);
    }
    if (alpha.is_fact()) facts.insert(*alpha.head);
    std::set<Atom> model = detail::closure_of(rules, facts);
    for (const auto& d : yardstick)
      if (detail::denial_violated(d, model)) return true;
    return false;
  };

  KernelSet out;
  out.alpha = alpha;

  // The whole KB staying consistent with alpha means no subset can clash.
  if (!inconsistent((n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1)))
    return out;

  std::vector<std::uint64_t> masks;
  masks.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) {
                     return __builtin_popcountll(a) < __builtin_popcountll(b);
                   });

  std::vector<std::uint64_t> found;
  for (std::uint64_t mask : masks) {
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
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) member.insert(space[i]);
    out.members.push_back(std::move(member));
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::vector<HittingSet> minimal_hitting_sets(
    const KernelSet& kernel, const std::vector<HornClause>& updatable) {
  std::vector<std::set<HornClause>> projections;
  for (const auto& m : kernel.members) {
    std::set<HornClause> proj;
    for (const auto& c : m)
      if (std::find(updatable.begin(), updatable.end(), c) != updatable.end())
        proj.insert(c);
    if (!proj.empty()) projections.push_back(std::move(proj));
  }
  auto sets = minimal_hitting_sets_of(projections);
  std::sort(sets.begin(), sets.end(),
            [](const std::set<HornClause>& a, const std::set<HornClause>& b) {
              return sorted_texts(a) < sorted_texts(b);
            });
  std::vector<HittingSet> out;
  for (auto& s : sets) out.push_back(HittingSet{std::move(s)});
  return out;
}

HittingSet incision(const KernelSet& kernel, const KnowledgeBase& kb,
                    IncisionStrategy strategy) {
  if (strategy == IncisionStrategy::Maximal) {
    HittingSet h;
    for (const auto& m : kernel.members)
      for (const auto& c : kernel.updatable_projection(m, kb))
        h.elements.insert(c);
    return h;
  }
  auto sets = minimal_hitting_sets(kernel, kb.updatable);
  if (sets.empty()) return {};
  if (strategy == IncisionStrategy::MinimalLexicographic) return sets.front();
  // Minimal cardinality, lexicographic tie-break (sets are lex-sorted).
  const HittingSet* best = &sets.front();
  for (const auto& s : sets)
    if (s.elements.size() < best->elements.size()) best = &s;
  return *best;
}

KnowledgeBase kernel_revision(const KnowledgeBase& kb, const HornClause& alpha,
                              IncisionStrategy strategy, const Budget& budget) {
  if (!alpha_consistent_with_core(kb, alpha)) return kb;

  KernelSet kernel = kernel_sets(kb, alpha, budget);
  HittingSet cut = incision(kernel, kb, strategy);

  KnowledgeBase out = kb;
  std::erase_if(out.updatable, [&](const HornClause& c) {
    return cut.elements.count(c) > 0;
  });
  if (alpha.is_fact()) {
    if (std::find(out.updatable.begin(), out.updatable.end(), alpha) ==
        out.updatable.end())
      out.updatable.push_back(alpha);
  } else {
    if (std::find(out.constraints.begin(), out.constraints.end(), alpha) ==
        out.constraints.end())
      out.constraints.push_back(alpha);
  }
  return out;
}

}  // namespace hornrev

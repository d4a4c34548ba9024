#ifndef HORNREV_KERNELS_HPP
#define HORNREV_KERNELS_HPP

#include <set>
#include <vector>

#include "hornrev/budget.hpp"
#include "hornrev/inference.hpp"
#include "hornrev/kb.hpp"

namespace hornrev {

// The family of minimal KB-subsets (over the ground instantiation of rules
// plus the updatable facts) that become inconsistent together with alpha,
// judged against the KB's denial constraints.
struct KernelSet {
  HornClause alpha;
  std::vector<std::set<HornClause>> members;  // full members, ground

  std::set<HornClause> updatable_projection(const std::set<HornClause>& m,
                                            const KnowledgeBase& kb) const;
  std::set<HornClause> immutable_projection(const std::set<HornClause>& m,
                                            const KnowledgeBase& kb) const;
};

// alpha must be a ground fact or ground denial. Throws BudgetError when the
// ground clause universe is too large to enumerate.
KernelSet kernel_sets(const KnowledgeBase& kb, const HornClause& alpha,
                      const Budget& budget = {});

struct HittingSet {
  std::set<HornClause> elements;
};

// All subset-minimal hitting sets drawn from the updatable clauses: subsets
// of the member union, disjoint from the immutable part, meeting every
// member that has updatable content. Sorted by serialized clause text.
std::vector<HittingSet> minimal_hitting_sets(
    const KernelSet& kernel, const std::vector<HornClause>& updatable);

enum class IncisionStrategy {
  MinimalLexicographic,  // first minimal hitting set in lexicographic order
  MinimalCardinality,    // smallest, ties broken lexicographically
  Maximal                // all updatable clauses in the member union
};

HittingSet incision(const KernelSet& kernel, const KnowledgeBase& kb,
                    IncisionStrategy strategy);

// Def-style kernel revision: when alpha is inconsistent with the rules and
// constraints alone the KB is returned unchanged; otherwise the incision is
// removed from the updatable part and alpha is added (facts join the
// updatable partition, denials the constraints).
KnowledgeBase kernel_revision(
    const KnowledgeBase& kb, const HornClause& alpha,
    IncisionStrategy strategy = IncisionStrategy::MinimalLexicographic,
    const Budget& budget = {});

// True when alpha on its own is compatible with the immutable rules and
// constraints (no fact support beyond alpha itself).
bool alpha_consistent_with_core(const KnowledgeBase& kb,
                                const HornClause& alpha);

}  // namespace hornrev

#endif

#ifndef HORNREV_ABDUCTION_HPP
#define HORNREV_ABDUCTION_HPP

#include <set>
#include <vector>

#include "hornrev/budget.hpp"
#include "hornrev/inference.hpp"
#include "hornrev/kb.hpp"
#include "hornrev/sld.hpp"

namespace hornrev {

// One way to account for the target: the base facts that must hold
// (delta_plus) and, once completed against the constraints, the stored facts
// that must go (delta_minus).
struct Explanation {
  std::set<Atom> delta_plus;
  std::set<Atom> delta_minus;
  std::vector<int> branches;  // provenance: branch ids in the source tree

  auto operator<=>(const Explanation&) const = default;
};

enum class FamilyTag { Raw, Minimal, LocallyMinimal, DdbClosedLocallyMinimal };

struct ExplanationFamily {
  Atom target;
  std::vector<Explanation> items;
  FamilyTag tag = FamilyTag::Raw;

  bool contains_plus(const std::set<Atom>& dp) const;
};

// All subset-minimal sets of ground base atoms whose addition to the ground
// rules derives the target. Brute-force subset enumeration over the base
// atom universe; delta_minus stays empty. Throws BudgetError beyond budget.
ExplanationFamily minimal_explanations(const KnowledgeBase& kb,
                                       const Atom& target,
                                       const Budget& budget = {});

// A set of base atoms is locally minimal for the target when it is exactly
// the fact part of some subset-minimal ground support (rules + facts) that
// derives the target.
bool locally_minimal(const KnowledgeBase& kb, const Atom& target,
                     const std::set<Atom>& delta, const Budget& budget = {});

// Keeps exactly the locally minimal members (delta_plus-wise).
ExplanationFamily locally_minimal_filter(const ExplanationFamily& family,
                                         const KnowledgeBase& kb,
                                         const Budget& budget = {});

enum class TreeVariant { Algorithm3, Algorithm4 };

// Explanations extracted from a complete SLD tree. The two variants differ
// in when the constraint filter runs and in the aggregate sets they report;
// their final families coincide.
//   Algorithm3: drops constraint-incompatible branches first.
//     success_delta = union of facts used on surviving success branches,
//     failure_delta = union of missing atoms over failure branches.
//   Algorithm4: collects from every branch first.
//     success_delta = union of full branch supports,
//     failure_delta = its stored-fact part.
struct TreeExplanations {
  ExplanationFamily family;  // ddb-closed locally minimal, repair-completed
  std::set<Atom> success_delta;
  std::set<Atom> failure_delta;
  std::vector<int> viable_branches;  // ids compatible with the constraints
  TreeVariant variant = TreeVariant::Algorithm3;
};

// Throws CycleError when the tree has cut-off branches.
TreeExplanations tree_explanations(const SLDTree& tree,
                                   const KnowledgeBase& kb, TreeVariant variant,
                                   const Budget& budget = {});

// True when the support set can coexist with the constraints after deleting
// some stored facts outside the support.
bool support_repairable(const detail::GroundKb& g,
                        const std::set<Atom>& support);

// All minimal deletion sets (within stored facts, never touching the support
// itself) that make the grounded KB plus `support` satisfy every constraint.
std::vector<std::set<Atom>> minimal_repair_deletions(
    const detail::GroundKb& g, const std::set<Atom>& support,
    const Budget& budget = {});

}  // namespace hornrev

#endif

#ifndef HORNREV_SLD_HPP
#define HORNREV_SLD_HPP

#include <optional>
#include <string>
#include <vector>

#include "hornrev/inference.hpp"
#include "hornrev/kb.hpp"

namespace hornrev {

enum class BranchStatus { Success, Failure, CutOff };

// One root-to-leaf path of the tree. Resolution runs against the ground
// instantiation with leftmost selection and source clause order. A selected
// base atom with no matching fact does not kill the branch: it is recorded
// in `missing` and resolution continues, so a failure branch carries the
// complete set of base facts its derivation would need. A branch dies hard
// (empty `stuck_view`-marked goal remainder) only on a view atom with no
// matching rule.
struct Branch {
  int id = 0;
  BranchStatus status = BranchStatus::Failure;
  std::vector<HornClause> input_clauses;  // rules and facts, in use order
  Substitution answer;                    // root-variable bindings (success)
  std::set<Atom> facts_used;              // updatable facts resolved against
  std::set<Atom> missing;                 // hypothesized absent base atoms
  std::vector<Atom> failure_goal;         // goal at the first failure point
  std::optional<Atom> stuck_view;         // view atom with no clauses, if any

  // Base facts the branch's derivation rests on: used plus missing.
  std::set<Atom> support() const;
};

struct SLDNode {
  std::vector<Atom> goal;
  int parent = -1;
  std::optional<HornClause> via_clause;  // resolution step that produced this
  std::optional<Atom> hypothesized;      // set when the step assumed an atom
  std::vector<int> children;
  int branch_id = -1;  // leaf nodes only
};

struct SLDTree {
  std::vector<Atom> root_goal;
  std::vector<Branch> branches;
  std::vector<SLDNode> nodes;  // nodes[0] is the root
  int depth_bound = 0;

  bool has_cutoff() const;
  std::vector<const Branch*> successes() const;
  std::vector<const Branch*> failures() const;
};

// Complete SLD tree for <- goal. depth_bound <= 0 selects the default of
// 2 * |ground atom universe| + 1.
SLDTree sld_tree(const KnowledgeBase& kb, const Atom& goal,
                 int depth_bound = 0);

// Internal variant running over an already-grounded KB.
SLDTree sld_tree(const detail::GroundKb& g, const Atom& goal, int depth_bound);

// Indented plain-text rendering of the whole tree.
std::string render_tree(const SLDTree& tree);

}  // namespace hornrev

#endif

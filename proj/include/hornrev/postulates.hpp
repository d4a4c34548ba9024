#ifndef HORNREV_POSTULATES_HPP
#define HORNREV_POSTULATES_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hornrev/budget.hpp"
#include "hornrev/kb.hpp"

namespace hornrev {

enum class Verdict { Pass, Fail, NotApplicable };

struct PostulateResult {
  std::string name;
  Verdict verdict = Verdict::NotApplicable;
  std::string witness;  // machine-checkable counterexample description
};

struct PostulateReport {
  std::vector<PostulateResult> results;

  const PostulateResult* find(const std::string& name) const;
  bool all_pass(const std::vector<std::string>& names) const;
  std::string table() const;  // human-readable
};

// Revision operator handle used for the preservation check.
using RevisionOp =
    std::function<KnowledgeBase(const KnowledgeBase&, const HornClause&)>;

// Evaluates the rationality postulates on a (before, alpha, after) triple.
// alpha is a ground fact or ground denial. Two interpretations are used:
// when alpha is storable (base fact or denial) the set-level definitions
// apply; when alpha is a view atom the checks run at derivability level and
// additions are licensed from the ground base-atom universe. The
// preservation postulate needs `op` to revise by equivalent requests and is
// NotApplicable without it.
PostulateReport check_postulates(const KnowledgeBase& kb_before,
                                 const HornClause& alpha,
                                 const KnowledgeBase& kb_after,
                                 const RevisionOp& op = nullptr,
                                 const Budget& budget = {});

// True when the rules derive alpha and beta under exactly the same fact sets
// E drawn from the universe (exhaustive over its subsets).
bool kb_equivalent(const KnowledgeBase& kb, const Atom& alpha,
                   const Atom& beta, const std::vector<Atom>& universe,
                   const Budget& budget = {});

// A propositional interpretation over a declared atom universe.
struct Interpretation {
  std::set<Atom> true_atoms;
  auto operator<=>(const Interpretation&) const = default;
};

using Preorder =
    std::function<bool(const Interpretation&, const Interpretation&)>;

// Verifies that the preorder is total and faithful to psi over the universe
// (no strict order inside Mod(psi); psi-models strictly below non-models)
// and that revised_models equals the minimal phi-models. Throws Error when
// the preorder is not total.
bool pmc_check(const std::vector<HornClause>& psi,
               const std::vector<HornClause>& phi,
               const std::vector<Atom>& universe, const Preorder& leq,
               const std::set<Interpretation>& revised_models);

// Classical satisfaction of ground clauses by an interpretation.
bool satisfies(const Interpretation& interp, const HornClause& clause);
std::set<Interpretation> models_of(const std::vector<HornClause>& clauses,
                                   const std::vector<Atom>& universe);

// Symmetric-difference distance preorder centered on Mod(psi); a faithful
// total preorder whenever psi is satisfiable (test utility).
Preorder dalal_preorder(const std::vector<HornClause>& psi,
                        const std::vector<Atom>& universe);

}  // namespace hornrev

#endif

#ifndef HORNREV_ORACLE_HPP
#define HORNREV_ORACLE_HPP

#include <set>
#include <vector>

#include "hornrev/abduction.hpp"
#include "hornrev/kb.hpp"
#include "hornrev/kernels.hpp"
#include "hornrev/revision.hpp"

namespace hornrev::oracle {

// Reference implementations by plain enumeration. Deliberately naive and
// independent of the engine code paths; used to pin expected values and to
// cross-check the engines on randomized instances.

// Ground truth for kernel_sets. Requires at most 20 ground clauses.
KernelSet brute_kernels(const KnowledgeBase& kb, const HornClause& alpha);

// All componentwise-minimal transactions with at most max_changes changes
// that make the target derivable and the constraints satisfied. The
// base-atom universe must stay small enough to enumerate (checked).
std::vector<Transaction> brute_transactions(const KnowledgeBase& kb,
                                            const Atom& target,
                                            int max_changes);

struct BruteExplanations {
  ExplanationFamily minimal;          // subset-minimal explanations
  ExplanationFamily locally_minimal;  // fact parts of minimal supports
};

// Requires a base-atom universe of at most 16 atoms and at most 20 ground
// rules; target must be a view atom.
BruteExplanations brute_explanations(const KnowledgeBase& kb,
                                     const Atom& target);

}  // namespace hornrev::oracle

#endif

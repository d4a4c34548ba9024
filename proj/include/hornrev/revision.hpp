#ifndef HORNREV_REVISION_HPP
#define HORNREV_REVISION_HPP

#include <functional>
#include <set>
#include <vector>

#include "hornrev/abduction.hpp"
#include "hornrev/budget.hpp"
#include "hornrev/inference.hpp"
#include "hornrev/kb.hpp"
#include "hornrev/kernels.hpp"

namespace hornrev {

// Insertions and deletions of ground base facts realizing an update.
struct Transaction {
  std::set<Atom> insertions;
  std::set<Atom> deletions;

  std::size_t size() const { return insertions.size() + deletions.size(); }
  bool empty() const { return insertions.empty() && deletions.empty(); }
  auto operator<=>(const Transaction&) const = default;
};

std::string to_string(const Transaction& t);

KnowledgeBase apply_transaction(const KnowledgeBase& kb, const Transaction& t);

// T dominates T' when its insertions and deletions are componentwise subsets.
bool transaction_leq(const Transaction& a, const Transaction& b);

enum class RevisionAlgorithm { Generalized, PartialMeet, AcyclicGeneralized, Kernel };
enum class RevisionStatus {
  Ok,        // transaction applied, result consistent and successful
  Vacuity,   // request incompatible with rules + constraints; KB unchanged
  NoRepair   // no transaction over the base universe restores the request
};

struct RevisionResult {
  KnowledgeBase kb_after;
  Transaction transaction;                 // deterministic default choice
  std::vector<Transaction> alternatives;   // remaining minimal solutions
  RevisionAlgorithm algorithm = RevisionAlgorithm::Generalized;
  RevisionStatus status = RevisionStatus::Ok;
  ViolationSet residual;                   // for NoRepair diagnostics

  std::vector<Transaction> all_transactions() const;
};

// Adds a ground base fact with no consistency check. Throws Error when the
// predicate is a view predicate.
KnowledgeBase expand(const KnowledgeBase& kb, const Atom& fact);

// Contraction-then-expansion composition, kept as a cross-check path.
// The handle receives the denial of the fact being inserted.
using ContractionFn =
    std::function<KnowledgeBase(const KnowledgeBase&, const HornClause&)>;
KnowledgeBase levi_revision(
    const KnowledgeBase& kb, const Atom& fact,
    const ContractionFn& contraction = nullptr,
    IncisionStrategy strategy = IncisionStrategy::MinimalLexicographic);

// Top-level revision by a ground fact (base or view) or a ground denial.
// Enumerates every minimal transaction over the ground base universe whose
// application makes the request hold and the constraints satisfied; the
// default pick is minimal-cardinality with lexicographic tie-break.
RevisionResult generalized_revision(const KnowledgeBase& kb,
                                    const HornClause& alpha,
                                    const Budget& budget = {});

// One repair step: realize the derivable-set delta_plus and retract
// delta_minus, using explanation selection for insertions and hitting sets
// over explanation families for deletions.
KnowledgeBase kr_procedure(const KnowledgeBase& kb,
                           const std::set<Atom>& delta_plus,
                           const std::set<Atom>& delta_minus,
                           const Budget& budget = {});

// Tree-driven insertion of a ground view atom: candidate completions are
// chosen one representative per branch support and grown until the target
// derives, then constraint repairs are applied.
RevisionResult partial_meet_revision(const KnowledgeBase& ddb,
                                     const Atom& target,
                                     const Budget& budget = {});

// Tree-driven insertion for acyclic programs via branch support families and
// hitting sets. Throws CycleError when the program is cyclic.
RevisionResult acyclic_generalized_revision(const KnowledgeBase& ddb,
                                            const Atom& target,
                                            const Budget& budget = {});

// Level mapping existence: no cycle in the ground head-to-body dependency
// graph. cycle_out (optional) receives one offending atom cycle.
bool is_acyclic(const KnowledgeBase& kb,
                std::vector<Atom>* cycle_out = nullptr);

}  // namespace hornrev

#endif

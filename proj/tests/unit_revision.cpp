#include <random>

#include "doctest.h"
#include "hornrev/errors.hpp"
#include "hornrev/oracle.hpp"
#include "hornrev/parse.hpp"
#include "hornrev/revision.hpp"
#include "support.hpp"

using namespace hornrev;
using namespace hornrev::test;

namespace {

std::set<Transaction> tx_set(const RevisionResult& r) {
  auto all = r.all_transactions();
  return {all.begin(), all.end()};
}

std::set<Transaction> tx_set(const std::vector<Transaction>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("expand adds a base fact and is idempotent") {
  KnowledgeBase kb = kb_of(kStaffKb);
  KnowledgeBase grown = expand(kb, atom("staff_group(x, infor1)"));
  CHECK(grown.updatable.size() == 5);
  CHECK(expand(grown, atom("staff_group(x, infor1)")) == grown);
  CHECK_THROWS_AS(expand(kb, atom("staff_chair(a, b)")), Error);
}

TEST_CASE("expansion may break the constraints; detection still works") {
  KnowledgeBase kb = kb_of(kStaffKb);
  KnowledgeBase grown = expand(kb, atom("group_chair(infor1, aravindan)"));
  CHECK_FALSE(ic_violations(grown).empty());
}

TEST_CASE("levi composition: vacuous contraction is expansion") {
  KnowledgeBase kb = kb_of(kTwoRulesKb);
  CHECK(levi_revision(kb, atom("c")) == expand(kb, atom("c")));
}

TEST_CASE("levi composition matches the direct kernel route") {
  KnowledgeBase kb = kb_of(R"(
%% immutable
p :- a.
%% updatable
a.
b.
%% constraints
:- p, c.
)");
  // Inserting c clashes with derivable p; both routes must cut a.
  KnowledgeBase direct =
      kernel_revision(kb, fact("c"), IncisionStrategy::MinimalCardinality);
  KnowledgeBase levi = levi_revision(kb, atom("c"), nullptr,
                                     IncisionStrategy::MinimalCardinality);
  CHECK(direct == levi);
  CHECK(levi.has_fact(atom("c")));
  CHECK_FALSE(derives(levi, atom("p")));
}

TEST_CASE("levi composition: intrinsically inconsistent fact is vacuous") {
  KnowledgeBase kb = kb_of(kRoutesKb);
  CHECK(levi_revision(kb, atom("b")) == kb);
}

TEST_CASE("generalized revision: the staff promotion request") {
  KnowledgeBase kb = kb_of(kStaffKb);
  auto res = generalized_revision(kb, fact("staff_chair(delhibabu, aravindan)"));
  REQUIRE(res.status == RevisionStatus::Ok);

  Transaction promote;
  promote.insertions = atoms({"group_chair(infor1, aravindan)"});
  promote.deletions = atoms({"group_chair(infor1, matthias)"});
  auto all = tx_set(res);
  CHECK(all.count(promote) == 1);
  CHECK(all.size() >= 2);

  for (const auto& t : res.all_transactions()) {
    KnowledgeBase after = apply_transaction(kb, t);
    CHECK(derives(after, atom("staff_chair(delhibabu, aravindan)")));
    CHECK(ic_violations(after).empty());
  }
  // Deterministic default: smallest transaction, text order.
  CHECK(res.transaction == promote);
}

TEST_CASE("generalized revision: derivable request is the identity") {
  KnowledgeBase kb = kb_of(kRoutesKb);
  auto res = generalized_revision(kb, fact("p"));
  CHECK(res.status == RevisionStatus::Ok);
  CHECK(res.transaction.empty());
  CHECK(res.alternatives.empty());
  CHECK(res.kb_after == kb);
}

TEST_CASE("generalized revision: intrinsic conflict is flagged vacuous") {
  KnowledgeBase kb = kb_of(kRoutesKb);
  auto res = generalized_revision(kb, fact("b"));
  CHECK(res.status == RevisionStatus::Vacuity);
  CHECK(res.kb_after == kb);
  CHECK(res.transaction.empty());
}

TEST_CASE("generalized revision: denial retracts the support") {
  KnowledgeBase kb = kb_of(kRoutesKb);
  auto res = generalized_revision(kb, denial("p"));
  REQUIRE(res.status == RevisionStatus::Ok);
  Transaction expected;
  expected.deletions = atoms({"a"});
  CHECK(res.transaction == expected);
  CHECK_FALSE(derives(res.kb_after, atom("p")));
}

TEST_CASE("kr procedure: nothing to do") {
  KnowledgeBase kb = kb_of(kRoutesKb);
  CHECK(kr_procedure(kb, {}, {}) == kb);
  CHECK(kr_procedure(kb, {atom("p")}, {}) == kb);  // already derivable
}

TEST_CASE("kr procedure: retraction picks the minimal hitting set") {
  KnowledgeBase kb = kb_of(kRoutesKb);
  KnowledgeBase after = kr_procedure(kb, {}, {atom("p")});
  CHECK_FALSE(after.has_fact(atom("a")));
  CHECK(after.has_fact(atom("e")));
  CHECK(after.has_fact(atom("f")));
  CHECK_FALSE(derives(after, atom("p")));
}

TEST_CASE("kr procedure: insertion realizes the request") {
  KnowledgeBase kb = kb_of(kRoutesKbNoA);
  KnowledgeBase after = kr_procedure(kb, {atom("p")}, {});
  CHECK(derives(after, atom("p")));
  CHECK(ic_violations(after).empty());
}

TEST_CASE("acyclic revision: re-adding a realizes p") {
  KnowledgeBase kb = kb_of(kRoutesKbNoA);
  auto res = acyclic_generalized_revision(kb, atom("p"));
  REQUIRE(res.status == RevisionStatus::Ok);
  Transaction expected;
  expected.insertions = atoms({"a"});
  CHECK(tx_set(res) == std::set<Transaction>{expected});
  CHECK(derives(res.kb_after, atom("p")));
}

TEST_CASE("acyclic revision: undefined view target has no repair") {
  KnowledgeBase kb = kb_of(R"(
%% immutable
p :- a.
%% updatable
a.
%% constraints
:- q.
)");
  // q is banned outright: inserting it is vacuous.
  auto res = acyclic_generalized_revision(kb, atom("q"));
  CHECK(res.status == RevisionStatus::Vacuity);
}

TEST_CASE("acyclic revision: a fact in every proof is the forced insertion") {
  KnowledgeBase kb = kb_of(R"(
%% immutable
p :- a, e.
p :- a, f.
%% updatable
e.
f.
)");
  auto res = acyclic_generalized_revision(kb, atom("p"));
  REQUIRE(res.status == RevisionStatus::Ok);
  CHECK(res.transaction.insertions == atoms({"a"}));
  CHECK(res.transaction.deletions.empty());
}

TEST_CASE("acyclic revision refuses cyclic programs") {
  KnowledgeBase kb;
  kb.immutable.push_back(parse_clause("p :- q."));
  kb.immutable.push_back(parse_clause("q :- p."));
  CHECK_THROWS_AS(acyclic_generalized_revision(kb, atom("p")), CycleError);
}

TEST_CASE("partial meet revision: re-adding a realizes p") {
  KnowledgeBase kb = kb_of(kRoutesKbNoA);
  auto res = partial_meet_revision(kb, atom("p"));
  REQUIRE(res.status == RevisionStatus::Ok);
  Transaction expected;
  expected.insertions = atoms({"a"});
  CHECK(res.transaction == expected);
  CHECK(derives(res.kb_after, atom("p")));
  CHECK(ic_violations(res.kb_after).empty());
}

TEST_CASE("partial meet revision: derivable target is the identity") {
  KnowledgeBase kb = kb_of(kRoutesKb);
  auto res = partial_meet_revision(kb, atom("p"));
  CHECK(res.status == RevisionStatus::Ok);
  CHECK(res.transaction.empty());
}

TEST_CASE("partial meet revision completes a single two-fact branch") {
  KnowledgeBase kb = kb_of(R"(
%% immutable
p :- a, e.
%% updatable
%% constraints
)");
  auto res = partial_meet_revision(kb, atom("p"));
  REQUIRE(res.status == RevisionStatus::Ok);
  CHECK(res.transaction.insertions == atoms({"a", "e"}));
}

TEST_CASE("is_acyclic: examples") {
  CHECK(is_acyclic(kb_of(kRoutesKb)));
  CHECK(is_acyclic(KnowledgeBase{}));
  KnowledgeBase cyc;
  cyc.immutable.push_back(parse_clause("p :- q."));
  cyc.immutable.push_back(parse_clause("q :- p."));
  std::vector<Atom> cycle;
  CHECK_FALSE(is_acyclic(cyc, &cycle));
  CHECK(cycle.size() >= 2);
}

TEST_CASE("success realization on random instances") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    auto inst = random_kb(rng, RandomKbConfig{});
    for (const auto& v : inst.view_atoms) {
      auto res = acyclic_generalized_revision(inst.kb, v);
      if (res.status != RevisionStatus::Ok) continue;
      for (const auto& t : res.all_transactions()) {
        KnowledgeBase after = apply_transaction(inst.kb, t);
        CHECK(derives(after, v));
        CHECK(ic_violations(after).empty());
      }
    }
  }
}

TEST_CASE("acyclic and generalized engines match the oracle transactions") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    auto inst = random_kb(rng, RandomKbConfig{});
    int max_changes =
        static_cast<int>(inst.base_atoms.size() + inst.kb.updatable.size());
    for (const auto& v : inst.view_atoms) {
      auto brute = oracle::brute_transactions(inst.kb, v, max_changes);
      auto a = acyclic_generalized_revision(inst.kb, v);
      auto gset = generalized_revision(inst.kb, HornClause::fact(v));
      std::set<Transaction> expected = tx_set(brute);
      if (a.status == RevisionStatus::Ok)
        CHECK(tx_set(a) == expected);
      else
        CHECK(expected.empty());
      if (gset.status == RevisionStatus::Ok)
        CHECK(tx_set(gset) == expected);
      else
        CHECK(expected.empty());
    }
  }
}

TEST_CASE("transaction rendering and ordering") {
  Transaction t;
  t.insertions = atoms({"a"});
  t.deletions = atoms({"b"});
  CHECK(to_string(t) == "insert a; delete b");
  CHECK(to_string(Transaction{}) == "no change");
}

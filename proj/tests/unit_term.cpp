#include <random>

#include "doctest.h"
#include "hornrev/clause.hpp"
#include "hornrev/errors.hpp"
#include "hornrev/parse.hpp"
#include "hornrev/term.hpp"
#include "support.hpp"

using namespace hornrev;
using hornrev::test::atom;

TEST_CASE("unification: single binding") {
  auto theta = unify(atom("p(X)"), atom("p(a)"));
  REQUIRE(theta.has_value());
  CHECK(theta->apply(atom("p(X)")) == atom("p(a)"));
  CHECK(theta->size() == 1);
}

TEST_CASE("unification: constant clash fails") {
  CHECK_FALSE(unify(atom("p(a)"), atom("p(b)")).has_value());
}

TEST_CASE("unification: cross bindings") {
  auto theta = unify(atom("staff_chair(delhibabu, Y)"),
                     atom("staff_chair(X, aravindan)"));
  REQUIRE(theta.has_value());
  Atom expected = atom("staff_chair(delhibabu, aravindan)");
  CHECK(theta->apply(atom("staff_chair(delhibabu, Y)")) == expected);
  CHECK(theta->apply(atom("staff_chair(X, aravindan)")) == expected);
}

TEST_CASE("unification: arity and predicate mismatches fail") {
  CHECK_FALSE(unify(atom("p(a)"), atom("q(a)")).has_value());
  CHECK_FALSE(unify(atom("p(a)"), atom("p(a, b)")).has_value());
}

TEST_CASE("apply: bound and unbound variables") {
  Substitution theta;
  theta.bind("X", Term::constant("a"));
  CHECK(theta.apply(atom("p(X, Y)")) == atom("p(a, Y)"));
  CHECK(Substitution{}.apply(atom("p(X)")) == atom("p(X)"));
}

TEST_CASE("apply: clause-wide application") {
  Substitution theta;
  theta.bind("X", Term::constant("a"));
  theta.bind("Y", Term::constant("b"));
  HornClause c = parse_clause("q(X) :- r(X, Y).");
  CHECK(to_string(apply(theta, c)) == "q(a) :- r(a, b).");
}

TEST_CASE("substitution application is idempotent") {
  std::mt19937 rng(7);
  const char* consts[] = {"a", "b", "c"};
  const char* vars[] = {"X", "Y", "Z"};
  for (int trial = 0; trial < 200; ++trial) {
    Substitution theta;
    for (int i = 0; i < 3; ++i) {
      if (rng() % 2)
        theta.bind(vars[i], Term::constant(consts[rng() % 3]));
      else
        theta.bind(vars[i], Term::variable(vars[rng() % 3]));
    }
    for (const auto& [v, t] : theta.bindings()) {
      CHECK(theta.apply(t) == t);          // resolved bindings
      CHECK_FALSE((t.is_variable() && t.name == v));  // no self-maps
    }
    Atom a{"p", {Term::variable("X"), Term::variable("Y"), Term::variable("Z")}};
    CHECK(theta.apply(theta.apply(a)) == theta.apply(a));
  }
}

namespace {

// One-way match of a pattern atom onto a ground atom.
bool matches(const Atom& pattern, const Atom& ground) {
  auto theta = unify(pattern, ground);
  return theta.has_value() && theta->apply(pattern) == ground;
}

Atom random_atom(std::mt19937& rng, bool allow_vars) {
  const char* consts[] = {"a", "b", "c"};
  const char* vars[] = {"X", "Y", "Z"};
  int arity = static_cast<int>(rng() % 3) + 1;
  Atom a{"p", {}};
  for (int i = 0; i < arity; ++i) {
    if (allow_vars && rng() % 2)
      a.args.push_back(Term::variable(vars[rng() % 3]));
    else
      a.args.push_back(Term::constant(consts[rng() % 3]));
  }
  return a;
}

}  // namespace

TEST_CASE("unifier soundness and generality over a 3-constant universe") {
  std::mt19937 rng(11);
  const char* consts[] = {"a", "b", "c"};
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Atom x = random_atom(rng, true);
    Atom y = random_atom(rng, true);
    if (x.args.size() != y.args.size()) continue;
    auto theta = unify(x, y);

    // Enumerate all ground substitutions over {a,b,c} for the variables.
    std::set<std::string> vars;
    x.collect_variables(vars);
    y.collect_variables(vars);
    std::vector<std::string> vlist(vars.begin(), vars.end());
    std::vector<int> idx(vlist.size(), 0);
    bool any_ground_unifier = false;
    while (true) {
      Substitution sigma;
      for (std::size_t i = 0; i < vlist.size(); ++i)
        sigma.bind(vlist[i], Term::constant(consts[idx[i]]));
      if (sigma.apply(x) == sigma.apply(y)) {
        any_ground_unifier = true;
        // Generality: sigma must factor through the mgu.
        REQUIRE(theta.has_value());
        CHECK(matches(theta->apply(x), sigma.apply(x)));
      }
      std::size_t k = vlist.size();
      while (k > 0) {
        if (++idx[k - 1] < 3) break;
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0 || vlist.empty()) break;
    }
    if (theta.has_value()) {
      CHECK(theta->apply(x) == theta->apply(y));  // soundness
      ++checked;
    } else {
      CHECK_FALSE(any_ground_unifier);
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("ground instantiation: one variable, two constants") {
  auto out = ground_instantiate({parse_clause("p(X) :- q(X).")}, {"a", "b"});
  REQUIRE(out.size() == 2);
  CHECK(to_string(out[0]) == "p(a) :- q(a).");
  CHECK(to_string(out[1]) == "p(b) :- q(b).");
}

TEST_CASE("ground instantiation: ground clause unchanged") {
  auto out = ground_instantiate({parse_clause("p :- q.")}, {"a"});
  REQUIRE(out.size() == 1);
  CHECK(to_string(out[0]) == "p :- q.");
}

TEST_CASE("ground instantiation: two variables enumerate all bindings") {
  auto out =
      ground_instantiate({parse_clause("t(X, Y) :- s(X), r(Y).")}, {"a", "b"});
  CHECK(out.size() == 4);
}

TEST_CASE("ground instantiation: empty universe with variables is an error") {
  CHECK_THROWS_AS(ground_instantiate({parse_clause("p(X) :- q(X).")}, {}),
                  Error);
}

TEST_CASE("grounding cardinality |U|^vars per clause") {
  std::mt19937 rng(3);
  std::set<std::string> universe{"a", "b", "c"};
  for (int trial = 0; trial < 100; ++trial) {
    Atom head = random_atom(rng, true);
    Atom body = random_atom(rng, true);
    HornClause c = HornClause::rule(head, {body});
    std::size_t vars = c.variables().size();
    std::size_t expected = 1;
    for (std::size_t i = 0; i < vars; ++i) expected *= universe.size();
    // Distinct instances: duplicates can only come from repeated bindings,
    // which cannot happen for distinct substitutions on distinct variables.
    CHECK(ground_instantiate({c}, universe).size() == expected);
  }
}

TEST_CASE("standardize apart renames all variables") {
  int counter = 0;
  HornClause c = parse_clause("p(X) :- q(X, Y).");
  HornClause renamed = standardize_apart(c, counter);
  CHECK(renamed.variables().size() == 2);
  for (const auto& v : renamed.variables()) CHECK(v.substr(0, 2) == "_V");
  CHECK(counter == 2);
}

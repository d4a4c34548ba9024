#include "hornrev/sld.hpp"

#include <algorithm>
#include <sstream>

namespace hornrev {

std::set<Atom> Branch::support() const {
  std::set<Atom> s = facts_used;
  s.insert(missing.begin(), missing.end());
  return s;
}

bool SLDTree::has_cutoff() const {
  return std::any_of(branches.begin(), branches.end(), [](const Branch& b) {
    return b.status == BranchStatus::CutOff;
  });
}

std::vector<const Branch*> SLDTree::successes() const {
  std::vector<const Branch*> out;
  for (const auto& b : branches)
    if (b.status == BranchStatus::Success) out.push_back(&b);
  return out;
}

std::vector<const Branch*> SLDTree::failures() const {
  std::vector<const Branch*> out;
  for (const auto& b : branches)
    if (b.status == BranchStatus::Failure) out.push_back(&b);
  return out;
}

namespace {

struct GoalAtom {
  Atom atom;
  int depth;  // proof-tree depth of this atom occurrence
};

struct PathState {
  Substitution theta;
  std::vector<HornClause> used;
  std::set<Atom> facts_used;
  std::set<Atom> missing;
  std::vector<Atom> first_failure_goal;
  std::optional<Atom> stuck_view;
};

class TreeBuilder {
 public:
  TreeBuilder(const detail::GroundKb& g, SLDTree& tree, int depth_bound)
      : g_(g), tree_(tree), bound_(depth_bound) {
    view_heads_ = collect_view_heads();
    universe_vec_.assign(g_.constant_universe.begin(),
                         g_.constant_universe.end());
  }

  void build(const std::vector<Atom>& root) {
    tree_.nodes.push_back(SLDNode{root, -1, std::nullopt, std::nullopt, {}, -1});
    std::vector<GoalAtom> goal;
    for (const auto& a : root) goal.push_back({a, 1});
    expand(0, goal, PathState{});
  }

 private:
  std::set<std::string> collect_view_heads() {
    std::set<std::string> v;
    for (const auto& r : g_.rules)
      if (r.head) v.insert(r.head->pred);
    return v;
  }

  int add_node(int parent, std::vector<Atom> goal,
               std::optional<HornClause> via, std::optional<Atom> hyp) {
    int idx = static_cast<int>(tree_.nodes.size());
    tree_.nodes.push_back(
        SLDNode{std::move(goal), parent, std::move(via), std::move(hyp), {}, -1});
    tree_.nodes[parent].children.push_back(idx);
    return idx;
  }

  void finish_branch(int node_idx, BranchStatus status, const PathState& st) {
    Branch b;
    b.id = static_cast<int>(tree_.branches.size());
    b.status = status;
    b.input_clauses = st.used;
    b.facts_used = st.facts_used;
    b.missing = st.missing;
    b.failure_goal = st.first_failure_goal;
    b.stuck_view = st.stuck_view;
    if (status == BranchStatus::Success)
      b.answer = st.theta.restricted_to(tree_.root_goal);
    tree_.nodes[node_idx].branch_id = b.id;
    tree_.branches.push_back(std::move(b));
  }

  static std::vector<Atom> plain_goal(const std::vector<GoalAtom>& goal) {
    std::vector<Atom> out;
    out.reserve(goal.size());
    for (const auto& ga : goal) out.push_back(ga.atom);
    return out;
  }

  void expand(int node_idx, const std::vector<GoalAtom>& goal, PathState st) {
    if (goal.empty()) {
      finish_branch(node_idx,
                    st.missing.empty() ? BranchStatus::Success
                                       : BranchStatus::Failure,
                    st);
      return;
    }
    const GoalAtom& sel = goal.front();
    if (sel.depth > bound_) {
      if (st.first_failure_goal.empty())
        st.first_failure_goal = plain_goal(goal);
      finish_branch(node_idx, BranchStatus::CutOff, st);
      return;
    }

    if (view_heads_.count(sel.atom.pred)) {
      bool any = false;
      for (const auto& r : g_.rules) {
        if (!r.head) continue;
        auto theta2 = unify(sel.atom, *r.head);
        if (!theta2) continue;
        any = true;
        std::vector<GoalAtom> child_goal;
        for (const auto& b : r.body)
          child_goal.push_back({theta2->apply(b), sel.depth + 1});
        for (std::size_t i = 1; i < goal.size(); ++i)
          child_goal.push_back({theta2->apply(goal[i].atom), goal[i].depth});
        PathState st2 = st;
        st2.used.push_back(r);
        for (const auto& [v, t] : theta2->bindings()) st2.theta.bind(v, t);
        int child = add_node(node_idx, plain_goal(child_goal), r, std::nullopt);
        expand(child, child_goal, std::move(st2));
      }
      if (!any) {
        st.stuck_view = sel.atom;
        if (st.first_failure_goal.empty())
          st.first_failure_goal = plain_goal(goal);
        finish_branch(node_idx, BranchStatus::Failure, st);
      }
      return;
    }

    // Base atom: resolve against stored facts; absent ground instances are
    // hypothesized and resolution continues.
    std::vector<Atom> instances = ground_instances(sel.atom);
    bool any = false;
    for (const Atom& inst : instances) {
      auto theta2 = unify(sel.atom, inst);
      if (!theta2) continue;
      any = true;
      bool present = g_.facts.count(inst) > 0;
      std::vector<GoalAtom> child_goal;
      for (std::size_t i = 1; i < goal.size(); ++i)
        child_goal.push_back({theta2->apply(goal[i].atom), goal[i].depth});
      PathState st2 = st;
      for (const auto& [v, t] : theta2->bindings()) st2.theta.bind(v, t);
      std::optional<HornClause> via;
      std::optional<Atom> hyp;
      if (present) {
        st2.used.push_back(HornClause::fact(inst));
        st2.facts_used.insert(inst);
        via = HornClause::fact(inst);
      } else {
        st2.missing.insert(inst);
        hyp = inst;
        if (st2.first_failure_goal.empty())
          st2.first_failure_goal = plain_goal(goal);
      }
      int child = add_node(node_idx, plain_goal(child_goal), via, hyp);
      expand(child, child_goal, std::move(st2));
    }
    if (!any) {
      // Non-ground base atom over an empty universe.
      st.stuck_view = sel.atom;
      if (st.first_failure_goal.empty())
        st.first_failure_goal = plain_goal(goal);
      finish_branch(node_idx, BranchStatus::Failure, st);
    }
  }

  // All ground instances of a base atom over the constant universe.
  std::vector<Atom> ground_instances(const Atom& a) {
    if (a.ground()) return {a};
    std::vector<Atom> out;
    std::vector<int> var_positions;
    for (std::size_t i = 0; i < a.args.size(); ++i)
      if (a.args[i].is_variable()) var_positions.push_back(static_cast<int>(i));
    if (universe_vec_.empty()) return out;
    // Shared variables must agree; instantiate by name.
    std::set<std::string> vars;
    a.collect_variables(vars);
    std::vector<std::string> vlist(vars.begin(), vars.end());
    std::vector<std::size_t> idx(vlist.size(), 0);
    while (true) {
      Substitution theta;
      for (std::size_t i = 0; i < vlist.size(); ++i)
        theta.bind(vlist[i], Term::constant(universe_vec_[idx[i]]));
      out.push_back(theta.apply(a));
      std::size_t k = vlist.size();
      while (k > 0) {
        if (++idx[k - 1] < universe_vec_.size()) break;
        idx[k - 1] = 0;
        --k;
      }
      if (k == 0) break;
    }
    return out;
  }

  const detail::GroundKb& g_;
  SLDTree& tree_;
  int bound_;
  std::set<std::string> view_heads_;
  std::vector<std::string> universe_vec_;
};

int default_depth_bound(const detail::GroundKb& g, const Atom& goal) {
  std::set<Atom> atoms(g.facts.begin(), g.facts.end());
  for (const auto& r : g.rules) {
    if (r.head) atoms.insert(*r.head);
    for (const auto& b : r.body) atoms.insert(b);
  }
  atoms.insert(goal);
  return 2 * static_cast<int>(atoms.size()) + 1;
}

}  // namespace

SLDTree sld_tree(const detail::GroundKb& g, const Atom& goal,
                 int depth_bound) {
  SLDTree tree;
  tree.root_goal = {goal};
  tree.depth_bound = depth_bound > 0 ? depth_bound : default_depth_bound(g, goal);
  TreeBuilder(g, tree, tree.depth_bound).build(tree.root_goal);
  return tree;
}

SLDTree sld_tree(const KnowledgeBase& kb, const Atom& goal, int depth_bound) {
  std::set<std::string> extra;
  goal.collect_constants(extra);
  auto g = detail::ground_kb(kb, extra);
  return sld_tree(g, goal, depth_bound);
}

std::string render_tree(const SLDTree& tree) {
  std::ostringstream os;
  auto goal_text = [](const std::vector<Atom>& goal) {
    if (goal.empty()) return std::string("[]");
    std::string s = "<- ";
    for (std::size_t i = 0; i < goal.size(); ++i) {
      if (i) s += ", ";
      s += to_string(goal[i]);
    }
    return s;
  };
  // Depth-first walk over the node arena.
  std::vector<std::pair<int, int>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [idx, depth] = stack.back();
    stack.pop_back();
    const SLDNode& n = tree.nodes[idx];
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ');
    if (n.hypothesized)
      os << "assume " << to_string(*n.hypothesized) << "  ";
    else if (n.via_clause)
      os << "[" << to_string(*n.via_clause) << "]  ";
    os << goal_text(n.goal);
    if (n.branch_id >= 0) {
      const Branch& b = tree.branches[n.branch_id];
      switch (b.status) {
        case BranchStatus::Success:
          os << "  # success";
          if (!b.answer.empty()) os << " " << to_string(b.answer);
          break;
        case BranchStatus::Failure:
          os << "  # failure";
          if (!b.missing.empty()) {
            os << " missing {";
            bool first = true;
            for (const auto& m : b.missing) {
              if (!first) os << ", ";
              first = false;
              os << to_string(m);
            }
            os << "}";
          }
          if (b.stuck_view) os << " stuck on " << to_string(*b.stuck_view);
          break;
        case BranchStatus::CutOff:
          os << "  # cut-off (depth bound " << tree.depth_bound << ")";
          break;
      }
    }
    os << '\n';
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
      stack.push_back({*it, depth + 1});
  }
  return os.str();
}

}  // namespace hornrev

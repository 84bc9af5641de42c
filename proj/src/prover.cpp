#include "dpl/prover.hpp"

#include "dpl/proof_builder.hpp"

namespace dpl {

namespace {

using namespace build;

class ClauseProver {
 public:
  ClauseProver(const NormalForm& n, Frame frame) : clauses_(n.clauses()), frame_(std::move(frame)) {
    for (const auto& c : clauses_) models_.push_back(classical_models(c.body, frame_));
    prefixes_.push_back(Formula::one());
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      const Formula c = clause_formula(clauses_[i]);
      prefixes_.push_back(i == 0 ? c : Formula::with(prefixes_.back(), c));
    }
  }

  // A world outside V(m) where the first k clauses allow more than 1 − β.
  std::optional<World> counterexample(std::size_t k, const Weight& beta, const Formula& m) const {
    const WorldSet vm = classical_models(m, frame_);
    const Weight cap = w_neg(beta);
    for (World w = 0; w < frame_.world_count(); ++w) {
      if (vm.contains(w)) continue;
      Weight v = Weight::one();
      for (std::size_t i = 0; i < k; ++i)
        if (!models_[i].contains(w)) v = w_min(v, w_neg(clauses_[i].weight));
      if (cap < v) return w;
    }
    return std::nullopt;
  }

  // First k clauses ⊢ β → m; the entailment must hold.
  ProofNode derive(std::size_t k, const Weight& beta, const Formula& m) const {
    const Formula b = Formula::constant(beta);
    if (beta.is_zero())
      return weaken_left(arrow_right(zero_axiom({}, {m}), b, m), prefixes_[k]);
    if (classical_models(m, frame_).full())
      return weaken_left(arrow_right(weaken_left(classical({}, {m}), b), b, m), prefixes_[k]);
    if (k == 0) throw std::logic_error("prover: empty premise with a non-trivial goal");
    const Clause& last = clauses_[k - 1];
    if (k == 1) return weaken_clause(last.weight, last.body, beta, m);

    if (!counterexample(k - 1, beta, m)) return and_left(derive(k - 1, beta, m), prefixes_[k], 1);

    // The last clause is needed: it supplies β → Lₙ, the others β → (M ⊕ ¬Lₙ).
    const Formula x = make_oplus(m, Formula::neg(last.body));
    const Formula& y = last.body;
    ProofNode q1 = and_left(derive(k - 1, beta, x), prefixes_[k], 1);
    ProofNode q2 = and_left(weaken_clause(last.weight, y, beta, y), prefixes_[k], 2);
    const Formula bx = make_arrow(b, x);
    const Formula by = make_arrow(b, y);
    ProofNode q3 = and_right(std::move(q1), std::move(q2), bx, by);
    ProofNode q4 = cut(std::move(q3), join_arrows(b, x, y), Formula::with(bx, by));
    const Formula xy = Formula::with(x, y);
    return cut(std::move(q4), weaken_clause(beta, xy, beta, m), make_arrow(b, xy));
  }

  std::size_t size() const { return clauses_.size(); }
  const Frame& frame() const { return frame_; }

 private:
  std::vector<Clause> clauses_;
  Frame frame_;
  std::vector<WorldSet> models_;
  std::vector<Formula> prefixes_;  // prefixes_[k]: & of the first k clauses
};

Frame joint_frame(const NormalForm& a, const NormalForm& b, const Limits& limits) {
  auto names = a.atoms();
  const auto more = b.atoms();
  names.insert(more.begin(), more.end());
  return Frame::bounded(names, limits);
}

ProofResult derive_with(const ClauseProver& prover, const Clause& goal) {
  if (auto w = prover.counterexample(prover.size(), goal.weight, goal.body)) return NotDerivable{prover.frame(), *w, 0};
  return prover.derive(prover.size(), goal.weight, goal.body);
}

}  // namespace

std::string NotDerivable::message() const {
  return "goal clause " + std::to_string(goal_clause + 1) + " is not entailed; counterexample world " +
         frame.assignment(world);
}

ProofResult derive_clause_entailment(const NormalForm& n, const Clause& goal, const Limits& limits) {
  const ClauseProver prover(n, joint_frame(n, NormalForm({goal}), limits));
  return derive_with(prover, goal);
}

ProofResult prove_nf(const NormalForm& a, const NormalForm& b, const Limits& limits) {
  if (b.empty()) return one_axiom({a.formula()});
  const ClauseProver prover(a, joint_frame(a, b, limits));
  std::optional<ProofNode> acc;
  std::optional<Formula> done;
  for (std::size_t j = 0; j < b.size(); ++j) {
    const Clause& goal = b.clauses()[j];
    ProofResult r = derive_with(prover, goal);
    if (auto* fail = std::get_if<NotDerivable>(&r)) {
      fail->goal_clause = j;
      return r;
    }
    ProofNode p = std::get<ProofNode>(std::move(r));
    const Formula c = clause_formula(goal);
    if (!acc) {
      acc = std::move(p);
      done = c;
    } else {
      acc = and_right(std::move(*acc), std::move(p), *done, c);
      done = Formula::with(*done, c);
    }
  }
  return std::move(*acc);
}

}  // namespace dpl

#include "dpl/normal_form.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "dpl/parser.hpp"
#include "dpl/truth_table.hpp"

namespace dpl {

namespace {

void check_cap(std::size_t count, const Limits& limits, const char* what) {
  if (count > limits.max_clauses)
    throw BlowupLimit(std::string(what) + " would produce " + std::to_string(count) +
                      " clauses, over --max-clauses " + std::to_string(limits.max_clauses));
}

Formula conjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::one();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::with(acc, parts[i]);
  return acc;
}

// A clause during simplification: its models over the shared frame, plus the
// body it would fall back to if no short formula can be synthesized.
struct Work {
  Weight weight;
  WorldSet models;
  Formula body;
};

Weight clause_value(const Work& c, World w) { return c.models.contains(w) ? Weight::one() : w_neg(c.weight); }

std::vector<Weight> values_of(const std::vector<Work>& cs, std::size_t worlds, std::optional<std::size_t> skip) {
  std::vector<Weight> v(worlds, Weight::one());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (skip && *skip == i) continue;
    for (World w = 0; w < worlds; ++w) v[w] = w_min(v[w], clause_value(cs[i], w));
  }
  return v;
}

}  // namespace

NormalForm::NormalForm(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  for (const auto& c : clauses_)
    if (!is_l1(c.body)) throw NotL1Error("clause body is not crisp: " + print_formula(c.body));
}

std::set<std::string> NormalForm::atoms() const {
  std::set<std::string> out;
  for (const auto& c : clauses_) collect_atoms(c.body, out);
  return out;
}

Formula NormalForm::formula() const {
  std::vector<Formula> parts;
  parts.reserve(clauses_.size());
  for (const auto& c : clauses_) parts.push_back(clause_formula(c));
  return conjoin(parts);
}

NormalForm simplify(const NormalForm& n, const Limits& limits) {
  const Frame frame = Frame::bounded(n.atoms(), limits);
  const std::size_t worlds = frame.world_count();

  std::vector<Work> cs;
  for (const auto& c : n.clauses()) {
    if (c.weight.is_zero()) continue;
    WorldSet m = classical_models(c.body, frame);
    if (m.full()) continue;
    cs.push_back({c.weight, std::move(m), c.body});
  }

  // (α → L) & (α → M) is α → (L & M); (α → L) & (β → L) is (α ∨ β) → L.
  // Each merge can enable the other, so iterate to a fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Work> next;
    for (auto& c : cs) {
      auto same = std::find_if(next.begin(), next.end(), [&](const Work& o) {
        return o.weight == c.weight || o.models == c.models;
      });
      if (same == next.end()) {
        next.push_back(std::move(c));
        continue;
      }
      changed = true;
      if (same->weight == c.weight) {
        same->models = same->models & c.models;
        same->body = Formula::with(same->body, c.body);
      } else {
        same->weight = w_max(same->weight, c.weight);
      }
    }
    cs = std::move(next);
  }

  // Weakest clauses first: drop any whose removal leaves the distribution
  // unchanged.
  std::stable_sort(cs.begin(), cs.end(), [](const Work& a, const Work& b) { return a.weight < b.weight; });
  const auto full_values = values_of(cs, worlds, std::nullopt);
  for (std::size_t i = 0; i < cs.size();) {
    if (values_of(cs, worlds, i) == full_values)
      cs.erase(cs.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }

  std::vector<std::pair<std::string, Clause>> keyed;
  for (auto& c : cs) {
    Formula body = synthesize(c.models, frame).value_or(c.body);
    keyed.emplace_back(print_formula(body), Clause{c.weight, body});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.second.weight != b.second.weight) return a.second.weight > b.second.weight;
    return a.first < b.first;
  });
  std::vector<Clause> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return NormalForm(std::move(out));
}

NormalForm negate_clause(const Clause& c) {
  return NormalForm({Clause{w_neg(c.weight), Formula::zero()}, Clause{Weight::one(), Formula::neg(c.body)}});
}

NormalForm negate_nf(const NormalForm& n, const Limits& limits) {
  if (n.empty()) return NormalForm({Clause{Weight::one(), Formula::zero()}});
  const Frame frame = Frame::bounded(n.atoms(), limits);
  const auto& cs = n.clauses();

  std::vector<WorldSet> models;
  for (const auto& c : cs) models.push_back(classical_models(c.body, frame));

  std::vector<std::vector<bool>> patterns;
  std::set<std::vector<bool>> seen;
  for (World w = 0; w < frame.world_count(); ++w) {
    std::vector<bool> j(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) j[i] = models[i].contains(w);
    if (seen.insert(j).second) patterns.push_back(std::move(j));
  }
  check_cap(patterns.size(), limits, "negation");

  std::vector<Clause> out;
  for (const auto& j : patterns) {
    Weight top = Weight::zero();
    std::vector<Formula> conj;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (j[i]) {
        conj.push_back(cs[i].body);
      } else {
        top = w_max(top, cs[i].weight);
        conj.push_back(Formula::neg(cs[i].body));
      }
    }
    out.push_back(Clause{w_neg(top), Formula::neg(conjoin(conj))});
  }
  return simplify(NormalForm(std::move(out)), limits);
}

NormalForm times_clause(const Clause& c1, const Clause& c2) {
  const Formula& l = c1.body;
  const Formula& m = c2.body;
  return NormalForm({Clause{c2.weight, make_arrow(l, m)}, Clause{c1.weight, make_arrow(m, l)},
                     Clause{w_par(c1.weight, c2.weight), make_oplus(l, m)}});
}

NormalForm times_nf(const NormalForm& a, const NormalForm& b, const Limits& limits) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  check_cap(3 * a.size() * b.size(), limits, "product");
  std::vector<Clause> out;
  for (const auto& c1 : a.clauses())
    for (const auto& c2 : b.clauses()) {
      const NormalForm t = times_clause(c1, c2);
      out.insert(out.end(), t.clauses().begin(), t.clauses().end());
    }
  return simplify(NormalForm(std::move(out)), limits);
}

NormalForm with_nf(const NormalForm& a, const NormalForm& b, const Limits& limits) {
  check_cap(a.size() + b.size(), limits, "conjunction");
  std::vector<Clause> out = a.clauses();
  out.insert(out.end(), b.clauses().begin(), b.clauses().end());
  return simplify(NormalForm(std::move(out)), limits);
}

NormalForm normalize(const Formula& a, const Limits& limits) {
  switch (a.kind()) {
    case Kind::Atom: return NormalForm({Clause{Weight::one(), a}});
    case Kind::Const:
      return simplify(NormalForm({Clause{w_neg(a.weight()), Formula::zero()}}), limits);
    case Kind::Neg: return negate_nf(normalize(a.sub(), limits), limits);
    case Kind::With: return with_nf(normalize(a.left(), limits), normalize(a.right(), limits), limits);
    case Kind::Times: return times_nf(normalize(a.left(), limits), normalize(a.right(), limits), limits);
  }
  throw std::logic_error("unreachable");
}

Dist u_of_nf(const NormalForm& n, const Frame& frame) {
  std::vector<Weight> v(frame.world_count(), Weight::one());
  for (const auto& c : n.clauses()) {
    const WorldSet m = classical_models(c.body, frame);
    const Weight off = w_neg(c.weight);
    for (World w = 0; w < v.size(); ++w)
      if (!m.contains(w)) v[w] = w_min(v[w], off);
  }
  return Dist(frame, std::move(v));
}

}  // namespace dpl

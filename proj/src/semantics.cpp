#include "dpl/semantics.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace dpl {

namespace {

constexpr std::size_t kHardAtomLimit = 30;

void require_same_frame(const Dist& a, const Dist& b) {
  if (!(a.frame() == b.frame())) throw FrameMismatch("distributions over different frames");
}

template <class Op>
Dist pointwise(const Dist& a, const Dist& b, Op op) {
  require_same_frame(a, b);
  std::vector<Weight> out;
  out.reserve(a.values().size());
  for (std::size_t w = 0; w < a.values().size(); ++w) out.push_back(op(a[w], b[w]));
  return Dist(a.frame(), std::move(out));
}

}  // namespace

Frame::Frame(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  if (atoms_.size() > kHardAtomLimit)
    throw FrameTooLarge("frame of " + std::to_string(atoms_.size()) + " atoms exceeds the hard limit of " +
                        std::to_string(kHardAtomLimit));
}

Frame::Frame(const std::set<std::string>& atoms) : Frame(std::vector<std::string>(atoms.begin(), atoms.end())) {}

Frame Frame::bounded(const std::set<std::string>& atoms, const Limits& limits) {
  if (atoms.size() > limits.max_atoms)
    throw FrameTooLarge("frame of " + std::to_string(atoms.size()) + " atoms exceeds --max-atoms " +
                        std::to_string(limits.max_atoms));
  return Frame(atoms);
}

std::optional<std::size_t> Frame::index_of(const std::string& atom) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it == atoms_.end() || *it != atom) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_.begin());
}

std::string Frame::assignment(World w) const {
  if (atoms_.empty()) return "-";
  std::string s(atoms_.size(), '0');
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (holds(w, i)) s[i] = '1';
  return s;
}

Frame frame_of(const Formula& f, const Limits& limits) { return Frame::bounded(atoms(f), limits); }

Frame frame_of(const Formula& a, const Formula& b, const Limits& limits) {
  auto s = atoms(a);
  collect_atoms(b, s);
  return Frame::bounded(s, limits);
}

WorldSet::WorldSet(std::size_t world_count, bool full)
    : n_(world_count), bits_((world_count + 63) / 64, full ? ~std::uint64_t{0} : 0) {
  mask_tail();
}

WorldSet WorldSet::atom(std::size_t world_count, std::size_t atom_index) {
  WorldSet s(world_count);
  for (World w = 0; w < world_count; ++w)
    if (Frame::holds(w, atom_index)) s.insert(w);
  return s;
}

void WorldSet::mask_tail() {
  if (n_ % 64 != 0 && !bits_.empty()) bits_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
}

std::size_t WorldSet::count() const {
  std::size_t c = 0;
  for (auto b : bits_) c += static_cast<std::size_t>(std::popcount(b));
  return c;
}

bool WorldSet::subset_of(const WorldSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] & ~other.bits_[i]) return false;
  return true;
}

WorldSet WorldSet::operator~() const {
  WorldSet r = *this;
  for (auto& b : r.bits_) b = ~b;
  r.mask_tail();
  return r;
}

WorldSet WorldSet::operator&(const WorldSet& other) const {
  WorldSet r = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= other.bits_[i];
  return r;
}

WorldSet WorldSet::operator|(const WorldSet& other) const {
  WorldSet r = *this;
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] |= other.bits_[i];
  return r;
}

namespace {

class ClassicalEval {
 public:
  explicit ClassicalEval(const Frame& frame) : frame_(frame) {}

  const WorldSet& eval(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    WorldSet r;
    const std::size_t n = frame_.world_count();
    switch (f.kind()) {
      case Kind::Atom: {
        auto i = frame_.index_of(f.name());
        if (!i) throw UnknownAtom("atom '" + f.name() + "' is not in the frame");
        r = WorldSet::atom(n, *i);
        break;
      }
      case Kind::Const:
        if (!f.weight().is_crisp()) throw NotL1Error("formula contains a constant strictly between 0 and 1");
        r = WorldSet(n, f.weight().is_one());
        break;
      case Kind::Neg: r = ~eval(f.sub()); break;
      case Kind::With:
      case Kind::Times: {
        WorldSet l = eval(f.left());
        r = l & eval(f.right());
        break;
      }
    }
    return memo_.emplace(f.id(), std::move(r)).first->second;
  }

 private:
  const Frame& frame_;
  std::unordered_map<const void*, WorldSet> memo_;
};

}  // namespace

WorldSet classical_models(const Formula& l, const Frame& frame) {
  if (!is_l1(l)) throw NotL1Error("formula is not crisp (contains a constant strictly between 0 and 1)");
  ClassicalEval ev(frame);
  return ev.eval(l);
}

Dist::Dist(Frame frame, std::vector<Weight> values) : frame_(std::move(frame)), values_(std::move(values)) {
  if (values_.size() != frame_.world_count()) throw FrameMismatch("distribution size does not match its frame");
}

Dist Dist::constant(Frame frame, const Weight& w) {
  const std::size_t n = frame.world_count();
  return Dist(std::move(frame), std::vector<Weight>(n, w));
}

Dist Dist::indicator(Frame frame, const WorldSet& worlds) {
  std::vector<Weight> v(frame.world_count());
  for (World w = 0; w < v.size(); ++w)
    if (worlds.contains(w)) v[w] = Weight::one();
  return Dist(std::move(frame), std::move(v));
}

Dist u_eval(const Formula& a, const Frame& frame) {
  switch (a.kind()) {
    case Kind::Atom: {
      auto i = frame.index_of(a.name());
      if (!i) throw UnknownAtom("atom '" + a.name() + "' is not in the frame");
      return Dist::indicator(frame, WorldSet::atom(frame.world_count(), *i));
    }
    case Kind::Const: return Dist::constant(frame, a.weight());
    case Kind::Neg: return dist_complement(u_eval(a.sub(), frame));
    case Kind::With: return dist_min(u_eval(a.left(), frame), u_eval(a.right(), frame));
    case Kind::Times: return dist_times(u_eval(a.left(), frame), u_eval(a.right(), frame));
  }
  throw std::logic_error("unreachable");
}

Weight necessity(const Dist& d, const WorldSet& x) {
  Weight top = Weight::zero();
  for (World w = 0; w < d.values().size(); ++w)
    if (!x.contains(w)) top = w_max(top, d[w]);
  return w_neg(top);
}

Dist dist_times(const Dist& a, const Dist& b) { return pointwise(a, b, w_times); }
Dist dist_min(const Dist& a, const Dist& b) { return pointwise(a, b, w_min); }
Dist dist_max(const Dist& a, const Dist& b) { return pointwise(a, b, w_max); }

Dist dist_complement(const Dist& d) {
  std::vector<Weight> out;
  out.reserve(d.values().size());
  for (const auto& v : d.values()) out.push_back(w_neg(v));
  return Dist(d.frame(), std::move(out));
}

bool dist_leq(const Dist& a, const Dist& b) { return !first_violation(a, b); }

std::optional<World> first_violation(const Dist& a, const Dist& b) {
  require_same_frame(a, b);
  for (World w = 0; w < a.values().size(); ++w)
    if (b[w] < a[w]) return w;
  return std::nullopt;
}

Weight height(const Dist& d) {
  Weight top = Weight::zero();
  for (const auto& v : d.values()) top = w_max(top, v);
  return top;
}

bool entails_sem(const Formula& a, const Formula& b, const Limits& limits) {
  const Frame f = frame_of(a, b, limits);
  return dist_leq(u_eval(a, f), u_eval(b, f));
}

Formula sequent_antecedent(const std::vector<Formula>& gamma) {
  if (gamma.empty()) return Formula::one();
  Formula acc = gamma.front();
  for (std::size_t i = 1; i < gamma.size(); ++i) acc = Formula::times(acc, gamma[i]);
  return acc;
}

Formula sequent_succedent(const std::vector<Formula>& delta) {
  if (delta.empty()) return Formula::zero();
  Formula acc = delta.front();
  for (std::size_t i = 1; i < delta.size(); ++i) acc = make_par(acc, delta[i]);
  return acc;
}

bool valid_sequent_sem(const std::vector<Formula>& gamma, const std::vector<Formula>& delta, const Limits& limits) {
  return entails_sem(sequent_antecedent(gamma), sequent_succedent(delta), limits);
}

std::string dump_dist(const Dist& d) {
  std::string out;
  for (World w = 0; w < d.values().size(); ++w) {
    out += d.frame().assignment(w);
    out += ' ';
    out += d[w].fraction();
    if (auto dec = d[w].decimal()) {
      out += ' ';
      out += *dec;
    }
    out += '\n';
  }
  return out;
}

}  // namespace dpl

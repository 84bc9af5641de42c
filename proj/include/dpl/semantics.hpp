// Model theory over the canonical frame restricted to the atoms in play.
//
// A world is a truth assignment, indexed so that atom i (in lexicographic
// atom order) is true iff bit i of the index is set. A formula denotes the
// principal downset of its least informative distribution U(A); U is
// computed exactly by structural recursion:
//
//   U(α) = α        U(L) = 1 on V(L), 0 elsewhere
//   U(¬A) = 1 - U(A)   U(A & B) = U(A) ∧ U(B)   U(A ⊗ B) = U(A) × U(B)

#ifndef DPL_SEMANTICS_HPP
#define DPL_SEMANTICS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dpl/formula.hpp"
#include "dpl/weight.hpp"

namespace dpl {

struct Limits {
  std::size_t max_atoms = 16;
  std::size_t max_clauses = 4096;
};

struct FrameTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownAtom : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotL1Error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct FrameMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using World = std::size_t;

class Frame {
 public:
  Frame() = default;
  /// Sorts and deduplicates. Throws FrameTooLarge past the hard limit of 30
  /// atoms; use `bounded` to apply a configured cap.
  explicit Frame(std::vector<std::string> atoms);
  explicit Frame(const std::set<std::string>& atoms);

  static Frame bounded(const std::set<std::string>& atoms, const Limits& limits);

  const std::vector<std::string>& atoms() const { return atoms_; }
  std::size_t atom_count() const { return atoms_.size(); }
  std::size_t world_count() const { return std::size_t{1} << atoms_.size(); }
  std::optional<std::size_t> index_of(const std::string& atom) const;

  static bool holds(World w, std::size_t atom_index) { return (w >> atom_index) & 1U; }
  /// One character per atom in frame order, '1' for true.
  std::string assignment(World w) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::string> atoms_;
};

Frame frame_of(const Formula& f, const Limits& limits = {});
Frame frame_of(const Formula& a, const Formula& b, const Limits& limits = {});

/// A set of worlds of a fixed frame size, stored as a bitset.
class WorldSet {
 public:
  WorldSet() = default;
  explicit WorldSet(std::size_t world_count, bool full = false);

  static WorldSet atom(std::size_t world_count, std::size_t atom_index);

  std::size_t world_count() const { return n_; }
  bool contains(World w) const { return (bits_[w >> 6] >> (w & 63)) & 1U; }
  void insert(World w) { bits_[w >> 6] |= std::uint64_t{1} << (w & 63); }
  void erase(World w) { bits_[w >> 6] &= ~(std::uint64_t{1} << (w & 63)); }

  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool full() const { return count() == n_; }
  bool subset_of(const WorldSet& other) const;

  WorldSet operator~() const;
  WorldSet operator&(const WorldSet& other) const;
  WorldSet operator|(const WorldSet& other) const;

  friend bool operator==(const WorldSet&, const WorldSet&) = default;
  friend auto operator<=>(const WorldSet&, const WorldSet&) = default;

 private:
  void mask_tail();

  std::size_t n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// V(L): the worlds where the crisp formula `l` is classically true (¬ as
/// complement, & and ⊗ as intersection, 0/1 as empty/full). Throws
/// NotL1Error or UnknownAtom.
WorldSet classical_models(const Formula& l, const Frame& frame);

/// A possibility distribution: one weight per world of its frame.
class Dist {
 public:
  Dist(Frame frame, std::vector<Weight> values);
  static Dist constant(Frame frame, const Weight& w);
  static Dist indicator(Frame frame, const WorldSet& worlds);

  const Frame& frame() const { return frame_; }
  const std::vector<Weight>& values() const { return values_; }
  const Weight& operator[](World w) const { return values_[w]; }

  friend bool operator==(const Dist&, const Dist&) = default;

 private:
  Frame frame_;
  std::vector<Weight> values_;
};

Dist u_eval(const Formula& a, const Frame& frame);

/// Nec_π(X) = 1 - max of π outside X (the max of nothing is 0).
Weight necessity(const Dist& d, const WorldSet& x);

Dist dist_times(const Dist& a, const Dist& b);
Dist dist_min(const Dist& a, const Dist& b);
Dist dist_max(const Dist& a, const Dist& b);
Dist dist_complement(const Dist& d);
bool dist_leq(const Dist& a, const Dist& b);
/// Degree of consistency: the largest value of the distribution.
Weight height(const Dist& d);

/// Some world where a(w) > b(w), if any.
std::optional<World> first_violation(const Dist& a, const Dist& b);

/// A ⊨ B iff U(A) ≤ U(B) on the frame of their joint atoms.
bool entails_sem(const Formula& a, const Formula& b, const Limits& limits = {});

/// ⊗ of the left side (1 when empty) and ℘ of the right side (0 when empty).
Formula sequent_antecedent(const std::vector<Formula>& gamma);
Formula sequent_succedent(const std::vector<Formula>& delta);

bool valid_sequent_sem(const std::vector<Formula>& gamma, const std::vector<Formula>& delta,
                       const Limits& limits = {});

/// One line per world: `<assignment bits> <fraction> [<decimal>]`. A frame
/// without atoms prints its single world as `-`.
std::string dump_dist(const Dist& d);

}  // namespace dpl

#endif  // DPL_SEMANTICS_HPP

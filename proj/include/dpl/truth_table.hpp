#ifndef DPL_TRUTH_TABLE_HPP
#define DPL_TRUTH_TABLE_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "dpl/formula.hpp"
#include "dpl/semantics.hpp"

namespace dpl {

/// Indices of the frame atoms `models` actually depends on.
std::vector<std::size_t> support(const WorldSet& models, const Frame& frame);

/// A two-level crisp formula with exactly the given models: the shorter of a
/// prime-implicate CNF and a prime-implicant DNF over the support atoms
/// (CNF on ties). Constants 1 and 0 for the full and empty set.
///
/// Returns nullopt when the support exceeds `max_support` atoms, where the
/// 3^k cube table stops being cheap.
std::optional<Formula> synthesize(const WorldSet& models, const Frame& frame, std::size_t max_support = 10);

}  // namespace dpl

#endif  // DPL_TRUTH_TABLE_HPP

#ifndef DPL_CLAUSE_HPP
#define DPL_CLAUSE_HPP

#include "dpl/formula.hpp"
#include "dpl/weight.hpp"

namespace dpl {

/// A weighted classical clause α → L: the body L is required to be crisp
/// (is_l1), and the clause demands necessity at least α for L.
struct Clause {
  Weight weight;
  Formula body;

  friend bool operator==(const Clause&, const Clause&) = default;
};

/// The clause as a formula of the language: α → L.
inline Formula clause_formula(const Clause& c) {
  return make_arrow(Formula::constant(c.weight), c.body);
}

}  // namespace dpl

#endif  // DPL_CLAUSE_HPP

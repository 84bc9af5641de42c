// Knowledge bases: normal forms with a name, combined by expansion (&,
// pointwise min) or fusion (⊗, pointwise Łukasiewicz product).

#ifndef DPL_KNOWLEDGE_BASE_HPP
#define DPL_KNOWLEDGE_BASE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "dpl/normal_form.hpp"

namespace dpl {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KnowledgeBase {
  std::string source_name;
  NormalForm nf;  // simplified
};

KnowledgeBase make_kb(std::string name, std::vector<Clause> clauses, const Limits& limits = {});

std::string read_file(const std::string& path);
/// Reads and parses a KB file. Throws IoError or KbError.
KnowledgeBase load_kb(const std::string& path, const Limits& limits = {});

/// The distribution of the KB over the frame of its own atoms.
Dist kb_dist(const KnowledgeBase& k, const Limits& limits = {});

KnowledgeBase expand(const KnowledgeBase& k1, const KnowledgeBase& k2, const Limits& limits = {});
KnowledgeBase fuse(const KnowledgeBase& k1, const KnowledgeBase& k2, const Limits& limits = {});

/// The largest α with k ⊨ α → goal: the necessity of V(goal) under the KB's
/// distribution, over the joint frame. Throws NotL1Error for a goal that is
/// not crisp.
Weight query(const KnowledgeBase& k, const Formula& goal, const Limits& limits = {});

}  // namespace dpl

#endif  // DPL_KNOWLEDGE_BASE_HPP

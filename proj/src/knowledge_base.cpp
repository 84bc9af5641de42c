#include "dpl/knowledge_base.hpp"

#include <fstream>
#include <sstream>

#include "dpl/parser.hpp"

namespace dpl {

KnowledgeBase make_kb(std::string name, std::vector<Clause> clauses, const Limits& limits) {
  return KnowledgeBase{std::move(name), simplify(NormalForm(std::move(clauses)), limits)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

KnowledgeBase load_kb(const std::string& path, const Limits& limits) {
  return make_kb(path, parse_kb(read_file(path)), limits);
}

Dist kb_dist(const KnowledgeBase& k, const Limits& limits) {
  return u_of_nf(k.nf, Frame::bounded(k.nf.atoms(), limits));
}

KnowledgeBase expand(const KnowledgeBase& k1, const KnowledgeBase& k2, const Limits& limits) {
  return KnowledgeBase{k1.source_name + " & " + k2.source_name, with_nf(k1.nf, k2.nf, limits)};
}

KnowledgeBase fuse(const KnowledgeBase& k1, const KnowledgeBase& k2, const Limits& limits) {
  return KnowledgeBase{k1.source_name + " * " + k2.source_name, times_nf(k1.nf, k2.nf, limits)};
}

Weight query(const KnowledgeBase& k, const Formula& goal, const Limits& limits) {
  if (!is_l1(goal)) throw NotL1Error("query goal is not crisp: " + print_formula(goal));
  auto names = k.nf.atoms();
  collect_atoms(goal, names);
  const Frame frame = Frame::bounded(names, limits);
  return necessity(u_of_nf(k.nf, frame), classical_models(goal, frame));
}

}  // namespace dpl

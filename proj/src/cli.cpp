#include "dpl/cli.hpp"

#include <filesystem>
#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpl/checker.hpp"
#include "dpl/knowledge_base.hpp"
#include "dpl/parser.hpp"
#include "dpl/proof_io.hpp"
#include "dpl/prover.hpp"

namespace dpl {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct CliError {
  int code;
  std::string message;
};

struct Globals {
  Limits limits;
  bool json = false;
  bool unicode = false;
};

struct Context {
  Globals g;
  std::ostream& out;
  std::ostream& err;
  std::string command;

  PrintOptions print() const { return PrintOptions{g.unicode}; }
  std::string show(const Formula& f) const { return print_formula(f, print()); }

  void emit(const json& result) const {
    json envelope = {{"schema_version", kSchemaVersion}, {"command", command}, {"result", result}};
    out << envelope.dump(2) << '\n';
  }
};

std::string show_weight(const Weight& w) {
  const std::string frac = w.fraction();
  const auto dec = w.decimal();
  if (!dec || *dec == frac) return frac;
  return frac + " (" + *dec + ")";
}

std::string describe_world(const Frame& frame, World w) {
  if (frame.atom_count() == 0) return "the only world";
  std::string s;
  for (std::size_t i = 0; i < frame.atom_count(); ++i)
    s += (i ? " " : "") + frame.atoms()[i] + "=" + (Frame::holds(w, i) ? "1" : "0");
  return s;
}

json weight_json(const Weight& w) {
  const auto dec = w.decimal();
  return {{"fraction", w.fraction()}, {"decimal", dec ? json(*dec) : json(nullptr)}};
}

// A caret line under the offending span of a one-line expression.
std::string caret_report(const std::string& what, const ParseError& e, const std::string& text) {
  std::string msg = what + ": " + e.what() + "\n  " + text + "\n  ";
  const std::size_t start = std::min(e.span().start, text.size());
  const std::size_t end = std::max(start + 1, std::min(e.span().end, text.size()));
  msg += std::string(start, ' ') + std::string(end - start, '^');
  return msg;
}

Formula parse_arg(const std::string& text, const std::string& what) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    throw CliError{2, caret_report(what, e, text)};
  }
}

bool is_file(const std::string& arg) {
  std::error_code ec;
  return std::filesystem::is_regular_file(arg, ec);
}

KnowledgeBase kb_arg(const std::string& path, const Limits& limits) {
  try {
    return load_kb(path, limits);
  } catch (const KbError& e) {
    throw CliError{2, path + ": " + e.what()};
  }
}

json clauses_json(const std::vector<Clause>& cs, const Context& c) {
  json arr = json::array();
  for (const auto& cl : cs) {
    json item = weight_json(cl.weight);
    item["body"] = c.show(cl.body);
    arr.push_back(item);
  }
  return arr;
}

std::string kb_text(const NormalForm& nf, const PrintOptions& opts) {
  if (nf.empty()) return "# empty: equivalent to the constant 1\n";
  return print_kb(nf.clauses(), opts);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw IoError("cannot write '" + path + "'");
}

json dist_json(const Dist& d) {
  json worlds = json::array();
  for (World w = 0; w < d.values().size(); ++w) {
    json item = weight_json(d[w]);
    item["assignment"] = d.frame().assignment(w);
    worlds.push_back(item);
  }
  return {{"atoms", d.frame().atoms()}, {"worlds", worlds}};
}

int cmd_parse(const Context& c, const std::string& arg) {
  if (is_file(arg)) {
    std::vector<Clause> cs;
    try {
      cs = parse_kb(read_file(arg));
    } catch (const KbError& e) {
      throw CliError{2, arg + ": " + e.what()};
    }
    if (c.g.json)
      c.emit({{"kind", "kb"}, {"clauses", clauses_json(cs, c)}});
    else
      c.out << print_kb(cs, c.print());
    return 0;
  }
  const Formula f = parse_arg(arg, "formula");
  if (c.g.json) {
    c.emit({{"kind", "formula"}, {"pretty", c.show(f)}, {"ast", print_ast(f)}, {"atoms", atoms(f)}});
  } else {
    c.out << c.show(f) << '\n' << print_ast(f) << '\n';
  }
  return 0;
}

int cmd_eval(const Context& c, const std::string& arg) {
  const Formula f = parse_arg(arg, "formula");
  const Dist d = u_eval(f, frame_of(f, c.g.limits));
  if (c.g.json)
    c.emit(dist_json(d));
  else
    c.out << dump_dist(d);
  return 0;
}

int cmd_nf(const Context& c, const std::string& arg) {
  const NormalForm nf = normalize(parse_arg(arg, "formula"), c.g.limits);
  if (c.g.json)
    c.emit({{"clauses", clauses_json(nf.clauses(), c)}});
  else
    c.out << kb_text(nf, c.print());
  return 0;
}

int cmd_entails(const Context& c, const std::string& a_text, const std::string& b_text, const std::string& proof_path) {
  const Formula a = parse_arg(a_text, "premise");
  const Formula b = parse_arg(b_text, "goal");
  const Frame frame = frame_of(a, b, c.g.limits);
  const Dist ua = u_eval(a, frame);
  const Dist ub = u_eval(b, frame);
  const auto bad = first_violation(ua, ub);

  json result = {{"entailed", !bad}};
  std::string text;
  if (bad) {
    result["counterexample"] = {{"assignment", frame.assignment(*bad)},
                                {"premise", weight_json(ua[*bad])},
                                {"goal", weight_json(ub[*bad])}};
    text = "not entailed: at " + describe_world(frame, *bad) + " the premise allows " + show_weight(ua[*bad]) + " but the goal only " + show_weight(ub[*bad]) + "\n";
  } else {
    text = "entailed\n";
  }

  if (!bad && !proof_path.empty()) {
    const NormalForm na = normalize(a, c.g.limits);
    const NormalForm nb = normalize(b, c.g.limits);
    ProofResult r = prove_nf(na, nb, c.g.limits);
    if (auto* fail = std::get_if<NotDerivable>(&r)) throw std::logic_error("prover disagrees: " + fail->message());
    const ProofNode& p = std::get<ProofNode>(r);
    std::vector<std::string> header = {
        "premise: " + print_formula(a),
        "goal: " + print_formula(b),
        "the proof below derives the normal form of the goal from that of the premise",
    };
    for (const auto& cl : na.clauses()) header.push_back("premise normal form: " + cl.weight.str() + " :: " + print_formula(cl.body));
    for (const auto& cl : nb.clauses()) header.push_back("goal normal form: " + cl.weight.str() + " :: " + print_formula(cl.body));
    write_text_file(proof_path, write_proof(p, header));
    result["proof"] = {{"path", proof_path}, {"nodes", proof_size(p)}};
    text += "proof of the normal-form entailment written to " + proof_path + " (" + std::to_string(proof_size(p)) +
            " nodes)\n";
  }

  if (c.g.json)
    c.emit(result);
  else
    c.out << text;
  return bad ? 1 : 0;
}

int cmd_query(const Context& c, const std::string& kb_path, const std::string& goal_text) {
  const KnowledgeBase k = kb_arg(kb_path, c.g.limits);
  const Weight w = query(k, parse_arg(goal_text, "goal"), c.g.limits);
  if (c.g.json)
    c.emit(weight_json(w));
  else
    c.out << show_weight(w) << '\n';
  return 0;
}

int cmd_combine(const Context& c, bool fusion, const std::string& p1, const std::string& p2, const std::string& out_path) {
  const KnowledgeBase k1 = kb_arg(p1, c.g.limits);
  const KnowledgeBase k2 = kb_arg(p2, c.g.limits);
  const KnowledgeBase k = fusion ? fuse(k1, k2, c.g.limits) : expand(k1, k2, c.g.limits);
  const std::string text = kb_text(k.nf, c.print());
  // Files stay ASCII so they can be read back.
  if (!out_path.empty()) write_text_file(out_path, kb_text(k.nf, PrintOptions{}));
  if (c.g.json) {
    c.emit({{"clauses", clauses_json(k.nf.clauses(), c)}, {"output", out_path.empty() ? json(nullptr) : json(out_path)}});
  } else if (out_path.empty()) {
    c.out << text;
  } else {
    c.out << "wrote " << k.nf.size() << " clause(s) to " << out_path << '\n';
  }
  return 0;
}

int cmd_check(const Context& c, const std::string& path) {
  ProofNode p;
  try {
    p = read_proof(read_file(path));
  } catch (const ParseError& e) {
    throw CliError{2, path + ": " + e.what()};
  }
  const auto v = check_proof(p);
  json result = {{"valid", !v}, {"conclusion", print_sequent(p.conclusion, c.print())}, {"nodes", proof_size(p)}};
  if (v) {
    result["violation"] = {{"rule", v->rule}, {"path", v->path}, {"conclusion", v->conclusion}, {"reason", v->reason}};
    c.err << "rule violation: " << v->message() << '\n';
  }
  if (c.g.json)
    c.emit(result);
  else if (!v)
    c.out << "valid: " << print_sequent(p.conclusion, c.print()) << " (" << proof_size(p) << " nodes)\n";
  return v ? 1 : 0;
}

int cmd_height(const Context& c, const std::string& arg) {
  Weight h;
  if (is_file(arg)) {
    h = height(kb_dist(kb_arg(arg, c.g.limits), c.g.limits));
  } else {
    const Formula f = parse_arg(arg, "formula");
    h = height(u_eval(f, frame_of(f, c.g.limits)));
  }
  if (c.g.json)
    c.emit(weight_json(h));
  else
    c.out << show_weight(h) << '\n';
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reasoning with weighted possibilistic formulas", "dpl"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--max-atoms", g.limits.max_atoms, "Largest atom frame evaluated (default 16)")
      ->check(CLI::Range(0, 30));
  app.add_option("--max-clauses", g.limits.max_clauses, "Clause cap for normal-form steps (default 4096)");
  app.add_flag("--json", g.json, "Machine-readable output envelope");
  app.add_flag("--unicode", g.unicode, "Print formulas with ¬ & ⊗ ⊕ ℘ →");

  std::string a1, a2, proof_path, out_path;
  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };
  auto* parse = sub("parse", "Echo a formula (pretty form and tree) or a KB file");
  parse->add_option("input", a1, "Formula or KB file")->required();
  auto* eval = sub("eval", "Dump the least informative distribution of a formula");
  eval->add_option("formula", a1)->required();
  auto* nf = sub("nf", "Print the weighted-clause normal form in KB format");
  nf->add_option("formula", a1)->required();
  auto* entails = sub("entails", "Decide A |= B (exit 0 if entailed, 1 if not)");
  entails->add_option("premise", a1)->required();
  entails->add_option("goal", a2)->required();
  entails->add_option("--proof", proof_path, "Write a checkable proof of the normal-form entailment");
  auto* query_cmd = sub("query", "Necessity degree of a crisp goal under a KB file");
  query_cmd->add_option("kb", a1)->required();
  query_cmd->add_option("goal", a2)->required();
  auto* fuse_cmd = sub("fuse", "Combine two KB files from distinct sources (*)");
  fuse_cmd->add_option("kb1", a1)->required();
  fuse_cmd->add_option("kb2", a2)->required();
  fuse_cmd->add_option("-o,--output", out_path);
  auto* expand_cmd = sub("expand", "Combine two KB files from one source (&)");
  expand_cmd->add_option("kb1", a1)->required();
  expand_cmd->add_option("kb2", a2)->required();
  expand_cmd->add_option("-o,--output", out_path);
  auto* check = sub("check", "Check a proof file (exit 0 if valid, 1 if not)");
  check->add_option("proof", a1)->required();
  auto* height_cmd = sub("height", "Degree of consistency of a formula or KB file");
  height_cmd->add_option("input", a1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Context c{g, out, err, app.get_subcommands().front()->get_name()};
  try {
    if (*parse) return cmd_parse(c, a1);
    if (*eval) return cmd_eval(c, a1);
    if (*nf) return cmd_nf(c, a1);
    if (*entails) return cmd_entails(c, a1, a2, proof_path);
    if (*query_cmd) return cmd_query(c, a1, a2);
    if (*fuse_cmd) return cmd_combine(c, true, a1, a2, out_path);
    if (*expand_cmd) return cmd_combine(c, false, a1, a2, out_path);
    if (*check) return cmd_check(c, a1);
    if (*height_cmd) return cmd_height(c, a1);
  } catch (const CliError& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const FrameTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const BlowupLimit& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {  // not crisp, unknown atom, malformed weight
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {  // weight out of range
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 2;
}

}  // namespace dpl

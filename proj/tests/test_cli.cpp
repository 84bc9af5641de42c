#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dpl/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dpl");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = dpl::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "dpl_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto path = (scratch() / name).string();
  std::ofstream(path) << text;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("query prints a fraction and its decimal") {
  const auto kb = write("kb.plq", "0.7 :: p\n0.4 :: p -> q\n");
  const Run r = run({"query", kb, "q"});
  CHECK(r.code == 0);
  CHECK(r.out == "2/5 (0.4)\n");
  CHECK(run({"query", kb, "p"}).out == "7/10 (0.7)\n");
  const auto third = write("third.plq", "1/3 :: p\n");
  CHECK(run({"query", third, "p"}).out == "1/3\n");
  CHECK(run({"query", kb, "r"}).out == "0\n");
}

TEST_CASE("entails sets the exit code") {
  CHECK(run({"entails", "0.7 -> p", "0.5 -> p"}).code == 0);
  const Run no = run({"entails", "0.5 -> p", "0.7 -> p"});
  CHECK(no.code == 1);
  CHECK(no.out.find("p=0") != std::string::npos);
}

TEST_CASE("entails writes a checkable proof") {
  const auto proof = (scratch() / "gmp.proof").string();
  const Run r = run({"entails", "(0.7 -> p) & (0.4 -> p -> q)", "0.4 -> q", "--proof", proof});
  CHECK(r.code == 0);
  const std::string text = slurp(proof);
  CHECK(text.find("; premise normal form: 0.7 :: p") != std::string::npos);
  const Run c = run({"check", proof});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("valid: ", 0) == 0);
}

TEST_CASE("check rejects contraction") {
  const auto bad = write("bad.proof", "(contraction [p |- p]\n  (wL [p, p |- p] {i: 1}\n    (id [p |- p])))\n");
  const Run r = run({"check", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("rule violation: rule 'contraction'") != std::string::npos);
  const auto garbage = write("garbage.proof", "(id [p |- p]");
  CHECK(run({"check", garbage}).code == 2);
}

TEST_CASE("parse, eval, nf, height") {
  const Run p = run({"parse", "0.7 -> p"});
  CHECK(p.out == "0.7 -> p\n(neg (times (const 7/10) (neg (atom p))))\n");
  CHECK(run({"eval", "0.7 -> p"}).out == "0 3/10 0.3\n1 1 1\n");
  CHECK(run({"nf", "(0.8 -> p) * (0.7 -> q)"}).out == "1 :: p | q\n0.8 :: p | ~q\n0.7 :: ~p | q\n");
  CHECK(run({"nf", "1"}).out.rfind("# empty", 0) == 0);
  CHECK(run({"height", "p & ~p"}).out == "0\n");
  const auto kb = write("h.plq", "0.6 :: p\n0.6 :: ~p\n");
  CHECK(run({"height", kb}).out == "2/5 (0.4)\n");
  const auto kbfile = write("echo.plq", "# c\n0.7 :: p\n");
  CHECK(run({"parse", kbfile}).out == "0.7 :: p\n");
}

TEST_CASE("fuse and expand") {
  const auto a = write("a.plq", "0.6 :: p\n");
  const auto b = write("b.plq", "0.8 :: p\n");
  CHECK(run({"fuse", a, b}).out == "1 :: p\n");
  CHECK(run({"expand", a, b}).out == "0.8 :: p\n");
  const auto out = (scratch() / "fused.plq").string();
  CHECK(run({"fuse", a, b, "-o", out}).code == 0);
  CHECK(slurp(out) == "1 :: p\n");
}

TEST_CASE("json envelope") {
  const auto kb = write("kb.plq", "0.7 :: p\n0.4 :: p -> q\n");
  const Run r = run({"--json", "query", kb, "q"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "query");
  CHECK(j["result"]["fraction"] == "2/5");
  CHECK(j["result"]["decimal"] == "0.4");
  const auto e = nlohmann::json::parse(run({"entails", "0.5 -> p", "0.7 -> p", "--json"}).out);
  CHECK(e["result"]["entailed"] == false);
  CHECK(e["result"]["counterexample"]["assignment"] == "0");
}

TEST_CASE("error exit codes") {
  const Run syntax = run({"eval", "p & & q"});
  CHECK(syntax.code == 2);
  CHECK(syntax.err.find("^") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"query", (scratch() / "nope.plq").string(), "q"}).code == 2);
  const auto kb = write("kb.plq", "0.7 :: p\n");
  CHECK(run({"query", kb, "0.5 -> q"}).code == 2);
  const auto badkb = write("bad.plq", "0.7 :: p\n0.2 :: 0.5 & q\n");
  const Run b = run({"query", badkb, "q"});
  CHECK(b.code == 2);
  CHECK(b.err.find("line 2") != std::string::npos);
  CHECK(run({"--max-atoms", "2", "eval", "p & q & r"}).code == 3);
  CHECK(run({"--max-clauses", "4", "nf", "~((0.5 -> p) & (0.6 -> q) & (0.7 -> r))"}).code == 3);
}

TEST_CASE("output is deterministic") {
  const auto a = write("d1.plq", "0.6 :: p | q\n0.3 :: ~r\n");
  const auto b = write("d2.plq", "0.8 :: p -> r\n");
  const Run x = run({"fuse", a, b});
  const Run y = run({"fuse", a, b});
  CHECK(x.out == y.out);
}

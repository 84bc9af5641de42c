// Concrete ASCII syntax for formulas and knowledge-base files.
//
//   formula := par ("->" formula)?
//   par     := oplus ("%" oplus)*
//   oplus   := with ("|" with)*
//   with    := times ("&" times)*
//   times   := unary ("*" unary)*
//   unary   := "~" unary | atom | weight | "(" formula ")"
//
// `->`, `|` and `%` are desugared on the way in; the printer folds the
// expansions back so that printing and re-parsing is the identity.

#ifndef DPL_PARSER_HPP
#define DPL_PARSER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dpl/clause.hpp"
#include "dpl/formula.hpp"

namespace dpl {

struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : std::runtime_error(message), span_(span) {}

  SourceSpan span() const { return span_; }

 private:
  SourceSpan span_;
};

/// A KB-file error; `line` is 1-based and the span indexes the whole file.
class KbError : public ParseError {
 public:
  KbError(const std::string& message, SourceSpan span, std::size_t line)
      : ParseError("line " + std::to_string(line) + ": " + message, span), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Formula parse_formula(std::string_view text);

struct PrintOptions {
  bool unicode = false;  // ¬ & ⊗ ⊕ ℘ →; output only, the parser is ASCII
};

std::string print_formula(const Formula& f, const PrintOptions& opts = {});

/// Debug rendering of the raw tree, e.g. `(neg (times (const 7/10) (atom p)))`.
std::string print_ast(const Formula& f);

/// Parses `weight :: formula` lines. `#` starts a comment; blank lines are
/// skipped. Every body must be crisp (is_l1).
std::vector<Clause> parse_kb(std::string_view text);

/// Inverse of parse_kb: one `weight :: body` line per clause.
std::string print_kb(const std::vector<Clause>& clauses, const PrintOptions& opts = {});

}  // namespace dpl

#endif  // DPL_PARSER_HPP

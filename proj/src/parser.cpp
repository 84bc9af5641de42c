#include "dpl/parser.hpp"

#include <cctype>
#include <sstream>

namespace dpl {

namespace {

enum class Tok { Ident, Number, Tilde, Amp, Star, Bar, Percent, Arrow, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "atom";
    case Tok::Number: return "weight";
    case Tok::Tilde: return "'~'";
    case Tok::Amp: return "'&'";
    case Tok::Star: return "'*'";
    case Tok::Bar: return "'|'";
    case Tok::Percent: return "'%'";
    case Tok::Arrow: return "'->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::End: return "end of input";
  }
  return "?";
}

bool is_binary(Tok t) {
  return t == Tok::Amp || t == Tok::Star || t == Tok::Bar || t == Tok::Percent || t == Tok::Arrow;
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digit = [&](std::size_t k) { return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); };
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), {start, i}});
      continue;
    }
    if (std::isdigit(c)) {
      while (digit(i)) ++i;
      if (i < s.size() && s[i] == '.') {
        ++i;
        if (!digit(i)) throw ParseError("malformed decimal literal", {start, i});
        while (digit(i)) ++i;
      } else if (i < s.size() && s[i] == '/') {
        ++i;
        if (!digit(i)) throw ParseError("malformed fraction literal", {start, i});
        while (digit(i)) ++i;
      }
      if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '.' || s[i] == '/'))
        throw ParseError("malformed weight literal", {start, i + 1});
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), {start, i}});
      continue;
    }
    Tok t;
    std::size_t len = 1;
    switch (c) {
      case '~': t = Tok::Tilde; break;
      case '&': t = Tok::Amp; break;
      case '*': t = Tok::Star; break;
      case '|': t = Tok::Bar; break;
      case '%': t = Tok::Percent; break;
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          t = Tok::Arrow;
          len = 2;
          break;
        }
        [[fallthrough]];
      default: {
        std::string shown = std::isprint(c) ? std::string(1, static_cast<char>(c)) : "\\x" + std::to_string(c);
        throw ParseError("unexpected character '" + shown + "'", {start, start + 1});
      }
    }
    i += len;
    out.push_back({t, std::string(s.substr(start, len)), {start, i}});
  }
  out.push_back({Tok::End, "", {s.size(), s.size()}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse_all() {
    if (peek().kind == Tok::End) throw ParseError("empty formula", peek().span);
    Formula f = formula();
    if (peek().kind == Tok::RParen) throw ParseError("unmatched ')'", peek().span);
    if (peek().kind != Tok::End)
      throw ParseError(std::string("unexpected ") + describe(peek().kind), peek().span);
    return f;
  }

 private:
  static constexpr int kMaxDepth = 1000;

  struct DepthGuard {
    DepthGuard(int& d, SourceSpan at) : depth(d) {
      if (++depth > kMaxDepth) throw ParseError("formula nested too deeply", at);
    }
    ~DepthGuard() { --depth; }
    int& depth;
  };

  static void check_depth(const Formula& f, SourceSpan at) {
    if (f.depth() > kMaxDepth) throw ParseError("formula nested too deeply", at);
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  void operand_follows(const Token& op) {
    const Tok k = peek().kind;
    if (k == Tok::End || k == Tok::RParen || is_binary(k))
      throw ParseError(std::string("operator ") + describe(op.kind) + " is missing its right operand", op.span);
  }

  Formula formula() {
    DepthGuard g(depth_, peek().span);
    Formula lhs = par();
    if (peek().kind == Tok::Arrow) {
      const Token& op = take();
      operand_follows(op);
      Formula f = make_arrow(std::move(lhs), formula());
      check_depth(f, op.span);
      return f;
    }
    return lhs;
  }

  Formula par() {
    Formula f = oplus();
    while (peek().kind == Tok::Percent) {
      const Token& op = take();
      operand_follows(op);
      f = make_par(std::move(f), oplus());
      check_depth(f, op.span);
    }
    return f;
  }

  Formula oplus() {
    Formula f = with();
    while (peek().kind == Tok::Bar) {
      const Token& op = take();
      operand_follows(op);
      f = make_oplus(std::move(f), with());
      check_depth(f, op.span);
    }
    return f;
  }

  Formula with() {
    Formula f = times();
    while (peek().kind == Tok::Amp) {
      const Token& op = take();
      operand_follows(op);
      f = Formula::with(std::move(f), times());
      check_depth(f, op.span);
    }
    return f;
  }

  Formula times() {
    Formula f = unary();
    while (peek().kind == Tok::Star) {
      const Token& op = take();
      operand_follows(op);
      f = Formula::times(std::move(f), unary());
      check_depth(f, op.span);
    }
    return f;
  }

  Formula unary() {
    DepthGuard g(depth_, peek().span);
    const Token& t = take();
    switch (t.kind) {
      case Tok::Tilde:
        operand_follows(t);
        {
          Formula f = Formula::neg(unary());
          check_depth(f, t.span);
          return f;
        }
      case Tok::Ident: return Formula::atom(t.text);
      case Tok::Number:
        try {
          return Formula::constant(Weight::parse(t.text));
        } catch (const WeightRangeError&) {
          throw ParseError("weight " + t.text + " outside [0,1]", t.span);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), t.span);
        }
      case Tok::LParen: {
        if (peek().kind == Tok::RParen) throw ParseError("empty parentheses", {t.span.start, peek().span.end});
        Formula f = formula();
        if (peek().kind != Tok::RParen) {
          if (peek().kind == Tok::End) throw ParseError("unclosed '('", t.span);
          throw ParseError(std::string("expected ')' but found ") + describe(peek().kind), peek().span);
        }
        take();
        return f;
      }
      case Tok::RParen: throw ParseError("unmatched ')'", t.span);
      case Tok::End: throw ParseError("unexpected end of input", t.span);
      default:
        throw ParseError(std::string("operator ") + describe(t.kind) + " is missing its left operand", t.span);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

// Binding strength, loosest first.
enum Level { kArrow = 1, kPar, kOplus, kWith, kTimes, kUnary };

struct Symbols {
  const char* neg;
  const char* with;
  const char* times;
  const char* oplus;
  const char* par;
  const char* arrow;
};

constexpr Symbols kAscii{"~", " & ", " * ", " | ", " % ", " -> "};
constexpr Symbols kUnicode{"¬", " & ", " ⊗ ", " ⊕ ", " ℘ ", " → "};

class Printer {
 public:
  explicit Printer(const Symbols& sym) : sym_(sym) {}

  void emit(const Formula& f, int min_level) {
    const int lvl = level(f);
    const bool parens = lvl < min_level;
    if (parens) out_ << '(';
    body(f, lvl);
    if (parens) out_ << ')';
  }

  std::string str() const { return out_.str(); }

 private:
  static int level(const Formula& f) {
    switch (f.kind()) {
      case Kind::Atom:
      case Kind::Const: return kUnary;
      case Kind::With: return kWith;
      case Kind::Times: return kTimes;
      case Kind::Neg:
        // ¬(¬X ⊗ ¬B) reads as both X' ℘ B and ¬X → B; a compound X reads better as an arrow.
        if (match_par(f) && !compound_antecedent(f)) return kPar;
        if (match_arrow(f)) return kArrow;
        if (match_oplus(f)) return kOplus;
        return kUnary;
    }
    return kUnary;
  }

  static bool compound_antecedent(const Formula& f) {
    const Formula& x = f.sub().left();
    return x.is(Kind::Neg) && x.sub().is(Kind::Times);
  }

  void binary(const Formula& l, const char* op, const Formula& r, int lvl, bool right_assoc) {
    emit(l, right_assoc ? lvl + 1 : lvl);
    out_ << op;
    emit(r, right_assoc ? lvl : lvl + 1);
  }

  void body(const Formula& f, int lvl) {
    switch (f.kind()) {
      case Kind::Atom: out_ << f.name(); return;
      case Kind::Const: out_ << f.weight().str(); return;
      case Kind::With: binary(f.left(), sym_.with, f.right(), kWith, false); return;
      case Kind::Times: binary(f.left(), sym_.times, f.right(), kTimes, false); return;
      case Kind::Neg:
        if (lvl == kPar) {
          auto [a, b] = *match_par(f);
          binary(a, sym_.par, b, kPar, false);
        } else if (lvl == kArrow) {
          auto [a, b] = *match_arrow(f);
          binary(a, sym_.arrow, b, kArrow, true);
        } else if (lvl == kOplus) {
          auto [a, b] = *match_oplus(f);
          binary(a, sym_.oplus, b, kOplus, false);
        } else {
          out_ << sym_.neg;
          emit(f.sub(), kUnary);
        }
        return;
    }
  }

  const Symbols& sym_;
  std::ostringstream out_;
};

void ast(const Formula& f, std::ostringstream& out) {
  switch (f.kind()) {
    case Kind::Atom: out << "(atom " << f.name() << ')'; return;
    case Kind::Const: out << "(const " << f.weight().fraction() << ')'; return;
    case Kind::Neg:
      out << "(neg ";
      ast(f.sub(), out);
      out << ')';
      return;
    case Kind::With:
    case Kind::Times:
      out << (f.is(Kind::With) ? "(with " : "(times ");
      ast(f.left(), out);
      out << ' ';
      ast(f.right(), out);
      out << ')';
      return;
  }
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset += b;
  return s.substr(b, e - b);
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(lex(text)).parse_all(); }

std::string print_formula(const Formula& f, const PrintOptions& opts) {
  Printer p(opts.unicode ? kUnicode : kAscii);
  p.emit(f, 0);
  return p.str();
}

std::string print_ast(const Formula& f) {
  std::ostringstream out;
  ast(f, out);
  return out.str();
}

std::vector<Clause> parse_kb(std::string_view text) {
  std::vector<Clause> out;
  std::size_t line_no = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    ++line_no;
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t off = line_start;
    line = trim(line, off);
    if (!line.empty()) {
      const std::size_t sep = line.find("::");
      if (sep == std::string_view::npos)
        throw KbError("expected 'weight :: formula'", {off, off + line.size()}, line_no);
      std::size_t w_off = off;
      const std::string_view w_text = trim(line.substr(0, sep), w_off);
      std::size_t b_off = off + sep + 2;
      const std::string_view b_text = trim(line.substr(sep + 2), b_off);
      Weight w;
      try {
        w = Weight::parse(std::string(w_text));
      } catch (const WeightRangeError&) {
        throw KbError("weight " + std::string(w_text) + " outside [0,1]", {w_off, w_off + w_text.size()}, line_no);
      } catch (const std::invalid_argument&) {
        throw KbError("malformed weight '" + std::string(w_text) + "'", {w_off, w_off + w_text.size()}, line_no);
      }
      Formula body = Formula::zero();
      try {
        body = parse_formula(b_text);
      } catch (const ParseError& e) {
        throw KbError(e.what(), {b_off + e.span().start, b_off + e.span().end}, line_no);
      }
      if (!is_l1(body))
        throw KbError("clause body not in L1 (contains a constant strictly between 0 and 1)",
                      {b_off, b_off + b_text.size()}, line_no);
      out.push_back({std::move(w), std::move(body)});
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  return out;
}

std::string print_kb(const std::vector<Clause>& clauses, const PrintOptions& opts) {
  std::string out;
  for (const auto& c : clauses) out += c.weight.str() + " :: " + print_formula(c.body, opts) + "\n";
  return out;
}

}  // namespace dpl

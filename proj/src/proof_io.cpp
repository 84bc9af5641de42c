#include "dpl/proof_io.hpp"

#include <cctype>

namespace dpl {

namespace {

void write_node(const ProofNode& p, std::size_t depth, std::string& out) {
  out.append(2 * depth, ' ');
  out += '(' + p.rule + " [" + print_sequent(p.conclusion) + ']';
  std::vector<std::string> params;
  if (p.params.index) params.push_back("i: " + std::to_string(*p.params.index));
  if (p.params.component) params.push_back("c: " + std::to_string(*p.params.component));
  if (p.params.cut) params.push_back("cut: " + print_formula(*p.params.cut));
  if (!params.empty()) {
    out += " {";
    for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "; " : "") + params[i];
    out += '}';
  }
  for (const auto& q : p.premises) {
    out += '\n';
    write_node(q, depth + 1, out);
  }
  out += ')';
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  ProofNode document() {
    skip();
    ProofNode p = node();
    skip();
    if (pos_ != text_.size()) fail("unexpected text after the proof");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("proof file: " + message, {pos_, std::min(pos_ + 1, text_.size())});
  }

  void skip() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  // Text up to the closing delimiter; formulas never contain it.
  std::string_view until(char close) {
    const std::size_t end = text_.find(close, pos_);
    if (end == std::string_view::npos) fail(std::string("missing '") + close + "'");
    const std::string_view body = text_.substr(pos_, end - pos_);
    const std::size_t start = pos_;
    pos_ = end + 1;
    body_start_ = start;
    return body;
  }

  Formula formula_at(std::string_view s, std::size_t offset) {
    try {
      return parse_formula(s);
    } catch (const ParseError& e) {
      throw ParseError(std::string("proof file: ") + e.what(), {offset + e.span().start, offset + e.span().end});
    }
  }

  std::size_t number(std::string_view s) {
    if (s.empty() || s.size() > 9) fail("bad parameter value");
    std::size_t v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail("bad parameter value");
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  ProofParams params(std::string_view body, std::size_t offset) {
    ProofParams p;
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t end = body.find(';', start);
      if (end == std::string_view::npos) end = body.size();
      const std::string_view item = body.substr(start, end - start);
      const std::size_t colon = item.find(':');
      if (colon == std::string_view::npos) fail("parameter without ':'");
      const std::string_view key = trim(item.substr(0, colon));
      const std::string_view raw = item.substr(colon + 1);
      const std::string_view value = trim(raw);
      if (key == "i" && !p.index) {
        p.index = number(value);
      } else if (key == "c" && !p.component) {
        p.component = static_cast<int>(number(value));
      } else if (key == "cut" && !p.cut) {
        p.cut = formula_at(raw, offset + start + colon + 1);
      } else {
        fail("unknown or repeated parameter '" + std::string(key) + "'");
      }
      start = end + 1;
    }
    return p;
  }

  ProofNode node() {
    expect('(');
    skip();
    const std::size_t name_start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == name_start) fail("expected a rule name");
    ProofNode p;
    p.rule = std::string(text_.substr(name_start, pos_ - name_start));

    expect('[');
    const std::string_view seq = until(']');
    const std::size_t seq_start = body_start_;
    try {
      p.conclusion = parse_sequent(seq);
    } catch (const ParseError& e) {
      throw ParseError(std::string("proof file: ") + e.what(),
                       {seq_start + e.span().start, seq_start + e.span().end});
    }

    if (peek('{')) {
      ++pos_;
      const std::string_view body = until('}');
      p.params = params(body, body_start_);
    }
    while (peek('(')) p.premises.push_back(node());
    expect(')');
    return p;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t body_start_ = 0;
};

}  // namespace

std::string write_proof(const ProofNode& p, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "; " + c + '\n';
  write_node(p, 0, out);
  out += '\n';
  return out;
}

ProofNode read_proof(std::string_view text) { return Reader(text).document(); }

}  // namespace dpl

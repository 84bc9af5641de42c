#include "dpl/sequent.hpp"

#include <algorithm>

namespace dpl {

namespace {

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; });
}

std::vector<Formula> parse_side(std::string_view text, std::size_t offset) {
  std::vector<Formula> out;
  if (blank(text)) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view part = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    if (blank(part))
      throw ParseError("empty formula in sequent", {offset + start, offset + start + part.size()});
    try {
      out.push_back(parse_formula(part));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), {offset + start + e.span().start, offset + start + e.span().end});
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

bool same_multiset(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  if (a.size() != b.size()) return false;
  auto x = a;
  auto y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

bool equivalent(const Sequent& a, const Sequent& b) {
  return same_multiset(a.gamma, b.gamma) && same_multiset(a.delta, b.delta);
}

std::string print_sequent(const Sequent& s, const PrintOptions& opts) {
  auto side = [&](const std::vector<Formula>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += print_formula(v[i], opts);
    }
    return out;
  };
  std::string out = side(s.gamma);
  if (!out.empty()) out += ' ';
  out += opts.unicode ? "⊢" : "|-";
  const std::string right = side(s.delta);
  if (!right.empty()) out += ' ' + right;
  return out;
}

Sequent parse_sequent(std::string_view text) {
  std::size_t turnstile = std::string_view::npos;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if (text[i] == '|' && text[i + 1] == '-' && (i + 2 >= text.size() || text[i + 2] != '>')) {
      turnstile = i;
      break;
    }
  }
  if (turnstile == std::string_view::npos) throw ParseError("sequent has no '|-'", {0, text.size()});
  Sequent s;
  s.gamma = parse_side(text.substr(0, turnstile), 0);
  s.delta = parse_side(text.substr(turnstile + 2), turnstile + 2);
  return s;
}

std::size_t proof_size(const ProofNode& p) {
  std::size_t n = 1;
  for (const auto& q : p.premises) n += proof_size(q);
  return n;
}

}  // namespace dpl

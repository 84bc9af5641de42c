#include "dpl/weight.hpp"

#include <cctype>

namespace dpl {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Weight::Weight(const mpq_class& value) : value_(value) {
  value_.canonicalize();
  if (sgn(value_) < 0 || cmp(value_, 1) > 0)
    throw WeightRangeError("weight " + value_.get_str() + " outside [0,1]");
}

Weight::Weight(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  *this = Weight(mpq_class(num, den));
}

Weight Weight::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed fraction '" + text + "'");
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Weight(mpq_class(mpz_class(num, 10), d));
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) {
    if (!all_digits(text)) throw std::invalid_argument("malformed weight '" + text + "'");
    return Weight(mpq_class(mpz_class(text, 10)));
  }
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac))
    throw std::invalid_argument("malformed decimal '" + text + "'");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
  mpz_class num(whole.empty() ? std::string("0") : whole, 10);
  num = num * scale + (frac.empty() ? mpz_class(0) : mpz_class(frac, 10));
  return Weight(mpq_class(num, scale));
}

std::string Weight::fraction() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::optional<std::string> Weight::decimal() const {
  mpz_class den = value_.get_den();
  unsigned twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  if (den != 1) return std::nullopt;
  const unsigned digits = twos > fives ? twos : fives;
  if (digits == 0) return value_.get_num().get_str();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = value_.get_num() * scale / value_.get_den();
  std::string s = scaled.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return s;
}

std::string Weight::str() const {
  auto d = decimal();
  return d ? *d : fraction();
}

Weight w_times(const Weight& a, const Weight& b) {
  mpq_class s = a.value() + b.value() - 1;
  if (sgn(s) < 0) return Weight::zero();
  return Weight(s);
}

Weight w_neg(const Weight& a) { return Weight(mpq_class(1 - a.value())); }

Weight w_min(const Weight& a, const Weight& b) { return b < a ? b : a; }

Weight w_max(const Weight& a, const Weight& b) { return a < b ? b : a; }

Weight w_par(const Weight& a, const Weight& b) {
  mpq_class s = a.value() + b.value();
  if (cmp(s, 1) > 0) return Weight::one();
  return Weight(s);
}

}  // namespace dpl

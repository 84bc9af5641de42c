// Exact truth degrees in [0,1] and the Łukasiewicz operations on them.

#ifndef DPL_WEIGHT_HPP
#define DPL_WEIGHT_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace dpl {

struct WeightRangeError : std::domain_error {
  using std::domain_error::domain_error;
};

/// An exact rational number in the closed unit interval.
///
/// The range invariant is checked on construction; every operation below is
/// closed on [0,1], so no result ever needs clamping after the fact.
class Weight {
 public:
  Weight() = default;  // zero

  /// Throws WeightRangeError if `value` lies outside [0,1].
  explicit Weight(const mpq_class& value);
  Weight(long num, long den);

  static Weight zero() { return Weight(); }
  static Weight one() { return Weight(1, 1); }

  /// Accepts "p/q", an integer, or a decimal literal such as "0.7" (read
  /// exactly as 7/10). Throws std::invalid_argument on malformed text and
  /// WeightRangeError on a well-formed value outside [0,1].
  static Weight parse(const std::string& text);

  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return cmp(value_, 1) == 0; }
  bool is_crisp() const { return is_zero() || is_one(); }

  /// Lowest terms, "n/d", or just "n" when the denominator is 1.
  std::string fraction() const;
  /// The finite decimal expansion if one exists ("0.4", "1"), else nullopt.
  std::optional<std::string> decimal() const;
  /// Decimal when finite, fraction otherwise. This is the literal form the
  /// parser reads back exactly.
  std::string str() const;

  friend bool operator==(const Weight& a, const Weight& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

/// Łukasiewicz product: max(0, a + b - 1).
Weight w_times(const Weight& a, const Weight& b);
/// Involutive complement: 1 - a.
Weight w_neg(const Weight& a);
Weight w_min(const Weight& a, const Weight& b);
Weight w_max(const Weight& a, const Weight& b);
/// Dual of w_times: min(1, a + b).
Weight w_par(const Weight& a, const Weight& b);

}  // namespace dpl

#endif  // DPL_WEIGHT_HPP

#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gwtower/bigint.hpp"

namespace gwt {

/// A positive integer kept as a product of powers  b1^e1 * b2^e2 * ...
/// where each exponent is itself a BigNumber.
///
/// The value is also held explicitly whenever it has at most
/// `explicit_digit_limit` decimal digits; beyond that only the symbolic
/// form and a digit-count estimate are available.
class BigNumber {
 public:
  static constexpr std::size_t kDefaultExplicitDigits = 1'000'000;

  struct Term {
    BigInt base;
    std::shared_ptr<const BigNumber> exponent;
  };

  BigNumber() : BigNumber(BigInt(1)) {}
  explicit BigNumber(BigInt value);

  // Product of terms, made explicit when the estimate allows it.
  static BigNumber product(std::vector<Term> terms,
                           std::size_t explicit_digit_limit = kDefaultExplicitDigits);
  static BigNumber power(const BigInt& base, const BigNumber& exponent,
                         std::size_t explicit_digit_limit = kDefaultExplicitDigits);
  // this * other, concatenating terms.
  BigNumber times(const BigNumber& other,
                  std::size_t explicit_digit_limit = kDefaultExplicitDigits) const;

  bool is_explicit() const noexcept { return value_.has_value(); }
  // Throws std::logic_error when symbolic only.
  const BigInt& value() const;
  const std::vector<Term>& terms() const noexcept { return terms_; }

  // Decimal digit count: exact for explicit values, otherwise from a
  // high-precision logarithm when every exponent is explicit.
  std::optional<BigInt> digit_count() const;
  std::optional<BigInt> estimated_digit_count() const;
  // log10(log10(value)); +inf when beyond double range.
  double log10_log10() const;

  // "6^46656", "60^5 * 60", "6^(6^46656)". Explicit exponents longer than
  // 40 digits are rendered through their own terms.
  std::string expression() const;

  // Throws std::logic_error when the comparison cannot be certified.
  std::strong_ordering compare(const BigInt& x) const;

 private:
  std::optional<BigInt> value_;
  std::vector<Term> terms_;
};

}  // namespace gwt

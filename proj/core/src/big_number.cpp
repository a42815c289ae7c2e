#include "gwtower/big_number.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <mpfr.h>

namespace gwt {

namespace {

bool exponent_is_one(const BigNumber::Term& t) {
  return !t.exponent || (t.exponent->is_explicit() && t.exponent->value() == 1);
}

const BigInt* explicit_exponent(const BigNumber::Term& t) {
  static const BigInt one = 1;
  if (!t.exponent) return &one;
  return t.exponent->is_explicit() ? &t.exponent->value() : nullptr;
}

double log10_of(const BigInt& v) {
  long exp = 0;
  double d = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log10(d) + static_cast<double>(exp) * std::log10(2.0);
}

// RAII wrapper for one MPFR variable.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// floor(log10(prod b^e)) + 1, all exponents explicit.
BigInt digits_from_terms(const std::vector<BigNumber::Term>& terms) {
  mpfr_prec_t prec = 128;
  for (const auto& t : terms) {
    const BigInt* e = explicit_exponent(t);
    prec = std::max<mpfr_prec_t>(
        prec, static_cast<mpfr_prec_t>(mpz_sizeinbase(e->get_mpz_t(), 2)) + 128);
  }
  Mpfr sum(prec), term(prec);
  mpfr_set_zero(sum.get(), 1);
  for (const auto& t : terms) {
    if (t.base <= 1) continue;
    mpfr_set_z(term.get(), t.base.get_mpz_t(), MPFR_RNDN);
    mpfr_log10(term.get(), term.get(), MPFR_RNDN);
    mpfr_mul_z(term.get(), term.get(), explicit_exponent(t)->get_mpz_t(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
  }
  BigInt out;
  mpfr_get_z(out.get_mpz_t(), sum.get(), MPFR_RNDD);
  return out + 1;
}

bool all_exponents_explicit(const std::vector<BigNumber::Term>& terms) {
  for (const auto& t : terms) {
    if (!explicit_exponent(t)) return false;
  }
  return true;
}

}  // namespace

BigNumber::BigNumber(BigInt value) {
  if (value < 1) throw std::invalid_argument("BigNumber holds positive integers");
  terms_.push_back({value, nullptr});
  value_ = std::move(value);
}

BigNumber BigNumber::product(std::vector<Term> terms,
                             std::size_t explicit_digit_limit) {
  std::erase_if(terms, [](const Term& t) { return t.base == 1; });
  BigNumber out;
  out.terms_ = std::move(terms);
  out.value_.reset();
  if (out.terms_.empty()) {
    out.terms_.push_back({BigInt(1), nullptr});
    out.value_ = BigInt(1);
    return out;
  }
  if (!all_exponents_explicit(out.terms_)) return out;
  BigInt digits = digits_from_terms(out.terms_);
  if (digits > from_u64(explicit_digit_limit)) return out;
  BigInt v = 1;
  for (const auto& t : out.terms_) {
    v *= big_pow(t.base, explicit_exponent(t)->get_ui());
  }
  out.value_ = std::move(v);
  return out;
}

BigNumber BigNumber::power(const BigInt& base, const BigNumber& exponent,
                           std::size_t explicit_digit_limit) {
  return product({Term{base, std::make_shared<const BigNumber>(exponent)}},
                 explicit_digit_limit);
}

BigNumber BigNumber::times(const BigNumber& other,
                           std::size_t explicit_digit_limit) const {
  std::vector<Term> terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return product(std::move(terms), explicit_digit_limit);
}

const BigInt& BigNumber::value() const {
  if (!value_) throw std::logic_error("value " + expression() + " is symbolic only");
  return *value_;
}

std::optional<BigInt> BigNumber::digit_count() const {
  if (value_) return BigInt(static_cast<unsigned long>(decimal_digits(*value_)));
  return estimated_digit_count();
}

std::optional<BigInt> BigNumber::estimated_digit_count() const {
  if (!all_exponents_explicit(terms_)) return std::nullopt;
  return digits_from_terms(terms_);
}

double BigNumber::log10_log10() const {
  if (value_) return std::log10(log10_of(*value_));
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms_) {
    if (t.base <= 1) continue;
    double le = t.exponent ? (t.exponent->is_explicit()
                                  ? log10_of(t.exponent->value())
                                  : std::pow(10.0, t.exponent->log10_log10()))
                           : 0.0;
    best = std::max(best, le + std::log10(log10_of(t.base)));
  }
  return best;
}

std::string BigNumber::expression() const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " * ";
    out += t.base.get_str();
    if (exponent_is_one(t)) continue;
    const BigNumber& e = *t.exponent;
    if (e.is_explicit() && decimal_digits(e.value()) <= 40) {
      out += "^" + e.value().get_str();
    } else {
      out += "^(" + e.expression() + ")";
    }
  }
  return out;
}

std::strong_ordering BigNumber::compare(const BigInt& x) const {
  if (value_) {
    int c = cmp(*value_, x);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  // Symbolic values exceed the explicit digit limit.
  auto digits = estimated_digit_count();
  BigInt xd(static_cast<unsigned long>(decimal_digits(x)));
  if (!digits || *digits > xd + 1) return std::strong_ordering::greater;
  throw std::logic_error("cannot certify comparison of " + expression() +
                         " with a " + xd.get_str() + "-digit integer");
}

}  // namespace gwt

#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace gwt {

using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline BigInt big_factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// Exact number of decimal digits of |v| (1 for zero).
inline std::size_t decimal_digits(const BigInt& v) {
  if (v == 0) return 1;
  std::string s = v.get_str();
  return s.size() - (s[0] == '-' ? 1 : 0);
}

inline bool fits_u64(const BigInt& v) {
  return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigInt& v) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline BigInt from_u64(std::uint64_t v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace gwt

#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "gwtower/bigint.hpp"
#include "gwtower/perm_group.hpp"

namespace gwt {

enum class SimpleFamily { Alt, PSL2 };

/// A non-abelian simple group in one of the supported families, with its
/// natural action: Alt(n) on n points (n >= 5), PSL2(p) on the p+1 points
/// of the projective line (p prime, p >= 5).
class SimpleGroupId {
 public:
  // Throws InvalidInput when the parameter is out of range.
  static SimpleGroupId alt(std::uint64_t n);
  static SimpleGroupId psl2(std::uint64_t p);

  SimpleFamily family() const noexcept { return family_; }
  std::uint64_t parameter() const noexcept { return parameter_; }
  std::uint64_t natural_degree() const noexcept;
  BigInt order() const;
  std::string name() const;  // "Alt(36)", "PSL2(7)"

  friend bool operator==(const SimpleGroupId&, const SimpleGroupId&) = default;
  friend auto operator<=>(const SimpleGroupId&, const SimpleGroupId&) = default;

 private:
  SimpleGroupId(SimpleFamily f, std::uint64_t p) : family_(f), parameter_(p) {}
  SimpleFamily family_;
  std::uint64_t parameter_;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

PermGroup alt_group(std::uint64_t n);     // n >= 3
PermGroup sym_group(std::uint64_t n);     // n >= 1
PermGroup cyclic_group(std::uint64_t n);  // n >= 1, regular action
// PSL2(p) on {0..p-1} = F_p and p = infinity, generated by x -> x+1 and
// x -> -1/x.
PermGroup psl2_group(std::uint64_t p);    // p prime, p >= 5
// SL2(p) on the p^2-1 nonzero vectors of F_p^2.
PermGroup sl2_group(std::uint64_t p);     // p prime, p >= 3

// Natural permutation representation of a supported simple group.
PermGroup build_simple_group(const SimpleGroupId& id);

}  // namespace gwt

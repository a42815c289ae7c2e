#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gwtower/bigint.hpp"
#include "gwtower/simple_groups.hpp"
#include "gwtower/tower.hpp"

namespace gwt {

/// A finite abelian group as a multiset of cyclic orders, each >= 2. The
/// trivial group has no factors. Equality compares primary decompositions,
/// so [6] == [2, 3].
class AbelianInvariants {
 public:
  AbelianInvariants() = default;
  // Factors equal to 1 are dropped; 0 throws InvalidInput.
  explicit AbelianInvariants(std::vector<std::uint64_t> factors);

  const std::vector<std::uint64_t>& factors() const noexcept { return factors_; }
  bool is_trivial() const noexcept { return factors_.empty(); }
  BigInt order() const;
  // prime -> sorted prime-power orders of the cyclic p-parts.
  std::map<std::uint64_t, std::vector<std::uint64_t>> primary_decomposition() const;
  // Multiset union, i.e. the direct product.
  AbelianInvariants operator*(const AbelianInvariants& other) const;
  std::string to_string() const;  // "C2^3 x C6", "1" when trivial

  friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b);

 private:
  std::vector<std::uint64_t> factors_;
};

// Prime factorisation by trial division, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Minimal number of generators: the largest rank of a p-primary part.
unsigned d_abelian(const AbelianInvariants& inv);

struct MultiplierEntry {
  AbelianInvariants multiplier;
  std::string provenance;
};

// Curated Schur multipliers: C2 for Alt(n), n = 5 or n >= 8, and for
// PSL2(p); C6 for Alt(6) and Alt(7).
MultiplierEntry multiplier_of_simple(const SimpleGroupId& s);

// M(Ŝ_n) as the product of M(S_k) for k <= n. Every constituent is perfect,
// so the wreath-product multiplier formula applies at each fold.
AbelianInvariants multiplier_of_tower(const TowerSpec& spec, std::size_t n);

enum class Tristate { True, False, Undecidable };
std::string_view to_string(Tristate t) noexcept;

struct HypothesisVerdict {
  Tristate status = Tristate::Undecidable;
  std::optional<std::uint64_t> prime;  // a prime dividing M(S_n) infinitely often
  std::string reason;
};

// Does a fixed prime divide |M(S_n)| for infinitely many n? Decided only for
// declared constant or periodic tails.
HypothesisVerdict fp_hypothesis_check(const TowerSpec& spec);

struct FPObstructionCertificate {
  struct Level {
    std::size_t n = 0;
    AbelianInvariants multiplier;
    unsigned d = 0;  // d(M(Ŝ_n)), a lower bound on the relation count
  };

  TowerSpec spec;
  std::size_t horizon = 0;
  std::vector<Level> per_level;
  // d_H >= d_1 + H/2 within the horizon.
  bool growth_within_horizon = false;
  HypothesisVerdict hypothesis;
  // growth_within_horizon or the hypothesis holds.
  bool unbounded_within_horizon = false;
  // Asserted only for declared infinite patterns.
  bool obstruction_flagged = false;
  std::string reason;
};

FPObstructionCertificate fp_obstruction(const TowerSpec& spec, std::size_t horizon);

}  // namespace gwt

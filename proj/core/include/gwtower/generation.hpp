#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwtower/big_number.hpp"
#include "gwtower/budget.hpp"
#include "gwtower/perm_group.hpp"
#include "gwtower/simple_groups.hpp"
#include "gwtower/tower.hpp"

namespace gwt {

// Independent 64-bit stream seed derived from a global seed (splitmix64).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

// Worker count used by counting loops: $GWTOWER_THREADS if set, otherwise
// the hardware concurrency.
unsigned default_workers();

struct GenerationEstimate {
  double probability = 0;
  double half_width = 0;   // 99% normal approximation, continuity corrected
  double confidence = 0.99;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t seed = 0;

  bool covers(double p) const {
    return p >= probability - half_width && p <= probability + half_width;
  }
};

struct EulerianResult {
  std::string group;
  BigInt group_order;
  unsigned d = 0;
  std::optional<BigInt> count;  // exact φ_d(G)
  std::optional<GenerationEstimate> estimate;
};

// Auto picks a multiplication table for |G| <= 4096 and stabilizer chains
// above that.
enum class CountBackend { Auto, Table, Chain };

/// φ_d(G): the number of ordered d-tuples that generate G.
///
/// The first coordinate runs over conjugacy-class representatives weighted
/// by class size; later coordinates run over all of G, skipping elements
/// already in the subgroup generated so far and stopping as soon as a prefix
/// generates. Throws BudgetExceeded when the number of generation tests
/// could exceed budgets.membership_tests.
BigInt eulerian_count(const PermGroup& g, unsigned d, const Budgets& budgets = {},
                      unsigned workers = 0, CountBackend backend = CountBackend::Auto);

// Deterministic given `seed`; independent of the worker count.
GenerationEstimate generation_probability_mc(const PermGroup& g, unsigned d,
                                             std::uint64_t trials, std::uint64_t seed,
                                             unsigned workers = 0);

// d(G). A random search for a generating tuple (certified by chain order)
// is tried before falling back to exact counting.
unsigned min_generators(const PermGroup& g, const Budgets& budgets = {},
                        std::uint64_t seed = 0, unsigned max_d = 16);

// |Aut(S)|: n! for Alt(n), n != 6; 1440 for Alt(6); p(p^2-1) for PSL2(p).
BigInt aut_order(const SimpleGroupId& s);

/// Cache of φ_d(S) for simple groups: exhaustive counts computed on demand
/// within budget, plus externally supplied values carrying a citation.
class EulerianTable {
 public:
  struct Entry {
    BigInt value;
    std::string source;
  };

  explicit EulerianTable(Budgets budgets = {}, unsigned workers = 0)
      : budgets_(budgets), workers_(workers) {}

  // Injected values take precedence over computed ones.
  void inject(const SimpleGroupId& s, unsigned d, BigInt value, std::string citation);

  // nullopt when neither injected nor computable within budget.
  std::optional<Entry> phi(const SimpleGroupId& s, unsigned d);

  const Budgets& budgets() const noexcept { return budgets_; }

 private:
  Budgets budgets_;
  unsigned workers_;
  std::map<std::pair<SimpleGroupId, unsigned>, Entry> cache_;
  std::map<std::pair<SimpleGroupId, unsigned>, bool> unavailable_;
};

// ⌊φ_d(S)/|Aut(S)|⌋: the largest n with d(S^n) <= d. Throws BudgetExceeded
// when φ_d(S) is unavailable.
BigInt hall_power_bound(const SimpleGroupId& s, unsigned d, EulerianTable& table);

struct SimplePowerRank {
  enum class Kind { Exact, AtLeast, BudgetExceeded };
  Kind kind = Kind::BudgetExceeded;
  unsigned d = 0;  // the exact value, or the lower bound d0
  // (d, ⌊φ_d/|Aut|⌋) for every d examined.
  std::vector<std::pair<unsigned, BigInt>> capacities;
};

std::string_view to_string(SimplePowerRank::Kind k) noexcept;

// d(S^n) via the Hall bound; three-valued so certificates never guess.
SimplePowerRank d_of_simple_power(const SimpleGroupId& s, const BigNumber& n,
                                  EulerianTable& table, unsigned max_d = 8);

struct GrowthStep {
  std::uint64_t previous = 0;
  std::uint64_t next = 0;
  BigInt bound_numerator;  // bound = numerator / denominator, reduced
  BigInt bound_denominator;
  bool holds = false;
  bool equality = false;

  std::string bound_string() const;
};

// For consecutive primes p, q: q >= (p+1)(p^2-2p-1)/4 - 2, exactly.
// Throws InvalidInput unless every entry is a prime >= 5.
std::vector<GrowthStep> remark_growth_check(const std::vector<std::uint64_t>& primes);

enum class LevelVerdict { Holds, Fails, Undecidable };
std::string_view to_string(LevelVerdict v) noexcept;

struct LowerRankCertificate {
  struct Level {
    std::size_t n = 0;
    SimpleGroupId group;
    BigNumber previous_degree;            // m̃_{n-1}; m̃_0 = 1
    std::optional<BigInt> phi;            // φ_r(S_n)
    std::string phi_source;
    BigInt aut;
    std::optional<BigInt> hall_capacity;  // ⌊φ_r/|Aut|⌋
    LevelVerdict verdict = LevelVerdict::Undecidable;
  };

  TowerSpec spec;
  unsigned r = 0;
  std::vector<Level> levels;
  // Growth recurrence verdicts for PSL2 sequences, reported separately
  // from the direct Hall verdicts.
  std::vector<GrowthStep> recurrence;
  std::size_t holds_count = 0;
  std::size_t fails_count = 0;
  std::size_t undecidable_count = 0;
  std::string conclusion;
};

// Requires an all-product spec. Levels whose φ_r is unavailable are marked
// undecidable.
LowerRankCertificate lower_rank_certificate(const TowerSpec& spec, unsigned r,
                                            std::size_t levels, EulerianTable& table);

}  // namespace gwt

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "gwtower/bigint.hpp"
#include "gwtower/permutation.hpp"

namespace gwt {

struct ChainOptions {
  // A proven upper bound on the group order. When the chain reaches it the
  // chain is certified complete and the deterministic pass is skipped.
  std::optional<BigInt> order_bound;
  // Run a randomized Schreier-Sims phase before the deterministic pass.
  // Defaults to on for degree > 32 or when a bound is known.
  std::optional<bool> randomized;
  std::uint64_t seed = 0x2545f4914f6cdd1dull;
  unsigned stall_limit = 32;
  // Levels store explicit coset representatives while orbit * degree stays
  // below this; otherwise Schreier trees.
  std::size_t explicit_transversal_limit = std::size_t{1} << 22;
};

/// Base and strong generating set with Schreier-tree transversals.
///
/// Level `l` holds the strong generators fixing base points 0..l-1 and the
/// orbit of base point `l` under them. Once built, a chain is immutable.
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<std::uint32_t> gens;  // indices into the strong-generator pool
    std::vector<Point> orbit;
    std::vector<std::int32_t> pos;    // orbit index per point, -1 if absent
    std::vector<std::int32_t> label;  // tree edge: local generator index
    bool explicit_reps = true;
    std::vector<Permutation> reps;      // by orbit index, when explicit_reps
    std::vector<Permutation> rep_invs;
  };

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // first level where sifting stopped; depth() if none
  };

  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }
  std::span<const Permutation> strong_generators() const { return strong_; }
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;
  BigInt order() const;

  SiftResult sift(Permutation g, std::size_t from_level = 0) const;
  bool contains(const Permutation& g) const;

  // Coset representative u with base^u = orbit[orbit_index].
  Permutation transversal(std::size_t level, std::size_t orbit_index) const;

  // Orbit positions of `g` (level 0 first), or nullopt when g is not a member.
  std::optional<std::vector<std::uint32_t>> positions(const Permutation& g) const;
  Permutation element_at(std::span<const std::uint32_t> positions) const;

  // Mixed-radix element numbering, level 0 most significant. Needs
  // order() < 2^64.
  std::optional<std::uint64_t> rank(const Permutation& g) const;
  Permutation unrank(std::uint64_t r) const;

  template <class Rng>
  Permutation random_element(Rng& rng) const {
    auto g = Permutation::identity(degree_);
    for (std::size_t l = levels_.size(); l-- > 0;) {
      std::uniform_int_distribution<std::size_t> pick(
          0, levels_[l].orbit.size() - 1);
      g *= transversal(l, pick(rng));
    }
    return g;
  }

 private:
  friend class ChainBuilder;

  void apply_inverse_transversal(Permutation& g, std::size_t level,
                                 Point beta) const;

  std::size_t degree_;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
  std::vector<Level> levels_;
};

/// Incremental Schreier-Sims. Elements may be added in any order; `complete`
/// certifies the chain either by reaching a proven order bound or by
/// checking every Schreier generator.
class ChainBuilder {
 public:
  ChainBuilder(std::size_t degree, ChainOptions options = {});

  // Sifts g and adds its residue as a new strong generator if nontrivial.
  // Returns true when the chain grew.
  bool add(const Permutation& g);
  bool sifts(const Permutation& g) const;

  BigInt order() const { return chain_.order(); }
  const StabilizerChain& chain() const { return chain_; }

  void randomize();
  void complete();
  StabilizerChain finish() &&;

 private:
  void add_residue(const Permutation& r, std::size_t first_level,
                   std::size_t last_level);
  void add_to_level(std::size_t l, std::uint32_t pool_index);
  void extend_orbit(std::size_t l, std::size_t new_local_gen);
  bool schreier_pass(std::size_t l);
  bool bound_reached() const;

  ChainOptions options_;
  StabilizerChain chain_;
  std::vector<std::vector<std::uint32_t>> checked_;  // per level, per orbit index
  std::size_t last_touched_ = 0;
  std::mt19937_64 rng_;
};

/// A permutation group together with its certified stabilizer chain.
/// Cheap to copy; contents are immutable and safe to share across threads.
class PermGroup {
 public:
  // All generators must share one degree; identity generators are dropped.
  static PermGroup from_generators(std::vector<Permutation> gens,
                                   const ChainOptions& options = {});
  static PermGroup from_chain(std::vector<Permutation> gens,
                              StabilizerChain chain);
  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return data_->chain.degree(); }
  const std::vector<Permutation>& generators() const noexcept {
    return data_->generators;
  }
  const BigInt& order() const noexcept { return data_->order; }
  const StabilizerChain& chain() const noexcept { return data_->chain; }

  // Throws InvalidInput on degree mismatch.
  bool contains(const Permutation& p) const;
  bool is_trivial() const noexcept { return data_->order == 1; }

  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  template <class Rng>
  Permutation random_element(Rng& rng) const {
    return data_->chain.random_element(rng);
  }

 private:
  struct Data {
    std::vector<Permutation> generators;
    StabilizerChain chain;
    BigInt order;
  };
  explicit PermGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

// H <= G, by membership of H's generators.
bool is_subgroup(const PermGroup& h, const PermGroup& g);
bool same_group(const PermGroup& h, const PermGroup& g);

}  // namespace gwt

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gwtower/big_number.hpp"
#include "gwtower/budget.hpp"
#include "gwtower/simple_groups.hpp"
#include "gwtower/wreath.hpp"

namespace gwt {

enum class TailKind { None, Constant, Periodic };

/// Declarative description of a tower S_1, S_2, ... of simple permutation
/// groups and the action used at each level.
///
/// `levels[i]` describes level i+1: the group S_{i+1} and the action of
/// Ŝ_{i+1} = S_{i+1} ≀ Ŝ_i (ignored for level 1). Past the declared entries
/// a tail pattern repeats the last entry (Constant) or the last `period`
/// entries (Periodic).
struct TowerSpec {
  struct Level {
    SimpleGroupId group;
    ActionKind action;
    friend bool operator==(const Level&, const Level&) = default;
  };

  std::vector<Level> levels;
  TailKind tail = TailKind::None;
  std::size_t period = 0;
  std::size_t horizon = 0;

  static TowerSpec constant(const SimpleGroupId& s, std::size_t horizon,
                            ActionKind action = ActionKind::Product);
  static TowerSpec exponentiation(const std::vector<SimpleGroupId>& sequence);

  // Throws InvalidInput on inconsistent fields.
  void validate() const;

  // 1-based level lookups; Throw InvalidInput past a finite declaration.
  const SimpleGroupId& group_at(std::size_t level) const;
  ActionKind action_at(std::size_t level) const;
  std::size_t max_level() const;  // horizon
  // Every level from 2 to the horizon uses the product action.
  bool is_exponentiation() const;

  friend bool operator==(const TowerSpec&, const TowerSpec&) = default;
};

// m̂_1 .. m̂_horizon: m̂_1 = m_1, m̂_{k+1} = m_{k+1} * m̂_k (imprimitive) or
// m_{k+1}^m̂_k (product).
std::vector<BigNumber> tower_degrees(
    const TowerSpec& spec, std::size_t explicit_digit_limit = BigNumber::kDefaultExplicitDigits);

// |Ŝ_k| = |S_k|^m̂_{k-1} * |Ŝ_{k-1}|.
BigNumber tower_order(const TowerSpec& spec, std::size_t level,
                      std::size_t explicit_digit_limit = BigNumber::kDefaultExplicitDigits);

struct TowerLevel {
  std::size_t level;
  PermGroup group;
  // The last fold S_k ≀ Ŝ_{k-1}; absent at level 1.
  std::optional<WreathProduct> wreath;
};

// Explicit Ŝ_k. Throws BudgetExceeded when m̂_k exceeds budgets.degree.
TowerLevel build_tower_level(const TowerSpec& spec, std::size_t level,
                             const Budgets& budgets = {});

struct LevelProjection {
  TowerLevel upper;                         // Ŝ_{k+1}
  PermGroup lower;                          // Ŝ_k
  std::vector<Permutation> kernel_generators;  // base S_{k+1}^m̂_k
  BigInt kernel_order;                      // |S_{k+1}|^m̂_k
  Permutation operator()(const Permutation& g) const;
};

// Ŝ_{k+1} -> Ŝ_k for k >= 1.
LevelProjection level_projection(const TowerSpec& spec, std::size_t k,
                                 const Budgets& budgets = {});

}  // namespace gwt

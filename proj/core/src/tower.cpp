#include "gwtower/tower.hpp"

#include "gwtower/error.hpp"

namespace gwt {

TowerSpec TowerSpec::constant(const SimpleGroupId& s, std::size_t horizon,
                              ActionKind action) {
  TowerSpec spec;
  spec.levels.push_back({s, action});
  spec.tail = TailKind::Constant;
  spec.horizon = horizon;
  return spec;
}

TowerSpec TowerSpec::exponentiation(const std::vector<SimpleGroupId>& sequence) {
  TowerSpec spec;
  for (const auto& s : sequence) spec.levels.push_back({s, ActionKind::Product});
  spec.horizon = sequence.size();
  return spec;
}

void TowerSpec::validate() const {
  if (levels.empty()) throw InvalidInput("tower spec declares no levels");
  if (horizon == 0) throw InvalidInput("tower spec horizon must be at least 1");
  if (tail == TailKind::None && horizon > levels.size()) {
    throw InvalidInput("horizon " + std::to_string(horizon) + " exceeds the " +
                       std::to_string(levels.size()) +
                       " declared levels and no tail pattern is declared");
  }
  if (tail == TailKind::Periodic && (period == 0 || period > levels.size())) {
    throw InvalidInput("periodic tail needs 1 <= period <= declared levels");
  }
}

namespace {

std::size_t declared_index(const TowerSpec& spec, std::size_t level) {
  if (level == 0) throw InvalidInput("tower levels are numbered from 1");
  const std::size_t n = spec.levels.size();
  if (level <= n) return level - 1;
  switch (spec.tail) {
    case TailKind::Constant:
      return n - 1;
    case TailKind::Periodic:
      return n - spec.period + (level - n - 1) % spec.period;
    case TailKind::None:
      break;
  }
  throw InvalidInput("level " + std::to_string(level) +
                     " is beyond the declared sequence");
}

}  // namespace

const SimpleGroupId& TowerSpec::group_at(std::size_t level) const {
  return levels[declared_index(*this, level)].group;
}

ActionKind TowerSpec::action_at(std::size_t level) const {
  return levels[declared_index(*this, level)].action;
}

std::size_t TowerSpec::max_level() const { return horizon; }

bool TowerSpec::is_exponentiation() const {
  for (std::size_t k = 2; k <= horizon; ++k) {
    if (action_at(k) != ActionKind::Product) return false;
  }
  return true;
}

std::vector<BigNumber> tower_degrees(const TowerSpec& spec,
                                     std::size_t explicit_digit_limit) {
  spec.validate();
  std::vector<BigNumber> out;
  out.emplace_back(from_u64(spec.group_at(1).natural_degree()));
  for (std::size_t k = 2; k <= spec.horizon; ++k) {
    BigInt m = from_u64(spec.group_at(k).natural_degree());
    const BigNumber& prev = out.back();
    if (spec.action_at(k) == ActionKind::Product) {
      out.push_back(BigNumber::power(m, prev, explicit_digit_limit));
    } else {
      out.push_back(prev.times(BigNumber(m), explicit_digit_limit));
    }
  }
  return out;
}

BigNumber tower_order(const TowerSpec& spec, std::size_t level,
                      std::size_t explicit_digit_limit) {
  spec.validate();
  if (level == 0 || level > spec.horizon) {
    throw InvalidInput("level " + std::to_string(level) + " outside 1.." +
                       std::to_string(spec.horizon));
  }
  TowerSpec truncated = spec;
  truncated.horizon = level;
  auto degrees = tower_degrees(truncated, explicit_digit_limit);
  BigNumber order(spec.group_at(1).order());
  for (std::size_t k = 2; k <= level; ++k) {
    order = BigNumber::power(spec.group_at(k).order(), degrees[k - 2],
                             explicit_digit_limit)
                .times(order, explicit_digit_limit);
  }
  return order;
}

TowerLevel build_tower_level(const TowerSpec& spec, std::size_t level,
                             const Budgets& budgets) {
  spec.validate();
  if (level == 0 || level > spec.horizon) {
    throw InvalidInput("level " + std::to_string(level) + " outside 1.." +
                       std::to_string(spec.horizon));
  }
  TowerSpec truncated = spec;
  truncated.horizon = level;
  auto degrees = tower_degrees(truncated, 64);
  const BigNumber& top = degrees.back();
  if (!top.is_explicit() || top.value() > from_u64(budgets.degree)) {
    throw BudgetExceeded("level " + std::to_string(level) + " has degree " +
                         top.expression() + ", beyond the explicit-degree budget of " +
                         std::to_string(budgets.degree) + " points");
  }
  TowerLevel out{1, build_simple_group(spec.group_at(1)), std::nullopt};
  for (std::size_t k = 2; k <= level; ++k) {
    WreathProduct w = wreath(spec.action_at(k), build_simple_group(spec.group_at(k)),
                             out.group, budgets);
    out.group = w.group();
    out.wreath = std::move(w);
    out.level = k;
  }
  return out;
}

Permutation LevelProjection::operator()(const Permutation& g) const {
  return upper.wreath->project(g);
}

LevelProjection level_projection(const TowerSpec& spec, std::size_t k,
                                 const Budgets& budgets) {
  if (k == 0) throw InvalidInput("projection Ŝ_1 -> Ŝ_0 has no wreath structure");
  TowerLevel upper = build_tower_level(spec, k + 1, budgets);
  const WreathProduct& w = *upper.wreath;
  PermGroup lower = w.top();
  auto kernel_gens = w.base_generators();
  BigInt kernel_order = w.base_order();
  return LevelProjection{std::move(upper), std::move(lower), std::move(kernel_gens),
                         std::move(kernel_order)};
}

}  // namespace gwt

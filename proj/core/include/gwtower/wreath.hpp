#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "gwtower/budget.hpp"
#include "gwtower/perm_group.hpp"

namespace gwt {

enum class ActionKind { Imprimitive, Product };

std::string_view to_string(ActionKind a) noexcept;

/// A ≀ B for A on m points and B on n points, with the n base coordinates
/// permuted by B.
///
/// Imprimitive action: m*n points, point (block j, i) is j*m + i.
/// Product action: m^n points, a function f: {0..n-1} -> {0..m-1} is the
/// mixed-radix number with coordinate 0 most significant; the top group
/// moves the value at coordinate c to coordinate b(c).
class WreathProduct {
 public:
  ActionKind action() const noexcept { return action_; }
  std::size_t base_degree() const noexcept { return m_; }
  std::size_t top_degree() const noexcept { return n_; }
  const PermGroup& group() const noexcept { return group_; }
  const PermGroup& base_factor() const noexcept { return a_; }
  const PermGroup& top() const noexcept { return b_; }

  // |A|^n
  BigInt base_order() const;

  // Copy of `a` (an element of A) acting on coordinate `coord`.
  Permutation base_element(std::size_t coord, const Permutation& a) const;
  // Copy of `b` (an element of B) permuting the coordinates.
  Permutation top_element(const Permutation& b) const;

  // The generators of A placed in every coordinate.
  std::vector<Permutation> base_generators() const;
  std::vector<Permutation> top_generators() const;

  // The quotient map A ≀ B -> B, read off from the action on blocks or
  // coordinates.
  Permutation project(const Permutation& g) const;

  // A^n, certified against the |A|^n bound.
  PermGroup base_group() const;

 private:
  friend WreathProduct imprimitive_wreath(const PermGroup&, const PermGroup&);
  friend WreathProduct product_action_wreath(const PermGroup&, const PermGroup&,
                                             const Budgets&);
  WreathProduct(ActionKind action, PermGroup a, PermGroup b);
  void finish_group();

  ActionKind action_;
  PermGroup a_;
  PermGroup b_;
  std::size_t m_;
  std::size_t n_;
  std::vector<std::size_t> radix_;  // m^(n-1-c), product action only
  PermGroup group_;
};

// Throws InvalidInput when A is intransitive.
WreathProduct imprimitive_wreath(const PermGroup& a, const PermGroup& b);

// Throws InvalidInput when A is intransitive or m < 2, BudgetExceeded when
// m^n exceeds budgets.degree.
WreathProduct product_action_wreath(const PermGroup& a, const PermGroup& b,
                                    const Budgets& budgets = {});

WreathProduct wreath(ActionKind action, const PermGroup& a, const PermGroup& b,
                     const Budgets& budgets = {});

}  // namespace gwt

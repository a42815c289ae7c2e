#pragma once

#include <vector>

#include "gwtower/budget.hpp"
#include "gwtower/perm_group.hpp"

namespace gwt {

// Smallest normal subgroup of G containing `seeds`. Throws InvalidInput when
// a seed is not in G. `options.order_bound`, when given, must bound the
// order of the closure.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seeds,
                         const ChainOptions& options = {});

// Points of the smallest block of the (transitive) group containing 0 and
// `beta`, sorted.
std::vector<Point> minimal_block(const PermGroup& g, Point beta);

// Throws InvalidInput on an intransitive group.
bool is_primitive(const PermGroup& g);

struct ConjugacyClass {
  Permutation representative;
  BigInt size;
};

// One entry per class, identity first. Throws BudgetExceeded when
// |G| > budgets.elements.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g,
                                              const Budgets& budgets = {});
std::vector<Permutation> conjugacy_class_representatives(
    const PermGroup& g, const Budgets& budgets = {});

Permutation commutator(const Permutation& a, const Permutation& b);
PermGroup derived_subgroup(const PermGroup& g);
bool is_perfect(const PermGroup& g);
bool is_abelian(const PermGroup& g);

// Every element of G, in rank order. Throws BudgetExceeded when
// |G| > budgets.elements.
std::vector<Permutation> enumerate_elements(const PermGroup& g,
                                            const Budgets& budgets = {});

}  // namespace gwt

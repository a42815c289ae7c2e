#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwtower/budget.hpp"
#include "gwtower/perm_group.hpp"
#include "gwtower/tower.hpp"
#include "gwtower/wreath.hpp"

namespace gwt {

/// All minimal normal subgroups of G.
///
/// Every minimal normal subgroup is the normal closure of any of its
/// nontrivial elements, so it appears among the closures of the conjugacy
/// class representatives; non-minimal closures are then discarded by
/// containment. Throws BudgetExceeded when |G| > budgets.elements.
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g,
                                                const Budgets& budgets = {});

bool is_simple(const PermGroup& g, const Budgets& budgets = {});

struct NormalSubgroupReport {
  struct Entry {
    BigInt order;
    std::string generators;  // cycle notation, 1-indexed
    PermGroup group;
  };

  BigInt group_order;
  std::vector<Entry> minimal_normals;
  bool unique_minimal = false;

  // Wreath-product context.
  ActionKind action = ActionKind::Imprimitive;
  BigInt base_order;
  bool base_is_minimal = false;
  bool base_is_unique_minimal = false;
  bool a_simple = false;
  bool a_abelian = false;
  bool b_transitive = false;
  // The verdict predicted from (A simple, B transitive).
  bool predicted_unique_base = false;
  bool agrees_with_prediction = false;
  // A is simple but abelian: the prediction is outside its intended range.
  bool abelian_edge_case = false;
};

NormalSubgroupReport check_lemma_minnorm(const PermGroup& a, const PermGroup& b,
                                         ActionKind action,
                                         const Budgets& budgets = {});

enum class CheckStatus { Verified, Failed, Skipped };
std::string_view to_string(CheckStatus s) noexcept;

struct KernelChainReport {
  std::size_t k = 0;
  BigInt upper_order;           // |Ŝ_{k+1}|
  BigInt lower_order;           // |Ŝ_k| (1 when k = 0)
  BigInt expected_kernel_order; // |S_{k+1}|^m̂_k
  BigInt kernel_order;          // certified order of the base subgroup
  BigInt image_order;           // order of the projection image
  bool kernel_projects_trivially = false;
  bool projection_surjective = false;
  bool orders_multiply = false;  // |kernel| * |image| = |Ŝ_{k+1}|
  BigInt closure_order;         // normal closure of coordinate-0 base generators
  bool closure_equals_kernel = false;
  bool coordinate_factors_ok = false;  // each coordinate copy has order |S_{k+1}|
  std::size_t coordinates = 0;
  CheckStatus unique_minimal = CheckStatus::Skipped;
  std::string skip_reason;

  bool holds() const;
};

// Kernel of Ŝ_{k+1} -> Ŝ_k (k = 0 means the projection to the trivial
// group). The uniqueness check runs only within budgets.elements.
KernelChainReport kernel_chain_check(const TowerSpec& spec, std::size_t k,
                                     const Budgets& budgets = {});

}  // namespace gwt

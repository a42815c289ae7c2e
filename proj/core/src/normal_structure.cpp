#include "gwtower/normal_structure.hpp"

#include <algorithm>

#include "gwtower/error.hpp"
#include "gwtower/group_algorithms.hpp"

namespace gwt {

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g,
                                                const Budgets& budgets) {
  if (g.is_trivial()) return {};
  auto reps = conjugacy_class_representatives(g, budgets);
  std::vector<PermGroup> closures;
  for (const auto& r : reps) {
    if (r.is_identity()) continue;
    ChainOptions opts;
    opts.order_bound = g.order();
    PermGroup n = normal_closure(g, {r}, opts);
    bool duplicate = std::any_of(closures.begin(), closures.end(),
                                 [&](const PermGroup& c) { return same_group(c, n); });
    if (!duplicate) closures.push_back(std::move(n));
  }
  std::vector<PermGroup> out;
  for (const auto& n : closures) {
    bool minimal = std::none_of(closures.begin(), closures.end(), [&](const PermGroup& c) {
      return c.order() < n.order() && is_subgroup(c, n);
    });
    if (minimal) out.push_back(n);
  }
  std::sort(out.begin(), out.end(),
            [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  return out;
}

bool is_simple(const PermGroup& g, const Budgets& budgets) {
  if (g.is_trivial()) return false;
  auto mins = minimal_normal_subgroups(g, budgets);
  return mins.size() == 1 && mins.front().order() == g.order();
}

namespace {

std::string describe(const PermGroup& g) {
  if (g.generators().empty()) return "()";
  std::string out;
  for (const auto& x : g.generators()) {
    if (!out.empty()) out += ", ";
    out += x.to_cycle_string();
  }
  return out;
}

}  // namespace

NormalSubgroupReport check_lemma_minnorm(const PermGroup& a, const PermGroup& b,
                                         ActionKind action, const Budgets& budgets) {
  WreathProduct w = wreath(action, a, b, budgets);
  NormalSubgroupReport rep;
  rep.group_order = w.group().order();
  rep.action = action;
  for (auto& n : minimal_normal_subgroups(w.group(), budgets)) {
    rep.minimal_normals.push_back({n.order(), describe(n), n});
  }
  rep.unique_minimal = rep.minimal_normals.size() == 1;

  PermGroup base = w.base_group();
  rep.base_order = base.order();
  rep.base_is_minimal = std::any_of(
      rep.minimal_normals.begin(), rep.minimal_normals.end(),
      [&](const NormalSubgroupReport::Entry& e) { return same_group(e.group, base); });
  rep.base_is_unique_minimal = rep.unique_minimal && rep.base_is_minimal;

  rep.a_simple = is_simple(a, budgets);
  rep.a_abelian = is_abelian(a);
  rep.b_transitive = b.is_transitive();
  rep.predicted_unique_base = rep.a_simple && rep.b_transitive;
  rep.agrees_with_prediction = rep.predicted_unique_base == rep.base_is_unique_minimal;
  rep.abelian_edge_case = rep.a_simple && rep.a_abelian;
  return rep;
}

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Verified:
      return "verified";
    case CheckStatus::Failed:
      return "failed";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "unknown";
}

bool KernelChainReport::holds() const {
  return kernel_order == expected_kernel_order && kernel_projects_trivially &&
         projection_surjective && orders_multiply && closure_equals_kernel &&
         coordinate_factors_ok && unique_minimal != CheckStatus::Failed;
}

namespace {

void check_uniqueness(KernelChainReport& rep, const PermGroup& upper,
                      const PermGroup& kernel, const Budgets& budgets) {
  if (upper.order() > from_u64(budgets.elements)) {
    rep.unique_minimal = CheckStatus::Skipped;
    rep.skip_reason = "group order " + to_string(upper.order()) +
                      " exceeds the exhaustive budget of " +
                      std::to_string(budgets.elements) + " elements";
    return;
  }
  auto mins = minimal_normal_subgroups(upper, budgets);
  bool ok = mins.size() == 1 && same_group(mins.front(), kernel);
  rep.unique_minimal = ok ? CheckStatus::Verified : CheckStatus::Failed;
}

}  // namespace

KernelChainReport kernel_chain_check(const TowerSpec& spec, std::size_t k,
                                     const Budgets& budgets) {
  KernelChainReport rep;
  rep.k = k;
  if (k == 0) {
    TowerLevel l1 = build_tower_level(spec, 1, budgets);
    const PermGroup& g = l1.group;
    rep.upper_order = g.order();
    rep.lower_order = 1;
    rep.expected_kernel_order = spec.group_at(1).order();
    rep.kernel_order = g.order();
    rep.image_order = 1;
    rep.kernel_projects_trivially = true;
    rep.projection_surjective = true;
    rep.orders_multiply = true;
    rep.closure_order = normal_closure(g, g.generators()).order();
    rep.closure_equals_kernel = rep.closure_order == g.order();
    rep.coordinate_factors_ok = g.order() == spec.group_at(1).order();
    rep.coordinates = 1;
    check_uniqueness(rep, g, g, budgets);
    return rep;
  }

  LevelProjection proj = level_projection(spec, k, budgets);
  const WreathProduct& w = *proj.upper.wreath;
  const PermGroup& upper = proj.upper.group;
  rep.upper_order = upper.order();
  rep.lower_order = proj.lower.order();
  rep.expected_kernel_order = proj.kernel_order;
  rep.coordinates = w.top_degree();

  PermGroup kernel = w.base_group();
  rep.kernel_order = kernel.order();
  rep.kernel_projects_trivially = std::all_of(
      proj.kernel_generators.begin(), proj.kernel_generators.end(),
      [&](const Permutation& x) { return proj(x).is_identity(); });

  std::vector<Permutation> image_gens;
  for (const auto& x : upper.generators()) image_gens.push_back(proj(x));
  std::erase_if(image_gens, [](const Permutation& x) { return x.is_identity(); });
  BigInt image_order = 1;
  if (!image_gens.empty()) {
    ChainOptions opts;
    opts.order_bound = proj.lower.order();
    PermGroup image = PermGroup::from_generators(image_gens, opts);
    image_order = image.order();
    rep.projection_surjective = same_group(image, proj.lower);
  } else {
    rep.projection_surjective = proj.lower.is_trivial();
  }
  rep.image_order = image_order;
  rep.orders_multiply = rep.kernel_order * image_order == upper.order();

  // The closure lies in the kernel, so |kernel| bounds it.
  std::vector<Permutation> seeds;
  for (const auto& a : w.base_factor().generators()) seeds.push_back(w.base_element(0, a));
  ChainOptions opts;
  opts.order_bound = rep.kernel_order;
  PermGroup closure = normal_closure(upper, seeds, opts);
  rep.closure_order = closure.order();
  rep.closure_equals_kernel = same_group(closure, kernel);

  rep.coordinate_factors_ok = true;
  for (std::size_t c = 0; c < w.top_degree(); ++c) {
    std::vector<Permutation> gens;
    for (const auto& a : w.base_factor().generators()) gens.push_back(w.base_element(c, a));
    ChainOptions copts;
    copts.order_bound = w.base_factor().order();
    if (PermGroup::from_generators(gens, copts).order() != w.base_factor().order()) {
      rep.coordinate_factors_ok = false;
    }
  }

  check_uniqueness(rep, upper, kernel, budgets);
  return rep;
}

}  // namespace gwt

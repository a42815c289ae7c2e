#include "gwtower/group_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "gwtower/error.hpp"

namespace gwt {

namespace {

std::uint64_t checked_order(const PermGroup& g, const Budgets& budgets,
                            const char* what) {
  if (g.order() > from_u64(budgets.elements)) {
    throw BudgetExceeded(std::string(what) + ": group of order " +
                         to_string(g.order()) +
                         " is too large for exhaustive enumeration (budget " +
                         std::to_string(budgets.elements) + " elements)");
  }
  return to_u64(g.order());
}

}  // namespace

PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seeds,
                         const ChainOptions& options) {
  for (const auto& s : seeds) {
    if (!g.contains(s)) {
      throw InvalidInput("normal closure seed " + s.to_cycle_string() +
                         " is not an element of the group");
    }
  }
  ChainBuilder builder(g.degree(), options);
  std::vector<Permutation> hgens;
  for (const auto& s : seeds) {
    if (builder.add(s)) hgens.push_back(s);
  }
  for (std::size_t i = 0; i < hgens.size(); ++i) {
    for (const auto& x : g.generators()) {
      Permutation c = hgens[i].conjugate_by(x);
      if (builder.add(c)) hgens.push_back(std::move(c));
    }
  }
  if (hgens.empty()) return PermGroup::trivial(g.degree());
  if (options.randomized.value_or(g.degree() > 32 || options.order_bound)) {
    builder.randomize();
  }
  builder.complete();
  return PermGroup::from_chain(std::move(hgens), std::move(builder).finish());
}

std::vector<Point> minimal_block(const PermGroup& g, Point beta) {
  const std::size_t n = g.degree();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::deque<std::pair<Point, Point>> queue;
  if (beta != 0) {
    parent[beta] = 0;
    queue.emplace_back(0, beta);
  }
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (const auto& x : g.generators()) {
      Point ra = find(x[a]), rb = find(x[b]);
      if (ra == rb) continue;
      parent[std::max(ra, rb)] = std::min(ra, rb);
      queue.emplace_back(ra, rb);
    }
  }
  std::vector<Point> block;
  Point root = find(0);
  for (Point i = 0; i < n; ++i) {
    if (find(i) == root) block.push_back(i);
  }
  return block;
}

bool is_primitive(const PermGroup& g) {
  if (!g.is_transitive()) {
    throw InvalidInput("primitivity is only defined here for transitive groups");
  }
  const std::size_t n = g.degree();
  for (Point beta = 1; beta < n; ++beta) {
    if (minimal_block(g, beta).size() < n) return false;
  }
  return true;
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g,
                                              const Budgets& budgets) {
  const std::uint64_t n = checked_order(g, budgets, "conjugacy classes");
  const auto& chain = g.chain();
  std::vector<bool> seen(n, false);
  std::vector<ConjugacyClass> out;
  std::deque<Permutation> queue;
  for (std::uint64_t r = 0; r < n; ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    Permutation rep = chain.unrank(r);
    std::uint64_t size = 1;
    queue.push_back(rep);
    while (!queue.empty()) {
      Permutation x = std::move(queue.front());
      queue.pop_front();
      for (const auto& s : g.generators()) {
        Permutation c = x.conjugate_by(s);
        auto rc = chain.rank(c);
        if (!rc) throw std::logic_error("conjugate left the group");
        if (!seen[*rc]) {
          seen[*rc] = true;
          ++size;
          queue.push_back(std::move(c));
        }
      }
    }
    out.push_back({std::move(rep), from_u64(size)});
  }
  return out;
}

std::vector<Permutation> conjugacy_class_representatives(const PermGroup& g,
                                                         const Budgets& budgets) {
  std::vector<Permutation> out;
  for (auto& c : conjugacy_classes(g, budgets)) out.push_back(std::move(c.representative));
  return out;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> seeds;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  }
  ChainOptions opts;
  opts.order_bound = g.order();
  return normal_closure(g, seeds, opts);
}

bool is_perfect(const PermGroup& g) { return derived_subgroup(g).order() == g.order(); }

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    }
  }
  return true;
}

std::vector<Permutation> enumerate_elements(const PermGroup& g,
                                            const Budgets& budgets) {
  const std::uint64_t n = checked_order(g, budgets, "element enumeration");
  std::vector<Permutation> out;
  out.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) out.push_back(g.chain().unrank(r));
  return out;
}

}  // namespace gwt

#include "gwtower/perm_group.hpp"

#include <numeric>
#include <stdexcept>

#include "gwtower/error.hpp"

namespace gwt {

// ---------------------------------------------------------------------------
// StabilizerChain

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const auto& l : levels_) out.push_back(l.base);
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_lengths() const {
  std::vector<std::size_t> out;
  out.reserve(levels_.size());
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

BigInt StabilizerChain::order() const {
  BigInt out = 1;
  for (const auto& l : levels_) out *= static_cast<unsigned long>(l.orbit.size());
  return out;
}

void StabilizerChain::apply_inverse_transversal(Permutation& g,
                                                std::size_t level,
                                                Point beta) const {
  const Level& L = levels_[level];
  if (L.explicit_reps) {
    g *= L.rep_invs[static_cast<std::size_t>(L.pos[beta])];
    return;
  }
  while (beta != L.base) {
    const Permutation& inv = strong_inv_[L.gens[static_cast<std::size_t>(L.label[beta])]];
    g *= inv;
    beta = inv[beta];
  }
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation g,
                                                  std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    Point beta = g[levels_[l].base];
    if (levels_[l].pos[beta] < 0) return {std::move(g), l};
    apply_inverse_transversal(g, l, beta);
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return sift(g).residue.is_identity();
}

Permutation StabilizerChain::transversal(std::size_t level,
                                         std::size_t orbit_index) const {
  const Level& L = levels_[level];
  if (L.explicit_reps) return L.reps[orbit_index];
  auto inv = Permutation::identity(degree_);
  apply_inverse_transversal(inv, level, L.orbit[orbit_index]);
  return inv.inverse();
}

std::optional<std::vector<std::uint32_t>> StabilizerChain::positions(
    const Permutation& g) const {
  std::vector<std::uint32_t> out(levels_.size());
  Permutation h = g;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    Point beta = h[levels_[l].base];
    std::int32_t p = levels_[l].pos[beta];
    if (p < 0) return std::nullopt;
    out[l] = static_cast<std::uint32_t>(p);
    apply_inverse_transversal(h, l, beta);
  }
  if (!h.is_identity()) return std::nullopt;
  return out;
}

Permutation StabilizerChain::element_at(
    std::span<const std::uint32_t> positions) const {
  auto g = Permutation::identity(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    g *= transversal(l, positions[l]);
  }
  return g;
}

std::optional<std::uint64_t> StabilizerChain::rank(const Permutation& g) const {
  auto pos = positions(g);
  if (!pos) return std::nullopt;
  std::uint64_t r = 0;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    r = r * levels_[l].orbit.size() + (*pos)[l];
  }
  return r;
}

Permutation StabilizerChain::unrank(std::uint64_t r) const {
  std::vector<std::uint32_t> pos(levels_.size());
  for (std::size_t l = levels_.size(); l-- > 0;) {
    pos[l] = static_cast<std::uint32_t>(r % levels_[l].orbit.size());
    r /= levels_[l].orbit.size();
  }
  return element_at(pos);
}

// ---------------------------------------------------------------------------
// ChainBuilder

namespace {

// Product replacement generator of (nearly uniform) random elements.
class ProductReplacement {
 public:
  ProductReplacement(std::span<const Permutation> gens, std::mt19937_64& rng)
      : rng_(rng), acc_(Permutation::identity(gens.front().degree())) {
    std::size_t n = std::max<std::size_t>(10, gens.size());
    for (std::size_t i = 0; i < n; ++i) slots_.push_back(gens[i % gens.size()]);
    for (int i = 0; i < 50; ++i) next();
  }

  Permutation next() {
    std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
    std::size_t i = pick(rng_);
    std::size_t j = pick(rng_);
    while (j == i) j = pick(rng_);
    if (rng_() & 1) {
      slots_[i] *= slots_[j];
    } else {
      slots_[i] *= slots_[j].inverse();
    }
    acc_ *= slots_[i];
    return acc_;
  }

 private:
  std::mt19937_64& rng_;
  std::vector<Permutation> slots_;
  Permutation acc_;
};

}  // namespace

ChainBuilder::ChainBuilder(std::size_t degree, ChainOptions options)
    : options_(std::move(options)), chain_(degree), rng_(options_.seed) {
  if (degree == 0) throw InvalidInput("degree must be at least 1");
}

bool ChainBuilder::sifts(const Permutation& g) const {
  return chain_.sift(g).residue.is_identity();
}

bool ChainBuilder::add(const Permutation& g) {
  if (g.degree() != chain_.degree_) {
    throw InvalidInput("generator degree " + std::to_string(g.degree()) +
                       " does not match group degree " +
                       std::to_string(chain_.degree_));
  }
  auto [r, j] = chain_.sift(g);
  if (r.is_identity()) return false;
  add_residue(r, 0, j);
  return true;
}

void ChainBuilder::add_residue(const Permutation& r, std::size_t first_level,
                               std::size_t last_level) {
  auto& levels = chain_.levels_;
  std::uint32_t idx = static_cast<std::uint32_t>(chain_.strong_.size());
  chain_.strong_.push_back(r);
  chain_.strong_inv_.push_back(r.inverse());
  if (last_level == levels.size()) {
    StabilizerChain::Level L;
    L.base = r.first_moved_point();
    L.orbit = {L.base};
    L.pos.assign(chain_.degree_, -1);
    L.label.assign(chain_.degree_, -1);
    L.pos[L.base] = 0;
    L.explicit_reps = chain_.degree_ <= options_.explicit_transversal_limit;
    if (L.explicit_reps) {
      L.reps.push_back(Permutation::identity(chain_.degree_));
      L.rep_invs.push_back(L.reps.back());
    }
    levels.push_back(std::move(L));
    checked_.emplace_back(1, 0);
  }
  for (std::size_t l = first_level; l <= last_level; ++l) add_to_level(l, idx);
}

void ChainBuilder::add_to_level(std::size_t l, std::uint32_t pool_index) {
  auto& L = chain_.levels_[l];
  L.gens.push_back(pool_index);
  extend_orbit(l, L.gens.size() - 1);
}

void ChainBuilder::extend_orbit(std::size_t l, std::size_t new_local_gen) {
  auto& L = chain_.levels_[l];
  const std::size_t n = chain_.degree_;
  auto add_point = [&](Point gamma, Point beta, std::size_t t) {
    L.pos[gamma] = static_cast<std::int32_t>(L.orbit.size());
    L.label[gamma] = static_cast<std::int32_t>(t);
    L.orbit.push_back(gamma);
    if (!L.explicit_reps) return;
    if (L.orbit.size() * n > options_.explicit_transversal_limit) {
      L.explicit_reps = false;
      L.reps.clear();
      L.reps.shrink_to_fit();
      L.rep_invs.clear();
      L.rep_invs.shrink_to_fit();
      return;
    }
    auto p = static_cast<std::size_t>(L.pos[beta]);
    L.reps.push_back(L.reps[p] * chain_.strong_[L.gens[t]]);
    L.rep_invs.push_back(chain_.strong_inv_[L.gens[t]] * L.rep_invs[p]);
  };

  const std::size_t old = L.orbit.size();
  {
    const Permutation& s = chain_.strong_[L.gens[new_local_gen]];
    for (std::size_t i = 0; i < old; ++i) {
      Point beta = L.orbit[i];
      Point gamma = s[beta];
      if (L.pos[gamma] < 0) add_point(gamma, beta, new_local_gen);
    }
  }
  for (std::size_t i = old; i < L.orbit.size(); ++i) {
    Point beta = L.orbit[i];
    for (std::size_t t = 0; t < L.gens.size(); ++t) {
      Point gamma = chain_.strong_[L.gens[t]][beta];
      if (L.pos[gamma] < 0) add_point(gamma, beta, t);
    }
  }
  checked_[l].resize(L.orbit.size(), 0);
}

bool ChainBuilder::bound_reached() const {
  if (!options_.order_bound) return false;
  BigInt o = chain_.order();
  if (o > *options_.order_bound) {
    throw std::logic_error("stabilizer chain exceeds the supplied order bound");
  }
  return o == *options_.order_bound;
}

void ChainBuilder::randomize() {
  if (chain_.strong_.empty() || bound_reached()) return;
  ProductReplacement pr(chain_.strong_, rng_);
  unsigned limit = options_.stall_limit * (options_.order_bound ? 4u : 1u);
  unsigned stall = 0;
  while (stall < limit) {
    auto [r, j] = chain_.sift(pr.next());
    if (r.is_identity()) {
      ++stall;
      continue;
    }
    stall = 0;
    add_residue(r, j == 0 ? 0 : 1, j);
    if (bound_reached()) return;
  }
}

// One sweep over the unchecked Schreier generators of level l. Returns true
// after adding a new strong generator (the caller restarts deeper).
bool ChainBuilder::schreier_pass(std::size_t l) {
  const auto& L = chain_.levels_[l];
  for (std::size_t p = 0; p < L.orbit.size(); ++p) {
    for (std::size_t t = checked_[l][p]; t < L.gens.size(); ++t) {
      checked_[l][p] = static_cast<std::uint32_t>(t + 1);
      const Permutation& s = chain_.strong_[L.gens[t]];
      Point beta = L.orbit[p];
      Point gamma = s[beta];
      Permutation h = chain_.transversal(l, p) * s;
      chain_.apply_inverse_transversal(h, l, gamma);
      auto [r, j] = chain_.sift(std::move(h), l + 1);
      if (!r.is_identity()) {
        add_residue(r, l + 1, j);
        last_touched_ = j;
        return true;
      }
    }
  }
  return false;
}

void ChainBuilder::complete() {
  if (chain_.levels_.empty() || bound_reached()) return;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain_.levels_.size()) - 1;
  while (i >= 0) {
    if (schreier_pass(static_cast<std::size_t>(i))) {
      if (bound_reached()) return;
      i = static_cast<std::ptrdiff_t>(last_touched_);
    } else {
      --i;
    }
  }
}

StabilizerChain ChainBuilder::finish() && { return std::move(chain_); }

// ---------------------------------------------------------------------------
// PermGroup

PermGroup PermGroup::from_generators(std::vector<Permutation> gens,
                                     const ChainOptions& options) {
  if (gens.empty()) throw InvalidInput("generator list is empty");
  const std::size_t n = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != n) throw InvalidInput("generators differ in degree");
  }
  std::erase_if(gens, [](const Permutation& g) { return g.is_identity(); });

  ChainBuilder builder(n, options);
  for (const auto& g : gens) builder.add(g);
  bool randomized = options.randomized.value_or(n > 32 || options.order_bound);
  if (randomized) builder.randomize();
  builder.complete();
  return from_chain(std::move(gens), std::move(builder).finish());
}

PermGroup PermGroup::from_chain(std::vector<Permutation> gens,
                                StabilizerChain chain) {
  BigInt order = chain.order();
  return PermGroup(std::make_shared<const Data>(
      Data{std::move(gens), std::move(chain), std::move(order)}));
}

PermGroup PermGroup::trivial(std::size_t degree) {
  if (degree == 0) throw InvalidInput("degree must be at least 1");
  return from_chain({}, StabilizerChain(degree));
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree()) {
    throw InvalidInput("membership test: permutation degree " +
                       std::to_string(p.degree()) + " differs from group degree " +
                       std::to_string(degree()));
  }
  return data_->chain.contains(p);
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  const std::size_t n = degree();
  std::vector<Point> parent(n);
  std::iota(parent.begin(), parent.end(), Point{0});
  auto find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& g : generators()) {
    for (Point i = 0; i < n; ++i) {
      Point a = find(i), b = find(g[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::int64_t> slot(n, -1);
  std::vector<std::vector<Point>> out;
  for (Point i = 0; i < n; ++i) {
    Point r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<std::int64_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) return false;
  for (const auto& x : h.generators()) {
    if (!g.contains(x)) return false;
  }
  return true;
}

bool same_group(const PermGroup& h, const PermGroup& g) {
  return h.order() == g.order() && is_subgroup(h, g);
}

}  // namespace gwt

#include "gwtower/generation.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "gwtower/error.hpp"
#include "gwtower/group_algorithms.hpp"

namespace gwt {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

unsigned default_workers() {
  if (const char* env = std::getenv("GWTOWER_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Runs body(w) for w in [0, workers) and joins.
template <class Body>
void run_workers(unsigned workers, Body body) {
  if (workers <= 1) {
    body(0u);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
  for (auto& t : pool) t.join();
}

// Groups small enough for a full multiplication table. Elements are
// numbered by chain rank, so 0 is the identity.
class CayleyBackend {
 public:
  static constexpr std::uint64_t kMaxOrder = 4096;

  explicit CayleyBackend(const PermGroup& g) : n_(static_cast<std::uint32_t>(to_u64(g.order()))) {
    const auto& chain = g.chain();
    std::vector<Permutation> elems;
    elems.reserve(n_);
    for (std::uint32_t i = 0; i < n_; ++i) elems.push_back(chain.unrank(i));
    mul_.resize(std::size_t{n_} * n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      for (std::uint32_t j = 0; j < n_; ++j) {
        mul_[std::size_t{i} * n_ + j] =
            static_cast<std::uint16_t>(*chain.rank(elems[i] * elems[j]));
      }
    }
  }

  std::uint32_t size() const noexcept { return n_; }

  struct Scratch {
    std::vector<std::uint32_t> mark;
    std::uint32_t epoch = 0;
    std::vector<std::uint16_t> queue;
  };

  Scratch scratch() const {
    Scratch s;
    s.mark.assign(n_, 0);
    s.queue.reserve(n_);
    return s;
  }

  // Size of <gens>; with stop_early, returns as soon as more than half of
  // the group is reached (such a subgroup is the whole group).
  std::uint32_t closure(std::span<const std::uint32_t> gens, bool stop_early,
                        Scratch& s) const {
    if (++s.epoch == 0) {
      std::fill(s.mark.begin(), s.mark.end(), 0);
      s.epoch = 1;
    }
    s.queue.clear();
    s.queue.push_back(0);
    s.mark[0] = s.epoch;
    std::uint32_t count = 1;
    for (std::size_t q = 0; q < s.queue.size(); ++q) {
      const std::uint16_t* row = &mul_[std::size_t{s.queue[q]} * n_];
      for (std::uint32_t g : gens) {
        std::uint16_t y = row[g];
        if (s.mark[y] == s.epoch) continue;
        s.mark[y] = s.epoch;
        s.queue.push_back(y);
        ++count;
        if (stop_early && 2 * count > n_) return count;
      }
    }
    return count;
  }

  bool generates(std::span<const std::uint32_t> gens, Scratch& s) const {
    return 2 * closure(gens, true, s) > n_;
  }

 private:
  std::uint32_t n_;
  std::vector<std::uint16_t> mul_;
};

BigInt pow_u(std::uint64_t base, unsigned e) { return big_pow(from_u64(base), e); }

// Ordered (d-prefix)-extensions of `gens` that generate the group.
BigInt count_table(const CayleyBackend& t, std::vector<std::uint32_t>& gens,
                   unsigned remaining, CayleyBackend::Scratch& s) {
  const std::uint32_t n = t.size();
  std::uint32_t h = t.closure(gens, false, s);
  if (h == n) return pow_u(n, remaining);
  if (remaining == 0) return 0;
  std::vector<bool> in_h(n, false);
  for (std::uint16_t x : s.queue) in_h[x] = true;
  BigInt total = 0;
  if (remaining == 1) {
    std::uint64_t c = 0;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (in_h[b]) continue;
      gens.push_back(b);
      if (t.generates(gens, s)) ++c;
      gens.pop_back();
    }
    return from_u64(c);
  }
  total += BigInt(h) * count_table(t, gens, remaining - 1, s);
  for (std::uint32_t b = 0; b < n; ++b) {
    if (in_h[b]) continue;
    gens.push_back(b);
    total += count_table(t, gens, remaining - 1, s);
    gens.pop_back();
  }
  return total;
}

PermGroup subgroup(const std::vector<Permutation>& gens, std::size_t degree,
                   const BigInt& bound) {
  std::vector<Permutation> nontrivial;
  for (const auto& g : gens) {
    if (!g.is_identity()) nontrivial.push_back(g);
  }
  if (nontrivial.empty()) return PermGroup::trivial(degree);
  ChainOptions opts;
  opts.order_bound = bound;
  return PermGroup::from_generators(std::move(nontrivial), opts);
}

BigInt count_chain(const PermGroup& g, std::vector<Permutation>& gens,
                   unsigned remaining) {
  const std::uint64_t n = to_u64(g.order());
  PermGroup h = subgroup(gens, g.degree(), g.order());
  if (h.order() == g.order()) return pow_u(n, remaining);
  if (remaining == 0) return 0;
  BigInt total = remaining > 1 ? h.order() * count_chain(g, gens, remaining - 1) : BigInt(0);
  for (std::uint64_t r = 0; r < n; ++r) {
    Permutation b = g.chain().unrank(r);
    if (h.contains(b)) continue;
    gens.push_back(std::move(b));
    total += count_chain(g, gens, remaining - 1);
    gens.pop_back();
  }
  return total;
}

}  // namespace

BigInt eulerian_count(const PermGroup& g, unsigned d, const Budgets& budgets,
                      unsigned workers, CountBackend backend) {
  if (g.is_trivial()) return 1;
  if (d == 0) return 0;
  if (d == 1 && !is_abelian(g)) return 0;
  if (g.order() > from_u64(budgets.elements)) {
    throw BudgetExceeded("exact Eulerian count: group of order " + to_string(g.order()) +
                         " exceeds the enumeration budget; use the Monte Carlo estimate");
  }
  const std::uint64_t n = to_u64(g.order());
  auto classes = conjugacy_classes(g, budgets);
  BigInt tests = BigInt(static_cast<unsigned long>(classes.size())) * pow_u(n, d - 1);
  if (tests > from_u64(budgets.membership_tests)) {
    throw BudgetExceeded("exact Eulerian count for d = " + std::to_string(d) + " needs up to " +
                         to_string(tests) + " generation tests (budget " +
                         std::to_string(budgets.membership_tests) +
                         "); use the Monte Carlo estimate or raise the budget");
  }
  if (workers == 0) workers = default_workers();
  workers = std::min<unsigned>(workers, static_cast<unsigned>(classes.size()));

  if (backend == CountBackend::Table && n > CayleyBackend::kMaxOrder) {
    throw InvalidInput("table backend supports groups of order <= 4096");
  }
  const bool use_table = backend == CountBackend::Table ||
                         (backend == CountBackend::Auto && n <= CayleyBackend::kMaxOrder);
  std::vector<BigInt> partial(workers, 0);
  if (use_table) {
    CayleyBackend table(g);
    std::vector<std::uint32_t> rep_index;
    for (const auto& c : classes) rep_index.push_back(static_cast<std::uint32_t>(*g.chain().rank(c.representative)));
    run_workers(workers, [&](unsigned w) {
      auto scratch = table.scratch();
      std::vector<std::uint32_t> gens;
      for (std::size_t i = w; i < classes.size(); i += workers) {
        gens.assign(1, rep_index[i]);
        partial[w] += classes[i].size * count_table(table, gens, d - 1, scratch);
      }
    });
  } else {
    run_workers(workers, [&](unsigned w) {
      std::vector<Permutation> gens;
      for (std::size_t i = w; i < classes.size(); i += workers) {
        gens.assign(1, classes[i].representative);
        partial[w] += classes[i].size * count_chain(g, gens, d - 1);
      }
    });
  }
  BigInt total = 0;
  for (const auto& p : partial) total += p;
  if (total > pow_u(n, d)) throw std::logic_error("Eulerian count exceeds |G|^d");
  return total;
}

GenerationEstimate generation_probability_mc(const PermGroup& g, unsigned d,
                                             std::uint64_t trials, std::uint64_t seed,
                                             unsigned workers) {
  if (trials == 0) throw InvalidInput("Monte Carlo estimate needs at least one trial");
  GenerationEstimate est;
  est.trials = trials;
  est.seed = seed;
  constexpr std::uint64_t kChunk = 4096;
  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
  std::vector<std::uint64_t> hits(workers, 0);

  if (g.is_trivial() || d == 0) {
    est.successes = g.is_trivial() ? trials : 0;
  } else if (g.order() <= CayleyBackend::kMaxOrder) {
    CayleyBackend table(g);
    run_workers(workers, [&](unsigned w) {
      auto scratch = table.scratch();
      std::vector<std::uint32_t> tuple(d);
      std::uniform_int_distribution<std::uint32_t> pick(0, table.size() - 1);
      for (std::uint64_t c = w; c < chunks; c += workers) {
        std::mt19937_64 rng(split_seed(seed, c));
        const std::uint64_t end = std::min(trials, (c + 1) * kChunk);
        for (std::uint64_t t = c * kChunk; t < end; ++t) {
          for (auto& x : tuple) x = pick(rng);
          if (table.generates(tuple, scratch)) ++hits[w];
        }
      }
    });
  } else {
    run_workers(workers, [&](unsigned w) {
      std::vector<Permutation> tuple(d);
      for (std::uint64_t c = w; c < chunks; c += workers) {
        std::mt19937_64 rng(split_seed(seed, c));
        const std::uint64_t end = std::min(trials, (c + 1) * kChunk);
        for (std::uint64_t t = c * kChunk; t < end; ++t) {
          for (auto& x : tuple) x = g.random_element(rng);
          if (subgroup(tuple, g.degree(), g.order()).order() == g.order()) ++hits[w];
        }
      }
    });
  }
  for (auto h : hits) est.successes += h;

  const double n = static_cast<double>(trials);
  est.probability = static_cast<double>(est.successes) / n;
  constexpr double z99 = 2.5758293035489004;
  est.half_width =
      z99 * std::sqrt(est.probability * (1.0 - est.probability) / n) + 0.5 / n;
  return est;
}

unsigned min_generators(const PermGroup& g, const Budgets& budgets, std::uint64_t seed,
                        unsigned max_d) {
  if (g.is_trivial()) return 0;
  if (is_abelian(g) && eulerian_count(g, 1, budgets) > 0) return 1;
  for (unsigned d = 2; d <= max_d; ++d) {
    std::mt19937_64 rng(split_seed(seed, d));
    std::vector<Permutation> tuple(d);
    for (int attempt = 0; attempt < 256; ++attempt) {
      for (auto& x : tuple) x = g.random_element(rng);
      if (subgroup(tuple, g.degree(), g.order()).order() == g.order()) return d;
    }
    if (eulerian_count(g, d, budgets) > 0) return d;
  }
  throw BudgetExceeded("no generating tuple of length <= " + std::to_string(max_d));
}

BigInt aut_order(const SimpleGroupId& s) {
  if (s.family() == SimpleFamily::Alt) {
    if (s.parameter() == 6) return 1440;
    return big_factorial(s.parameter());
  }
  BigInt p = from_u64(s.parameter());
  return p * (p * p - 1);
}

void EulerianTable::inject(const SimpleGroupId& s, unsigned d, BigInt value,
                           std::string citation) {
  if (value < 0) throw InvalidInput("Eulerian value must be non-negative");
  cache_[{s, d}] = Entry{std::move(value), "supplied: " + citation};
  unavailable_.erase({s, d});
}

std::optional<EulerianTable::Entry> EulerianTable::phi(const SimpleGroupId& s, unsigned d) {
  auto key = std::make_pair(s, d);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  if (unavailable_.count(key)) return std::nullopt;
  if (d == 0 || d == 1) {
    // A non-abelian simple group is not cyclic.
    return cache_[key] = Entry{0, "exact: non-abelian group is not cyclic"};
  }
  if (s.order() > from_u64(budgets_.elements)) {
    unavailable_[key] = true;
    return std::nullopt;
  }
  try {
    BigInt v = eulerian_count(build_simple_group(s), d, budgets_, workers_);
    return cache_[key] = Entry{std::move(v), "exact: exhaustive tuple count"};
  } catch (const BudgetExceeded&) {
    unavailable_[key] = true;
    return std::nullopt;
  }
}

BigInt hall_power_bound(const SimpleGroupId& s, unsigned d, EulerianTable& table) {
  auto e = table.phi(s, d);
  if (!e) {
    throw BudgetExceeded("phi_" + std::to_string(d) + "(" + s.name() +
                         ") is not computable within budget and was not supplied");
  }
  return e->value / aut_order(s);
}

std::string_view to_string(SimplePowerRank::Kind k) noexcept {
  switch (k) {
    case SimplePowerRank::Kind::Exact:
      return "exact";
    case SimplePowerRank::Kind::AtLeast:
      return "at_least";
    case SimplePowerRank::Kind::BudgetExceeded:
      return "budget_exceeded";
  }
  return "unknown";
}

SimplePowerRank d_of_simple_power(const SimpleGroupId& s, const BigNumber& n,
                                  EulerianTable& table, unsigned max_d) {
  SimplePowerRank out;
  const BigInt aut = aut_order(s);
  bool refuted = false;
  for (unsigned d = 1; d <= max_d; ++d) {
    auto e = table.phi(s, d);
    if (!e) {
      out.kind = refuted ? SimplePowerRank::Kind::AtLeast : SimplePowerRank::Kind::BudgetExceeded;
      out.d = d;
      return out;
    }
    BigInt cap = e->value / aut;
    out.capacities.emplace_back(d, cap);
    if (n.compare(cap) <= 0) {
      out.kind = SimplePowerRank::Kind::Exact;
      out.d = d;
      return out;
    }
    refuted = true;
  }
  out.kind = SimplePowerRank::Kind::AtLeast;
  out.d = max_d + 1;
  return out;
}

std::string GrowthStep::bound_string() const {
  if (bound_denominator == 1) return bound_numerator.get_str();
  return bound_numerator.get_str() + "/" + bound_denominator.get_str();
}

std::vector<GrowthStep> remark_growth_check(const std::vector<std::uint64_t>& primes) {
  for (auto p : primes) {
    if (p < 5 || !is_prime(p)) {
      throw InvalidInput("growth check entries must be primes >= 5; got " + std::to_string(p));
    }
  }
  std::vector<GrowthStep> out;
  for (std::size_t i = 1; i < primes.size(); ++i) {
    BigInt p = from_u64(primes[i - 1]);
    BigInt q = from_u64(primes[i]);
    // (p+1)(p^2-2p-1)/4 - 2 = ((p+1)(p^2-2p-1) - 8) / 4
    BigInt num = (p + 1) * (p * p - 2 * p - 1) - 8;
    BigInt den = 4;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    GrowthStep step;
    step.previous = primes[i - 1];
    step.next = primes[i];
    step.bound_numerator = num / g;
    step.bound_denominator = den / g;
    step.holds = 4 * q >= num;
    step.equality = 4 * q == num;
    out.push_back(std::move(step));
  }
  return out;
}

std::string_view to_string(LevelVerdict v) noexcept {
  switch (v) {
    case LevelVerdict::Holds:
      return "holds";
    case LevelVerdict::Fails:
      return "fails";
    case LevelVerdict::Undecidable:
      return "undecidable";
  }
  return "unknown";
}

LowerRankCertificate lower_rank_certificate(const TowerSpec& spec, unsigned r,
                                            std::size_t levels, EulerianTable& table) {
  if (levels == 0) throw InvalidInput("lower-rank certificate needs at least one level");
  if (r == 0) throw InvalidInput("rank r must be at least 1");
  TowerSpec t = spec;
  t.horizon = levels;
  t.validate();
  if (!t.is_exponentiation()) {
    throw InvalidInput("lower-rank certificates apply to all-product (exponentiation) towers");
  }
  LowerRankCertificate cert;
  cert.spec = t;
  cert.r = r;
  auto degrees = tower_degrees(t);
  bool all_psl2 = true;
  std::vector<std::uint64_t> primes;
  for (std::size_t n = 1; n <= levels; ++n) {
    const SimpleGroupId& s = t.group_at(n);
    LowerRankCertificate::Level lv{n, s, n == 1 ? BigNumber(1) : degrees[n - 2], {}, {},
                                   aut_order(s), {}, LevelVerdict::Undecidable};
    if (auto e = table.phi(s, r)) {
      lv.phi = e->value;
      lv.phi_source = e->source;
      lv.hall_capacity = e->value / lv.aut;
      try {
        lv.verdict = lv.previous_degree.compare(*lv.hall_capacity) <= 0 ? LevelVerdict::Holds
                                                                        : LevelVerdict::Fails;
      } catch (const std::logic_error&) {
        lv.verdict = LevelVerdict::Undecidable;
      }
    } else {
      lv.phi_source = "unavailable: exceeds counting budget and no value supplied";
    }
    switch (lv.verdict) {
      case LevelVerdict::Holds:
        ++cert.holds_count;
        break;
      case LevelVerdict::Fails:
        ++cert.fails_count;
        break;
      case LevelVerdict::Undecidable:
        ++cert.undecidable_count;
        break;
    }
    if (s.family() != SimpleFamily::PSL2) all_psl2 = false;
    primes.push_back(s.parameter());
    cert.levels.push_back(std::move(lv));
  }
  if (all_psl2 && primes.size() >= 2) cert.recurrence = remark_growth_check(primes);

  std::ostringstream os;
  os << "d(S_n^m_{n-1}) <= " << r << " certified at " << cert.holds_count << " of " << levels
     << " levels (" << cert.fails_count << " refuted, " << cert.undecidable_count
     << " undecidable). This is finite-horizon evidence only: a lower-rank bound for the "
        "inverse limit needs the inequality at infinitely many levels.";
  cert.conclusion = os.str();
  return cert;
}

}  // namespace gwt

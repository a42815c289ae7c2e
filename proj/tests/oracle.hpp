#pragma once

// Brute-force reference implementations used only by tests. They work on
// raw image vectors and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<std::uint32_t>;

inline Perm mul(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

inline Perm inv(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

inline Perm id(std::size_t n) {
  Perm r(n);
  std::iota(r.begin(), r.end(), 0u);
  return r;
}

// Every element of <gens>, sorted.
inline std::vector<Perm> closure(const std::vector<Perm>& gens, std::size_t n) {
  std::set<Perm> seen{id(n)};
  std::vector<Perm> queue{id(n)};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& g : gens) {
      Perm x = mul(queue[q], g);
      if (seen.insert(x).second) queue.push_back(std::move(x));
    }
  }
  return {seen.begin(), seen.end()};
}

// Multiplication table over a sorted element list.
struct Table {
  std::vector<Perm> elems;
  std::vector<std::uint32_t> mul;
  std::uint32_t identity = 0;
  std::vector<std::uint32_t> inverses;

  explicit Table(std::vector<Perm> e) : elems(std::move(e)) {
    std::map<Perm, std::uint32_t> index;
    for (std::uint32_t i = 0; i < elems.size(); ++i) index[elems[i]] = i;
    const auto n = elems.size();
    mul.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mul[i * n + j] = index.at(oracle::mul(elems[i], elems[j]));
    identity = index.at(id(elems[0].size()));
    inverses.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) inverses[i] = index.at(inv(elems[i]));
  }
  std::size_t size() const { return elems.size(); }
  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return mul[a * size() + b]; }
  std::uint32_t inverse(std::uint32_t a) const { return inverses[a]; }

  // Subgroup generated by a subset, as a membership mask.
  std::vector<bool> subgroup(const std::vector<std::uint32_t>& gens) const {
    std::vector<bool> in(size(), false);
    std::vector<std::uint32_t> queue{identity};
    in[identity] = true;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (auto g : gens) {
        auto x = (*this)(queue[q], g);
        if (!in[x]) {
          in[x] = true;
          queue.push_back(x);
        }
      }
    return in;
  }

  std::vector<bool> normal_closure(const std::vector<std::uint32_t>& seeds) const {
    std::vector<bool> seen(size(), false);
    std::vector<std::uint32_t> gens;
    for (auto s : seeds)
      for (std::uint32_t x = 0; x < size(); ++x) {
        auto c = (*this)((*this)(inverse(x), s), x);
        if (!seen[c]) {
          seen[c] = true;
          gens.push_back(c);
        }
      }
    return subgroup(gens);
  }

  // Number of generating tuples of length d, by plain enumeration.
  std::uint64_t generating_tuples(unsigned d) const {
    std::vector<std::uint32_t> t(d, 0);
    std::uint64_t count = 0;
    while (true) {
      auto in = subgroup(t);
      if (std::count(in.begin(), in.end(), true) == static_cast<long>(size())) ++count;
      std::size_t i = 0;
      while (i < d && ++t[i] == size()) t[i++] = 0;
      if (i == d) break;
    }
    return count;
  }
};

// All normal subgroups (as masks) of a group given by its table.
// Every normal subgroup is generated by conjugacy classes, so joining
// normal closures of single elements reaches all of them.
inline std::vector<std::vector<bool>> normal_subgroups(const Table& t) {
  using Entry = std::pair<std::vector<bool>, std::vector<std::uint32_t>>;
  std::set<std::vector<bool>> found{t.normal_closure({t.identity})};
  std::vector<Entry> frontier{{*found.begin(), {t.identity}}};
  while (!frontier.empty()) {
    std::vector<Entry> next;
    for (const auto& [n, seeds] : frontier) {
      for (std::uint32_t x = 0; x < t.size(); ++x) {
        if (n[x]) continue;
        auto s = seeds;
        s.push_back(x);
        auto m = t.normal_closure(s);
        if (found.insert(m).second) next.emplace_back(m, s);
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

inline std::size_t mask_size(const std::vector<bool>& m) {
  return static_cast<std::size_t>(std::count(m.begin(), m.end(), true));
}

inline bool mask_subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// Orders of the minimal normal subgroups, sorted.
inline std::vector<std::size_t> minimal_normal_orders(const Table& t) {
  auto all = normal_subgroups(t);
  std::vector<std::size_t> out;
  for (const auto& n : all) {
    if (mask_size(n) == 1) continue;
    bool minimal = true;
    for (const auto& m : all)
      if (mask_size(m) > 1 && mask_size(m) < mask_size(n) && mask_subset(m, n)) minimal = false;
    if (minimal) out.push_back(mask_size(n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Minimal generating-set size of Z_{f1} x ... x Z_{fk} by exhaustive search.
inline unsigned abelian_rank_bruteforce(const std::vector<std::uint64_t>& factors) {
  std::size_t n = 1;
  for (auto f : factors) n *= f;
  if (n == 1) return 0;
  auto decode = [&](std::size_t x) {
    std::vector<std::uint64_t> v;
    for (auto f : factors) {
      v.push_back(x % f);
      x /= f;
    }
    return v;
  };
  auto encode = [&](const std::vector<std::uint64_t>& v) {
    std::size_t x = 0;
    for (std::size_t i = factors.size(); i-- > 0;) x = x * factors[i] + v[i];
    return x;
  };
  auto generated = [&](const std::vector<std::size_t>& gens) {
    std::vector<bool> in(n, false);
    std::vector<std::size_t> queue{0};
    in[0] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto a = decode(queue[q]);
      for (auto g : gens) {
        auto b = decode(g);
        std::vector<std::uint64_t> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % factors[i];
        auto x = encode(c);
        if (!in[x]) {
          in[x] = true;
          queue.push_back(x);
        }
      }
    }
    return queue.size() == n;
  };
  for (unsigned k = 1;; ++k) {
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      if (generated(idx)) return k;
      std::size_t i = 0;
      while (i < k && ++idx[i] == n) idx[i++] = 0;
      if (i == k) break;
    }
  }
}

}  // namespace oracle

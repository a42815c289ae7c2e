#pragma once

#include <random>
#include <vector>

#include "gwtower/perm_group.hpp"
#include "oracle.hpp"

namespace support {

inline oracle::Perm raw(const gwt::Permutation& p) {
  return {p.images().begin(), p.images().end()};
}

inline std::vector<oracle::Perm> raw_generators(const gwt::PermGroup& g) {
  std::vector<oracle::Perm> out;
  for (const auto& x : g.generators()) out.push_back(raw(x));
  if (out.empty()) out.push_back(oracle::id(g.degree()));
  return out;
}

inline std::vector<oracle::Perm> brute_elements(const gwt::PermGroup& g) {
  return oracle::closure(raw_generators(g), g.degree());
}

inline gwt::Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<gwt::Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<gwt::Point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return gwt::Permutation::from_images(std::move(v));
}

}  // namespace support

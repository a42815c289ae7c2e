#pragma once

#include <cstdint>

namespace gwt {

// Limits on exhaustive work. Operations that would exceed one throw
// BudgetExceeded rather than truncating.
struct Budgets {
  // Largest group order accepted by element enumeration (conjugacy classes,
  // normal-subgroup analysis).
  std::uint64_t elements = 10'000'000;
  // Largest permutation degree built explicitly.
  std::uint64_t degree = 100'000;
  // Generation/membership tests allowed for one exact Eulerian count.
  std::uint64_t membership_tests = 100'000'000;
};

}  // namespace gwt

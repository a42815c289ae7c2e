#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "gwtower/bigint.hpp"

namespace gwt {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}.
///
/// Products are read left to right: `p * q` first applies `p`, then `q`, so
/// `(p * q)[i] == q[p[i]]`. Points are 0-indexed; `to_cycle_string` prints
/// them 1-indexed.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  // Throws InvalidInput unless `images` is a bijection of {0..n-1}, n >= 1.
  static Permutation from_images(std::vector<Point> images);

  // Cycles use 0-indexed points; points not mentioned are fixed.
  static Permutation from_cycles(
      std::size_t degree,
      std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation inverse() const;

  // x^-1 * this * x
  Permutation conjugate_by(const Permutation& x) const;

  bool is_identity() const noexcept;
  BigInt order() const;
  Point largest_moved_point() const noexcept;
  Point first_moved_point() const noexcept;  // degree() when identity

  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

// Throws InvalidInput on degree mismatch. Same as `p * q`.
Permutation compose(const Permutation& p, const Permutation& q);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace gwt

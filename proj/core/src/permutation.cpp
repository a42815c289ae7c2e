#include "gwtower/permutation.hpp"

#include <numeric>
#include <sstream>

#include "gwtower/error.hpp"

namespace gwt {

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw InvalidInput("permutation degree must be at least 1");
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return Permutation(std::move(im));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  if (images.empty()) throw InvalidInput("permutation degree must be at least 1");
  std::vector<bool> seen(images.size(), false);
  for (Point v : images) {
    if (v >= images.size() || seen[v]) {
      throw InvalidInput("image list is not a bijection");
    }
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    std::size_t degree,
    std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> cs;
  for (auto c : cycles) cs.emplace_back(c);
  return from_cycles(degree, cs);
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  auto p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point a = c[i];
      if (a >= degree || used[a]) throw InvalidInput("invalid cycle notation");
      used[a] = true;
      p.images_[a] = c[(i + 1) % c.size()];
    }
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<Point> out(images_.size());
  const Point* r = rhs.images_.data();
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = r[images_[i]];
  return Permutation(std::move(out));
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  const Point* r = rhs.images_.data();
  for (auto& v : images_) v = r[v];
  return *this;
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[images_[i]] = static_cast<Point>(i);
  }
  return Permutation(std::move(out));
}

Permutation Permutation::conjugate_by(const Permutation& x) const {
  // x^-1 * p * x maps x(i) to x(p(i)).
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[x.images_[i]] = x.images_[images_[i]];
  }
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

BigInt Permutation::order() const {
  BigInt result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    unsigned long len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    mpz_lcm_ui(result.get_mpz_t(), result.get_mpz_t(), len);
  }
  return result;
}

Point Permutation::largest_moved_point() const noexcept {
  for (std::size_t i = images_.size(); i-- > 0;) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return 0;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    Point j = static_cast<Point>(i);
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ',';
      os << (j + 1);
      first = false;
      j = images_[j];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw InvalidInput("cannot compose permutations of degree " +
                       std::to_string(p.degree()) + " and " +
                       std::to_string(q.degree()));
  }
  return p * q;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image words.
  std::uint64_t h = 1469598103934665603ull;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace gwt

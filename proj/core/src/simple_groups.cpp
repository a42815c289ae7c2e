#include "gwtower/simple_groups.hpp"

#include "gwtower/error.hpp"

namespace gwt {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  return pow_mod(a, p - 2, p);
}

std::vector<Point> cycle_range(std::uint64_t from, std::uint64_t to) {
  std::vector<Point> c;
  for (std::uint64_t i = from; i < to; ++i) c.push_back(static_cast<Point>(i));
  return c;
}

void check_degree(std::uint64_t n) {
  if (n > (std::uint64_t{1} << 31)) throw InvalidInput("degree too large");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a proof of primality below 3.3e24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

SimpleGroupId SimpleGroupId::alt(std::uint64_t n) {
  if (n < 5) {
    throw InvalidInput("Alt(" + std::to_string(n) +
                       ") is not non-abelian simple; need n >= 5");
  }
  return {SimpleFamily::Alt, n};
}

SimpleGroupId SimpleGroupId::psl2(std::uint64_t p) {
  if (p < 5 || !is_prime(p)) {
    throw InvalidInput("PSL2(" + std::to_string(p) +
                       ") unsupported; need a prime p >= 5");
  }
  return {SimpleFamily::PSL2, p};
}

std::uint64_t SimpleGroupId::natural_degree() const noexcept {
  return family_ == SimpleFamily::Alt ? parameter_ : parameter_ + 1;
}

BigInt SimpleGroupId::order() const {
  if (family_ == SimpleFamily::Alt) return big_factorial(parameter_) / 2;
  BigInt p = from_u64(parameter_);
  return p * (p * p - 1) / 2;
}

std::string SimpleGroupId::name() const {
  return (family_ == SimpleFamily::Alt ? "Alt(" : "PSL2(") +
         std::to_string(parameter_) + ")";
}

PermGroup alt_group(std::uint64_t n) {
  if (n < 3) throw InvalidInput("alt_group needs n >= 3");
  check_degree(n);
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n >= 4) {
    gens.push_back(Permutation::from_cycles(
        n, std::vector<std::vector<Point>>{cycle_range(n % 2 ? 0 : 1, n)}));
  }
  ChainOptions opts;
  opts.order_bound = big_factorial(n) / 2;
  return PermGroup::from_generators(std::move(gens), opts);
}

PermGroup sym_group(std::uint64_t n) {
  if (n < 1) throw InvalidInput("sym_group needs n >= 1");
  check_degree(n);
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Permutation> gens{
      Permutation::from_cycles(n, {{0, 1}}),
      Permutation::from_cycles(n, std::vector<std::vector<Point>>{cycle_range(0, n)})};
  ChainOptions opts;
  opts.order_bound = big_factorial(n);
  return PermGroup::from_generators(std::move(gens), opts);
}

PermGroup cyclic_group(std::uint64_t n) {
  if (n < 1) throw InvalidInput("cyclic_group needs n >= 1");
  check_degree(n);
  if (n == 1) return PermGroup::trivial(1);
  return PermGroup::from_generators(
      {Permutation::from_cycles(n, std::vector<std::vector<Point>>{cycle_range(0, n)})});
}

PermGroup psl2_group(std::uint64_t p) {
  if (p < 5 || !is_prime(p)) {
    throw InvalidInput("psl2_group needs a prime p >= 5, got " + std::to_string(p));
  }
  check_degree(p + 1);
  const Point inf = static_cast<Point>(p);
  std::vector<Point> t(p + 1), s(p + 1);
  for (std::uint64_t x = 0; x < p; ++x) {
    t[x] = static_cast<Point>((x + 1) % p);
    s[x] = x == 0 ? inf : static_cast<Point>(p - inv_mod(x, p));
  }
  t[inf] = inf;
  s[inf] = 0;
  ChainOptions opts;
  opts.order_bound = SimpleGroupId::psl2(p).order();
  return PermGroup::from_generators(
      {Permutation::from_images(std::move(t)), Permutation::from_images(std::move(s))},
      opts);
}

PermGroup sl2_group(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw InvalidInput("sl2_group needs an odd prime");
  check_degree(p * p);
  // Vector (a, b) != 0 is point a*p + b - 1.
  auto index = [p](std::uint64_t a, std::uint64_t b) {
    return static_cast<Point>(a * p + b - 1);
  };
  const std::uint64_t n = p * p - 1;
  std::vector<Point> t(n), s(n);
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      if (a == 0 && b == 0) continue;
      // Row vectors times [[1,1],[0,1]] and [[0,-1],[1,0]].
      t[index(a, b)] = index(a, (a + b) % p);
      s[index(a, b)] = index(b, (p - a) % p);
    }
  }
  ChainOptions opts;
  BigInt q = from_u64(p);
  opts.order_bound = q * (q * q - 1);
  return PermGroup::from_generators(
      {Permutation::from_images(std::move(t)), Permutation::from_images(std::move(s))},
      opts);
}

PermGroup build_simple_group(const SimpleGroupId& id) {
  return id.family() == SimpleFamily::Alt ? alt_group(id.parameter())
                                          : psl2_group(id.parameter());
}

}  // namespace gwt

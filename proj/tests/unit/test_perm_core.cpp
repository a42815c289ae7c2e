#include <random>
#include <set>

#include "doctest.h"

#include "gwtower/error.hpp"
#include "gwtower/group_algorithms.hpp"
#include "gwtower/perm_group.hpp"
#include "gwtower/simple_groups.hpp"
#include "support.hpp"

using namespace gwt;

TEST_CASE("permutation composition reads left to right") {
  auto p = Permutation::from_cycles(3, {{0, 1}});
  auto q = Permutation::from_cycles(3, {{1, 2}});
  auto pq = p * q;
  CHECK(pq[0] == 2);  // 0 -> 1 -> 2
  CHECK(pq.to_cycle_string() == "(1,3,2)");
  CHECK(Permutation::identity(4).to_cycle_string() == "()");
  CHECK(p.conjugate_by(q) == q.inverse() * p * q);
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation::from_images({0, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(Permutation::from_images({}), InvalidInput);
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)), InvalidInput);
}

TEST_CASE("permutation order is the lcm of cycle lengths") {
  auto p = Permutation::from_cycles(9, {{0, 1}, {2, 3, 4}, {5, 6, 7, 8}});
  CHECK(p.order() == 12);
  CHECK(p.largest_moved_point() == 8);
  CHECK(Permutation::identity(5).first_moved_point() == 5);
}

TEST_CASE("property: multiplication is associative with two-sided inverses") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + rng() % 40;
    auto a = support::random_permutation(n, rng);
    auto b = support::random_permutation(n, rng);
    auto c = support::random_permutation(n, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
  }
}

TEST_CASE("orders of standard groups match brute-force closure") {
  struct Case {
    PermGroup g;
    std::size_t order;
  };
  std::vector<Case> cases = {{alt_group(5), 60},    {sym_group(4), 24},  {cyclic_group(7), 7},
                             {psl2_group(5), 60},   {psl2_group(7), 168}, {sl2_group(5), 120},
                             {sym_group(3), 6},     {alt_group(6), 360}, {sl2_group(3), 24}};
  for (const auto& c : cases) {
    CHECK(c.g.order() == c.order);
    CHECK(support::brute_elements(c.g).size() == c.order);
  }
  CHECK(psl2_group(13).order() == 1092);
  CHECK(alt_group(36).order() == big_factorial(36) / 2);
}

TEST_CASE("simple group identifiers") {
  CHECK(SimpleGroupId::alt(36).name() == "Alt(36)");
  CHECK(SimpleGroupId::psl2(7).order() == 168);
  CHECK(SimpleGroupId::psl2(7).natural_degree() == 8);
  CHECK_THROWS_AS(SimpleGroupId::alt(4), InvalidInput);
  CHECK_THROWS_AS(SimpleGroupId::psl2(9), InvalidInput);
  CHECK_THROWS_AS(SimpleGroupId::psl2(3), InvalidInput);
  CHECK(is_prime(1609));
  CHECK_FALSE(is_prime(1607 * 3));
  CHECK(is_prime(18446744073709551557ull));
}

TEST_CASE("membership agrees with the brute-force element set") {
  auto g = psl2_group(7);
  auto elems = support::brute_elements(g);
  std::set<oracle::Perm> in(elems.begin(), elems.end());
  std::mt19937_64 rng(3);
  int members = 0;
  for (int i = 0; i < 2000; ++i) {
    auto p = support::random_permutation(8, rng);
    bool expected = in.count(support::raw(p)) > 0;
    CHECK(g.contains(p) == expected);
    members += expected;
  }
  for (const auto& e : elems) CHECK(g.contains(Permutation::from_images(e)));
  CHECK(members > 0);
}

TEST_CASE("property: products of random elements stay in the group") {
  auto g = alt_group(9);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto a = g.random_element(rng);
    auto b = g.random_element(rng);
    CHECK(g.contains(a * b.inverse()));
  }
  CHECK_FALSE(g.contains(Permutation::from_cycles(9, {{0, 1}})));
}

TEST_CASE("rank and unrank are inverse bijections") {
  auto g = sym_group(5);
  std::set<Permutation> seen;
  for (std::uint64_t r = 0; r < 120; ++r) {
    auto x = g.chain().unrank(r);
    CHECK(g.chain().rank(x) == r);
    seen.insert(x);
  }
  CHECK(seen.size() == 120);
  CHECK(g.chain().unrank(0).is_identity());
}

TEST_CASE("certification without an order bound") {
  ChainOptions opts;
  opts.randomized = true;
  auto gens = alt_group(8).generators();
  auto g = PermGroup::from_generators(gens, opts);
  CHECK(g.order() == big_factorial(8) / 2);
  opts.randomized = false;
  CHECK(PermGroup::from_generators(gens, opts).order() == big_factorial(8) / 2);
}

TEST_CASE("schreier trees beyond the explicit transversal limit") {
  ChainOptions opts;
  opts.explicit_transversal_limit = 0;
  auto g = PermGroup::from_generators(psl2_group(11).generators(), opts);
  CHECK(g.order() == 660);
  std::mt19937_64 rng(9);
  auto x = psl2_group(11).random_element(rng);
  CHECK(g.contains(x));
}

TEST_CASE("property: orbits partition the points") {
  auto g = PermGroup::from_generators(
      {Permutation::from_cycles(7, {{0, 1}}), Permutation::from_cycles(7, {{2, 3, 4}})});
  auto orbits = g.orbits();
  std::set<Point> all;
  std::size_t total = 0;
  for (const auto& o : orbits) {
    total += o.size();
    all.insert(o.begin(), o.end());
  }
  CHECK(total == 7);
  CHECK(all.size() == 7);
  CHECK(orbits.size() == 4);
  CHECK_FALSE(g.is_transitive());
  CHECK(alt_group(5).is_transitive());
}

TEST_CASE("blocks and primitivity") {
  CHECK(is_primitive(alt_group(5)));
  CHECK(is_primitive(psl2_group(7)));
  CHECK_FALSE(is_primitive(cyclic_group(4)));
  auto block = minimal_block(cyclic_group(6), 2);
  CHECK(block == std::vector<Point>{0, 2, 4});
  CHECK_THROWS_AS(is_primitive(PermGroup::trivial(3)), InvalidInput);
}

TEST_CASE("conjugacy classes partition the group") {
  for (const auto& g : {alt_group(5), sym_group(5), psl2_group(7), sl2_group(5)}) {
    auto classes = conjugacy_classes(g);
    BigInt total = 0;
    for (const auto& c : classes) total += c.size;
    CHECK(total == g.order());
    CHECK(classes.front().representative.is_identity());
  }
  CHECK(conjugacy_classes(alt_group(5)).size() == 5);
  CHECK(conjugacy_classes(sym_group(5)).size() == 7);
  CHECK(conjugacy_classes(psl2_group(7)).size() == 6);
  Budgets tiny;
  tiny.elements = 10;
  CHECK_THROWS_AS(conjugacy_classes(alt_group(5), tiny), BudgetExceeded);
}

TEST_CASE("derived subgroups and normal closures") {
  CHECK(is_perfect(alt_group(5)));
  CHECK(is_perfect(sl2_group(5)));
  CHECK_FALSE(is_perfect(sym_group(4)));
  CHECK(derived_subgroup(sym_group(4)).order() == 12);
  CHECK(is_abelian(cyclic_group(9)));
  CHECK_FALSE(is_abelian(sym_group(3)));
  auto s4 = sym_group(4);
  auto v4 = normal_closure(s4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}})});
  CHECK(v4.order() == 4);
  CHECK_THROWS_AS(normal_closure(alt_group(4), {Permutation::from_cycles(4, {{0, 1}})}),
                  InvalidInput);
}

TEST_CASE("subgroup relations") {
  auto a5 = alt_group(5);
  auto s5 = sym_group(5);
  CHECK(is_subgroup(a5, s5));
  CHECK_FALSE(is_subgroup(s5, a5));
  CHECK(same_group(PermGroup::from_generators(a5.generators()), a5));
}

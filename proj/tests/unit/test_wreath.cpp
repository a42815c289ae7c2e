#include "doctest.h"

#include "gwtower/error.hpp"
#include "gwtower/group_algorithms.hpp"
#include "gwtower/simple_groups.hpp"
#include "gwtower/tower.hpp"
#include "gwtower/wreath.hpp"
#include "support.hpp"

using namespace gwt;

namespace {

BigInt expected_order(const PermGroup& a, const PermGroup& b) {
  return big_pow(a.order(), static_cast<unsigned long>(b.degree())) * b.order();
}

}  // namespace

TEST_CASE("wreath orders match brute-force closure for small cases") {
  struct Case {
    PermGroup a, b;
  };
  std::vector<Case> cases = {{cyclic_group(2), cyclic_group(2)},
                             {cyclic_group(3), cyclic_group(2)},
                             {sym_group(3), cyclic_group(2)},
                             {cyclic_group(2), cyclic_group(3)},
                             {cyclic_group(2), PermGroup::trivial(2)}};
  for (const auto& c : cases) {
    for (auto action : {ActionKind::Imprimitive, ActionKind::Product}) {
      auto w = wreath(action, c.a, c.b);
      CHECK(w.group().order() == expected_order(c.a, c.b));
      CHECK(BigInt(static_cast<unsigned long>(support::brute_elements(w.group()).size())) ==
            expected_order(c.a, c.b));
    }
  }
}

TEST_CASE("degrees: m*n imprimitive, m^n product") {
  auto a = alt_group(5);
  auto b = cyclic_group(3);
  CHECK(imprimitive_wreath(a, b).group().degree() == 15);
  CHECK(product_action_wreath(a, b).group().degree() == 125);
}

TEST_CASE("Alt(5) wr C2 in both actions") {
  auto a = alt_group(5);
  auto b = cyclic_group(2);
  auto imp = imprimitive_wreath(a, b);
  auto prod = product_action_wreath(a, b);
  CHECK(imp.group().order() == 7200);
  CHECK(prod.group().order() == 7200);
  CHECK(support::brute_elements(prod.group()).size() == 7200);
  CHECK_FALSE(is_primitive(imp.group()));
  CHECK(is_primitive(prod.group()));
  CHECK(conjugacy_classes(imp.group()).size() == conjugacy_classes(prod.group()).size());
}

TEST_CASE("property: projection is a homomorphism onto the top group") {
  for (auto action : {ActionKind::Imprimitive, ActionKind::Product}) {
    auto w = wreath(action, alt_group(5), sym_group(3));
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
      auto x = w.group().random_element(rng);
      auto y = w.group().random_element(rng);
      CHECK(w.project(x * y) == w.project(x) * w.project(y));
      CHECK(w.top().contains(w.project(x)));
    }
    for (const auto& g : w.base_generators()) CHECK(w.project(g).is_identity());
    for (const auto& t : w.top().generators()) CHECK(w.project(w.top_element(t)) == t);
  }
}

TEST_CASE("property: base elements in distinct coordinates commute") {
  auto w = product_action_wreath(alt_group(5), cyclic_group(3));
  auto a = alt_group(5).generators()[0];
  auto b = alt_group(5).generators()[1];
  auto x = w.base_element(0, a);
  auto y = w.base_element(2, b);
  CHECK(x * y == y * x);
  CHECK(w.base_group().order() == big_pow(BigInt(60), 3));
}

TEST_CASE("wreath preconditions") {
  CHECK_THROWS_AS(imprimitive_wreath(PermGroup::trivial(2), cyclic_group(2)), InvalidInput);
  Budgets small;
  small.degree = 100;
  CHECK_THROWS_AS(product_action_wreath(alt_group(5), cyclic_group(3), small), BudgetExceeded);
}

TEST_CASE("PSL2(5) wr PSL2(5) in product action on 46656 points") {
  auto w = product_action_wreath(psl2_group(5), psl2_group(5));
  CHECK(w.group().degree() == 46656);
  CHECK(w.group().order() == big_pow(BigInt(60), 7));
}

TEST_CASE("big numbers: explicit and symbolic paths agree") {
  auto e = BigNumber::power(6, BigNumber(BigInt(46656)));
  REQUIRE(e.is_explicit());
  CHECK(e.digit_count() == BigInt(36306));
  auto s = BigNumber::power(6, BigNumber(BigInt(46656)), 1000);
  CHECK_FALSE(s.is_explicit());
  CHECK(s.digit_count() == BigInt(36306));
  CHECK(s.expression() == "6^46656");
  CHECK(e.compare(BigInt(10)) > 0);
  CHECK(BigNumber(BigInt(19)).compare(BigInt(19)) == 0);
  auto tower = BigNumber::power(6, e);
  CHECK_FALSE(tower.is_explicit());
  CHECK(tower.expression() == "6^(6^46656)");
  CHECK(tower.log10_log10() == doctest::Approx(36305.3).epsilon(1e-4));
}

TEST_CASE("tower degrees and orders") {
  auto spec = TowerSpec::constant(SimpleGroupId::psl2(5), 4);
  auto d = tower_degrees(spec);
  REQUIRE(d.size() == 4);
  CHECK(d[0].value() == 6);
  CHECK(d[1].value() == 46656);
  CHECK(d[2].digit_count() == BigInt(36306));
  CHECK_FALSE(d[3].is_explicit());

  auto imp = TowerSpec::constant(SimpleGroupId::alt(5), 3, ActionKind::Imprimitive);
  auto di = tower_degrees(imp);
  CHECK(di[2].value() == 125);
  CHECK(tower_order(imp, 2).value() == big_pow(BigInt(60), 6));
  auto lvl = build_tower_level(imp, 3);
  CHECK(lvl.group.degree() == 125);
  CHECK(lvl.group.order() == tower_order(imp, 3).value());
}

TEST_CASE("tower spec tails") {
  TowerSpec spec;
  spec.levels = {{SimpleGroupId::alt(5), ActionKind::Product},
                 {SimpleGroupId::alt(6), ActionKind::Product},
                 {SimpleGroupId::psl2(7), ActionKind::Imprimitive}};
  spec.tail = TailKind::Periodic;
  spec.period = 2;
  spec.horizon = 8;
  CHECK(spec.group_at(4) == SimpleGroupId::alt(6));
  CHECK(spec.group_at(5) == SimpleGroupId::psl2(7));
  CHECK(spec.action_at(5) == ActionKind::Imprimitive);
  CHECK_FALSE(spec.is_exponentiation());
  spec.tail = TailKind::None;
  CHECK_THROWS_AS(spec.validate(), InvalidInput);
  CHECK_THROWS_AS(spec.group_at(4), InvalidInput);
}

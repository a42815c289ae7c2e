#include "doctest.h"

#include "gwtower/error.hpp"
#include "gwtower/group_algorithms.hpp"
#include "gwtower/schur.hpp"
#include "gwtower/simple_groups.hpp"
#include "gwtower/wreath.hpp"
#include "oracle.hpp"

using namespace gwt;

TEST_CASE("abelian invariants are compared through primary decomposition") {
  CHECK(AbelianInvariants({6}) == AbelianInvariants({2, 3}));
  CHECK_FALSE(AbelianInvariants({4}) == AbelianInvariants({2, 2}));
  CHECK(AbelianInvariants({1, 2}).factors() == std::vector<std::uint64_t>{2});
  CHECK(AbelianInvariants().is_trivial());
  CHECK(AbelianInvariants({6, 2, 6}).order() == 72);
  CHECK(AbelianInvariants({2, 2, 6}).to_string() == "C2^2 x C6");
  CHECK_THROWS_AS(AbelianInvariants({0}), InvalidInput);
}

TEST_CASE("d_abelian examples") {
  CHECK(d_abelian(AbelianInvariants()) == 0);
  CHECK(d_abelian(AbelianInvariants({2, 2, 2})) == 3);
  CHECK(d_abelian(AbelianInvariants({6, 6, 2})) == 3);
  CHECK(d_abelian(AbelianInvariants({2, 3})) == 1);
}

TEST_CASE("d_abelian agrees with brute-force generator search") {
  const std::vector<std::vector<std::uint64_t>> corpus = {
      {2},    {6},       {2, 2},    {2, 3},    {4, 2},    {3, 9},    {2, 2, 2},
      {6, 6}, {6, 6, 2}, {12, 18},  {5, 5},    {4, 6},    {2, 4, 8}, {10, 15},
      {7},    {3, 3, 3}, {2, 2, 3}, {30, 2},   {9, 27},   {8, 8}};
  for (const auto& f : corpus) {
    CAPTURE(f.size());
    CHECK(d_abelian(AbelianInvariants(f)) == oracle::abelian_rank_bruteforce(f));
  }
}

TEST_CASE("curated multipliers") {
  CHECK(multiplier_of_simple(SimpleGroupId::alt(36)).multiplier == AbelianInvariants({2}));
  CHECK(multiplier_of_simple(SimpleGroupId::alt(5)).multiplier == AbelianInvariants({2}));
  CHECK(multiplier_of_simple(SimpleGroupId::alt(6)).multiplier == AbelianInvariants({6}));
  CHECK(multiplier_of_simple(SimpleGroupId::alt(7)).multiplier == AbelianInvariants({6}));
  CHECK(multiplier_of_simple(SimpleGroupId::alt(8)).multiplier == AbelianInvariants({2}));
  CHECK(multiplier_of_simple(SimpleGroupId::psl2(7)).multiplier == AbelianInvariants({2}));
  CHECK_FALSE(multiplier_of_simple(SimpleGroupId::psl2(7)).provenance.empty());
}

TEST_CASE("perfect central extensions SL2(p) -> PSL2(p) bound the multiplier below") {
  for (std::uint64_t p : {5, 7}) {
    auto sl = sl2_group(p);
    CHECK(is_perfect(sl));
    auto elems = enumerate_elements(sl);
    std::size_t centre = 0;
    for (const auto& z : elems) {
      bool central = true;
      for (const auto& g : sl.generators()) central = central && z * g == g * z;
      centre += central;
    }
    CHECK(centre == 2);
    CHECK(sl.order() / 2 == SimpleGroupId::psl2(p).order());
    CHECK(multiplier_of_simple(SimpleGroupId::psl2(p)).multiplier.order() % centre == 0);
  }
}

TEST_CASE("wreath products of perfect groups are perfect") {
  CHECK(is_perfect(imprimitive_wreath(alt_group(5), alt_group(5)).group()));
  CHECK_FALSE(is_perfect(imprimitive_wreath(alt_group(5), cyclic_group(2)).group()));
}

TEST_CASE("tower multipliers") {
  auto c36 = TowerSpec::constant(SimpleGroupId::alt(36), 20);
  CHECK(multiplier_of_tower(c36, 5) == AbelianInvariants({2, 2, 2, 2, 2}));
  CHECK(multiplier_of_tower(c36, 1) == AbelianInvariants({2}));
  auto s67 = TowerSpec::exponentiation({SimpleGroupId::alt(6), SimpleGroupId::alt(7)});
  CHECK(multiplier_of_tower(s67, 2) == AbelianInvariants({6, 6}));
}

TEST_CASE("property: multipliers grow by one factor per level") {
  TowerSpec spec;
  spec.levels = {{SimpleGroupId::alt(5), ActionKind::Product},
                 {SimpleGroupId::alt(6), ActionKind::Product},
                 {SimpleGroupId::psl2(11), ActionKind::Imprimitive}};
  spec.tail = TailKind::Periodic;
  spec.period = 2;
  spec.horizon = 12;
  for (std::size_t n = 1; n < 12; ++n) {
    CHECK(multiplier_of_tower(spec, n + 1) ==
          multiplier_of_tower(spec, n) * multiplier_of_simple(spec.group_at(n + 1)).multiplier);
  }
  for (auto s : {SimpleGroupId::alt(5), SimpleGroupId::alt(6), SimpleGroupId::psl2(13)}) {
    auto c = TowerSpec::constant(s, 8);
    const unsigned dm = d_abelian(multiplier_of_simple(s).multiplier);
    for (std::size_t n = 1; n <= 8; ++n) CHECK(d_abelian(multiplier_of_tower(c, n)) == n * dm);
  }
}

TEST_CASE("non-finite-presentability certificate for constant Alt(36)") {
  auto cert = fp_obstruction(TowerSpec::constant(SimpleGroupId::alt(36), 20), 20);
  REQUIRE(cert.per_level.size() == 20);
  for (const auto& l : cert.per_level) {
    CHECK(l.d == l.n);
    CHECK(l.multiplier == AbelianInvariants(std::vector<std::uint64_t>(l.n, 2)));
  }
  CHECK(cert.obstruction_flagged);
  CHECK(cert.unbounded_within_horizon);
  CHECK(cert.hypothesis.prime == 2u);
  CHECK(cert.reason.find("M(Alt(36)) has order 2") != std::string::npos);
}

TEST_CASE("certificate variants") {
  auto a6 = fp_obstruction(TowerSpec::constant(SimpleGroupId::alt(6), 10), 10);
  for (const auto& l : a6.per_level) CHECK(l.d == l.n);

  auto single = fp_obstruction(TowerSpec::exponentiation({SimpleGroupId::alt(5)}), 1);
  CHECK(single.per_level.front().d == 1);
  CHECK_FALSE(single.obstruction_flagged);
  CHECK(single.hypothesis.status == Tristate::Undecidable);

  auto finite = fp_obstruction(
      TowerSpec::exponentiation({SimpleGroupId::alt(5), SimpleGroupId::alt(6),
                                 SimpleGroupId::psl2(7), SimpleGroupId::alt(8)}),
      4);
  CHECK(finite.growth_within_horizon);
  CHECK(finite.unbounded_within_horizon);
  CHECK_FALSE(finite.obstruction_flagged);

  for (const auto* c : {&a6, &finite}) {
    for (std::size_t i = 1; i < c->per_level.size(); ++i) {
      CHECK(c->per_level[i].d >= c->per_level[i - 1].d);
    }
  }
}

TEST_CASE("prime recurrence hypothesis") {
  auto h = fp_hypothesis_check(TowerSpec::constant(SimpleGroupId::psl2(23), 5));
  CHECK(h.status == Tristate::True);
  CHECK(h.prime == 2u);
  auto finite = fp_hypothesis_check(TowerSpec::exponentiation({SimpleGroupId::alt(5)}));
  CHECK(finite.status == Tristate::Undecidable);
  CHECK(finite.reason.find("finite") != std::string::npos);
  TowerSpec periodic;
  periodic.levels = {{SimpleGroupId::alt(7), ActionKind::Product},
                     {SimpleGroupId::alt(6), ActionKind::Product}};
  periodic.tail = TailKind::Periodic;
  periodic.period = 1;
  periodic.horizon = 4;
  CHECK(fp_hypothesis_check(periodic).prime == 2u);
}

#include "doctest.h"

#include "gwtower/error.hpp"
#include "gwtower/spec_io.hpp"

using namespace gwt;

TEST_CASE("constant Alt(36) spec") {
  auto s = parse_tower_spec("# constant sequence\nalt 36 product\ntail: constant\nhorizon: 20\n");
  CHECK(s.levels.size() == 1);
  CHECK(s.tail == TailKind::Constant);
  CHECK(s.horizon == 20);
  CHECK(s.group_at(20) == SimpleGroupId::alt(36));
  CHECK(s.is_exponentiation());
}

TEST_CASE("PSL2 sequence spec") {
  auto s = parse_tower_spec("psl2 5 product\nPSL2 19 product   # next prime\npsl2 1609 product\n");
  CHECK(s.horizon == 3);
  CHECK(s.group_at(3) == SimpleGroupId::psl2(1609));
  CHECK(s.tail == TailKind::None);
}

TEST_CASE("periodic tail") {
  auto s = parse_tower_spec("alt 5 product\nalt 6 imprimitive\nalt 7 product\ntail: periodic 2\nhorizon: 9\n");
  CHECK(s.period == 2);
  CHECK(s.group_at(8) == SimpleGroupId::alt(6));
  CHECK(s.action_at(8) == ActionKind::Imprimitive);
}

TEST_CASE("round trip") {
  auto s = parse_tower_spec("alt 5 product\npsl2 7 imprimitive\ntail: periodic 1\nhorizon: 4\n");
  CHECK(parse_tower_spec(format_tower_spec(s)) == s);
}

namespace {

std::string error_of(const std::string& doc) {
  try {
    parse_tower_spec(doc);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("diagnostics name the line and field") {
  CHECK(error_of("alt 5 product\nalt 4 product\n").find("line 2, field parameter") == 0);
  CHECK(error_of("sym 5 product\n").find("line 1, field family") == 0);
  CHECK(error_of("alt 5 sideways\n").find("line 1, field action") == 0);
  CHECK(error_of("psl2 9 product\n").find("line 1, field parameter") == 0);
  CHECK(error_of("alt 5\n").find("line 1, field entry") == 0);
  CHECK(error_of("alt 5 product\ntail: sometimes\n").find("line 2, field tail") == 0);
  CHECK(error_of("alt 5 product\nhorizon: x\n").find("line 2, field horizon") == 0);
  CHECK(error_of("alt 5 product\nhorizon: 3\n").find("horizon 3 exceeds") == 0);
  CHECK(error_of("# nothing\n") == "tower spec declares no levels");
  CHECK(error_of("alt 5 product\ntail: periodic 3\n").find("periodic tail") == 0);
}

#include "gwtower/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "gwtower/error.hpp"

namespace gwt {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string> words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

std::uint64_t parse_u64(std::string_view s, const std::string& what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InvalidInput(what + ": expected a non-negative integer, got '" + std::string(s) + "'");
  }
  return v;
}

[[noreturn]] void fail(std::size_t line, std::string_view field, const std::string& msg) {
  throw InvalidInput("line " + std::to_string(line) + ", field " + std::string(field) + ": " +
                     msg);
}

}  // namespace

SimpleGroupId parse_simple_group(std::string_view family, std::string_view parameter) {
  const std::string f = lower(family);
  const std::uint64_t p = parse_u64(parameter, "parameter");
  if (f == "alt") return SimpleGroupId::alt(p);
  if (f == "psl2") return SimpleGroupId::psl2(p);
  throw InvalidInput("unknown family '" + std::string(family) + "' (expected alt or psl2)");
}

ActionKind parse_action(std::string_view word) {
  const std::string w = lower(word);
  if (w == "product") return ActionKind::Product;
  if (w == "imprimitive") return ActionKind::Imprimitive;
  throw InvalidInput("unknown action '" + std::string(word) +
                     "' (expected product or imprimitive)");
}

TowerSpec parse_tower_spec(std::string_view document) {
  TowerSpec spec;
  bool have_tail = false;
  bool have_horizon = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(document)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto w = words(raw);
    if (w.empty()) continue;
    const std::string key = lower(w[0]);
    if (key == "tail:") {
      if (have_tail) fail(line_no, "tail", "tail declared twice");
      have_tail = true;
      if (w.size() < 2) fail(line_no, "tail", "expected 'constant' or 'periodic <period>'");
      const std::string kind = lower(w[1]);
      if (kind == "constant" && w.size() == 2) {
        spec.tail = TailKind::Constant;
      } else if (kind == "periodic" && w.size() == 3) {
        spec.tail = TailKind::Periodic;
        try {
          spec.period = parse_u64(w[2], "period");
        } catch (const InvalidInput& e) {
          fail(line_no, "period", e.what());
        }
      } else {
        fail(line_no, "tail", "expected 'constant' or 'periodic <period>'");
      }
    } else if (key == "horizon:") {
      if (have_horizon) fail(line_no, "horizon", "horizon declared twice");
      have_horizon = true;
      if (w.size() != 2) fail(line_no, "horizon", "expected 'horizon: <n>'");
      try {
        spec.horizon = parse_u64(w[1], "horizon");
      } catch (const InvalidInput& e) {
        fail(line_no, "horizon", e.what());
      }
    } else {
      if (have_tail || have_horizon) {
        fail(line_no, "family", "level entries must precede tail and horizon declarations");
      }
      if (w.size() != 3) fail(line_no, "entry", "expected 'family parameter action'");
      const std::string fam = lower(w[0]);
      if (fam != "alt" && fam != "psl2") {
        fail(line_no, "family", "unknown family '" + w[0] + "' (expected alt or psl2)");
      }
      SimpleGroupId group = SimpleGroupId::alt(5);
      try {
        group = parse_simple_group(w[0], w[1]);
      } catch (const InvalidInput& e) {
        fail(line_no, "parameter", e.what());
      }
      ActionKind action = ActionKind::Product;
      try {
        action = parse_action(w[2]);
      } catch (const InvalidInput& e) {
        fail(line_no, "action", e.what());
      }
      spec.levels.push_back({group, action});
    }
  }
  if (spec.levels.empty()) throw InvalidInput("tower spec declares no levels");
  if (!have_horizon) spec.horizon = spec.levels.size();
  spec.validate();
  return spec;
}

std::string format_tower_spec(const TowerSpec& spec) {
  std::ostringstream os;
  for (const auto& l : spec.levels) {
    os << (l.group.family() == SimpleFamily::Alt ? "alt " : "psl2 ") << l.group.parameter()
       << ' ' << to_string(l.action) << '\n';
  }
  if (spec.tail == TailKind::Constant) os << "tail: constant\n";
  if (spec.tail == TailKind::Periodic) os << "tail: periodic " << spec.period << '\n';
  os << "horizon: " << spec.horizon << '\n';
  return os.str();
}

}  // namespace gwt

#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace gwt::cli {

void Report::verdict(std::string name, std::string status, std::string detail) {
  Json v = Json::object();
  v["name"] = std::move(name);
  v["status"] = std::move(status);
  if (!detail.empty()) v["detail"] = std::move(detail);
  verdicts.push_back(std::move(v));
}

std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const Report& r) {
  Json j = Json::object();
  const auto& m = r.manifest;
  j["manifest"] = {{"tool", "gwtower"},
                   {"version", m.version},
                   {"command", m.command},
                   {"argv", m.argv},
                   {"seed", m.seed},
                   {"budgets",
                    {{"elements", m.budgets.elements},
                     {"degree", m.budgets.degree},
                     {"membership_tests", m.budgets.membership_tests}}},
                   {"input_digest", m.input_digest}};
  j["inputs"] = r.inputs;
  j["verdicts"] = r.verdicts;
  j["evidence"] = r.evidence;
  if (!r.error.is_null()) j["error"] = r.error;
  return j;
}

namespace {

void render(std::ostringstream& os, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured() && !x.empty()) {
        os << pad << k << ":\n";
        render(os, x, indent + 1);
      } else {
        os << pad << k << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << '\n';
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_structured() && !x.empty()) {
        os << pad << "-\n";
        render(os, x, indent + 1);
      } else {
        os << pad << "- " << (x.is_string() ? x.get<std::string>() : x.dump()) << '\n';
      }
    }
  } else {
    os << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  render(os, to_json(r), 0);
  return os.str();
}

std::string render_structured(const Report& r) { return to_json(r).dump(2) + "\n"; }

Json big_json(const BigInt& x) { return x.get_str(); }

Json big_number_json(const BigNumber& x) {
  constexpr std::size_t kInlineDigits = 200;
  Json j = Json::object();
  j["expression"] = x.expression();
  j["explicit"] = x.is_explicit();
  auto d = x.digit_count();
  if (d && d->get_str().size() <= kInlineDigits) {
    j["digits"] = d->get_str();
  } else {
    j["log10_log10"] = x.log10_log10();
  }
  if (x.is_explicit() && x.value().get_str().size() <= kInlineDigits) j["value"] = x.value().get_str();
  return j;
}

}  // namespace gwt::cli

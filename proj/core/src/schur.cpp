#include "gwtower/schur.hpp"

#include <algorithm>
#include <set>

#include "gwtower/error.hpp"

namespace gwt {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

AbelianInvariants::AbelianInvariants(std::vector<std::uint64_t> factors) {
  for (auto f : factors) {
    if (f == 0) throw InvalidInput("cyclic factor orders must be positive");
    if (f > 1) factors_.push_back(f);
  }
  std::sort(factors_.begin(), factors_.end());
}

BigInt AbelianInvariants::order() const {
  BigInt out = 1;
  for (auto f : factors_) out *= from_u64(f);
  return out;
}

std::map<std::uint64_t, std::vector<std::uint64_t>> AbelianInvariants::primary_decomposition()
    const {
  std::map<std::uint64_t, std::vector<std::uint64_t>> out;
  for (auto f : factors_) {
    for (auto [p, e] : factorize(f)) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < e; ++i) q *= p;
      out[p].push_back(q);
    }
  }
  for (auto& [p, v] : out) std::sort(v.begin(), v.end());
  return out;
}

AbelianInvariants AbelianInvariants::operator*(const AbelianInvariants& other) const {
  std::vector<std::uint64_t> f = factors_;
  f.insert(f.end(), other.factors_.begin(), other.factors_.end());
  return AbelianInvariants(std::move(f));
}

std::string AbelianInvariants::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!out.empty()) out += " x ";
    out += "C" + std::to_string(factors_[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
  return a.primary_decomposition() == b.primary_decomposition();
}

unsigned d_abelian(const AbelianInvariants& inv) {
  unsigned best = 0;
  for (const auto& [p, parts] : inv.primary_decomposition()) {
    best = std::max(best, static_cast<unsigned>(parts.size()));
  }
  return best;
}

MultiplierEntry multiplier_of_simple(const SimpleGroupId& s) {
  if (s.family() == SimpleFamily::Alt) {
    const auto n = s.parameter();
    if (n == 6 || n == 7) {
      return {AbelianInvariants({6}),
              "exceptional triple cover on top of the double cover (Schur 1911)"};
    }
    return {AbelianInvariants({2}), "double cover 2.Alt(n) (Schur 1911)"};
  }
  return {AbelianInvariants({2}),
          "covering group SL2(p) with centre of order 2 (Schur 1907)"};
}

AbelianInvariants multiplier_of_tower(const TowerSpec& spec, std::size_t n) {
  if (n == 0) throw InvalidInput("tower levels are numbered from 1");
  AbelianInvariants out;
  for (std::size_t k = 1; k <= n; ++k) out = out * multiplier_of_simple(spec.group_at(k)).multiplier;
  return out;
}

std::string_view to_string(Tristate t) noexcept {
  switch (t) {
    case Tristate::True:
      return "true";
    case Tristate::False:
      return "false";
    case Tristate::Undecidable:
      return "undecidable";
  }
  return "unknown";
}

HypothesisVerdict fp_hypothesis_check(const TowerSpec& spec) {
  HypothesisVerdict out;
  if (spec.levels.empty()) throw InvalidInput("tower spec declares no levels");
  if (spec.tail == TailKind::None) {
    out.reason =
        "finite explicit list without a tail pattern: recurrence of a prime is undecidable";
    return out;
  }
  const std::size_t n = spec.levels.size();
  const std::size_t period = spec.tail == TailKind::Constant ? 1 : spec.period;
  if (period == 0 || period > n) throw InvalidInput("periodic tail needs 1 <= period <= levels");
  // Smallest prime dividing the multiplier of some group in the repeating block.
  std::optional<std::uint64_t> best;
  const SimpleGroupId* witness = nullptr;
  AbelianInvariants witness_m;
  for (std::size_t i = n - period; i < n; ++i) {
    const auto& s = spec.levels[i].group;
    auto m = multiplier_of_simple(s).multiplier;
    auto primes = m.primary_decomposition();
    if (primes.empty()) continue;
    if (!best || primes.begin()->first < *best) {
      best = primes.begin()->first;
      witness = &s;
      witness_m = m;
    }
  }
  if (!best) {
    out.status = Tristate::False;
    out.reason = "every multiplier in the repeating block is trivial";
    return out;
  }
  out.status = Tristate::True;
  out.prime = best;
  out.reason = "M(" + witness->name() + ") has order " + witness_m.order().get_str() +
               "; the prime " + std::to_string(*best) + " divides M(S_n) at every " +
               (period == 1 ? std::string("level of the constant tail")
                            : "repetition of the period-" + std::to_string(period) + " tail");
  return out;
}

FPObstructionCertificate fp_obstruction(const TowerSpec& spec, std::size_t horizon) {
  if (horizon == 0) throw InvalidInput("horizon must be at least 1");
  TowerSpec t = spec;
  t.horizon = horizon;
  t.validate();
  FPObstructionCertificate cert;
  cert.spec = t;
  cert.horizon = horizon;
  AbelianInvariants m;
  for (std::size_t n = 1; n <= horizon; ++n) {
    m = m * multiplier_of_simple(t.group_at(n)).multiplier;
    cert.per_level.push_back({n, m, d_abelian(m)});
  }
  const unsigned d1 = cert.per_level.front().d;
  const unsigned dh = cert.per_level.back().d;
  cert.growth_within_horizon = horizon > 1 && 2 * std::size_t{dh} >= 2 * std::size_t{d1} + horizon;
  cert.hypothesis = fp_hypothesis_check(t);
  cert.unbounded_within_horizon =
      cert.growth_within_horizon || cert.hypothesis.status == Tristate::True;
  cert.obstruction_flagged = cert.hypothesis.status == Tristate::True;
  if (cert.obstruction_flagged) {
    cert.reason = cert.hypothesis.reason +
                  "; hence d(M(Ŝ_n)) is unbounded and the inverse limit is not finitely "
                  "presentable";
  } else {
    cert.reason = "d(M(Ŝ_n)) reaches " + std::to_string(dh) + " at level " +
                  std::to_string(horizon) + "; " + cert.hypothesis.reason +
                  ", so no claim about the inverse limit is made";
  }
  return cert;
}

}  // namespace gwt

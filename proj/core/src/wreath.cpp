#include "gwtower/wreath.hpp"

#include "gwtower/error.hpp"

namespace gwt {

std::string_view to_string(ActionKind a) noexcept {
  return a == ActionKind::Imprimitive ? "imprimitive" : "product";
}

WreathProduct::WreathProduct(ActionKind action, PermGroup a, PermGroup b)
    : action_(action),
      a_(std::move(a)),
      b_(std::move(b)),
      m_(a_.degree()),
      n_(b_.degree()),
      group_(PermGroup::trivial(1)) {}

BigInt WreathProduct::base_order() const {
  return big_pow(a_.order(), static_cast<unsigned long>(n_));
}

Permutation WreathProduct::base_element(std::size_t coord,
                                        const Permutation& a) const {
  const std::size_t deg = group_.degree();
  std::vector<Point> im(deg);
  if (action_ == ActionKind::Imprimitive) {
    for (std::size_t p = 0; p < deg; ++p) im[p] = static_cast<Point>(p);
    for (std::size_t i = 0; i < m_; ++i) {
      im[coord * m_ + i] = static_cast<Point>(coord * m_ + a[static_cast<Point>(i)]);
    }
  } else {
    const std::size_t r = radix_[coord];
    for (std::size_t p = 0; p < deg; ++p) {
      std::size_t digit = (p / r) % m_;
      im[p] = static_cast<Point>(p + (a[static_cast<Point>(digit)] - digit) * r);
    }
  }
  return Permutation::from_images(std::move(im));
}

Permutation WreathProduct::top_element(const Permutation& b) const {
  const std::size_t deg = group_.degree();
  std::vector<Point> im(deg);
  if (action_ == ActionKind::Imprimitive) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t i = 0; i < m_; ++i) {
        im[j * m_ + i] = static_cast<Point>(b[static_cast<Point>(j)] * m_ + i);
      }
    }
  } else {
    for (std::size_t p = 0; p < deg; ++p) {
      std::size_t q = 0;
      for (std::size_t c = 0; c < n_; ++c) {
        std::size_t digit = (p / radix_[c]) % m_;
        q += digit * radix_[b[static_cast<Point>(c)]];
      }
      im[p] = static_cast<Point>(q);
    }
  }
  return Permutation::from_images(std::move(im));
}

std::vector<Permutation> WreathProduct::base_generators() const {
  std::vector<Permutation> out;
  for (std::size_t c = 0; c < n_; ++c) {
    for (const auto& a : a_.generators()) out.push_back(base_element(c, a));
  }
  return out;
}

std::vector<Permutation> WreathProduct::top_generators() const {
  std::vector<Permutation> out;
  for (const auto& b : b_.generators()) out.push_back(top_element(b));
  return out;
}

Permutation WreathProduct::project(const Permutation& g) const {
  if (g.degree() != group_.degree()) {
    throw InvalidInput("projection: element degree does not match the wreath product");
  }
  std::vector<Point> im(n_);
  if (action_ == ActionKind::Imprimitive) {
    for (std::size_t j = 0; j < n_; ++j) {
      im[j] = static_cast<Point>(g[static_cast<Point>(j * m_)] / m_);
    }
  } else {
    const std::size_t img0 = g[0];
    for (std::size_t c = 0; c < n_; ++c) {
      const std::size_t img = g[static_cast<Point>(radix_[c])];
      std::size_t moved_to = n_;
      for (std::size_t d = 0; d < n_; ++d) {
        if ((img / radix_[d]) % m_ != (img0 / radix_[d]) % m_) {
          moved_to = d;
          break;
        }
      }
      if (moved_to == n_) throw InvalidInput("element does not preserve the product structure");
      im[c] = static_cast<Point>(moved_to);
    }
  }
  return Permutation::from_images(std::move(im));
}

PermGroup WreathProduct::base_group() const {
  auto gens = base_generators();
  if (gens.empty()) return PermGroup::trivial(group_.degree());
  ChainOptions opts;
  opts.order_bound = base_order();
  return PermGroup::from_generators(std::move(gens), opts);
}

void WreathProduct::finish_group() {
  // One base copy per B-orbit suffices: conjugation by B spreads it.
  std::vector<Permutation> gens;
  for (const auto& orbit : b_.orbits()) {
    for (const auto& a : a_.generators()) gens.push_back(base_element(orbit.front(), a));
  }
  for (auto& t : top_generators()) gens.push_back(std::move(t));
  if (gens.empty()) {
    group_ = PermGroup::trivial(group_.degree());
    return;
  }
  ChainOptions opts;
  opts.order_bound = base_order() * b_.order();
  group_ = PermGroup::from_generators(std::move(gens), opts);
}

namespace {

void require_transitive(const PermGroup& a) {
  if (!a.is_transitive()) {
    throw InvalidInput("wreath product base factor must be transitive");
  }
}

}  // namespace

WreathProduct imprimitive_wreath(const PermGroup& a, const PermGroup& b) {
  require_transitive(a);
  WreathProduct w(ActionKind::Imprimitive, a, b);
  w.group_ = PermGroup::trivial(w.m_ * w.n_);
  w.finish_group();
  return w;
}

WreathProduct product_action_wreath(const PermGroup& a, const PermGroup& b,
                                    const Budgets& budgets) {
  require_transitive(a);
  if (a.degree() < 2) throw InvalidInput("product action needs m >= 2");
  BigInt degree = big_pow(BigInt(static_cast<unsigned long>(a.degree())),
                          static_cast<unsigned long>(b.degree()));
  if (degree > from_u64(budgets.degree)) {
    throw BudgetExceeded("product action degree " + to_string(degree) +
                         " exceeds the explicit-degree budget of " +
                         std::to_string(budgets.degree) +
                         " points; use symbolic degree/order bookkeeping instead");
  }
  WreathProduct w(ActionKind::Product, a, b);
  w.radix_.resize(w.n_);
  std::size_t r = 1;
  for (std::size_t c = w.n_; c-- > 0;) {
    w.radix_[c] = r;
    r *= w.m_;
  }
  w.group_ = PermGroup::trivial(r);
  w.finish_group();
  return w;
}

WreathProduct wreath(ActionKind action, const PermGroup& a, const PermGroup& b,
                     const Budgets& budgets) {
  if (action == ActionKind::Imprimitive) {
    if (static_cast<std::uint64_t>(a.degree()) * b.degree() > budgets.degree) {
      throw BudgetExceeded("imprimitive degree exceeds the explicit-degree budget");
    }
    return imprimitive_wreath(a, b);
  }
  return product_action_wreath(a, b, budgets);
}

}  // namespace gwt

#ifndef CONDORCET_DOMAIN_HPP
#define CONDORCET_DOMAIN_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "order.hpp"

namespace condorcet {

/// A set of linear orders over one alternative set, stored sorted and deduplicated.
class Domain {
public:
  Domain() = default;

  Domain(AlternativeSet alternatives, std::vector<LinearOrder> orders)
      : alternatives_(std::move(alternatives)), orders_(std::move(orders)) {
    for (const auto& u : orders_)
      if (u.size() != alternatives_.size())
        throw PreconditionError("order of length " + std::to_string(u.size()) +
                                " in a domain over " + std::to_string(alternatives_.size()) +
                                " alternatives");
    std::sort(orders_.begin(), orders_.end());
    orders_.erase(std::unique(orders_.begin(), orders_.end()), orders_.end());
  }

  /// Domain over numbered alternatives "1".."n".
  Domain(std::size_t n, std::vector<LinearOrder> orders)
      : Domain(AlternativeSet::numbered(n), std::move(orders)) {}

  const AlternativeSet& alternatives() const noexcept { return alternatives_; }
  std::size_t alternative_count() const noexcept { return alternatives_.size(); }
  std::size_t size() const noexcept { return orders_.size(); }
  bool empty() const noexcept { return orders_.empty(); }
  const std::vector<LinearOrder>& orders() const noexcept { return orders_; }
  const LinearOrder& operator[](std::size_t i) const { return orders_[i]; }
  auto begin() const noexcept { return orders_.begin(); }
  auto end() const noexcept { return orders_.end(); }

  bool contains(const LinearOrder& u) const {
    return std::binary_search(orders_.begin(), orders_.end(), u);
  }

  std::size_t index_of(const LinearOrder& u) const {
    auto it = std::lower_bound(orders_.begin(), orders_.end(), u);
    if (it == orders_.end() || *it != u) throw PreconditionError("order is not in the domain");
    return static_cast<std::size_t>(it - orders_.begin());
  }

  Domain with(const LinearOrder& u) const {
    auto orders = orders_;
    orders.push_back(u);
    return Domain(alternatives_, std::move(orders));
  }

  Domain relabeled(AlternativeSet alternatives) const {
    if (alternatives.size() != alternatives_.size())
      throw PreconditionError("relabeling with a different number of alternatives");
    Domain d = *this;
    d.alternatives_ = std::move(alternatives);
    return d;
  }

  /// Same orders, labels compared too.
  friend bool operator==(const Domain&, const Domain&) = default;

private:
  AlternativeSet alternatives_;
  std::vector<LinearOrder> orders_;
};

/// D restricted to `subset`; labels follow the sorted subset.
inline Domain restrict(const Domain& d, std::span<const AltId> subset) {
  const auto sorted = normalized_subset(subset, d.alternative_count());
  std::vector<LinearOrder> orders;
  orders.reserve(d.size());
  for (const auto& u : d) orders.push_back(restrict(u, sorted));
  return Domain(d.alternatives().subset(sorted), std::move(orders));
}

/// D without alternative `removed`.
inline Domain remove_alternative(const Domain& d, AltId removed) {
  std::vector<AltId> rest;
  for (std::size_t x = 0; x < d.alternative_count(); ++x)
    if (x != removed) rest.push_back(static_cast<AltId>(x));
  return restrict(d, rest);
}

/// psi(u) for a bijection given as psi[old id] = new id.
inline LinearOrder apply_map(const LinearOrder& u, std::span<const AltId> psi) {
  std::vector<AltId> ranking;
  ranking.reserve(u.size());
  for (AltId x : u.ranking()) ranking.push_back(psi[x]);
  return LinearOrder(std::move(ranking));
}

/// Every order of D reversed, same labels.
inline Domain flipped(const Domain& d) {
  std::vector<LinearOrder> orders;
  for (const auto& u : d) orders.push_back(reverse(u));
  return Domain(d.alternatives(), std::move(orders));
}

/// The full domain L(A) for n alternatives.
inline std::vector<LinearOrder> all_orders(std::size_t n) {
  std::vector<AltId> ranking(n);
  for (std::size_t i = 0; i < n; ++i) ranking[i] = static_cast<AltId>(i);
  std::vector<LinearOrder> out;
  do out.emplace_back(ranking);
  while (std::next_permutation(ranking.begin(), ranking.end()));
  return out;
}

}  // namespace condorcet

#endif  // CONDORCET_DOMAIN_HPP

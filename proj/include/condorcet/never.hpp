#ifndef CONDORCET_NEVER_HPP
#define CONDORCET_NEVER_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "domain.hpp"
#include "errors.hpp"
#include "order.hpp"
#include "triples.hpp"

namespace condorcet {

/// xN_{a,b,c}i: in every order, x is not at position i (1 = best) among {a,b,c}.
class NeverCondition {
public:
  NeverCondition(Triple triple, AltId x, int position) : triple_(triple), x_(x), position_(position) {
    std::sort(triple_.begin(), triple_.end());
    if (triple_[0] == triple_[1] || triple_[1] == triple_[2])
      throw PreconditionError("never condition on a triple with repeated alternatives");
    if (std::find(triple_.begin(), triple_.end(), x_) == triple_.end())
      throw PreconditionError("never condition names an alternative outside its triple");
    if (position_ < 1 || position_ > 3)
      throw PreconditionError("never condition position must be 1, 2 or 3");
  }

  const Triple& triple() const noexcept { return triple_; }
  AltId x() const noexcept { return x_; }
  int position() const noexcept { return position_; }

  /// Index of x inside the sorted triple.
  std::size_t member() const {
    return static_cast<std::size_t>(std::find(triple_.begin(), triple_.end(), x_) - triple_.begin());
  }

  bool is_peak_pit() const noexcept { return position_ != 2; }

  friend bool operator==(const NeverCondition&, const NeverCondition&) = default;
  friend auto operator<=>(const NeverCondition&, const NeverCondition&) = default;

private:
  Triple triple_;
  AltId x_;
  int position_;
};

/// Never conditions over ids 0..n-1, stored as one 9-bit slot mask per triple.
class ConditionSet {
public:
  ConditionSet() = default;
  explicit ConditionSet(std::size_t n) : n_(n), masks_(choose3(n), 0) {}

  std::size_t alternative_count() const noexcept { return n_; }

  void add(const NeverCondition& c) {
    check(c.triple());
    masks_[triple_index(c.triple())] |= ConditionMask(1u << slot_bit(c.member(), c.position()));
  }

  bool contains(const NeverCondition& c) const {
    check(c.triple());
    return masks_[triple_index(c.triple())] & (1u << slot_bit(c.member(), c.position()));
  }

  ConditionMask mask(std::size_t triple_idx) const { return masks_.at(triple_idx); }
  ConditionMask mask(const Triple& t) const { return masks_.at(triple_index(t)); }
  void set_mask(std::size_t triple_idx, ConditionMask m) { masks_.at(triple_idx) = m & kAllConditions; }
  const std::vector<ConditionMask>& masks() const noexcept { return masks_; }

  /// Every triple carries at least one condition.
  bool is_complete() const {
    return std::all_of(masks_.begin(), masks_.end(), [](ConditionMask m) { return m != 0; });
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto m : masks_) total += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(m)));
    return total;
  }

  /// Conditions of one triple, ordered by member then position.
  std::vector<NeverCondition> conditions_on(const Triple& t) const {
    std::vector<NeverCondition> out;
    const ConditionMask m = mask(t);
    for (std::size_t member = 0; member < 3; ++member)
      for (int pos = 1; pos <= 3; ++pos)
        if (m & (1u << slot_bit(member, pos))) out.emplace_back(t, t[member], pos);
    return out;
  }

  /// All conditions, triples in colex order.
  std::vector<NeverCondition> conditions() const {
    std::vector<NeverCondition> out;
    for (const auto& t : all_triples(n_)) {
      auto part = conditions_on(t);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  friend bool operator==(const ConditionSet&, const ConditionSet&) = default;

private:
  void check(const Triple& t) const {
    if (t[2] >= n_) throw PreconditionError("never condition on a foreign triple");
  }

  std::size_t n_ = 0;
  std::vector<ConditionMask> masks_;
};

inline bool order_satisfies(const LinearOrder& u, const NeverCondition& c) {
  if (c.triple()[2] >= u.size()) throw PreconditionError("never condition on a foreign triple");
  return (pattern_violations(pattern_of(u, c.triple())) &
          (1u << slot_bit(c.member(), c.position()))) == 0;
}

inline bool domain_satisfies(const Domain& d, const NeverCondition& c) {
  return std::all_of(d.begin(), d.end(), [&](const LinearOrder& u) { return order_satisfies(u, c); });
}

/// N(D): every never condition satisfied by all of D.
inline ConditionSet conditions_of(const Domain& d) {
  if (d.empty()) throw PreconditionError("conditions_of an empty domain");
  ConditionSet out(d.alternative_count());
  const auto patterns = triple_patterns(d);
  for (std::size_t t = 0; t < patterns.size(); ++t) out.set_mask(t, surviving_conditions(patterns[t]));
  return out;
}

inline constexpr std::size_t kDefaultEnumerationCap = 16;

/// All orders of 0..n-1 whose pattern on every triple t lies in allowed[t], in
/// lexicographic order. Depth-first over prefixes: a triple's first member is known when
/// it is placed, and its full pattern is known once the second member is placed.
inline std::vector<LinearOrder> orders_with_patterns(std::size_t n,
                                                     const std::vector<PatternMask>& allowed,
                                                     std::size_t cap = kDefaultEnumerationCap) {
  if (n > cap) throw ResourceLimitError("order enumeration over " + std::to_string(n) + " alternatives", cap);
  if (allowed.size() != choose3(n)) throw PreconditionError("pattern table does not match n");

  // first_rank[m]: patterns in which member m is ranked first.
  std::array<PatternMask, 3> first_rank{};
  for (std::size_t p = 0; p < 6; ++p) first_rank[kPatterns[p][0]] |= PatternMask(1u << p);

  std::vector<LinearOrder> out;
  std::vector<AltId> prefix;
  std::vector<bool> placed(n, false);
  prefix.reserve(n);

  auto consistent = [&](AltId z) {
    for (AltId q = 1; q < n; ++q) {
      if (q == z) continue;
      for (AltId p = 0; p < q; ++p) {
        if (p == z) continue;
        if (placed[p] && placed[q]) continue;
        AltId s[3] = {p, q, z};
        std::sort(s, s + 3);
        const PatternMask ok = allowed[triple_index(s[0], s[1], s[2])];
        if (ok == 0x3F) continue;
        const std::size_t mz = static_cast<std::size_t>(std::find(s, s + 3, z) - s);
        if (!placed[p] && !placed[q]) {
          if ((ok & first_rank[mz]) == 0) return false;
          continue;
        }
        // Exactly one of p, q is placed: the order is (placed, z, unplaced).
        const AltId before = placed[p] ? p : q;
        const AltId after = placed[p] ? q : p;
        const AltId ranked[3] = {before, z, after};
        std::array<std::uint8_t, 3> members{};
        for (std::size_t r = 0; r < 3; ++r)
          members[r] = static_cast<std::uint8_t>(std::find(s, s + 3, ranked[r]) - s);
        const auto it = std::find(kPatterns.begin(), kPatterns.end(), members);
        if ((ok & (1u << (it - kPatterns.begin()))) == 0) return false;
      }
    }
    return true;
  };

  auto dfs = [&](auto&& self) -> void {
    if (prefix.size() == n) {
      out.emplace_back(prefix);
      return;
    }
    for (AltId z = 0; z < n; ++z) {
      if (placed[z] || !consistent(z)) continue;
      placed[z] = true;
      prefix.push_back(z);
      self(self);
      prefix.pop_back();
      placed[z] = false;
    }
  };
  dfs(dfs);
  return out;
}

/// D(N): all orders satisfying every condition of N. Empty means N is inconsistent.
inline Domain orders_satisfying(const ConditionSet& conditions, const AlternativeSet& alternatives,
                                std::size_t cap = kDefaultEnumerationCap) {
  const std::size_t n = conditions.alternative_count();
  if (alternatives.size() != n) throw PreconditionError("condition set and alternative set differ in size");
  std::vector<PatternMask> allowed(choose3(n));
  for (std::size_t t = 0; t < allowed.size(); ++t) allowed[t] = allowed_patterns(conditions.mask(t));
  return Domain(alternatives, orders_with_patterns(n, allowed, cap));
}

inline Domain orders_satisfying(const ConditionSet& conditions, std::size_t cap = kDefaultEnumerationCap) {
  return orders_satisfying(conditions, AlternativeSet::numbered(conditions.alternative_count()), cap);
}

}  // namespace condorcet

#endif  // CONDORCET_NEVER_HPP

#ifndef CONDORCET_ORDER_HPP
#define CONDORCET_ORDER_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <limits>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace condorcet {

/// Dense index of an alternative. Ids of one alternative set are 0..n-1.
using AltId = std::uint8_t;

inline constexpr std::size_t kMaxAlternatives = std::numeric_limits<AltId>::max();

/// Display labels for the ids 0..n-1 of one alternative set.
class AlternativeSet {
public:
  AlternativeSet() = default;

  explicit AlternativeSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxAlternatives)
      throw PreconditionError("too many alternatives: " + std::to_string(labels_.size()));
    std::set<std::string> seen;
    for (const auto& label : labels_) {
      if (label.empty()) throw PreconditionError("empty alternative label");
      if (label.find_first_of(" \t\r\n,{}#") != std::string::npos)
        throw PreconditionError("alternative label contains a reserved character: '" + label + "'");
      if (!seen.insert(label).second)
        throw PreconditionError("duplicate alternative label '" + label + "'");
    }
  }

  /// Labels "1".."n", the convention used for Fishburn domains.
  static AlternativeSet numbered(std::size_t n, std::size_t first = 1) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(first + i));
    return AlternativeSet(std::move(labels));
  }

  /// Labels "a","b",... for n <= 26.
  static AlternativeSet lettered(std::size_t n) {
    if (n > 26) throw PreconditionError("lettered alternative set supports at most 26 labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
    return AlternativeSet(std::move(labels));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(AltId id) const { return labels_.at(id); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<AltId> find(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return static_cast<AltId>(i);
    return std::nullopt;
  }

  bool single_char_labels() const {
    return std::all_of(labels_.begin(), labels_.end(),
                       [](const std::string& l) { return l.size() == 1; });
  }

  /// The labels of the given ids, in the given order.
  AlternativeSet subset(std::span<const AltId> ids) const {
    std::vector<std::string> labels;
    for (AltId id : ids) labels.push_back(label(id));
    return AlternativeSet(std::move(labels));
  }

  friend bool operator==(const AlternativeSet&, const AlternativeSet&) = default;

private:
  std::vector<std::string> labels_;
};

/// A strict total order on ids 0..n-1, stored best first.
class LinearOrder {
public:
  LinearOrder() = default;

  explicit LinearOrder(std::vector<AltId> ranking) : ranking_(std::move(ranking)) {
    if (ranking_.size() > kMaxAlternatives)
      throw PreconditionError("linear order too long");
    position_.assign(ranking_.size(), kUnset);
    for (std::size_t i = 0; i < ranking_.size(); ++i) {
      const AltId x = ranking_[i];
      if (x >= ranking_.size())
        throw PreconditionError("linear order has id " + std::to_string(x) + " out of range");
      if (position_[x] != kUnset)
        throw PreconditionError("linear order repeats id " + std::to_string(x));
      position_[x] = static_cast<AltId>(i);
    }
  }

  LinearOrder(std::initializer_list<AltId> ranking)
      : LinearOrder(std::vector<AltId>(ranking)) {}

  /// 0 1 ... n-1.
  static LinearOrder identity(std::size_t n) {
    std::vector<AltId> ranking(n);
    for (std::size_t i = 0; i < n; ++i) ranking[i] = static_cast<AltId>(i);
    return LinearOrder(std::move(ranking));
  }

  std::size_t size() const noexcept { return ranking_.size(); }
  AltId operator[](std::size_t rank) const { return ranking_[rank]; }
  AltId at(std::size_t rank) const { return ranking_.at(rank); }
  std::span<const AltId> ranking() const noexcept { return ranking_; }

  /// 0-based rank of x; 0 is best.
  std::size_t position(AltId x) const { return position_.at(x); }

  /// True when a is ranked above b.
  bool prefers(AltId a, AltId b) const { return position_[a] < position_[b]; }

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return a.ranking_ == b.ranking_;
  }
  friend std::strong_ordering operator<=>(const LinearOrder& a, const LinearOrder& b) {
    return a.ranking_ <=> b.ranking_;
  }

private:
  static constexpr AltId kUnset = std::numeric_limits<AltId>::max();

  std::vector<AltId> ranking_;
  std::vector<AltId> position_;
};

inline LinearOrder reverse(const LinearOrder& u) {
  std::vector<AltId> ranking(u.ranking().rbegin(), u.ranking().rend());
  return LinearOrder(std::move(ranking));
}

/// Sorted, duplicate-free copy of `subset`, checked against an alternative set of size n.
inline std::vector<AltId> normalized_subset(std::span<const AltId> subset, std::size_t n) {
  if (subset.empty()) throw PreconditionError("restriction to an empty set of alternatives");
  std::vector<AltId> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("restriction set repeats an alternative");
  if (sorted.back() >= n)
    throw PreconditionError("restriction set contains foreign id " + std::to_string(sorted.back()));
  return sorted;
}

/// Members of `subset` in the order u ranks them (original ids).
inline std::vector<AltId> restricted_ranking(const LinearOrder& u, std::span<const AltId> subset) {
  const auto sorted = normalized_subset(subset, u.size());
  std::vector<bool> keep(u.size(), false);
  for (AltId x : sorted) keep[x] = true;
  std::vector<AltId> out;
  out.reserve(sorted.size());
  for (AltId x : u.ranking())
    if (keep[x]) out.push_back(x);
  return out;
}

/// Restriction of u to `subset`. The result is re-indexed: the k-th smallest member of
/// `subset` becomes id k, so labels carry over via AlternativeSet::subset(sorted subset).
inline LinearOrder restrict(const LinearOrder& u, std::span<const AltId> subset) {
  const auto sorted = normalized_subset(subset, u.size());
  std::vector<AltId> index(u.size(), 0);
  for (std::size_t k = 0; k < sorted.size(); ++k) index[sorted[k]] = static_cast<AltId>(k);
  std::vector<AltId> out;
  out.reserve(sorted.size());
  for (AltId x : restricted_ranking(u, sorted)) out.push_back(index[x]);
  return LinearOrder(std::move(out));
}

inline void require_same_size(const LinearOrder& a, const LinearOrder& b) {
  if (a.size() != b.size())
    throw PreconditionError("linear orders over different alternative sets (" +
                            std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

/// Kemeny betweenness: v keeps every comparison on which u and w agree.
inline bool is_between(const LinearOrder& v, const LinearOrder& u, const LinearOrder& w) {
  require_same_size(v, u);
  require_same_size(u, w);
  const std::size_t n = u.size();
  for (AltId a = 0; a < n; ++a)
    for (AltId b = a + 1; b < n; ++b) {
      const bool ua = u.prefers(a, b);
      if (ua == w.prefers(a, b) && v.prefers(a, b) != ua) return false;
    }
  return true;
}

/// Number of pairs ranked differently by u and w (Kendall tau distance).
inline std::size_t inversion_distance(const LinearOrder& u, const LinearOrder& w) {
  require_same_size(u, w);
  std::size_t count = 0;
  for (AltId a = 0; a < u.size(); ++a)
    for (AltId b = a + 1; b < u.size(); ++b)
      if (u.prefers(a, b) != w.prefers(a, b)) ++count;
  return count;
}

/// u with the alternatives at ranks `rank` and `rank + 1` swapped.
inline LinearOrder swap_adjacent(const LinearOrder& u, std::size_t rank) {
  std::vector<AltId> ranking(u.ranking().begin(), u.ranking().end());
  std::swap(ranking.at(rank), ranking.at(rank + 1));
  return LinearOrder(std::move(ranking));
}

/// True iff w is u with exactly one pair of neighbouring positions transposed.
inline bool is_adjacent(const LinearOrder& u, const LinearOrder& w) {
  if (u.size() != w.size()) return false;
  const std::size_t n = u.size();
  std::size_t i = 0;
  while (i < n && u[i] == w[i]) ++i;
  if (i + 1 >= n) return false;
  if (u[i] != w[i + 1] || u[i + 1] != w[i]) return false;
  return std::equal(u.ranking().begin() + i + 2, u.ranking().end(), w.ranking().begin() + i + 2);
}

inline constexpr std::size_t kDefaultIntervalCap = 10;

/// All v with is_between(v, u, w), sorted. Grows from u by adjacent transpositions
/// that stay inside the interval; intervals of the permutahedron are connected.
inline std::vector<LinearOrder> interval(const LinearOrder& u, const LinearOrder& w,
                                         std::size_t cap = kDefaultIntervalCap) {
  require_same_size(u, w);
  if (u.size() > cap) throw ResourceLimitError("interval enumeration over " +
                                               std::to_string(u.size()) + " alternatives", cap);
  std::set<LinearOrder> seen{u};
  std::deque<LinearOrder> frontier{u};
  while (!frontier.empty()) {
    LinearOrder current = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t r = 0; r + 1 < current.size(); ++r) {
      LinearOrder next = swap_adjacent(current, r);
      if (seen.contains(next) || !is_between(next, u, w)) continue;
      seen.insert(next);
      frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

/// Every interleaving of the id sequences `first` and `second` that keeps each one's
/// internal order, in lexicographic order of the interleaving mask (first-before-second).
inline std::vector<std::vector<AltId>> interleavings(std::span<const AltId> first,
                                                     std::span<const AltId> second) {
  {
    std::vector<AltId> all(first.begin(), first.end());
    all.insert(all.end(), second.begin(), second.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw PreconditionError("shuffle of orders over overlapping alternative sets");
  }
  const std::size_t total = first.size() + second.size();
  // mask[i] == true takes the next element of `second`.
  std::vector<bool> mask(total, false);
  std::fill(mask.begin() + static_cast<std::ptrdiff_t>(first.size()), mask.end(), true);
  std::vector<std::vector<AltId>> out;
  do {
    std::vector<AltId> seq;
    seq.reserve(total);
    std::size_t i = 0, j = 0;
    for (bool take_second : mask) seq.push_back(take_second ? second[j++] : first[i++]);
    out.push_back(std::move(seq));
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

/// Shuffles of u (ids 0..n-1) and v (ids offset by n), as orders on n + m alternatives.
inline std::vector<LinearOrder> shuffles(const LinearOrder& u, const LinearOrder& v) {
  const std::size_t n = u.size();
  if (n + v.size() > kMaxAlternatives) throw PreconditionError("shuffle too large");
  std::vector<AltId> shifted;
  for (AltId x : v.ranking()) shifted.push_back(static_cast<AltId>(x + n));
  std::vector<LinearOrder> out;
  for (auto& seq : interleavings(u.ranking(), shifted)) out.emplace_back(std::move(seq));
  return out;
}

/// uv: u followed by v, with v's ids offset by u.size().
inline LinearOrder concatenate(const LinearOrder& u, const LinearOrder& v) {
  std::vector<AltId> ranking(u.ranking().begin(), u.ranking().end());
  for (AltId x : v.ranking()) ranking.push_back(static_cast<AltId>(x + u.size()));
  return LinearOrder(std::move(ranking));
}

}  // namespace condorcet

#endif  // CONDORCET_ORDER_HPP

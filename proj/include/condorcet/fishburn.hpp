#ifndef CONDORCET_FISHBURN_HPP
#define CONDORCET_FISHBURN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "domain.hpp"
#include "errors.hpp"
#include "exact_int.hpp"
#include "never.hpp"
#include "order.hpp"

namespace condorcet {

/// Which parity of middle element is never-bottom.
enum class SchemeVariant {
  kEvenBottom,  ///< F_n: even middle never last, odd middle never first
  kEvenTop,     ///< the flipped scheme: even middle never first, odd middle never last
};

/// The alternating scheme on labels 1..n (ids 0..n-1): for i < j < k the middle j gets
/// a single never-top or never-bottom condition by parity.
inline ConditionSet alternating_scheme(std::size_t n, SchemeVariant variant = SchemeVariant::kEvenBottom) {
  if (n < 2) throw PreconditionError("alternating scheme needs n >= 2");
  ConditionSet out(n);
  for (const auto& t : all_triples(n)) {
    const bool even = (t[1] + 1) % 2 == 0;  // labels are ids + 1
    const bool bottom = (variant == SchemeVariant::kEvenBottom) == even;
    out.add(NeverCondition(t, t[1], bottom ? 3 : 1));
  }
  return out;
}

inline constexpr std::size_t kDefaultFishburnCap = 12;

/// F_n (or its flipped twin) by enumeration, labeled 1..n.
inline Domain fishburn_domain(std::size_t n, SchemeVariant variant = SchemeVariant::kEvenBottom,
                              std::size_t cap = kDefaultFishburnCap) {
  if (n > cap) throw ResourceLimitError("Fishburn domain enumeration for n = " + std::to_string(n), cap);
  return orders_satisfying(alternating_scheme(n, variant), AlternativeSet::numbered(n), cap);
}

/// |F_n| = (n+3)2^(n-3) - (n - 3/2) C(n-2, n/2 - 1)   for even n,
///                     - ((n-1)/2) C(n-1, (n-1)/2)     for odd n.
/// Evaluated as 2|F_n| in integers, then halved.
inline ExactInt fishburn_cardinality(std::size_t n) {
  if (n < 2) throw PreconditionError("Fishburn cardinality needs n >= 2");
  ExactInt twice = ExactInt(n + 3) * pow2(n - 2);
  if (n % 2 == 0)
    twice -= ExactInt(2 * n - 3) * binomial(n - 2, n / 2 - 1);
  else
    twice -= ExactInt(n - 1) * binomial(n - 1, (n - 1) / 2);
  if (twice % 2 != 0) throw Error("Fishburn cardinality formula produced an odd double");
  return twice / 2;
}

inline constexpr std::size_t kDefaultSinglePeakedCap = 16;

/// Orders single-peaked on the axis 1 < 2 < ... < n: every prefix is a contiguous run
/// of the axis. 2^(n-1) orders.
inline Domain single_peaked_domain(std::size_t n, std::size_t cap = kDefaultSinglePeakedCap) {
  if (n < 1) throw PreconditionError("single-peaked domain needs n >= 1");
  if (n > cap) throw ResourceLimitError("single-peaked domain for n = " + std::to_string(n), cap);
  std::vector<LinearOrder> orders;
  // Build worst-first: the last place goes to an end of the remaining run.
  for (std::size_t choice = 0; choice < (std::size_t{1} << (n - 1)); ++choice) {
    std::vector<AltId> worst_first;
    std::size_t lo = 0, hi = n - 1;
    for (std::size_t step = 0; step + 1 < n; ++step)
      worst_first.push_back(static_cast<AltId>((choice >> step) & 1 ? hi-- : lo++));
    worst_first.push_back(static_cast<AltId>(lo));
    orders.emplace_back(std::vector<AltId>(worst_first.rbegin(), worst_first.rend()));
  }
  return Domain(AlternativeSet::numbered(n), std::move(orders));
}

/// Reversals of the single-peaked orders.
inline Domain single_dipped_domain(std::size_t n, std::size_t cap = kDefaultSinglePeakedCap) {
  return flipped(single_peaked_domain(n, cap));
}

}  // namespace condorcet

#endif  // CONDORCET_FISHBURN_HPP

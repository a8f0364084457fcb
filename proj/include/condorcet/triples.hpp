#ifndef CONDORCET_TRIPLES_HPP
#define CONDORCET_TRIPLES_HPP

// Triple bookkeeping shared by the never-condition and domain predicates.
//
// A triple {a < b < c} restricts every order to one of six patterns, numbered in
// lexicographic order: 0 abc, 1 acb, 2 bac, 3 bca, 4 cab, 5 cba. A never condition on the
// triple is a slot (member m in 0..2, position p in 1..3) and lives in bit 3*m + (p-1) of a
// 9-bit mask.

#include <array>
#include <cstddef>
#include <bit>
#include <cstdint>
#include <vector>

#include "domain.hpp"
#include "order.hpp"

namespace condorcet {

using Triple = std::array<AltId, 3>;
using PatternMask = std::uint8_t;     // 6 bits, one per pattern
using ConditionMask = std::uint16_t;  // 9 bits, one per (member, position)

inline constexpr std::array<std::array<std::uint8_t, 3>, 6> kPatterns{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

constexpr std::size_t slot_bit(std::size_t member, int position) {
  return 3 * member + static_cast<std::size_t>(position - 1);
}

/// Conditions a single pattern violates: each member at its own rank.
constexpr ConditionMask pattern_violations(std::size_t pattern) {
  ConditionMask mask = 0;
  for (std::size_t rank = 0; rank < 3; ++rank)
    mask |= ConditionMask(1u << slot_bit(kPatterns[pattern][rank], static_cast<int>(rank) + 1));
  return mask;
}

inline constexpr ConditionMask kAllConditions = 0x1FF;

/// Conditions violated by at least one pattern in `patterns`.
constexpr ConditionMask violations(PatternMask patterns) {
  ConditionMask mask = 0;
  for (std::size_t p = 0; p < 6; ++p)
    if (patterns & (1u << p)) mask |= pattern_violations(p);
  return mask;
}

/// Conditions satisfied by every pattern in `patterns`.
constexpr ConditionMask surviving_conditions(PatternMask patterns) {
  return static_cast<ConditionMask>(kAllConditions & ~violations(patterns));
}

/// Patterns that violate none of `conditions`.
constexpr PatternMask allowed_patterns(ConditionMask conditions) {
  PatternMask mask = 0;
  for (std::size_t p = 0; p < 6; ++p)
    if ((pattern_violations(p) & conditions) == 0) mask |= PatternMask(1u << p);
  return mask;
}

constexpr std::size_t choose3(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }
constexpr std::size_t choose2(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Colex rank of a sorted triple; dense in 0..C(n,3)-1.
constexpr std::size_t triple_index(AltId a, AltId b, AltId c) {
  return choose3(c) + choose2(b) + a;
}
constexpr std::size_t triple_index(const Triple& t) { return triple_index(t[0], t[1], t[2]); }

/// All sorted triples of 0..n-1 in colex order, so position == triple_index.
inline std::vector<Triple> all_triples(std::size_t n) {
  std::vector<Triple> out;
  out.reserve(choose3(n));
  for (std::size_t c = 2; c < n; ++c)
    for (std::size_t b = 1; b < c; ++b)
      for (std::size_t a = 0; a < b; ++a)
        out.push_back({static_cast<AltId>(a), static_cast<AltId>(b), static_cast<AltId>(c)});
  return out;
}

/// Pattern of u on the sorted triple t.
inline std::size_t pattern_of(const LinearOrder& u, const Triple& t) {
  const std::size_t pa = u.position(t[0]), pb = u.position(t[1]), pc = u.position(t[2]);
  if (pa < pb) {
    if (pb < pc) return 0;           // abc
    return pa < pc ? 1 : 4;          // acb : cab
  }
  if (pa < pc) return 2;             // bac
  return pb < pc ? 3 : 5;            // bca : cba
}

/// Per-triple union of patterns across the domain, indexed by triple_index.
inline std::vector<PatternMask> triple_patterns(const Domain& d) {
  const auto triples = all_triples(d.alternative_count());
  std::vector<PatternMask> out(triples.size(), 0);
  for (const auto& u : d)
    for (std::size_t t = 0; t < triples.size(); ++t)
      out[t] |= PatternMask(1u << pattern_of(u, triples[t]));
  return out;
}

inline int popcount6(PatternMask m) { return std::popcount(static_cast<unsigned>(m)); }

}  // namespace condorcet

#endif  // CONDORCET_TRIPLES_HPP

#ifndef CONDORCET_ANALYSIS_HPP
#define CONDORCET_ANALYSIS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domain.hpp"
#include "errors.hpp"
#include "never.hpp"
#include "order.hpp"
#include "triples.hpp"

namespace condorcet {

/// A nonempty sequence of voters' orders; repetition allowed.
class Profile {
public:
  explicit Profile(std::vector<LinearOrder> voters) : voters_(std::move(voters)) {
    if (voters_.empty()) throw PreconditionError("empty profile");
    for (const auto& v : voters_) require_same_size(v, voters_.front());
  }

  std::size_t size() const noexcept { return voters_.size(); }
  std::size_t alternative_count() const noexcept { return voters_.front().size(); }
  const std::vector<LinearOrder>& voters() const noexcept { return voters_; }

private:
  std::vector<LinearOrder> voters_;
};

enum class PairOutcome : std::int8_t { kSecondWins = -1, kTie = 0, kFirstWins = 1 };

/// Pairwise majority outcomes of a profile.
class MajorityRelation {
public:
  explicit MajorityRelation(std::size_t n) : n_(n), outcome_(n * n, PairOutcome::kTie) {}

  std::size_t alternative_count() const noexcept { return n_; }

  PairOutcome outcome(AltId a, AltId b) const { return outcome_.at(a * n_ + b); }
  bool beats(AltId a, AltId b) const { return outcome(a, b) == PairOutcome::kFirstWins; }

  void set(AltId a, AltId b, PairOutcome o) {
    outcome_.at(a * n_ + b) = o;
    outcome_.at(b * n_ + a) = static_cast<PairOutcome>(-static_cast<int>(o));
  }

  bool has_ties() const {
    for (AltId a = 0; a < n_; ++a)
      for (AltId b = a + 1; b < n_; ++b)
        if (outcome(a, b) == PairOutcome::kTie) return true;
    return false;
  }

private:
  std::size_t n_;
  std::vector<PairOutcome> outcome_;
};

inline MajorityRelation majority_relation(const Profile& profile) {
  const std::size_t n = profile.alternative_count();
  MajorityRelation m(n);
  for (AltId a = 0; a < n; ++a)
    for (AltId b = a + 1; b < n; ++b) {
      std::size_t for_a = 0;
      for (const auto& v : profile.voters()) for_a += v.prefers(a, b);
      const std::size_t for_b = profile.size() - for_a;
      m.set(a, b, for_a > for_b ? PairOutcome::kFirstWins
                  : for_a < for_b ? PairOutcome::kSecondWins
                                  : PairOutcome::kTie);
    }
  return m;
}

/// A tournament is transitive iff it has no directed 3-cycle.
inline bool is_transitive(const MajorityRelation& m) {
  if (m.has_ties()) throw PreconditionError("transitivity check on a relation with ties");
  const std::size_t n = m.alternative_count();
  for (AltId a = 0; a < n; ++a)
    for (AltId b = a + 1; b < n; ++b)
      for (AltId c = b + 1; c < n; ++c) {
        const bool ab = m.beats(a, b), bc = m.beats(b, c), ca = m.beats(c, a);
        if (ab == bc && bc == ca) return false;
      }
  return true;
}

/// Nonempty, and on every triple some never condition holds across the whole domain.
inline bool is_condorcet(const Domain& d) {
  if (d.empty()) return false;
  const auto patterns = triple_patterns(d);
  return std::all_of(patterns.begin(), patterns.end(),
                     [](PatternMask p) { return surviving_conditions(p) != 0; });
}

inline constexpr std::size_t kDefaultOracleCap = 1'000'000;

namespace detail {

inline std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) {
    if (base != 0 && r > SIZE_MAX / base) return SIZE_MAX;
    r *= base;
  }
  return r;
}

}  // namespace detail

/// Brute-force check: every odd profile of `voters` orders drawn from D (with repetition)
/// has a transitive majority tournament. Profiles are visited as multisets.
inline bool is_condorcet_oracle(const Domain& d, std::size_t voters = 3,
                                std::size_t cap = kDefaultOracleCap) {
  if (voters == 0 || voters % 2 == 0) throw PreconditionError("oracle needs an odd number of voters");
  if (d.empty()) return false;
  if (detail::ipow(d.size(), voters) > cap)
    throw ResourceLimitError("profile oracle over " + std::to_string(d.size()) + "^" +
                             std::to_string(voters) + " profiles", cap);
  std::vector<std::size_t> pick(voters, 0);
  while (true) {
    std::vector<LinearOrder> members;
    for (auto i : pick) members.push_back(d[i]);
    if (!is_transitive(majority_relation(Profile(std::move(members))))) return false;
    // Next nondecreasing index tuple.
    std::size_t k = voters;
    while (k > 0 && pick[k - 1] == d.size() - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    std::fill(pick.begin() + static_cast<std::ptrdiff_t>(k), pick.end(), pick[k - 1]);
  }
  return true;
}

/// Orders w outside D such that D + w is still Condorcet.
inline std::vector<LinearOrder> extensions(const Domain& d, std::size_t cap = kDefaultEnumerationCap) {
  if (!is_condorcet(d)) throw DomainError("extensions of a domain that is not Condorcet");
  const auto patterns = triple_patterns(d);
  std::vector<PatternMask> allowed(patterns.size(), 0);
  for (std::size_t t = 0; t < patterns.size(); ++t)
    for (std::size_t p = 0; p < 6; ++p)
      if (surviving_conditions(PatternMask(patterns[t] | (1u << p))) != 0) allowed[t] |= PatternMask(1u << p);
  std::vector<LinearOrder> out;
  for (auto& w : orders_with_patterns(d.alternative_count(), allowed, cap))
    if (!d.contains(w)) out.push_back(std::move(w));
  return out;
}

inline bool is_maximal(const Domain& d, std::size_t cap = kDefaultEnumerationCap) {
  return extensions(d, cap).empty();
}

/// Every pair {a,b} appears in both orders.
inline bool is_ample(const Domain& d) {
  const std::size_t n = d.alternative_count();
  for (AltId a = 0; a < n; ++a)
    for (AltId b = a + 1; b < n; ++b) {
      bool ab = false, ba = false;
      for (const auto& u : d) (u.prefers(a, b) ? ab : ba) = true;
      if (!ab || !ba) return false;
    }
  return true;
}

/// Every triple restriction has exactly four orders.
inline bool is_copious(const Domain& d) {
  if (d.empty()) return false;
  const auto patterns = triple_patterns(d);
  return std::all_of(patterns.begin(), patterns.end(), [](PatternMask p) { return popcount6(p) == 4; });
}

/// Every triple satisfies a never-top or never-bottom condition.
inline bool is_peak_pit(const Domain& d) {
  if (d.empty()) return false;
  ConditionMask peak_pit = 0;
  for (std::size_t m = 0; m < 3; ++m)
    peak_pit |= ConditionMask((1u << slot_bit(m, 1)) | (1u << slot_bit(m, 3)));
  const auto patterns = triple_patterns(d);
  return std::all_of(patterns.begin(), patterns.end(),
                     [&](PatternMask p) { return (surviving_conditions(p) & peak_pit) != 0; });
}

/// Some u in D has its reversal in D too.
inline bool has_maximal_width(const Domain& d) {
  return std::any_of(d.begin(), d.end(), [&](const LinearOrder& u) { return d.contains(reverse(u)); });
}

/// psi[x] is the image of alternative x of the first domain.
using AlternativeMap = std::vector<AltId>;

/// psi(D), or the reversed images when `flip`.
inline Domain image(const Domain& d, const AlternativeMap& psi, bool flip, const AlternativeSet& target) {
  std::vector<LinearOrder> orders;
  orders.reserve(d.size());
  for (const auto& u : d) {
    auto mapped = apply_map(u, psi);
    orders.push_back(flip ? reverse(mapped) : std::move(mapped));
  }
  return Domain(target, std::move(orders));
}

inline bool is_isomorphism(const Domain& from, const Domain& to, const AlternativeMap& psi, bool flip) {
  if (from.alternative_count() != to.alternative_count() || from.size() != to.size()) return false;
  if (psi.size() != from.alternative_count()) return false;
  std::vector<bool> hit(psi.size(), false);
  for (AltId y : psi) {
    if (y >= psi.size() || hit[y]) return false;
    hit[y] = true;
  }
  return image(from, psi, flip, to.alternatives()) == to;
}

inline constexpr std::size_t kDefaultIsomorphismCap = 10;

/// The lexicographically smallest bijection psi with psi(from) == to (reversed images
/// when `flip`), or nullopt. The smallest order of `from` must land on some order of
/// `to`, which pins psi; so only |to| candidate maps are tried.
inline std::optional<AlternativeMap> find_isomorphism(const Domain& from, const Domain& to, bool flip,
                                                      std::size_t cap = kDefaultIsomorphismCap) {
  if (from.alternative_count() != to.alternative_count() || from.size() != to.size()) return std::nullopt;
  if (from.alternative_count() > cap)
    throw ResourceLimitError("isomorphism search over " + std::to_string(from.alternative_count()) +
                             " alternatives", cap);
  if (from.empty()) {
    const auto id = LinearOrder::identity(from.alternative_count());
    return AlternativeMap(id.ranking().begin(), id.ranking().end());
  }
  const LinearOrder& seed = from[0];
  std::optional<AlternativeMap> best;
  for (const auto& candidate : to) {
    const LinearOrder target = flip ? reverse(candidate) : candidate;
    AlternativeMap psi(seed.size());
    for (std::size_t r = 0; r < seed.size(); ++r) psi[seed[r]] = target[r];
    if ((!best || psi < *best) && is_isomorphism(from, to, psi, flip)) best = std::move(psi);
  }
  return best;
}

}  // namespace condorcet

#endif  // CONDORCET_ANALYSIS_HPP

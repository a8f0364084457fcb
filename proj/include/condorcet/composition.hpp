#ifndef CONDORCET_COMPOSITION_HPP
#define CONDORCET_COMPOSITION_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "domain.hpp"
#include "errors.hpp"
#include "exact_int.hpp"
#include "fishburn.hpp"
#include "order.hpp"

namespace condorcet {

namespace detail {

inline bool is_default_numbering(const AlternativeSet& a) {
  return a == AlternativeSet::numbered(a.size());
}

}  // namespace detail

/// Alternatives of a composition: left ids first, right ids offset by |left|.
/// Disjoint labels are kept. Colliding default numberings 1..n and 1..m continue as
/// 1..n+m. Any other collision tags labels with their side, "x.L" and "x.R".
inline AlternativeSet combined_alternatives(const AlternativeSet& left, const AlternativeSet& right) {
  if (left.size() + right.size() > kMaxAlternatives) throw PreconditionError("composition too large");
  std::set<std::string> seen(left.labels().begin(), left.labels().end());
  const bool disjoint = std::none_of(right.labels().begin(), right.labels().end(),
                                     [&](const std::string& l) { return seen.contains(l); });
  std::vector<std::string> labels;
  if (disjoint) {
    labels = left.labels();
    labels.insert(labels.end(), right.labels().begin(), right.labels().end());
  } else if (detail::is_default_numbering(left) && detail::is_default_numbering(right)) {
    return AlternativeSet::numbered(left.size() + right.size());
  } else {
    for (const auto& l : left.labels()) labels.push_back(l + ".L");
    for (const auto& l : right.labels()) labels.push_back(l + ".R");
  }
  return AlternativeSet(std::move(labels));
}

/// D1 ⊙ D2: every xy with x in D1, y in D2.
inline Domain concatenate(const Domain& left, const Domain& right) {
  std::vector<LinearOrder> orders;
  orders.reserve(left.size() * right.size());
  for (const auto& x : left)
    for (const auto& y : right) orders.push_back(concatenate(x, y));
  return Domain(combined_alternatives(left.alternatives(), right.alternatives()), std::move(orders));
}

/// u ⊕ v: all shuffles of u and v.
inline Domain shuffle_domain(const LinearOrder& u, const AlternativeSet& u_alternatives, const LinearOrder& v,
                             const AlternativeSet& v_alternatives) {
  if (u.size() != u_alternatives.size() || v.size() != v_alternatives.size())
    throw PreconditionError("order and alternative set differ in size");
  return Domain(combined_alternatives(u_alternatives, v_alternatives), shuffles(u, v));
}

inline Domain shuffle_domain(const LinearOrder& u, const LinearOrder& v) {
  return shuffle_domain(u, AlternativeSet::numbered(u.size()), v, AlternativeSet::numbered(v.size()));
}

/// s1 * s2 + C(n+m, m) - 1.
inline ExactInt tensor_cardinality(const ExactInt& left_size, const ExactInt& right_size, std::size_t m,
                                   std::size_t n) {
  if (left_size < 1 || right_size < 1) throw PreconditionError("tensor cardinality of an empty domain");
  return left_size * right_size + binomial(n + m, m) - 1;
}

/// (D1 ⊗ D2)(u, v) together with the pieces it was assembled from.
struct CompositionResult {
  Domain domain;
  LinearOrder seam;  ///< uv, the one order shared by both parts
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  ExactInt shuffle_count;
};

/// (D1 ⊗ D2)(u, v) = (D1 ⊙ D2) ∪ (u ⊕ v).
inline CompositionResult tensor(const Domain& left, const Domain& right, const LinearOrder& u,
                                const LinearOrder& v) {
  if (!left.contains(u)) throw PreconditionError("u is not a member of the left domain");
  if (!right.contains(v)) throw PreconditionError("v is not a member of the right domain");
  if (!is_condorcet(left) || !is_condorcet(right)) throw DomainError("tensor of a domain that is not Condorcet");
  auto orders = concatenate(left, right).orders();
  const auto mixed = shuffles(u, v);
  orders.insert(orders.end(), mixed.begin(), mixed.end());
  CompositionResult result{
      Domain(combined_alternatives(left.alternatives(), right.alternatives()), std::move(orders)),
      concatenate(u, v), left.size(), right.size(), binomial(u.size() + v.size(), v.size())};
  return result;
}

/// Smallest u in D whose reversal is also in D.
inline std::optional<LinearOrder> reversal_pair(const Domain& d) {
  for (const auto& u : d)
    if (d.contains(reverse(u))) return u;
  return std::nullopt;
}

/// reversal_pair when one exists, else the smallest member.
inline LinearOrder default_seam_order(const Domain& d) {
  if (d.empty()) throw PreconditionError("empty domain has no seam order");
  if (auto u = reversal_pair(d)) return *u;
  return d[0];
}

/// |F_n ⊗ F_n| against |F_2n| for one n.
struct HypothesisRow {
  std::size_t n = 0;
  ExactInt product;   ///< |F_n ⊗ F_n|
  ExactInt fishburn;  ///< |F_2n|
  int comparison = 0; ///< sign of product - fishburn
};

struct HypothesisScan {
  std::vector<HypothesisRow> rows;
  std::optional<std::size_t> first_exceedance;
};

/// Rows for n = 2..max_n, from the closed-form cardinalities only.
inline HypothesisScan hypothesis_scan(std::size_t max_n) {
  if (max_n < 3) throw PreconditionError("hypothesis scan needs max_n >= 3");
  HypothesisScan scan;
  for (std::size_t n = 2; n <= max_n; ++n) {
    const ExactInt f = fishburn_cardinality(n);
    HypothesisRow row{n, tensor_cardinality(f, f, n, n), fishburn_cardinality(2 * n), 0};
    row.comparison = row.product < row.fishburn ? -1 : row.product > row.fishburn ? 1 : 0;
    if (row.comparison > 0 && !scan.first_exceedance) scan.first_exceedance = n;
    scan.rows.push_back(std::move(row));
  }
  return scan;
}

}  // namespace condorcet

#endif  // CONDORCET_COMPOSITION_HPP

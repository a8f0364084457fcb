#ifndef CONDORCET_EXACT_INT_HPP
#define CONDORCET_EXACT_INT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace condorcet {

/// Arbitrary precision integer used for every cardinality formula.
using ExactInt = boost::multiprecision::cpp_int;

/// binomial(n, k), exact. Zero when k > n.
inline ExactInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt result = 1;
  // result * (n - k + i) is always divisible by i at step i.
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline ExactInt pow2(std::uint64_t e) {
  ExactInt result = 1;
  result <<= static_cast<unsigned>(e);
  return result;
}

inline std::string to_string(const ExactInt& value) { return value.str(); }

}  // namespace condorcet

#endif  // CONDORCET_EXACT_INT_HPP
